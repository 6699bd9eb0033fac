#include "java_lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "lcom/source_frontend.hpp"

namespace lcom::java {

namespace {

constexpr std::array<std::string_view, 53> kReserved = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",       "catch",
    "char",     "class",      "const",     "continue",  "default",  "do",         "double",
    "else",     "enum",       "extends",   "final",     "finally",  "float",      "for",
    "goto",     "if",         "implements", "import",   "instanceof", "int",      "interface",
    "long",     "native",     "new",       "package",   "private",  "protected",  "public",
    "return",   "short",      "static",    "strictfp",  "super",    "switch",     "synchronized",
    "this",     "throw",      "throws",    "transient", "try",      "void",       "volatile",
    "while",    "true",       "false",     "null"};

constexpr std::array<std::string_view, 9> kPrimitive = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void"};

// Longest first so greedy matching works.
constexpr std::array<std::string_view, 27> kOperators = {
    ">>>=", "<<=", ">>=", "...", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=",   "-=",  "*=",  "/=",  "%=", "&=", "|=", "^=", "<<", "@",  "#",  "\\", "`"};

bool identifier_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool identifier_part(unsigned char c) { return identifier_start(c) || std::isdigit(c); }

}  // namespace

bool is_reserved_word(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

bool is_primitive_type(std::string_view word) {
  return std::find(kPrimitive.begin(), kPrimitive.end(), word) != kPrimitive.end();
}

std::vector<Token> lex(std::string_view src, const std::string& path) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto fail = [&](std::size_t at_line, const std::string& message) {
    throw SourceSyntaxError(path, at_line, message);
  };

  // Skip a UTF-8 byte order mark.
  if (src.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  while (i < n) {
    const auto c = static_cast<unsigned char>(src[i]);
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const auto start = line;
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) {
        if (src[i] == '\n') ++line;
        ++i;
      }
      if (i + 1 >= n) fail(start, "unterminated block comment");
      i += 2;
      continue;
    }
    if (identifier_start(c)) {
      auto start = i;
      while (i < n && identifier_part(static_cast<unsigned char>(src[i]))) ++i;
      tokens.push_back({TokenKind::Identifier, std::string(src.substr(start, i - start)), line});
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      auto start = i;
      const bool hex = src.substr(start, 2) == "0x" || src.substr(start, 2) == "0X";
      while (i < n) {
        auto d = static_cast<unsigned char>(src[i]);
        char prev = i > start ? src[i - 1] : '\0';
        bool exponent_sign = (d == '+' || d == '-') &&
                             (hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E'));
        if (std::isalnum(d) || d == '_' || d == '.' || exponent_sign)
          ++i;
        else
          break;
      }
      tokens.push_back({TokenKind::Number, std::string(src.substr(start, i - start)), line});
      continue;
    }
    if (c == '"' && src.substr(i, 3) == "\"\"\"") {
      const auto start = line;
      auto begin = i;
      i += 3;
      while (i < n && src.substr(i, 3) != "\"\"\"") {
        if (src[i] == '\\') ++i;
        if (i < n && src[i] == '\n') ++line;
        ++i;
      }
      if (i >= n) fail(start, "unterminated text block");
      i += 3;
      tokens.push_back({TokenKind::String, std::string(src.substr(begin, i - begin)), start});
      continue;
    }
    if (c == '"' || c == '\'') {
      const auto quote = c;
      auto begin = i++;
      while (i < n && static_cast<unsigned char>(src[i]) != quote) {
        if (src[i] == '\n') fail(line, "unterminated literal");
        if (src[i] == '\\') ++i;
        ++i;
      }
      if (i >= n) fail(line, "unterminated literal");
      ++i;
      tokens.push_back({quote == '"' ? TokenKind::String : TokenKind::Char,
                        std::string(src.substr(begin, i - begin)), line});
      continue;
    }
    bool matched = false;
    for (auto op : kOperators) {
      if (src.substr(i, op.size()) == op) {
        tokens.push_back({TokenKind::Punct, std::string(op), line});
        i += op.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    tokens.push_back({TokenKind::Punct, std::string(1, static_cast<char>(c)), line});
    ++i;
  }
  tokens.push_back({TokenKind::End, "", line});
  return tokens;
}

}  // namespace lcom::java
