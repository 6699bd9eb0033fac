#include "java_parser.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "java_lexer.hpp"
#include "lcom/source_frontend.hpp"

namespace lcom::java {

namespace {

constexpr std::array<std::string_view, 12> kModifiers = {
    "public", "protected", "private",  "static",       "final",    "abstract",
    "native", "transient", "volatile", "synchronized", "strictfp", "default"};

bool is_modifier(const Token& token) {
  if (!token.is_identifier()) return false;
  return std::find(kModifiers.begin(), kModifiers.end(), token.text) != kModifiers.end() ||
         token.text == "sealed";
}

// Identifiers that may appear inside a type argument list.
bool fits_type_arguments(const Token& t) {
  if (t.is_identifier())
    return !is_reserved_word(t.text) || is_primitive_type(t.text) || t.text == "extends" ||
           t.text == "super";
  return t.is(".") || t.is(",") || t.is("?") || t.is("&") || t.is("[") || t.is("]") ||
         t.is("<") || t.is(">") || t.is("@");
}

// Index of the matching closer for every (, [ and { token; npos elsewhere.
std::vector<std::size_t> match_brackets(const std::vector<Token>& tokens, const std::string& path) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(tokens.size(), npos);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.kind != TokenKind::Punct) continue;
    if (t.text == "(" || t.text == "[" || t.text == "{") {
      open.push_back(i);
    } else if (t.text == ")" || t.text == "]" || t.text == "}") {
      const char expected = t.text == ")" ? '(' : t.text == "]" ? '[' : '{';
      if (open.empty())
        throw SourceSyntaxError(path, t.line, "unbalanced '" + t.text + "'");
      const auto& opener = tokens[open.back()];
      if (opener.text[0] != expected)
        throw SourceSyntaxError(path, t.line,
                                "'" + t.text + "' closes '" + opener.text + "' opened at line " +
                                    std::to_string(opener.line));
      match[open.back()] = i;
      match[i] = open.back();
      open.pop_back();
    }
  }
  if (!open.empty()) {
    const auto& t = tokens[open.back()];
    throw SourceSyntaxError(path, t.line, "'" + t.text + "' is never closed");
  }
  return match;
}

// Walks a method body and records field reads/writes and call sites that are
// not hidden by locals, parameters or lambda parameters.
class BodyScanner {
 public:
  BodyScanner(const std::vector<Token>& tokens, const std::vector<std::size_t>& match,
              std::string_view own_name)
      : tokens_(tokens), match_(match), own_name_(own_name) {}

  void scan(std::size_t begin, std::size_t end, std::vector<std::string> parameters,
            ParsedMethod& out) {
    scopes_.clear();
    scopes_.push_back({std::move(parameters), ScopeEnd::Block, 0, 0});
    brace_ = 0;
    paren_ = 0;
    in_case_label_ = false;
    declarators_ = false;

    for (std::size_t i = begin; i < end; ++i) {
      const auto& token = tokens_[i];
      if (token.kind == TokenKind::Punct) {
        i = punct(i);
      } else if (token.is_identifier()) {
        identifier(i, out);
      }
    }
  }

 private:
  enum class ScopeEnd {
    Block,        // closes with its `}`
    PendingBlock, // becomes Block at the next `{`
    Header,       // for/catch/try header, decided when its `)` closes
    Statement,    // closes at the `;` ending a single-statement body
    Expression,   // lambda expression body: closes at `,` `;` or enclosing `)`
  };

  struct Scope {
    std::vector<std::string> names;
    ScopeEnd end;
    int brace;
    int paren;
  };

  const Token& at(std::size_t i) const { return tokens_[std::min(i, tokens_.size() - 1)]; }

  Scope& top() { return scopes_.back(); }

  bool shadowed(std::string_view name) const {
    for (const auto& scope : scopes_)
      if (std::find(scope.names.begin(), scope.names.end(), name) != scope.names.end()) return true;
    return false;
  }

  void declare(const std::string& name) { top().names.push_back(name); }

  std::size_t punct(std::size_t i) {
    const auto& t = tokens_[i];
    if (t.text == "{") {
      ++brace_;
      if (top().end == ScopeEnd::PendingBlock) {
        top().end = ScopeEnd::Block;
        top().brace = brace_;
      } else {
        scopes_.push_back({{}, ScopeEnd::Block, brace_, paren_});
      }
    } else if (t.text == "}") {
      while (scopes_.size() > 1 && top().brace >= brace_) scopes_.pop_back();
      if (declarators_ && declarator_brace_ >= brace_) declarators_ = false;
      --brace_;
    } else if (t.text == "(") {
      const auto close = match_[i];
      if (at(close + 1).is("->")) {
        push_lambda(lambda_parameters(i + 1, close), close + 2);
        return close;  // continue at `->`
      }
      if (i > 0 && (at(i - 1).is("for") || at(i - 1).is("catch") || at(i - 1).is("try")))
        scopes_.push_back({{}, ScopeEnd::Header, brace_, paren_});
      ++paren_;
    } else if (t.text == ")") {
      --paren_;
      while (scopes_.size() > 1 && top().end == ScopeEnd::Expression && top().paren > paren_)
        scopes_.pop_back();
      if (top().end == ScopeEnd::Header && top().paren == paren_ && top().brace == brace_)
        top().end = at(i + 1).is("{") ? ScopeEnd::PendingBlock : ScopeEnd::Statement;
      if (declarators_ && paren_ < declarator_paren_) declarators_ = false;
    } else if (t.text == ";") {
      while (scopes_.size() > 1 && top().brace == brace_ &&
             ((top().end == ScopeEnd::Statement && top().paren == paren_) ||
              (top().end == ScopeEnd::Expression && top().paren >= paren_)))
        scopes_.pop_back();
      if (declarators_ && declarator_brace_ == brace_ && declarator_paren_ == paren_)
        declarators_ = false;
    } else if (t.text == ",") {
      while (scopes_.size() > 1 && top().end == ScopeEnd::Expression && top().brace == brace_ &&
             top().paren == paren_)
        scopes_.pop_back();
    } else if (t.text == ":" || t.text == "->") {
      in_case_label_ = false;
    }
    return i;
  }

  void push_lambda(std::vector<std::string> names, std::size_t body) {
    if (at(body).is("{"))
      scopes_.push_back({std::move(names), ScopeEnd::PendingBlock, brace_, paren_});
    else
      scopes_.push_back({std::move(names), ScopeEnd::Expression, brace_, paren_});
  }

  // Last identifier of each comma-separated segment in [begin, end).
  std::vector<std::string> lambda_parameters(std::size_t begin, std::size_t end) const {
    std::vector<std::string> names;
    std::string last;
    for (std::size_t j = begin; j < end; ++j) {
      const auto& t = tokens_[j];
      if (t.is("(") || t.is("[") || t.is("{")) {
        j = match_[j];
      } else if (t.is(",")) {
        if (!last.empty()) names.push_back(last);
        last.clear();
      } else if (t.is_identifier() && !is_reserved_word(t.text)) {
        last = t.text;
      }
    }
    if (!last.empty()) names.push_back(last);
    return names;
  }

  std::size_t arity(std::size_t open) const {
    const auto close = match_[open];
    if (close == open + 1) return 0;
    std::size_t commas = 0;
    for (std::size_t j = open + 1; j < close; ++j) {
      const auto& t = tokens_[j];
      if (t.is("(") || t.is("[") || t.is("{"))
        j = match_[j];
      else if (t.is(","))
        ++commas;
    }
    return commas + 1;
  }

  // `<` at `open` starts a well-formed type argument list.
  bool type_arguments_ahead(std::size_t open) const {
    int depth = 0;
    for (std::size_t j = open; j < tokens_.size(); ++j) {
      const auto& t = tokens_[j];
      if (!fits_type_arguments(t)) return false;
      if (t.is("<")) ++depth;
      if (t.is(">") && --depth == 0) return true;
    }
    return false;
  }

  // `>` at `close` ends a type argument list that follows an identifier.
  bool type_arguments_behind(std::size_t close) const {
    int depth = 0;
    for (std::size_t j = close + 1; j-- > 0;) {
      const auto& t = tokens_[j];
      if (!fits_type_arguments(t)) return false;
      if (t.is(">")) ++depth;
      if (t.is("<") && --depth == 0) return j > 0 && tokens_[j - 1].is_identifier();
    }
    return false;
  }

  bool ends_type(std::size_t j) const {
    const auto& t = at(j);
    if (t.is_identifier())
      return (!is_reserved_word(t.text) || is_primitive_type(t.text)) && t.text != "yield";
    if (t.is("]")) return j > 0 && at(j - 1).is("[");
    if (t.is(">")) return type_arguments_behind(j);
    return false;
  }

  static bool declarator_follower(const Token& t) {
    return t.is("=") || t.is(";") || t.is(",") || t.is(":") || t.is(")");
  }

  // Form of a member select `qualifier.name` where `i` indexes `name`.
  std::optional<RefForm> select_form(std::size_t i) const {
    if (i < 2) return std::nullopt;
    const auto& qualifier = tokens_[i - 2];
    const bool qualified = i >= 3 && tokens_[i - 3].is(".");
    if (qualifier.is("this")) {
      if (!qualified) return RefForm::This;
      if (i >= 4 && tokens_[i - 4].is_identifier() && tokens_[i - 4].text == own_name_)
        return RefForm::This;
      return std::nullopt;
    }
    if (qualifier.is("super")) return qualified ? std::nullopt : std::optional{RefForm::Super};
    if (qualifier.is_identifier() && qualifier.text == own_name_ && !qualified &&
        !shadowed(qualifier.text))
      return RefForm::OwnType;
    return std::nullopt;
  }

  void identifier(std::size_t i, ParsedMethod& out) {
    const auto& token = tokens_[i];
    const auto& word = token.text;
    const auto& prev = at(i - 1);
    const auto& next = at(i + 1);

    if (word == "this") {
      if (next.is("(") && !prev.is("."))
        out.calls.push_back({RefForm::Constructor, std::string(own_name_), arity(i + 1), token.line});
      return;
    }
    if (is_reserved_word(word) && !is_primitive_type(word)) {
      if (word == "case") in_case_label_ = true;
      return;
    }
    if (is_primitive_type(word) || prev.is("@") || prev.is("::")) return;

    if (prev.is(".")) {
      if (auto form = select_form(i)) {
        if (next.is("("))
          out.calls.push_back({*form, word, arity(i + 1), token.line});
        else
          out.field_refs.push_back({*form, word, token.line});
      }
      return;
    }

    if (next.is("->") && !in_case_label_) {
      push_lambda({word}, i + 2);
      return;
    }
    if (next.is("(")) {
      if (prev.is("new") || ends_type(i - 1)) return;  // instantiation or local method declaration
      out.calls.push_back({RefForm::Bare, word, arity(i + 1), token.line});
      return;
    }

    if (ends_type(i - 1) && declarator_follower(next)) {
      declare(word);
      if (next.is("=") || next.is(",")) {
        declarators_ = true;
        declarator_brace_ = brace_;
        declarator_paren_ = paren_;
      }
      return;
    }
    if (declarators_ && prev.is(",") && brace_ == declarator_brace_ && paren_ == declarator_paren_ &&
        (next.is("=") || next.is(",") || next.is(";"))) {
      declare(word);
      return;
    }

    // Type positions: `Foo x`, `Foo<T> x`, `Foo[] x`, `Outer.this`, `Foo.class`.
    if (next.is_identifier() && !is_reserved_word(next.text)) return;
    if (next.is("<") && type_arguments_ahead(i + 1)) return;
    if (next.is("[") && at(i + 2).is("]")) return;
    if (next.is(".") && (at(i + 2).is("this") || at(i + 2).is("class"))) return;

    if (shadowed(word)) return;
    out.field_refs.push_back({RefForm::Bare, word, token.line});
  }

  const std::vector<Token>& tokens_;
  const std::vector<std::size_t>& match_;
  std::string_view own_name_;

  std::vector<Scope> scopes_;
  int brace_ = 0;
  int paren_ = 0;
  bool in_case_label_ = false;
  bool declarators_ = false;
  int declarator_brace_ = 0;
  int declarator_paren_ = 0;
};

struct Modifiers {
  bool is_static = false;
  std::optional<Visibility> visibility;
};

class Parser {
 public:
  Parser(std::string_view source, const std::string& path, ParsedUnit& unit)
      : path_(path), unit_(unit), tokens_(lex(source, path)), match_(match_brackets(tokens_, path)) {}

  void parse() {
    while (peek().is("@") && !peek(1).is("interface")) skip_annotation();
    if (accept("package")) {
      unit_.package = dotted_name();
      expect(";");
    }
    while (peek().is("import")) parse_import();

    while (!at_end()) {
      if (accept(";")) continue;
      const auto start = pos_;
      auto mods = modifiers();
      if (starts_type_declaration()) {
        parse_type_declaration(unit_.types, unit_.package, mods, false);
        continue;
      }
      if (peek().is("module") || peek().is("open")) {
        diagnose(Severity::Info, peek().line, "module declarations are outside the supported subset");
        pos_ = tokens_.size() - 1;
        break;
      }
      diagnose(Severity::Warn, at(start).line,
               "unexpected '" + at(start).text + "' at top level; skipped");
      skip_member(start);
    }
  }

 private:
  const Token& at(std::size_t i) const { return tokens_[std::min(i, tokens_.size() - 1)]; }
  const Token& peek(std::size_t ahead = 0) const { return at(pos_ + ahead); }
  bool at_end() const { return peek().kind == TokenKind::End; }

  const Token& advance() {
    const auto& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool accept(std::string_view text) {
    if (!peek().is(text)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SourceSyntaxError(path_, peek().line, message);
  }

  void expect(std::string_view text) {
    if (!accept(text))
      fail("expected '" + std::string(text) + "' but found '" + peek().text + "'");
  }

  std::string identifier() {
    if (!peek().is_identifier()) fail("expected an identifier but found '" + peek().text + "'");
    return advance().text;
  }

  void diagnose(Severity severity, std::size_t line, std::string message) {
    unit_.diagnostics.push_back({path_, line, severity, std::move(message)});
  }

  // Skips a bracket group starting at the current token.
  void skip_group() { pos_ = match_[pos_] + 1; }

  std::string dotted_name() {
    auto name = identifier();
    while (peek().is(".") && peek(1).is_identifier()) {
      advance();
      name += "." + advance().text;
    }
    return name;
  }

  void parse_import() {
    expect("import");
    const bool is_static = accept("static");
    auto name = dotted_name();
    bool wildcard = false;
    if (peek().is(".") && peek(1).is("*")) {
      advance();
      advance();
      wildcard = true;
    }
    expect(";");
    if (is_static) return;
    (wildcard ? unit_.wildcard_imports : unit_.single_imports).push_back(std::move(name));
  }

  void skip_annotation() {
    expect("@");
    dotted_name();
    if (peek().is("(")) skip_group();
  }

  Modifiers modifiers() {
    Modifiers mods;
    while (true) {
      if (peek().is("@") && !peek(1).is("interface")) {
        skip_annotation();
      } else if (peek().is("non") && peek(1).is("-") && peek(2).is("sealed")) {
        pos_ += 3;
      } else if (is_modifier(peek())) {
        const auto& word = advance().text;
        if (word == "static") mods.is_static = true;
        if (auto vis = parse_visibility(word); vis && word != "package") mods.visibility = vis;
      } else {
        return mods;
      }
    }
  }

  // At `<`: skips the type parameter/argument list.
  void skip_type_arguments() {
    int depth = 0;
    do {
      if (at_end()) fail("unterminated type argument list");
      if (peek().is("<")) ++depth;
      if (peek().is(">")) --depth;
      if (peek().is("(") || peek().is("[")) {
        skip_group();
        continue;
      }
      advance();
    } while (depth > 0);
  }

  // Parses a type and returns its dotted name without type arguments.
  std::optional<std::string> type() {
    while (peek().is("@")) skip_annotation();
    if (!peek().is_identifier()) return std::nullopt;
    if (is_reserved_word(peek().text) && !is_primitive_type(peek().text)) return std::nullopt;
    auto name = advance().text;
    if (peek().is("<")) skip_type_arguments();
    while (peek().is(".") && peek(1).is_identifier()) {
      advance();
      name += "." + advance().text;
      if (peek().is("<")) skip_type_arguments();
    }
    while (peek().is("[") && peek(1).is("]")) pos_ += 2;
    accept("...");
    return name;
  }

  void skip_type_list() {
    do {
      if (!type()) fail("expected a type but found '" + peek().text + "'");
    } while (accept(","));
  }

  bool starts_type_declaration() const {
    const auto& t = peek();
    if (t.is("class") || t.is("interface") || t.is("enum")) return true;
    if (t.is("@") && peek(1).is("interface")) return true;
    return t.is("record") && peek(1).is_identifier() && (peek(2).is("(") || peek(2).is("<"));
  }

  void skip_unsupported_type(const std::string& what) {
    const auto line = peek().line;
    advance();
    if (peek().is("interface")) advance();
    const auto name = peek().is_identifier() ? peek().text : std::string("?");
    diagnose(Severity::Info, line, what + " '" + name + "' is outside the supported subset; skipped");
    while (!peek().is("{")) {
      if (at_end()) fail("unterminated " + what + " declaration");
      if (peek().is("(") || peek().is("[")) {
        skip_group();
      } else {
        advance();
      }
    }
    skip_group();
  }

  void parse_type_declaration(std::vector<ParsedType>& out, const std::string& prefix,
                              const Modifiers& mods, bool enclosed_by_interface) {
    if (peek().is("enum")) return skip_unsupported_type("enum");
    if (peek().is("@")) return skip_unsupported_type("annotation type");
    if (peek().is("record")) return skip_unsupported_type("record");

    ParsedType type;
    type.line = peek().line;
    type.kind = advance().is("interface") ? TypeKind::Interface : TypeKind::Class;
    type.simple_name = identifier();
    type.qualified_name = prefix.empty() ? type.simple_name : prefix + "." + type.simple_name;
    type.is_static = mods.is_static || enclosed_by_interface || type.kind == TypeKind::Interface;
    if (peek().is("<")) skip_type_arguments();

    while (!peek().is("{")) {
      if (accept("extends")) {
        if (type.kind == TypeKind::Class) {
          type.superclass = type_or_fail();
        } else {
          skip_type_list();
        }
      } else if (accept("implements") || accept("permits")) {
        skip_type_list();
      } else {
        fail("unexpected '" + peek().text + "' in declaration of '" + type.simple_name + "'");
      }
    }
    parse_class_body(type);
    out.push_back(std::move(type));
  }

  std::string type_or_fail() {
    auto name = type();
    if (!name) fail("expected a type but found '" + peek().text + "'");
    return *name;
  }

  // Error recovery for members: skip to the end of the declaration starting
  // at `start` (a `;` or a brace group at member level).
  void skip_member(std::size_t start) {
    pos_ = start;
    while (!at_end()) {
      if (peek().is(";")) {
        advance();
        return;
      }
      if (peek().is("{")) {
        skip_group();
        return;
      }
      if (peek().is("}")) return;
      if (peek().is("(") || peek().is("[")) {
        skip_group();
      } else {
        advance();
      }
    }
  }

  void parse_class_body(ParsedType& type) {
    expect("{");
    while (!accept("}")) {
      if (at_end()) fail("unterminated body of '" + type.simple_name + "'");
      if (accept(";")) continue;
      const auto start = pos_;
      auto mods = modifiers();
      if (peek().is("{")) {
        skip_group();  // initializer block
        continue;
      }
      if (starts_type_declaration()) {
        parse_type_declaration(type.nested, type.qualified_name, mods,
                               type.kind == TypeKind::Interface);
        continue;
      }
      if (!parse_member(type, mods)) {
        diagnose(Severity::Warn, at(start).line,
                 "unsupported member declaration in '" + type.simple_name + "'; skipped");
        skip_member(start);
      }
    }
  }

  bool parse_member(ParsedType& type, const Modifiers& mods) {
    if (peek().is("<")) skip_type_arguments();

    if (peek().is_identifier() && peek().text == type.simple_name && peek(1).is("(")) {
      const auto line = advance().line;
      parse_method(type, type.simple_name, line, mods, true);
      return true;
    }
    if (!type_or_nothing()) return false;
    if (!peek().is_identifier() || is_reserved_word(peek().text)) return false;
    const auto& name_token = advance();
    if (peek().is("(")) {
      parse_method(type, name_token.text, name_token.line, mods, false);
      return true;
    }
    return parse_fields(type, mods, name_token);
  }

  bool type_or_nothing() {
    const auto before = pos_;
    if (type()) return true;
    pos_ = before;
    return false;
  }

  std::vector<std::string> parameters(std::size_t& arity) {
    const auto open = pos_;
    const auto close = match_[open];
    std::vector<std::string> names;
    arity = 0;
    std::string last;
    bool receiver = false;
    auto flush = [&] {
      if (!last.empty() && !receiver) {
        names.push_back(last);
        ++arity;
      }
      last.clear();
      receiver = false;
    };
    int angle = 0;
    for (auto j = open + 1; j < close; ++j) {
      const auto& t = tokens_[j];
      if (t.is("(") || t.is("[") || t.is("{")) {
        j = match_[j];
      } else if (t.is("<")) {
        ++angle;
      } else if (t.is(">")) {
        --angle;
      } else if (t.is(",") && angle == 0) {
        flush();
      } else if (t.is("@")) {
        ++j;  // annotation name
        while (j + 2 < close && tokens_[j + 1].is(".")) j += 2;
      } else if (t.is("this")) {
        receiver = true;
      } else if (t.is_identifier() && angle == 0) {
        last = t.text;
      }
    }
    flush();
    pos_ = close + 1;
    return names;
  }

  void parse_method(ParsedType& type, const std::string& name, std::size_t line,
                    const Modifiers& mods, bool constructor) {
    ParsedMethod method;
    method.name = name;
    method.line = line;
    method.is_static = mods.is_static;
    method.is_constructor = constructor;
    auto names = parameters(method.arity);
    while (peek().is("[") && peek(1).is("]")) pos_ += 2;
    if (accept("throws")) skip_type_list();
    if (peek().is("{")) {
      const auto open = pos_;
      const auto close = match_[open];
      BodyScanner(tokens_, match_, type.simple_name).scan(open + 1, close, std::move(names), method);
      pos_ = close + 1;
    } else {
      expect(";");
    }

    auto same = std::find_if(type.methods.begin(), type.methods.end(), [&](const ParsedMethod& m) {
      return m.name == method.name && m.arity == method.arity;
    });
    if (same == type.methods.end()) {
      type.methods.push_back(std::move(method));
      return;
    }
    diagnose(Severity::Info, line,
             "overloads of '" + name + "/" + std::to_string(method.arity) +
                 "' share an arity and are merged");
    same->is_static = same->is_static && method.is_static;
    same->field_refs.insert(same->field_refs.end(), method.field_refs.begin(), method.field_refs.end());
    same->calls.insert(same->calls.end(), method.calls.begin(), method.calls.end());
  }

  // Skips a field initializer up to the `,` or `;` that ends it.
  void skip_initializer() {
    while (!peek().is(",") && !peek().is(";")) {
      if (at_end() || peek().is("}")) fail("unterminated field initializer");
      if (peek().is("(") || peek().is("[") || peek().is("{")) {
        skip_group();
      } else if (peek().is("<") && pos_ > 0 && at(pos_ - 1).is_identifier()) {
        // `new HashMap<K, V>()`: keep generic commas out of the declarator list.
        const auto before = pos_;
        int depth = 0;
        bool generic = false;
        for (auto j = pos_; j < tokens_.size(); ++j) {
          if (!fits_type_arguments(tokens_[j])) break;
          if (tokens_[j].is("<")) ++depth;
          if (tokens_[j].is(">") && --depth == 0) {
            pos_ = j + 1;
            generic = true;
            break;
          }
        }
        if (!generic) {
          pos_ = before;
          advance();
        }
      } else {
        advance();
      }
    }
  }

  bool parse_fields(ParsedType& type, const Modifiers& mods, const Token& first) {
    const bool in_interface = type.kind == TypeKind::Interface;
    const auto* name_token = &first;
    while (true) {
      ParsedField field;
      field.name = name_token->text;
      field.line = name_token->line;
      field.is_static = mods.is_static || in_interface;
      field.visibility = mods.visibility.value_or(in_interface ? Visibility::Public : Visibility::Package);
      while (peek().is("[") && peek(1).is("]")) pos_ += 2;
      if (accept("=")) skip_initializer();

      auto clash = std::find_if(type.fields.begin(), type.fields.end(),
                                [&](const ParsedField& f) { return f.name == field.name; });
      if (clash == type.fields.end())
        type.fields.push_back(std::move(field));
      else
        diagnose(Severity::Warn, field.line, "duplicate field '" + field.name + "' ignored");

      if (accept(";")) return true;
      if (!accept(",")) return false;
      if (!peek().is_identifier()) return false;
      name_token = &advance();
    }
  }

  std::string path_;
  ParsedUnit& unit_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> match_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedUnit parse_compilation_unit(std::string_view source, const std::string& path) {
  ParsedUnit unit;
  unit.path = path;
  Parser(source, path, unit).parse();
  return unit;
}

}  // namespace lcom::java
