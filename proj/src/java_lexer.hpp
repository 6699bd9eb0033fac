#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lcom::java {

enum class TokenKind { Identifier, Number, String, Char, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 0;

  bool is(std::string_view punct_or_word) const {
    return (kind == TokenKind::Punct || kind == TokenKind::Identifier) && text == punct_or_word;
  }
  bool is_identifier() const { return kind == TokenKind::Identifier; }
};

// Comments are dropped. `>` is always its own token so nested generic closers
// (`>>`) split naturally. The result always ends with an End token.
// Throws SourceSyntaxError on unterminated comments or literals.
std::vector<Token> lex(std::string_view source, const std::string& path);

bool is_reserved_word(std::string_view word);
bool is_primitive_type(std::string_view word);

}  // namespace lcom::java
