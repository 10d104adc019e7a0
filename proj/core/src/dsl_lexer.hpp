#pragma once

// Tokenizer shared by the expression DSL and the table files.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "ellambda/error.hpp"
#include "ellambda/expr.hpp"

namespace ellambda::detail {

enum class TokenKind { Ident, String, Number, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view source) : text_(text), source_(source) { advance(); }

  const Token& peek() const { return current_; }
  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool at_end() const { return current_.kind == TokenKind::End; }
  bool is_punct(char c) const { return current_.kind == TokenKind::Punct && current_.text[0] == c; }
  bool is_ident(std::string_view word) const { return current_.kind == TokenKind::Ident && current_.text == word; }

  void expect_punct(char c) {
    if (!is_punct(c)) fail(current_, std::string("expected '") + c + "', found " + describe(current_));
    advance();
  }
  Token expect(TokenKind kind, std::string_view what) {
    if (current_.kind != kind) fail(current_, "expected " + std::string(what) + ", found " + describe(current_));
    return next();
  }

  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    throw ParseError(source_, at.line, at.column, what);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::End: return "end of input";
      case TokenKind::String: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

 private:
  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  }

  void advance() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;

    const char c = text_[pos_];
    if (c == '"') {
      bump();
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') fail(current_, "unterminated string");
        current_.text.push_back(text_[pos_]);
        bump();
      }
      if (pos_ >= text_.size()) fail(current_, "unterminated string");
      bump();
      current_.kind = TokenKind::String;
    } else if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) {
        current_.text.push_back(text_[pos_]);
        bump();
      }
      current_.kind = TokenKind::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      current_.text.push_back(c);
      bump();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text.push_back(text_[pos_]);
        bump();
      }
      current_.kind = TokenKind::Number;
    } else if (std::string_view("[](){},;=@").find(c) != std::string_view::npos) {
      current_.text = std::string(1, c);
      current_.kind = TokenKind::Punct;
      bump();
    } else {
      fail(current_, std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

/// Parses one expression starting at the lexer's current token.
AlgebraicExpr parse_expr_tokens(Lexer& lexer, const ExprBindings* bindings);

}  // namespace ellambda::detail
