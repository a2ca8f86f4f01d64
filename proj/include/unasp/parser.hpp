#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unasp/program.hpp"

namespace unasp {

namespace detail {

enum class Tok { Ident, Var, Number, LBrack, RBrack, LParen, RParen, Comma, Colon, Dot, Minus, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Var: return "variable";
    case Tok::Number: return "number";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Minus: return "'-'";
    case Tok::Arrow: return "'<-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      Token t{Tok::End, "", line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::Var : Tok::Ident;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          t.text += advance();
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
        }
      } else if (c == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        t.kind = Tok::Arrow;
        t.text = "<-";
        advance();
        advance();
      } else {
        switch (c) {
          case '[': t.kind = Tok::LBrack; break;
          case ']': t.kind = Tok::RBrack; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ',': t.kind = Tok::Comma; break;
          case ':': t.kind = Tok::Colon; break;
          case '.': t.kind = Tok::Dot; break;
          case '-': t.kind = Tok::Minus; break;
          default:
            throw ParseError(Errc::Syntax, line_, col_, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, advance());
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    Program p;
    while (peek().kind != Tok::End) p.rules.push_back(rule(p.rules.size() + 1));
    return p;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(Errc::Syntax, t.line, t.col, msg);
  }

  Token expect(Tok k) {
    if (peek().kind != k)
      fail(peek(), std::string("expected ") + tok_name(k) + ", found " + tok_name(peek().kind));
    return take();
  }

  Rule rule(std::size_t index) {
    Rule r;
    if ((peek().kind == Tok::Ident || peek().kind == Tok::Var) && peek(1).kind == Tok::Colon) {
      r.label = take().text;
      take();
    } else {
      r.label = "r#" + std::to_string(index);
      r.synthetic_label = true;
    }
    r.head = literal();
    expect(Tok::Arrow);
    r.weight = interval();
    if (peek().kind == Tok::Colon) {
      take();
      r.body.push_back(body_item());
      while (peek().kind == Tok::Comma) {
        take();
        r.body.push_back(body_item());
      }
    } else {
      r.body.push_back(Interval::exact(1.0));
    }
    expect(Tok::Dot);
    return r;
  }

  BodyItem body_item() {
    if (peek().kind == Tok::LBrack) return interval();
    bool naf = false;
    if (peek().kind == Tok::Ident && peek().text == "not") {
      take();
      naf = true;
    }
    return BodyLiteral{literal(), naf};
  }

  Literal literal() {
    Literal l;
    if (peek().kind == Tok::Minus) {
      take();
      l.negative = true;
    }
    const Token& start = peek();
    if (start.kind != Tok::Ident) fail(start, std::string("expected predicate, found ") + tok_name(start.kind));
    if (start.text == "not") fail(start, "'not' is reserved");
    Token name = take();
    l.atom.predicate = name.text;
    if (peek().kind == Tok::LParen) {
      take();
      l.atom.args.push_back(term());
      while (peek().kind == Tok::Comma) {
        take();
        l.atom.args.push_back(term());
      }
      expect(Tok::RParen);
    }
    auto [it, fresh] = arity_.emplace(l.atom.predicate, l.atom.args.size());
    if (!fresh && it->second != l.atom.args.size())
      throw ParseError(Errc::ArityMismatch, name.line, name.col,
                       "predicate '" + l.atom.predicate + "' used with arity " +
                           std::to_string(l.atom.args.size()) + " and " + std::to_string(it->second));
    return l;
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::LBrack) return interval();
    if (t.kind == Tok::Ident) return Constant{take().text};
    if (t.kind == Tok::Var) return Variable{take().text};
    fail(t, std::string("expected term, found ") + tok_name(t.kind));
  }

  double number() {
    Token t = expect(Tok::Number);
    auto dot = t.text.find('.');
    if (dot != std::string::npos && t.text.size() - dot - 1 > 9)
      fail(t, "number '" + t.text + "' has more than 9 fractional digits");
    double v = std::strtod(t.text.c_str(), nullptr);
    if (v > 1.0) throw ParseError(Errc::WeightOutOfRange, t.line, t.col, "value " + t.text + " outside [0,1]");
    return v;
  }

  Interval interval() {
    Token open = expect(Tok::LBrack);
    double lo = number();
    expect(Tok::Comma);
    double hi = number();
    expect(Tok::RBrack);
    if (lo > hi)
      throw ParseError(Errc::WeightOutOfRange, open.line, open.col,
                       "interval lower bound exceeds upper bound");
    return Interval(lo, hi);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> arity_;
};

}  // namespace detail

inline Program parse_program(std::string_view text) {
  return detail::Parser(detail::Lexer(text).run()).run();
}

}  // namespace unasp
