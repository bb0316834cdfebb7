#include "thom/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace thom {

namespace {

struct Token {
  enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("expression parse error at offset " +
                          std::to_string(cur_.pos) + ": " + msg + " (input: " +
                          s_ + ")");
  }

 private:
  std::string s_;
  std::size_t i_ = 0;
  Token cur_;

  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) {
      cur_ = {Token::End, "", start};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
        ++j;
      cur_ = {Token::Num, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      cur_ = {Token::Ident, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        cur_ = {Token::End, std::string(1, c), start};
        throw ValidationError("expression parse error at offset " +
                              std::to_string(start) + ": unexpected '" +
                              std::string(1, c) + "' (input: " + s_ + ")");
    }
    cur_ = {k, std::string(1, c), start};
    ++i_;
  }
};

class Parser {
 public:
  Parser(const std::string& text,
         const std::map<std::string, FactoredRat>& symbols)
      : lex_(text), symbols_(symbols) {}

  FactoredRat run() {
    if (lex_.peek().kind == Token::Ident && lex_.peek().text == "INF") {
      lex_.take();
      if (lex_.peek().kind != Token::End)
        lex_.fail("INF must be the entire expression");
      return FactoredRat::infinite();
    }
    FactoredRat v = expr();
    if (lex_.peek().kind != Token::End) lex_.fail("trailing input");
    return v;
  }

 private:
  Lexer lex_;
  const std::map<std::string, FactoredRat>& symbols_;

  FactoredRat expr() {
    bool neg = false;
    if (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus)
      neg = lex_.take().kind == Token::Minus;
    FactoredRat acc = term();
    if (neg) acc = acc.neg();
    while (lex_.peek().kind == Token::Plus ||
           lex_.peek().kind == Token::Minus) {
      bool minus = lex_.take().kind == Token::Minus;
      FactoredRat rhs = term();
      acc = acc.add(minus ? rhs.neg() : rhs);
    }
    return acc;
  }

  FactoredRat term() {
    FactoredRat acc = power();
    while (lex_.peek().kind == Token::Star ||
           lex_.peek().kind == Token::Slash) {
      bool divide = lex_.take().kind == Token::Slash;
      FactoredRat rhs = power();
      acc = divide ? acc.div(rhs) : acc.mul(rhs);
    }
    return acc;
  }

  FactoredRat power() {
    FactoredRat base = atom();
    if (lex_.peek().kind == Token::Caret) {
      lex_.take();
      bool neg = false;
      if (lex_.peek().kind == Token::Minus) {
        lex_.take();
        neg = true;
      }
      if (lex_.peek().kind != Token::Num) lex_.fail("exponent must be an integer");
      long e = std::strtol(lex_.take().text.c_str(), nullptr, 10);
      base = base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }

  FactoredRat atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::LParen: {
        lex_.take();
        FactoredRat v = expr();
        if (lex_.peek().kind != Token::RParen) lex_.fail("expected ')'");
        lex_.take();
        return v;
      }
      case Token::Num: {
        lex_.take();
        return FactoredRat::from_scalar(Rat(t.text));
      }
      case Token::Ident: {
        lex_.take();
        return named(t);
      }
      default:
        lex_.fail("expected a value");
    }
  }

  FactoredRat named(const Token& t) {
    const std::string& s = t.text;
    if (s == "INF")
      throw ValidationError("INF must be the entire expression (offset " +
                            std::to_string(t.pos) + ")");
    if (s == "t") return FactoredRat::from_poly(MPoly::var(tvar()));
    if (s.size() >= 2) {
      char head = s[0];
      bool digits = true;
      for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
      if (digits) {
        int k = static_cast<int>(std::strtol(s.c_str() + 1, nullptr, 10));
        switch (head) {
          case 'a': return FactoredRat::from_poly(MPoly::var(alpha(k)));
          case 'b': return FactoredRat::from_poly(MPoly::var(beta(k)));
          case 'z': return FactoredRat::from_poly(MPoly::var(zvar(k)));
          case 'c':
            if (k == 0) return FactoredRat::from_scalar(1);
            return FactoredRat::from_poly(MPoly::var(cvar(k)));
          default: break;
        }
      }
    }
    auto it = symbols_.find(s);
    if (it == symbols_.end())
      throw ValidationError("unknown symbol '" + s + "' (offset " +
                            std::to_string(t.pos) + ")");
    return it->second;
  }
};

}  // namespace

FactoredRat parse_expression(const std::string& text,
                             const std::map<std::string, FactoredRat>& symbols) {
  return Parser(text, symbols).run();
}

}  // namespace thom
