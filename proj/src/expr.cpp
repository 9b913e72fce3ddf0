#include "akizuki/expr.hpp"

#include <cctype>

namespace akizuki {

namespace {

struct Token {
  enum Kind { Num, T, Indexed, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind = End;
  size_t pos = 0;     // 1-based offset into the input
  mpq_class value;    // Num
  char letter = 0;    // Indexed: z, a, y, w
  long index = 0;     // Indexed
};

class Parser {
 public:
  Parser(ParamsPtr P, const std::string& text) : P_(std::move(P)), text_(text) {
    tokenize();
  }

  BElem parse() {
    BElem v = expr();
    if (cur().kind != Token::End)
      fail(Err::SyntaxError, "trailing input at position " + pos_str(cur()));
    return v;
  }

 private:
  [[noreturn]] void bad(const Token& tk, const std::string& what) {
    fail(Err::SyntaxError, what + " at position " + pos_str(tk));
  }

  static std::string pos_str(const Token& tk) { return std::to_string(tk.pos); }

  void tokenize() {
    size_t i = 0;
    auto push = [&](Token tk) { toks_.push_back(std::move(tk)); };
    while (i < text_.size()) {
      char ch = text_[i];
      size_t pos = i + 1;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        std::string num = text_.substr(i, j - i);
        std::string den = "1";
        if (j < text_.size() && text_[j] == '/') {
          size_t k = j + 1;
          size_t d0 = k;
          while (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) ++k;
          if (k == d0)
            fail(Err::SyntaxError,
                 "expected digits after '/' at position " + std::to_string(k + 1));
          den = text_.substr(d0, k - d0);
          j = k;
        }
        Token tk;
        tk.kind = Token::Num;
        tk.pos = pos;
        tk.value = mpq_class(mpz_class(num), mpz_class(den));
        if (tk.value.get_den() == 0)
          fail(Err::SyntaxError, "zero denominator at position " + std::to_string(pos));
        tk.value.canonicalize();
        push(tk);
        i = j;
        continue;
      }
      if (ch == 'z' || ch == 'a' || ch == 'y' || ch == 'w') {
        size_t j = i + 1;
        size_t d0 = j;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        if (j == d0)
          fail(Err::SyntaxError, std::string("expected index after '") + ch +
                                     "' at position " + std::to_string(pos));
        Token tk;
        tk.kind = Token::Indexed;
        tk.pos = pos;
        tk.letter = ch;
        tk.index = std::stol(text_.substr(d0, j - d0));
        push(tk);
        i = j;
        continue;
      }
      Token tk;
      tk.pos = pos;
      switch (ch) {
        case 't': tk.kind = Token::T; break;
        case '+': tk.kind = Token::Plus; break;
        case '-': tk.kind = Token::Minus; break;
        case '*': tk.kind = Token::Star; break;
        case '^': tk.kind = Token::Caret; break;
        case '(': tk.kind = Token::LParen; break;
        case ')': tk.kind = Token::RParen; break;
        default:
          fail(Err::SyntaxError, std::string("unexpected character '") + ch +
                                     "' at position " + std::to_string(pos));
      }
      push(tk);
      ++i;
    }
    Token end;
    end.kind = Token::End;
    end.pos = text_.size() + 1;
    toks_.push_back(end);
  }

  const Token& cur() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  BElem expr() {
    BElem v = term();
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      Token op = take();
      BElem rhs = term();
      v = op.kind == Token::Plus ? v + rhs : v - rhs;
    }
    return v;
  }

  BElem term() {
    BElem v = factor();
    while (cur().kind == Token::Star) {
      take();
      v = v * factor();
    }
    return v;
  }

  BElem factor() {
    if (cur().kind == Token::Minus) {
      take();
      return -factor();
    }
    BElem v = atom();
    if (cur().kind == Token::Caret) {
      take();
      Token e = cur();
      if (e.kind != Token::Num || e.value.get_den() != 1 || e.value < 0)
        bad(e, "expected a natural number exponent");
      take();
      if (e.value.get_num() > 4096) bad(e, "exponent too large");
      long n = static_cast<long>(e.value.get_num().get_si());
      BElem out = BElem::from_a(P_, AElem::one(P_->ring));
      for (long k = 0; k < n; ++k) out = out * v;
      return out;
    }
    return v;
  }

  long checked_index(const Token& tk) {
    if (tk.index > P_->r_max + 1)
      fail(Err::UnknownIndex, std::string(1, tk.letter) + std::to_string(tk.index) +
                                  ": index exceeds r_max+1 = " +
                                  std::to_string(P_->r_max + 1));
    return tk.index;
  }

  BElem atom() {
    Token tk = take();
    switch (tk.kind) {
      case Token::Num:
        return BElem::from_a(P_, AElem::from_mpq(P_->ring, tk.value));
      case Token::T:
        return BElem::from_a(P_, AElem::t_pow(P_->ring, 1));
      case Token::Indexed: {
        long i = checked_index(tk);
        if (tk.letter == 'z') return BElem::z(P_, i);
        if (tk.letter == 'a') return BElem::from_a(P_, P_->a[static_cast<size_t>(i)]);
        BElem u = BElem::z(P_, i) - BElem::from_a(P_, P_->a[static_cast<size_t>(i)]);
        if (tk.letter == 'y') return u * u;
        return u.mul_t_pow(P_->n[static_cast<size_t>(i)] + 1);  // w
      }
      case Token::LParen: {
        BElem v = expr();
        if (cur().kind != Token::RParen) bad(cur(), "expected ')'");
        take();
        return v;
      }
      default:
        bad(tk, "expected a value");
    }
  }

  ParamsPtr P_;
  const std::string& text_;
  std::vector<Token> toks_;
  size_t at_ = 0;
};

}  // namespace

BElem parse_expression(const ParamsPtr& P, const std::string& text) {
  return Parser(P, text).parse();
}

}  // namespace akizuki
