#include "potalg/parse.hpp"

#include <cctype>
#include <string>

#include "potalg/errors.hpp"
#include "potalg/potential.hpp"

namespace potalg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldSpec& field)
      : text_(text), field_(field) {}

  NcPoly parse() {
    NcPoly result = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input");
    return result;
  }

 private:
  NcPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (get() == '-');
    NcPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      NcPoly t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  NcPoly term() {
    NcPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc = nc_mul(acc, factor());
    }
    return acc;
  }

  NcPoly factor() {
    NcPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent");
      long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        e = e * 10 + (get() - '0');
      if (e > 64) fail("exponent too large");
      return nc_pow(base, static_cast<int>(e));
    }
    return base;
  }

  NcPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      NcPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      int mark_line = line_, mark_col = col_;
      std::string ident;
      while (std::isalpha(static_cast<unsigned char>(peek()))) ident += get();
      if (ident == "cyc") {
        expect('(');
        NcPoly inner = expr();
        expect(')');
        return cyclic_symmetrize(inner);
      }
      if (ident.size() == 1) {
        int idx = letter_index(ident[0]);
        if (idx == 0 || idx == 1) return scaled_letter(idx);
      }
      throw ParseError("unknown identifier '" + ident + "'", mark_line,
                       mark_col);
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  NcPoly scaled_letter(int idx) {
    return NcPoly::term(Word::single(idx), Scalar::one(field_), 2);
  }

  NcPoly number() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    // a '/' directly after an integer continues the rational literal
    size_t save_pos = pos_;
    int save_line = line_, save_col = col_;
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected denominator");
      digits += "/";
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    } else {
      pos_ = save_pos;
      line_ = save_line;
      col_ = save_col;
    }
    Scalar c = Scalar::parse(digits, field_);
    return NcPoly::term(Word(), c, 2);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char get() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    advance();
    return c;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  std::string_view text_;
  FieldSpec field_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

NcPoly parse_ncpoly(std::string_view text, const FieldSpec& field) {
  return Parser(text, field).parse();
}

}  // namespace potalg
