#include "orebasis/parse.hpp"

#include <cctype>
#include <map>

#include "orebasis/errors.hpp"

namespace orebasis {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  IntPoly parse() {
    std::map<unsigned long, Integer> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [coeff, degree] = term();
      terms[degree] += sign * coeff;
      first = false;
    }
    std::vector<Integer> coeffs;
    for (const auto& [d, c] : terms) {
      if (coeffs.size() <= d) coeffs.resize(d + 1);
      coeffs[d] += c;
    }
    return IntPoly(coeffs);
  }

 private:
  std::pair<Integer, unsigned long> term() {
    if (at_end()) throw ParseError("expected a term", pos_);
    Integer coeff = 1;
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      has_number = true;
      if (!at_end() && peek() == '*') {
        advance();
        if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    if (!at_end() && peek() == 'x') {
      advance();
      unsigned long degree = 1;
      if (!at_end() && peek() == '^') {
        advance();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected an exponent", pos_);
        Integer e = number();
        if (!e.fits_ulong_p() || e > 100000) throw ParseError("exponent too large", pos_);
        degree = e.get_ui();
      }
      return {coeff, degree};
    }
    if (!has_number) throw ParseError("expected a coefficient or 'x'", pos_);
    return {coeff, 0};
  }

  Integer number() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
    skip();
    return Integer(digits);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    ++pos_;
    skip();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace orebasis
