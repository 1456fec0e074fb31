#include "brim/poly.hpp"

#include <cctype>
#include <cmath>

namespace brim {

Exponent exponent_at(std::uint64_t graded) {
  auto d = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(graded) + 1.0) - 1.0) / 2.0);
  while (monomials_below(d + 1) <= graded) ++d;
  while (monomials_below(d) > graded) --d;
  auto b = static_cast<std::uint32_t>(graded - monomials_below(d));
  return {static_cast<std::uint32_t>(d) - b, b};
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    out.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      skip_ws();
      bool neg = c == '-';
      // A single explicit sign on the coefficient, as in "x - -3".
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        neg = neg != (peek() == '-');
        ++pos_;
      }
      out.push_back(term(neg));
    }
    return out;
  }

 private:
  RawTerm term(bool negative) {
    RawTerm t;
    t.negative = negative;
    factor(t);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(RawTerm& t) {
    skip_ws();
    if (at_end()) throw ParseError("expected a factor", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coefficient_factors.push_back(std::string(digits()));
      reject_juxtaposition();
      return;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      std::uint64_t e = 1;
      std::size_t save = pos_;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError("expected an exponent", pos_);
        }
        auto d = digits();
        if (d.size() > 6) throw ParseError("exponent exceeds 10000", at);
        e = std::stoull(std::string(d));
      } else {
        pos_ = save;
      }
      std::uint64_t total = (c == 'x' ? t.exp.a : t.exp.b) + e;
      if (total > kMaxExponent) throw ParseError("exponent exceeds 10000", pos_);
      (c == 'x' ? t.exp.a : t.exp.b) = static_cast<std::uint32_t>(total);
      reject_juxtaposition();
      return;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  // "2x", "xy" and "x 2" are all juxtapositions.
  void reject_juxtaposition() {
    std::size_t save = pos_;
    skip_ws();
    if (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c))) throw ParseError("juxtaposition is not allowed", pos_);
    }
    pos_ = save;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<RawTerm> parse_raw_terms(std::string_view text) { return TermParser(text).parse(); }

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    bool blank = item.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) throw ParseError("empty list item", start);
    out.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace brim
