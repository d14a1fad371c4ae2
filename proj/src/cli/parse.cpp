#include <algorithm>
#include <cctype>
#include <string>

#include "galoisrad/cli.hpp"

namespace galoisrad::cli {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  UniPoly parse() {
    skip();
    int sign = 1;
    if (at('+') || at('-')) {
      sign = at('-') ? -1 : 1;
      ++pos_;
    }
    term(sign);
    for (;;) {
      skip();
      if (pos_ == text_.size()) break;
      if (!at('+') && !at('-')) error("expected '+' or '-'");
      sign = at('-') ? -1 : 1;
      ++pos_;
      term(sign);
    }
    int degree = 0;
    for (const auto& [e, c] : terms_) degree = std::max(degree, e);
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree + 1));
    for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e)] += c;
    return UniPoly(std::move(coeffs));
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  Integer uint() {
    skip();
    if (!at_digit()) error("expected digits");
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  int exponent() {
    skip();
    if (!at('^')) return 1;
    ++pos_;
    skip();
    std::size_t start = pos_;
    Integer e = uint();
    if (e > kInputDegreeGuard) {
      fail(Errc::DegreeTooLarge, "exponent at position " + std::to_string(start) + " exceeds the degree guard 8");
    }
    return static_cast<int>(e.get_si());
  }

  void term(int sign) {
    skip();
    if (pos_ == text_.size()) error("expected a term");
    Rational c(sign);
    int e = 0;
    if (at_digit()) {
      Integer num = uint();
      Integer den = 1;
      skip();
      if (at('/')) {
        ++pos_;
        skip();
        std::size_t den_pos = pos_;
        den = uint();
        if (den == 0) {
          pos_ = den_pos;
          error("zero denominator");
        }
      }
      c *= make_rational(num, den);
      skip();
      if (at('*')) {
        ++pos_;
        skip();
        if (!at('x')) error("expected 'x' after '*'");
      }
      if (at('x')) {
        ++pos_;
        e = exponent();
      }
    } else if (at('x')) {
      ++pos_;
      e = exponent();
    } else {
      error("expected a coefficient or 'x'");
    }
    terms_.emplace_back(e, c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::pair<int, Rational>> terms_;
};

}  // namespace

UniPoly parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::MalformedCycleString:
      return kExitParse;
    case Errc::ClusterAmbiguity:
    case Errc::ExhaustedCandidates:
    case Errc::ConvergenceFailure:
    case Errc::NoCandidateSurvives:
    case Errc::ImaginaryResidue:
      return kExitPrecision;
    case Errc::InvariantViolation:
      return kExitInternal;
    default:
      return kExitUnsupported;
  }
}

}  // namespace galoisrad::cli
