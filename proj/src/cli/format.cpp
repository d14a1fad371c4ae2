#include "format.hpp"

#include <limits>

namespace galoisrad::cli {

Json integer_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str(10));
}

Json rational_json(const Rational& r) {
  if (r.get_den() == 1) return integer_json(r.get_num());
  return Json(to_string(r));
}

Json coeffs_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_json(c));
  return out;
}

Json complex_json(const ApproxComplex& z, int digits) {
  return Json{{"re", z.re().to_fixed(digits)}, {"im", z.im().to_fixed(digits)}};
}

Json expr_tree_json(const RadicalExpr& e) {
  using K = RadicalExpr::Kind;
  switch (e.kind()) {
    case K::Rational:
      return Json{{"kind", "rational"}, {"value", to_string(e.value())}};
    case K::RootOfUnity:
      return Json{{"kind", "zeta"}, {"order", e.order()}, {"power", e.power()}};
    case K::KthRoot:
      return Json{{"kind", "root"}, {"k", e.k()}, {"branch", e.branch()}, {"child", expr_tree_json(e.child())}};
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
      const char* name = e.kind() == K::Add ? "add" : e.kind() == K::Sub ? "sub" : e.kind() == K::Mul ? "mul" : "div";
      return Json{{"kind", name}, {"left", expr_tree_json(e.left())}, {"right", expr_tree_json(e.right())}};
    }
  }
  fail(Errc::InvariantViolation, "unknown expression kind");
}

Json expr_json(const RadicalExpr& e, int prec, int digits) {
  return Json{{"text", e.format()}, {"tree", expr_tree_json(e)}, {"value", complex_json(e.eval(prec), digits)}};
}

Json group_json(const PermGroup& g) {
  return Json{{"degree", g.degree()}, {"order", g.order()}, {"elements", g.cycle_strings()}};
}

Json series_json(const CompositionSeries& s) {
  Json orders = Json::array();
  for (const auto& h : s.chain) orders.push_back(h.order());
  return Json{{"orders", orders}, {"indexes", s.indexes}, {"text", series_text(s)}};
}

int display_digits(int prec) { return std::max(6, std::min(20, prec * 3 / 10 - 8)); }

std::string complex_text(const ApproxComplex& z, int digits) { return z.to_string(digits); }

namespace {

std::string subscript(std::size_t k) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(k)) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string series_text(const CompositionSeries& s) {
  std::string out = "1";
  // chain is ascending: chain.back() is G = G_1.
  const std::size_t len = s.chain.size();
  for (std::size_t i = 1; i < len; ++i) out += " ◁ G" + subscript(len - i);
  return out;
}

std::string indexes_text(const std::vector<std::size_t>& idx) {
  if (idx.empty()) return "(none)";
  std::vector<std::string> parts;
  for (auto k : idx) parts.push_back(std::to_string(k));
  return join(parts, ":");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace galoisrad::cli
