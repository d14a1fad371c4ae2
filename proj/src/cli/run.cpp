#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "format.hpp"
#include "galoisrad/classical.hpp"
#include "galoisrad/cli.hpp"
#include "galoisrad/cyclo.hpp"
#include "galoisrad/galois.hpp"
#include "galoisrad/tschirn.hpp"

namespace galoisrad::cli {

namespace {

struct Settings {
  bool json = false;
  int precision = kDefaultPrecision;
  std::optional<long> alpha;
  int digits() const { return display_digits(precision); }
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string roots_block(const std::vector<ApproxComplex>& roots, int digits) {
  std::string s;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    s += "  x" + std::to_string(i + 1) + " = " + complex_text(roots[i], digits) + "\n";
  }
  return s;
}

std::string orders_text(const CompositionSeries& s) {
  std::vector<std::string> parts;
  for (const auto& h : s.chain) parts.push_back(std::to_string(h.order()));
  return join(parts, ", ");
}

std::string expr_line(const RadicalExpr& e, const Settings& st) {
  return e.format() + "\n      ~ " + complex_text(e.eval(st.precision), st.digits());
}

GaloisOptions galois_options(const Settings& st) {
  GaloisOptions o;
  o.precision_bits = st.precision;
  if (st.alpha) o.alpha = Rational(*st.alpha);
  return o;
}

int cmd_solve(const std::string& text, const Settings& st, std::ostream& out) {
  UniPoly p = parse_polynomial(text);
  SolvabilityReport rep = solvability_report(p, galois_options(st));
  const int d = st.digits();
  if (st.json) {
    Json j;
    j["polynomial"] = rep.polynomial.to_string();
    j["coeffs"] = coeffs_json(rep.polynomial);
    j["method"] = rep.method;
    j["alpha"] = rational_json(*rep.alpha);
    j["precision"] = st.precision;
    Json roots = Json::array();
    for (const auto& r : rep.roots) roots.push_back(complex_json(r, d));
    j["roots"] = roots;
    j["group"] = group_json(rep.group);
    j["series"] = series_json(rep.series);
    Json tower = Json::array();
    for (const auto& a : rep.tower) {
      tower.push_back(Json{{"name", a.name},
                           {"relation", a.relation},
                           {"value", expr_json(a.value, st.precision, d)},
                           {"order_before", a.order_before},
                           {"order_after", a.order_after},
                           {"index", a.index()}});
    }
    j["tower"] = tower;
    j["solvable"] = rep.solvable;
    Json rr = Json::array();
    for (const auto& e : *rep.radical_roots) rr.push_back(expr_json(e, st.precision, d));
    j["radical_roots"] = rr;
    emit(out, j);
    return kExitOk;
  }
  out << "polynomial: " << rep.polynomial.to_string() << "\n";
  out << "method: " << rep.method << "\n";
  out << "alpha: " << to_string(*rep.alpha) << "\n";
  out << "root labeling:\n" << roots_block(rep.roots, d);
  out << "group order: " << rep.group.order() << "\n";
  out << "group: " << join(rep.group.cycle_strings(), " ") << "\n";
  out << "composition series: " << series_text(rep.series) << "\n";
  out << "orders: " << orders_text(rep.series) << "\n";
  out << "indexes: " << indexes_text(rep.series.indexes) << "\n";
  if (!rep.tower.empty()) {
    out << "tower:\n";
    for (const auto& a : rep.tower) {
      out << "  " << a.name << ": " << a.relation << " (index " << a.index() << ", order " << a.order_before << " -> "
          << a.order_after << ")\n";
      out << "    " << a.name << " = " << a.value.format() << "\n";
    }
  }
  out << "solvable: " << (rep.solvable ? "true" : "false") << "\n";
  out << "radical roots:\n";
  for (const auto& e : *rep.radical_roots) out << "  " << expr_line(e, st) << "\n";
  return kExitOk;
}

int cmd_group(const std::string& text, const Settings& st, std::ostream& out) {
  UniPoly p = parse_polynomial(text);
  GaloisGroupResult g = galois_group(p, galois_options(st));
  const int d = st.digits();
  if (st.json) {
    Json j;
    j["polynomial"] = p.monic().to_string();
    j["alpha"] = rational_json(g.alpha);
    j["precision"] = g.precision_used;
    Json roots = Json::array();
    for (const auto& r : g.roots) roots.push_back(complex_json(r, d));
    j["roots"] = roots;
    j["group"] = group_json(g.group);
    j["resolvent_degree"] = g.resolvent.R.degree();
    j["factor_of_phi1"] = coeffs_json(g.resolvent.factor_of_phi1);
    emit(out, j);
    return kExitOk;
  }
  out << "polynomial: " << p.monic().to_string() << "\n";
  out << "alpha: " << to_string(g.alpha) << "\n";
  out << "root labeling:\n" << roots_block(g.roots, d);
  out << "resolvent degree: " << g.resolvent.R.degree() << "\n";
  out << "factor of phi1: " << g.resolvent.factor_of_phi1.to_string('y') << "\n";
  out << "group order: " << g.group.order() << "\n";
  out << "group: " << join(g.group.cycle_strings(), " ") << "\n";
  return kExitOk;
}

int cmd_series(const std::vector<std::string>& cycles, int degree, const Settings& st, std::ostream& out) {
  int n = degree;
  for (const auto& c : cycles) n = std::max(n, Permutation::max_point(c));
  if (n < 1) n = 1;
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::parse(c, n));
  PermGroup g = PermGroup::closure(n, gens);
  SolvabilityReport rep = solvability_report_for_group(g);
  std::vector<std::size_t> jh = jordan_holder_invariants(g);
  if (st.json) {
    Json j;
    j["degree"] = n;
    j["generators"] = cycles;
    j["group"] = group_json(g);
    j["series"] = series_json(rep.series);
    j["jordan_holder"] = jh;
    j["solvable"] = rep.solvable;
    emit(out, j);
    return kExitOk;
  }
  out << "degree: " << n << "\n";
  out << "group order: " << g.order() << "\n";
  if (g.order() <= 24) out << "group: " << join(g.cycle_strings(), " ") << "\n";
  out << "composition series: " << series_text(rep.series) << "\n";
  out << "orders: " << orders_text(rep.series) << "\n";
  out << "indexes: " << indexes_text(rep.series.indexes) << "\n";
  out << "solvable: " << (rep.solvable ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_cyclotomic(long m, const Settings& st, std::ostream& out) {
  UniPoly z = cyclotomic_poly(m);
  const Integer phi = euler_phi(Integer(m));
  const int mu = moebius(Integer(m));
  const std::vector<long> divs = divisors(m);
  const bool identity = verify_product_identity(m);
  if (st.json) {
    Json j;
    j["m"] = m;
    j["coeffs"] = coeffs_json(z);
    j["text"] = z.to_string();
    j["degree"] = z.degree();
    j["phi"] = integer_json(phi);
    j["mu"] = mu;
    j["divisors"] = divs;
    j["product_identity"] = identity;
    emit(out, j);
    return kExitOk;
  }
  std::vector<std::string> ds;
  for (long k : divs) ds.push_back(std::to_string(k));
  out << "Z_" << m << "(x) = " << z.to_string() << "\n";
  out << "degree: " << z.degree() << "\n";
  out << "phi(" << m << ") = " << phi.get_str() << "\n";
  out << "mu(" << m << ") = " << mu << "\n";
  out << "divisors: " << join(ds, ", ") << "\n";
  out << "product over divisors equals x^" << m << " - 1: " << (identity ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_constructible(const std::string& p_text, bool extended, const Settings& st, std::ostream& out) {
  Integer p;
  if (p_text.empty() || p_text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(0, "expected a positive integer");
  }
  p = Integer(p_text, 10);
  ConstructibilityVerdict v = is_constructible_polygon(p, extended);
  if (st.json) {
    Json j;
    j["p"] = integer_json(v.p);
    j["extended"] = extended;
    j["constructible"] = v.constructible;
    j["reason"] = std::string(reason_name(v.reason));
    emit(out, j);
    return kExitOk;
  }
  out << "p: " << v.p.get_str() << "\n";
  out << "constructible: " << (v.constructible ? "true" : "false") << "\n";
  out << "reason: " << reason_name(v.reason) << "\n";
  return kExitOk;
}

inline constexpr long kVandermondeMax = 2001;

int cmd_vandermonde(long p, const Settings& st, std::ostream& out) {
  if (p > kVandermondeMax) fail(Errc::UnsupportedSize, "vandermonde is limited to p <= 2001");
  UniPoly y = vandermonde_reduce(p);
  if (st.json) {
    emit(out, Json{{"p", p}, {"coeffs", coeffs_json(y)}});
    return kExitOk;
  }
  std::vector<std::string> cs;
  for (const auto& c : y.coeffs()) cs.push_back(to_string(c));
  out << "p: " << p << "\n";
  out << "coeffs: [" << join(cs, ", ") << "]\n";
  out << "polynomial: " << y.to_string('Y') << "\n";
  return kExitOk;
}

int cmd_tschirnhaus(const std::string& text, const Settings& st, std::ostream& out) {
  UniPoly p = parse_polynomial(text);
  TschirnhausSolution s = tschirnhaus_solve(p, st.precision);
  const int d = st.digits();
  const int prec = st.precision;
  auto list_json = [&](const std::vector<RadicalExpr>& es) {
    Json a = Json::array();
    for (const auto& e : es) a.push_back(expr_json(e, prec, d));
    return a;
  };
  if (st.json) {
    Json j;
    j["polynomial"] = p.monic().to_string();
    j["shift"] = rational_json(s.shift);
    j["reduced"] = s.reduced;
    if (s.reduced) {
      j["depressed"] = Json{{"a", rational_json(s.reduction.a)}, {"b", rational_json(s.reduction.b)}};
      j["b1"] = expr_json(s.reduction.b1.to_expr(), prec, d);
      j["b2"] = rational_json(s.reduction.b2);
      j["c"] = expr_json(s.reduction.c.to_expr(), prec, d);
    }
    j["y_values"] = list_json(s.y_values);
    j["roots"] = list_json(s.roots);
    j["false_roots"] = list_json(s.false_roots);
    emit(out, j);
    return kExitOk;
  }
  out << "polynomial: " << p.monic().to_string() << "\n";
  if (s.shift != 0) out << "shift: x = u - " << to_string(s.shift) << "\n";
  if (s.reduced) {
    const CubicReduction& r = s.reduction;
    out << "depressed: u^3 + (" << to_string(r.a) << ")u + (" << to_string(r.b) << ")\n";
    out << "auxiliary: y = u^2 + b1 u + b2\n";
    out << "  b1 = " << r.b1.to_expr().format() << "\n";
    out << "  b2 = " << to_string(r.b2) << "\n";
    out << "binomial: y^3 = c, c = " << r.c.to_expr().format() << "\n";
  } else {
    out << "already binomial after the shift\n";
  }
  out << "y values:\n";
  for (const auto& e : s.y_values) out << "  " << expr_line(e, st) << "\n";
  out << "roots:\n";
  for (const auto& e : s.roots) out << "  " << expr_line(e, st) << "\n";
  out << "false roots rejected: " << s.false_roots.size() << "\n";
  for (const auto& e : s.false_roots) out << "  " << expr_line(e, st) << "\n";
  return kExitOk;
}

int cmd_cardano(const std::string& a_text, const std::string& b_text, const Settings& st, std::ostream& out) {
  DepressedCubic c{parse_rational(a_text), parse_rational(b_text)};
  CardanoSolution s = cardano_roots(c, st.precision);
  const int d = st.digits();
  const int prec = st.precision;
  auto arr = [&](const std::array<RadicalExpr, 3>& es) {
    Json a = Json::array();
    for (const auto& e : es) a.push_back(expr_json(e, prec, d));
    return a;
  };
  if (st.json) {
    Json j;
    j["a"] = rational_json(c.a);
    j["b"] = rational_json(c.b);
    j["negative_branch"] = s.negative_branch;
    j["pairing_branch"] = s.pairing_branch;
    j["roots"] = arr(s.roots);
    j["y"] = arr(s.y);
    j["z"] = arr(s.z);
    emit(out, j);
    return kExitOk;
  }
  out << "cubic: x^3 + (" << to_string(c.a) << ")x = " << to_string(c.b) << "\n";
  out << "pairing branch: " << s.pairing_branch << (s.negative_branch ? " (a < 0 form)" : "") << "\n";
  for (std::size_t k = 0; k < 3; ++k) {
    out << "x" << k + 1 << " = " << expr_line(s.roots[k], st) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois groups, composition series and radical solutions of small polynomials", "galoisrad"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;
  long alpha_value = 0;
  app.add_flag("--json", st.json, "Print JSON instead of text");
  app.add_option("--precision", st.precision, "Working precision in bits")->check(CLI::Range(64, 4096));
  CLI::Option* alpha_opt = app.add_option("--alpha", alpha_value, "Integer alpha for the fundamental function");

  std::string poly_text;
  auto* solve = app.add_subcommand("solve", "Group, composition series, verdict and radical roots");
  solve->add_option("poly", poly_text, "Polynomial in x")->required();
  auto* group = app.add_subcommand("group", "Galois group through the resolvent");
  group->add_option("poly", poly_text, "Polynomial in x")->required();
  std::vector<std::string> cycles;
  int degree = 0;
  auto* series = app.add_subcommand("series", "Composition series of the group generated by permutations");
  series->add_option("cycles", cycles, "Generators in cycle notation")->required();
  series->add_option("--degree", degree, "Number of points (default: largest point mentioned)");
  long m = 0;
  auto* cyclotomic = app.add_subcommand("cyclotomic", "Cyclotomic polynomial with totient and Moebius data");
  cyclotomic->add_option("m", m, "Order")->required()->check(CLI::PositiveNumber);
  std::string p_text;
  bool extended = false;
  auto* constructible = app.add_subcommand("constructible", "Ruler-and-compass constructibility of the regular p-gon");
  constructible->add_option("p", p_text, "Number of sides")->required();
  constructible->add_flag("--extended", extended, "Accept any n with a power-of-two totient");
  long vp = 0;
  auto* vandermonde = app.add_subcommand("vandermonde", "Period polynomial of the p-th roots of unity in Y = x + 1/x");
  vandermonde->add_option("p", vp, "Odd integer >= 3")->required();
  auto* tschirnhaus = app.add_subcommand("tschirnhaus", "Reduce a cubic to binomial form and back-substitute");
  tschirnhaus->add_option("poly", poly_text, "Cubic in x")->required();
  std::string a_text, b_text;
  auto* cardano = app.add_subcommand("cardano", "Cardano's roots of x^3 + a x = b");
  cardano->add_option("a", a_text, "Rational a")->required();
  cardano->add_option("b", b_text, "Rational b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (*alpha_opt) st.alpha = alpha_value;

  try {
    if (*solve) return cmd_solve(poly_text, st, out);
    if (*group) return cmd_group(poly_text, st, out);
    if (*series) return cmd_series(cycles, degree, st, out);
    if (*cyclotomic) return cmd_cyclotomic(m, st, out);
    if (*constructible) return cmd_constructible(p_text, extended, st, out);
    if (*vandermonde) return cmd_vandermonde(vp, st, out);
    if (*tschirnhaus) return cmd_tschirnhaus(poly_text, st, out);
    if (*cardano) return cmd_cardano(a_text, b_text, st, out);
  } catch (const MathError& e) {
    err << "galoisrad: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "galoisrad: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "galoisrad: no command\n";
  return kExitParse;
}

}  // namespace galoisrad::cli
