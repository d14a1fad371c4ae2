#include "galoisrad/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "galoisrad/kernels.hpp"
#include "symmetric_detail.hpp"

namespace galoisrad {

namespace {

using Monomial = MultiPoly::Monomial;

constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

Monomial add_monomials(Monomial a, Monomial b) {
  Monomial s = a + b;
  // Carry out of bit 7 of any byte means an exponent passed 255.
  if ((((a & b) | ((a | b) & ~s)) & kHighBits) != 0) fail(Errc::InvalidArgument, "exponent overflow in MultiPoly");
  return s;
}

int byte_at(Monomial m, int var) { return MultiPoly::exponent(m, var); }

Monomial with_byte(Monomial m, int var, int value) {
  const int sh = 8 * (MultiPoly::kMaxVars - 1 - var);
  m &= ~(Monomial{0xff} << sh);
  return m | (static_cast<Monomial>(value) << sh);
}

Monomial root_mask(int n) {
  Monomial mask = 0;
  for (int v = 0; v < n; ++v) mask = with_byte(mask, v, 0xff);
  return mask;
}

bool is_partition(Monomial m, int n) {
  for (int v = 0; v + 1 < n; ++v)
    if (byte_at(m, v) < byte_at(m, v + 1)) return false;
  return true;
}

}  // namespace

MultiPoly::MultiPoly(int nroots, int nparams) : nroots_(nroots), nparams_(nparams) {
  if (nroots < 0 || nparams < 0 || nroots + nparams > kMaxVars) {
    fail(Errc::UnsupportedSize, "MultiPoly supports at most 8 variables");
  }
}

MultiPoly MultiPoly::constant(int nroots, int nparams, const Rational& c) {
  MultiPoly p(nroots, nparams);
  p.add_term(0, c);
  return p;
}

MultiPoly MultiPoly::root(int nroots, int nparams, int i) {
  if (i < 1 || i > nroots) fail(Errc::PointOutOfRange, "root index out of range");
  MultiPoly p(nroots, nparams);
  p.add_term(with_byte(0, i - 1, 1), Rational(1));
  return p;
}

MultiPoly MultiPoly::param(int nroots, int nparams, int j) {
  if (j < 0 || j >= nparams) fail(Errc::InvalidArgument, "parameter index out of range");
  MultiPoly p(nroots, nparams);
  p.add_term(with_byte(0, nroots + j, 1), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(int nroots, int nparams, std::span<const int> exponents, const Rational& c) {
  MultiPoly p(nroots, nparams);
  if (static_cast<int>(exponents.size()) != p.nvars()) fail(Errc::InvalidArgument, "exponent vector length");
  p.add_term(pack(exponents), c);
  return p;
}

Monomial MultiPoly::pack(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) fail(Errc::UnsupportedSize, "too many variables");
  Monomial m = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] < 0 || exponents[v] > 255) fail(Errc::InvalidArgument, "exponent out of range");
    m = with_byte(m, static_cast<int>(v), exponents[v]);
  }
  return m;
}

std::vector<int> MultiPoly::exponents(Monomial m) const {
  std::vector<int> e(static_cast<std::size_t>(nvars()));
  for (int v = 0; v < nvars(); ++v) e[static_cast<std::size_t>(v)] = exponent(m, v);
  return e;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int v = 0; v < nvars(); ++v) d += exponent(m, v);
    best = std::max(best, d);
  }
  return best;
}

int MultiPoly::degree_in(int var) const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, exponent(m, var));
  return best;
}

void MultiPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nroots_ != o.nroots_ || nparams_ != o.nparams_) fail(Errc::InvalidArgument, "MultiPoly rings differ");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rational& slot = acc[add_monomials(ma, mb)];
      slot += ca * cb;
    }
  }
  MultiPoly r(a.nroots_, a.nparams_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace(m, std::move(c));
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly r(a.nroots_, a.nparams_);
  if (c == 0) return r;
  for (const auto& [m, x] : a.terms_) r.terms_.emplace(m, c * x);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nroots_, nparams_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::apply_permutation(const Permutation& sigma) const {
  if (sigma.size() != nroots_) fail(Errc::InvalidArgument, "permutation degree differs from root count");
  const Monomial mask = root_mask(nroots_);
  MultiPoly r(nroots_, nparams_);
  for (const auto& [m, c] : terms_) {
    Monomial out = m & ~mask;
    for (int i = 0; i < nroots_; ++i) out = with_byte(out, sigma.image0(i), byte_at(m, i));
    r.terms_.emplace(out, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
  if (var < 0 || var >= nvars()) fail(Errc::InvalidArgument, "variable index out of range");
  MultiPoly r(nroots_, nparams_);
  for (const auto& [m, c] : terms_) {
    int e = exponent(m, var);
    r.add_term(with_byte(m, var, 0), c * galoisrad::pow(value, e));
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != nvars()) fail(Errc::InvalidArgument, "assignment length");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < nvars(); ++v) {
      int e = exponent(m, v);
      if (e != 0) t *= galoisrad::pow(values[static_cast<std::size_t>(v)], e);
    }
    total += t;
  }
  return total;
}

ApproxComplex MultiPoly::evaluate(std::span<const ApproxComplex> values) const {
  if (static_cast<int>(values.size()) != nvars()) fail(Errc::InvalidArgument, "assignment length");
  const int prec = values.empty() ? kDefaultPrecision : values.front().precision_bits();
  ApproxComplex total(prec);
  for (const auto& [m, c] : terms_) {
    ApproxComplex t(c, prec);
    for (int v = 0; v < nvars(); ++v) {
      int e = exponent(m, v);
      if (e != 0) t = t * integer_power(values[static_cast<std::size_t>(v)], static_cast<unsigned long>(e));
    }
    total = total + t;
  }
  return total;
}

MultiPoly MultiPoly::reduce_param_mod(int j, const UniPoly& modulus) const {
  if (j < 0 || j >= nparams_) fail(Errc::InvalidArgument, "parameter index out of range");
  if (!modulus.is_monic() || modulus.degree() < 1) fail(Errc::InvalidArgument, "modulus must be monic and non-constant");
  const int var = nroots_ + j;
  std::map<Monomial, std::vector<Rational>> groups;
  for (const auto& [m, c] : terms_) {
    auto& coeffs = groups[with_byte(m, var, 0)];
    const auto e = static_cast<std::size_t>(exponent(m, var));
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  MultiPoly r(nroots_, nparams_);
  for (auto& [base, coeffs] : groups) {
    UniPoly rem = static_cast<int>(coeffs.size()) > modulus.degree() ? div_rem(UniPoly(coeffs), modulus).second
                                                                     : UniPoly(coeffs);
    for (int e = 0; e <= rem.degree(); ++e) r.add_term(with_byte(base, var, e), rem[e]);
  }
  return r;
}

MultiPoly MultiPoly::coefficient_of_param(int j, int k) const {
  if (j < 0 || j >= nparams_) fail(Errc::InvalidArgument, "parameter index out of range");
  const int var = nroots_ + j;
  MultiPoly r(nroots_, nparams_);
  for (const auto& [m, c] : terms_)
    if (exponent(m, var) == k) r.terms_.emplace(with_byte(m, var, 0), c);
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& param_names, const std::string& root_name) const {
  if (terms_.empty()) return "0";
  auto name = [&](int v) {
    if (v < nroots_) return root_name + std::to_string(v + 1);
    auto j = static_cast<std::size_t>(v - nroots_);
    return j < param_names.size() ? param_names[j] : "p" + std::to_string(j);
  };
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int v = 0; v < nvars(); ++v) {
      int e = exponent(m, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += galoisrad::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += galoisrad::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

MultiPoly elementary_symmetric(int nroots, int nparams, int k) {
  MultiPoly r(nroots, nparams);
  if (k < 0 || k > nroots) return r;
  for (std::uint32_t mask = 0; mask < (1U << nroots); ++mask) {
    if (std::popcount(mask) != k) continue;
    Monomial m = 0;
    for (int i = 0; i < nroots; ++i)
      if (mask & (1U << i)) m = with_byte(m, i, 1);
    r.add_term(m, Rational(1));
  }
  return r;
}

bool is_symmetric(const MultiPoly& f) {
  const int n = f.nroots();
  if (n <= 1) return true;
  std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    swap[static_cast<std::size_t>(i)] = i + 1;
    cycle[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  }
  std::swap(swap[0], swap[1]);
  return f.apply_permutation(Permutation(std::span<const int>(swap))) == f &&
         f.apply_permutation(Permutation(std::span<const int>(cycle))) == f;
}

namespace detail {

const kernels::PartitionForm& EPowerCache::get(Monomial mu) {
  if (auto it = cache_.find(mu); it != cache_.end()) return it->second;
  if (mu == 0) return cache_.emplace(0, kernels::PartitionForm{{0, Rational(1)}}).first->second;
  int k = n_;
  while (byte_at(mu, k - 1) == 0) --k;
  const kernels::PartitionForm& base = get(with_byte(mu, k - 1, byte_at(mu, k - 1) - 1));
  return cache_.emplace(mu, times_e(base, k)).first->second;
}

kernels::PartitionForm EPowerCache::times_e(const kernels::PartitionForm& f, int k) const {
  // Each sorted u stands for all its rearrangements v; (f e_k)[w] collects
  // f[u] over pairs (v, S) with |S| = k and v + 1_S = w sorted.
  kernels::PartitionForm out;
  std::vector<int> v(static_cast<std::size_t>(n_));
  for (const auto& [u, c] : f) {
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = byte_at(u, i);
    std::sort(v.begin(), v.end());
    do {
      for (std::uint32_t s = 0; s < (1U << n_); ++s) {
        if (std::popcount(s) != k) continue;
        bool sorted = true;
        int prev = 1 << 20;
        Monomial w = 0;
        for (int i = 0; i < n_; ++i) {
          int e = v[static_cast<std::size_t>(i)] + ((s >> i) & 1U ? 1 : 0);
          if (e > prev) {
            sorted = false;
            break;
          }
          prev = e;
          w = with_byte(w, i, e);
        }
        if (sorted) out[w] += c;
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

kernels::PartitionForm reduce_partition_form(int n, kernels::PartitionForm form, EPowerCache& cache) {
  kernels::PartitionForm out;
  while (!form.empty()) {
    auto lead = std::prev(form.end());
    const Monomial lambda = lead->first;
    const Rational c = lead->second;
    Monomial mu = 0;
    for (int k = 0; k < n; ++k) {
      int next = k + 1 < n ? byte_at(lambda, k + 1) : 0;
      mu = with_byte(mu, k, byte_at(lambda, k) - next);
    }
    out[mu] += c;
    for (const auto& [t, d] : cache.get(mu)) {
      auto [it, inserted] = form.try_emplace(t, 0);
      it->second -= c * d;
      if (it->second == 0) form.erase(it);
    }
    if (form.count(lambda) != 0) fail(Errc::InvariantViolation, "leading term survived reduction");
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

MultiPoly symmetric_reduce(const MultiPoly& f) {
  if (!is_symmetric(f)) fail(Errc::NotSymmetric, "polynomial is not symmetric in the roots");
  const int n = f.nroots();
  const Monomial mask = root_mask(n);
  std::map<Monomial, kernels::PartitionForm> groups;
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m & mask;
    if (is_partition(r, n)) groups[m & ~mask].emplace(r, c);
  }
  std::vector<Monomial> keys;
  std::vector<kernels::PartitionForm> forms;
  for (auto& [k, form] : groups) {
    keys.push_back(k);
    forms.push_back(std::move(form));
  }
  auto reduced = kernels::reduce_partition_forms(n, forms, default_exec());
  MultiPoly out(n, f.nparams());
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (const auto& [mu, c] : reduced[i]) out.add_term(mu | keys[i], c);
  return out;
}

MultiPoly expand_elementary(const MultiPoly& reduced) {
  const int n = reduced.nroots();
  const int np = reduced.nparams();
  const Monomial mask = root_mask(n);
  std::vector<MultiPoly> e;
  for (int k = 1; k <= n; ++k) e.push_back(elementary_symmetric(n, np, k));
  MultiPoly out(n, np);
  for (const auto& [m, c] : reduced.terms()) {
    MultiPoly t(n, np);
    t.add_term(m & ~mask, c);
    for (int k = 0; k < n; ++k) {
      int mu = byte_at(m, k);
      if (mu > 0) t = t * e[static_cast<std::size_t>(k)].pow(static_cast<unsigned>(mu));
    }
    out += t;
  }
  return out;
}

MultiPoly substitute_coefficients(const MultiPoly& reduced, const UniPoly& monic_p) {
  const int n = reduced.nroots();
  if (monic_p.degree() != n || !monic_p.is_monic()) fail(Errc::InvalidArgument, "need a monic polynomial of degree n");
  std::vector<Rational> ek(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Rational a = monic_p[n - k];
    ek[static_cast<std::size_t>(k - 1)] = (k % 2 == 0) ? a : Rational(-a);
  }
  const Monomial mask = root_mask(n);
  MultiPoly out(n, reduced.nparams());
  for (const auto& [m, c] : reduced.terms()) {
    Rational t = c;
    for (int k = 0; k < n; ++k) {
      int mu = byte_at(m, k);
      if (mu > 0) t *= pow(ek[static_cast<std::size_t>(k)], mu);
    }
    out.add_term(m & ~mask, t);
  }
  return out;
}

DistinctValues distinct_values_count(const MultiPoly& f, int n) {
  if (n < 1 || n > 5) fail(Errc::UnsupportedDegree, "distinct_values_count supports n <= 5");
  if (f.nroots() != n) fail(Errc::InvalidArgument, "root count differs from n");
  auto perms = all_permutations(n);
  auto images = kernels::permutation_images(f, perms, default_exec());
  std::vector<const MultiPoly*> distinct;
  DistinctValues dv;
  for (const auto& img : images) {
    if (img == f) ++dv.stabilizer_order;
    bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const MultiPoly* d) { return *d == img; });
    if (!seen) distinct.push_back(&img);
  }
  dv.m = distinct.size();
  if (dv.m * dv.stabilizer_order != perms.size()) fail(Errc::InvariantViolation, "orbit-stabilizer count mismatch");
  return dv;
}

}  // namespace galoisrad
