#include "galoisrad/permgrp.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace galoisrad {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  images_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n) fail(Errc::PointOutOfRange, "image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)]) fail(Errc::InvalidArgument, "images are not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
    images_.push_back(static_cast<std::uint8_t>(v - 1));
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), std::uint8_t{0});
  return Permutation(std::move(v));
}

namespace {

/// Splits "(12)(34)" into point lists; commas allowed inside a cycle.
std::vector<std::vector<int>> parse_cycle_lists(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::MalformedCycleString, "expected '(' at position " + std::to_string(i));
    ++i;
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) fail(Errc::MalformedCycleString, "unterminated cycle");
    std::string_view body = text.substr(i, close - i);
    std::vector<int> points;
    bool comma = body.find(',') != std::string_view::npos;
    if (comma) {
      std::string token;
      std::istringstream in{std::string(body)};
      while (std::getline(in, token, ',')) {
        std::string trimmed;
        for (char c : token)
          if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty() || !std::all_of(trimmed.begin(), trimmed.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          fail(Errc::MalformedCycleString, "bad point '" + token + "'");
        }
        points.push_back(std::stoi(trimmed));
      }
    } else {
      for (char c : body) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(Errc::MalformedCycleString, std::string("unexpected '") + c + "'");
        points.push_back(c - '0');
      }
    }
    if (points.empty()) fail(Errc::MalformedCycleString, "empty cycle");
    cycles.push_back(std::move(points));
    i = close + 1;
    skip_ws();
  }
  return cycles;
}

}  // namespace

int Permutation::max_point(std::string_view cycles) {
  int m = 0;
  for (const auto& c : parse_cycle_lists(cycles))
    for (int p : c) m = std::max(m, p);
  return m;
}

Permutation Permutation::parse(std::string_view text, int n) {
  if (n < 0 || n > 255) fail(Errc::InvalidArgument, "unsupported point count");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : parse_cycle_lists(text)) {
    for (int p : cycle) {
      if (p < 1 || p > n) fail(Errc::PointOutOfRange, "point " + std::to_string(p) + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(p - 1)]) fail(Errc::MalformedCycleString, "point " + std::to_string(p) + " repeated");
      used[static_cast<std::size_t>(p - 1)] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::span<const int>(images));
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > size()) fail(Errc::PointOutOfRange, "point outside permutation domain");
  return images_[static_cast<std::size_t>(point - 1)] + 1;
}

std::vector<int> Permutation::images() const {
  std::vector<int> v;
  v.reserve(images_.size());
  for (auto x : images_) v.push_back(x + 1);
  return v;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) fail(Errc::InvalidArgument, "composing permutations of different degree");
  std::vector<std::uint8_t> v(t.images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.images_[t.images_[i]];
  return Permutation(std::move(v));
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

std::size_t Permutation::order() const {
  std::size_t l = 1;
  for (const auto& c : cycles()) l = std::lcm(l, c.size());
  return l;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    std::size_t p = start;
    while (!seen[p]) {
      seen[p] = true;
      cycle.push_back(static_cast<int>(p) + 1);
      p = images_[p];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const bool wide = size() >= 10;
  std::string s;
  for (const auto& c : cycles()) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (wide && k > 0) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation conjugate(const Permutation& t, const Permutation& s) { return s * t * s.inverse(); }

std::vector<Permutation> all_permutations(int n) {
  if (n < 0 || n > 8) fail(Errc::UnsupportedSize, "all_permutations supports n <= 8");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(std::span<const int>(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup PermGroup::closure(int n, std::span<const Permutation> generators) {
  PermGroup g;
  g.n_ = n;
  Permutation id = Permutation::identity(n);
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  for (const auto& gen : generators) {
    if (gen.size() != n) fail(Errc::InvalidArgument, "generator on the wrong number of points");
    if (!gen.is_identity() && std::find(g.generators_.begin(), g.generators_.end(), gen) == g.generators_.end()) {
      g.generators_.push_back(gen);
    }
  }
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators_) {
      Permutation next = gen * cur;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  g.elements_.assign(seen.begin(), seen.end());
  return g;
}

PermGroup PermGroup::trivial(int n) { return closure(n, {}); }

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subset_of(const PermGroup& g) const {
  if (n_ != g.n_) return false;
  return std::includes(g.elements_.begin(), g.elements_.end(), elements_.begin(), elements_.end());
}

std::vector<std::string> PermGroup::cycle_strings() const {
  std::vector<std::string> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.to_cycle_string());
  return out;
}

PermGroup named_group(GroupKind kind, int n) {
  if (n < 1) fail(Errc::UnsupportedSize, "groups need at least one point");
  std::vector<Permutation> gens;
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  switch (kind) {
    case GroupKind::Identity:
      break;
    case GroupKind::Cyclic:
      gens.emplace_back(std::span<const int>(cyc));
      break;
    case GroupKind::Symmetric:
      if (n > kNamedGroupMaxPoints) fail(Errc::UnsupportedSize, "symmetric group limited to n <= 6");
      if (n >= 2) {
        gens.emplace_back(std::span<const int>(cyc));
        gens.push_back(Permutation::parse("(12)", n));
      }
      break;
    case GroupKind::Alternating:
      if (n > kNamedGroupMaxPoints) fail(Errc::UnsupportedSize, "alternating group limited to n <= 6");
      for (int k = 3; k <= n; ++k) {
        std::string c = "(1,2," + std::to_string(k) + ")";
        gens.push_back(Permutation::parse(c, n));
      }
      break;
    case GroupKind::KleinFour:
      if (n != 4) fail(Errc::UnsupportedSize, "the Klein four-group acts on 4 points");
      gens.push_back(Permutation::parse("(12)(34)", 4));
      gens.push_back(Permutation::parse("(13)(24)", 4));
      break;
  }
  return PermGroup::closure(n, gens);
}

namespace {

void require_subgroup(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subset_of(g)) fail(Errc::NotASubgroup, "H is not contained in G");
}

/// Elements of G indexed 0..|G|-1 with a multiplication table.
struct IndexedGroup {
  std::vector<Permutation> elems;
  std::vector<std::vector<std::uint16_t>> mul;
  std::vector<std::uint16_t> inv;

  explicit IndexedGroup(const PermGroup& g) : elems(g.elements()) {
    const std::size_t n = elems.size();
    auto idx = [&](const Permutation& p) {
      auto it = std::lower_bound(elems.begin(), elems.end(), p);
      return static_cast<std::uint16_t>(it - elems.begin());
    };
    mul.assign(n, std::vector<std::uint16_t>(n));
    inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mul[i][j] = idx(elems[i] * elems[j]);
      inv[i] = idx(elems[i].inverse());
    }
  }
};

using Mask = std::vector<bool>;

struct Sub {
  Mask mask;
  std::vector<std::uint16_t> gens;
  std::size_t order = 0;
};

Sub close_in(const IndexedGroup& t, std::vector<std::uint16_t> gens) {
  Sub s;
  s.mask.assign(t.elems.size(), false);
  std::vector<std::uint16_t> members{0};
  s.mask[0] = true;  // identity is the least element
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), std::uint16_t{0}), gens.end());
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto gi : gens) {
      auto next = t.mul[gi][members[k]];
      if (!s.mask[next]) {
        s.mask[next] = true;
        members.push_back(next);
      }
    }
  }
  s.gens = std::move(gens);
  s.order = members.size();
  return s;
}

PermGroup to_group(const IndexedGroup& t, const Sub& s, int n) {
  std::vector<Permutation> gens;
  for (auto gi : s.gens) gens.push_back(t.elems[gi]);
  return PermGroup::closure(n, gens);
}

}  // namespace

bool is_normal(const PermGroup& h, const PermGroup& g) {
  require_subgroup(h, g);
  for (const auto& x : g.elements()) {
    Permutation xi = x.inverse();
    for (const auto& y : h.elements()) {
      if (!h.contains(x * y * xi)) return false;
    }
  }
  return true;
}

std::size_t index(const PermGroup& h, const PermGroup& g) {
  require_subgroup(h, g);
  return g.order() / h.order();
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  if (g.order() > kSubgroupOrderGuard) {
    fail(Errc::GroupTooLarge, "subgroup enumeration limited to order " + std::to_string(kSubgroupOrderGuard));
  }
  IndexedGroup t(g);
  std::map<Mask, Sub> found;
  std::vector<Sub> cyclic;
  for (std::uint16_t i = 0; i < t.elems.size(); ++i) {
    Sub c = close_in(t, {i});
    if (found.emplace(c.mask, c).second) cyclic.push_back(c);
  }
  std::vector<Sub> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Sub> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (c.gens.empty() || h.mask[c.gens.front()]) continue;
        std::vector<std::uint16_t> gens = h.gens;
        gens.push_back(c.gens.front());
        Sub j = close_in(t, gens);
        if (found.emplace(j.mask, j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (const auto& [mask, s] : found) out.push_back(to_group(t, s, g.degree()));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> out;
  for (auto& h : all_subgroups(g)) {
    bool normal = true;
    for (const auto& x : g.generators()) {
      Permutation xi = x.inverse();
      for (const auto& y : h.generators()) {
        if (!h.contains(x * y * xi)) {
          normal = false;
          break;
        }
      }
      if (!normal) break;
    }
    if (normal) out.push_back(std::move(h));
  }
  return out;
}

std::vector<PermGroup> maximal_normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> normals = normal_subgroups(g);
  std::vector<PermGroup> proper;
  for (auto& h : normals)
    if (h.order() < g.order()) proper.push_back(h);
  std::vector<PermGroup> out;
  for (const auto& h : proper) {
    bool maximal = true;
    for (const auto& k : proper) {
      if (k.order() > h.order() && h.is_subset_of(k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

namespace {

const PermGroup& preferred(const std::vector<PermGroup>& candidates) {
  const PermGroup* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.order() > best->order() || (c.order() == best->order() && c.elements() < best->elements())) best = &c;
  }
  return *best;
}

void enumerate_series(const PermGroup& g, std::vector<PermGroup>& stack_desc, std::vector<CompositionSeries>& out) {
  if (g.is_trivial()) {
    CompositionSeries s;
    s.chain.assign(stack_desc.rbegin(), stack_desc.rend());
    for (std::size_t i = 0; i + 1 < stack_desc.size(); ++i)
      s.indexes.push_back(stack_desc[i].order() / stack_desc[i + 1].order());
    out.push_back(std::move(s));
    return;
  }
  for (const auto& h : maximal_normal_subgroups(g)) {
    stack_desc.push_back(h);
    enumerate_series(h, stack_desc, out);
    stack_desc.pop_back();
  }
}

}  // namespace

CompositionSeries composition_series(const PermGroup& g) {
  std::vector<PermGroup> desc{g};
  while (!desc.back().is_trivial()) {
    std::vector<PermGroup> maximal = maximal_normal_subgroups(desc.back());
    desc.push_back(preferred(maximal));
  }
  CompositionSeries s;
  s.chain.assign(desc.rbegin(), desc.rend());
  for (std::size_t i = 0; i + 1 < desc.size(); ++i) s.indexes.push_back(desc[i].order() / desc[i + 1].order());
  return s;
}

std::vector<CompositionSeries> all_composition_series(const PermGroup& g) {
  std::vector<CompositionSeries> out;
  std::vector<PermGroup> stack{g};
  enumerate_series(g, stack, out);
  return out;
}

bool is_prime_small(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_solvable(const PermGroup& g) {
  CompositionSeries s = composition_series(g);
  return std::all_of(s.indexes.begin(), s.indexes.end(), is_prime_small);
}

std::vector<std::size_t> jordan_holder_invariants(const PermGroup& g) {
  std::vector<std::size_t> v = composition_series(g).indexes;
  std::sort(v.begin(), v.end());
  return v;
}

QuotientGroup quotient_group(const PermGroup& g, const PermGroup& h) {
  if (!is_normal(h, g)) fail(Errc::NotNormal, "quotient needs a normal subgroup");
  QuotientGroup q;
  std::map<Permutation, std::size_t> coset_of;
  for (const auto& x : g.elements()) {
    if (coset_of.count(x)) continue;
    // Elements are visited in sorted order, so x is its coset's least element.
    std::size_t id = q.representatives.size();
    q.representatives.push_back(x);
    for (const auto& y : h.elements()) coset_of[x * y] = id;
  }
  const std::size_t m = q.representatives.size();
  q.table.assign(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) q.table[i][j] = coset_of.at(q.representatives[i] * q.representatives[j]);
  return q;
}

}  // namespace galoisrad
