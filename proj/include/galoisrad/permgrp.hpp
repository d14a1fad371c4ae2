#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galoisrad/error.hpp"

namespace galoisrad {

/// Bijection of {1..n}. Composition is right-to-left: (s * t)(i) = s(t(i)).
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = sigma(i); validated as a bijection of {1..n}.
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);
  static Permutation identity(int n);
  /// Parses cycle notation such as "(12)(34)" or "(1,10)(2,3)" on n points.
  static Permutation parse(std::string_view cycles, int n);
  /// Largest point mentioned in a cycle string (0 when it has none).
  static int max_point(std::string_view cycles);

  int size() const { return static_cast<int>(images_.size()); }
  /// Image of a 1-based point.
  int operator()(int point) const;
  /// Image of a 0-based point, 0-based.
  int image0(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::vector<int> images() const;
  bool is_identity() const;

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& s, const Permutation& t);
  /// +1 for even, -1 for odd.
  int sign() const;
  bool is_even() const { return sign() == 1; }
  std::size_t order() const;

  /// Cycles (1-based) including fixed points, each starting at its least
  /// point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle notation with explicit fixed points, e.g. "(1)(2)(34)".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  explicit Permutation(std::vector<std::uint8_t> images0) : images_(std::move(images0)) {}
  std::vector<std::uint8_t> images_;
  friend class PermGroup;
};

/// Conjugation s t s^-1.
Permutation conjugate(const Permutation& t, const Permutation& s);

/// Every permutation of {1..n} in lexicographic order of images (n <= 8).
std::vector<Permutation> all_permutations(int n);

/// Finite group of permutations of {1..n}, elements kept sorted.
class PermGroup {
 public:
  PermGroup() = default;
  /// Smallest group containing the generators (breadth-first saturation).
  static PermGroup closure(int n, std::span<const Permutation> generators);
  static PermGroup trivial(int n);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;
  bool is_subset_of(const PermGroup& g) const;
  bool is_trivial() const { return elements_.size() == 1; }
  /// Cycle strings of the sorted elements.
  std::vector<std::string> cycle_strings() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

enum class GroupKind { Symmetric, Alternating, Cyclic, KleinFour, Identity };

inline constexpr int kNamedGroupMaxPoints = 6;
inline constexpr std::size_t kSubgroupOrderGuard = 200;

PermGroup named_group(GroupKind kind, int n);

/// H normal in G. H must be a subset of G.
bool is_normal(const PermGroup& h, const PermGroup& g);
/// |G| / |H|. H must be a subset of G.
std::size_t index(const PermGroup& h, const PermGroup& g);

/// Every subgroup of G, sorted by order then element list. |G| <= 200.
std::vector<PermGroup> all_subgroups(const PermGroup& g);
std::vector<PermGroup> normal_subgroups(const PermGroup& g);
/// Proper normal subgroups not contained in a larger proper normal subgroup.
std::vector<PermGroup> maximal_normal_subgroups(const PermGroup& g);

struct CompositionSeries {
  /// Ascending: chain.front() is trivial, chain.back() is G.
  std::vector<PermGroup> chain;
  /// Top-down: indexes[0] = |G| / |next group below G|.
  std::vector<std::size_t> indexes;
  std::size_t length() const { return indexes.size(); }
};

/// Descending maximal normal subgroups; ties broken by largest order, then
/// lexicographically least sorted element list.
CompositionSeries composition_series(const PermGroup& g);
/// Every composition series reachable by some choice of maximal normal
/// subgroup at each step.
std::vector<CompositionSeries> all_composition_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);
/// Sorted multiset of composition indexes.
std::vector<std::size_t> jordan_holder_invariants(const PermGroup& g);

/// Abstract quotient G/H as a Cayley table over minimal coset representatives.
struct QuotientGroup {
  std::vector<Permutation> representatives;
  std::vector<std::vector<std::size_t>> table;
  std::size_t order() const { return representatives.size(); }
};

QuotientGroup quotient_group(const PermGroup& g, const PermGroup& h);

bool is_prime_small(std::size_t n);

}  // namespace galoisrad
