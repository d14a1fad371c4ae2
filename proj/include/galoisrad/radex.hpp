#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "galoisrad/exact.hpp"
#include "galoisrad/upoly.hpp"

namespace galoisrad {

/// Immutable expression tree over Q with field operations, k-th roots with an
/// explicit branch, and roots of unity. No simplification is ever applied.
///
/// Text form (fully parenthesized):
///   rational   "3", "-1/2"
///   unity      "zeta(order,power)"
///   binary     "(L + R)", "(L - R)", "(L * R)", "(L / R)"
///   root       "root(k, child, branch)"
class RadicalExpr {
 public:
  enum class Kind { Rational, RootOfUnity, Add, Sub, Mul, Div, KthRoot };

  RadicalExpr();  // the rational 0
  static RadicalExpr rational(const Rational& value);
  static RadicalExpr integer(long value) { return rational(Rational(value)); }
  static RadicalExpr root_of_unity(long order, long power);
  /// Principal k-th root of child, times exp(2 pi i branch / k).
  static RadicalExpr kth_root(long k, const RadicalExpr& child, long branch = 0);
  static RadicalExpr sqrt(const RadicalExpr& child, long branch = 0) { return kth_root(2, child, branch); }

  friend RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);

  Kind kind() const;
  const Rational& value() const;  // Rational leaves
  long order() const;             // RootOfUnity
  long power() const;             // RootOfUnity
  long k() const;                 // KthRoot
  long branch() const;            // KthRoot
  const RadicalExpr& left() const;   // binary nodes
  const RadicalExpr& right() const;  // binary nodes
  const RadicalExpr& child() const;  // KthRoot

  /// Structural equality.
  friend bool operator==(const RadicalExpr& a, const RadicalExpr& b);

  ApproxComplex eval(int precision_bits = kDefaultPrecision) const;
  std::string format() const;
  /// Reads the text form back; throws ParseError with the offending offset.
  static RadicalExpr parse(std::string_view text);

  std::size_t node_count() const;

 private:
  struct Node;
  explicit RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RadicalExpr binary(Kind kind, const RadicalExpr& a, const RadicalExpr& b);
  std::shared_ptr<const Node> node_;
};

/// |P(eval(e))| < 2^(-precision_bits/2).
bool verify_root(const UniPoly& p, const RadicalExpr& e, int precision_bits = kDefaultPrecision);

}  // namespace galoisrad
