#pragma once

#include <string>
#include <vector>

#include "galoisrad/exact.hpp"
#include "galoisrad/permgrp.hpp"
#include "galoisrad/radex.hpp"
#include "galoisrad/upoly.hpp"
#include "json.hpp"

namespace galoisrad::cli {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, everything else "p/q".
Json rational_json(const Rational& r);
Json integer_json(const Integer& z);
Json coeffs_json(const UniPoly& p);
Json complex_json(const ApproxComplex& z, int digits);
Json expr_tree_json(const RadicalExpr& e);
/// {"text", "tree", "value"} for one radical expression.
Json expr_json(const RadicalExpr& e, int prec, int digits);
Json group_json(const PermGroup& g);
Json series_json(const CompositionSeries& s);

/// Fractional digits printed for numeric values at a given precision.
int display_digits(int prec);
std::string complex_text(const ApproxComplex& z, int digits);
/// "1 ◁ G₃ ◁ G₂ ◁ G₁", or "1" for the trivial group.
std::string series_text(const CompositionSeries& s);
/// "2:3:2:2", or "(none)".
std::string indexes_text(const std::vector<std::size_t>& idx);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace galoisrad::cli
