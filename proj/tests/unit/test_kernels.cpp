#include "galoisrad/kernels.hpp"

#include <random>

#include "doctest.h"

using namespace galoisrad;

TEST_CASE("product: serial and parallel agree") {
  const int n = 4;
  std::vector<MultiPoly> factors;
  MultiPoly y = MultiPoly::param(n, 1, 0);
  for (const auto& s : all_permutations(n)) {
    MultiPoly phi(n, 1);
    long a = 1;
    for (int i = 1; i <= n; ++i, a *= 3) phi += MultiPoly::constant(n, 1, make_rational(a)) * MultiPoly::root(n, 1, s(i));
    factors.push_back(y - phi);
    if (factors.size() == 8) break;
  }
  CHECK(kernels::product(factors, Exec::Serial) == kernels::product(factors, Exec::Parallel));
}

TEST_CASE("reduction: serial and parallel agree") {
  const int n = 3;
  MultiPoly y = MultiPoly::param(n, 1, 0);
  MultiPoly f = MultiPoly::constant(n, 1, make_rational(1));
  for (const auto& s : all_permutations(n)) {
    MultiPoly phi(n, 1);
    long a = 1;
    for (int i = 1; i <= n; ++i, a *= 2) phi += MultiPoly::constant(n, 1, make_rational(a)) * MultiPoly::root(n, 1, s(i));
    f *= y - phi;
  }
  // Partition forms per power of y, as symmetric_reduce builds them.
  std::vector<kernels::PartitionForm> forms;
  for (int k = 0; k <= 6; ++k) {
    kernels::PartitionForm form;
    MultiPoly coeff = f.coefficient_of_param(0, k);
    for (const auto& [m, c] : coeff.terms()) {
      auto e = f.exponents(m);
      if (e[0] >= e[1] && e[1] >= e[2]) form.emplace(m, c);
    }
    forms.push_back(form);
  }
  CHECK(kernels::reduce_partition_forms(n, forms, Exec::Serial) == kernels::reduce_partition_forms(n, forms, Exec::Parallel));
}

TEST_CASE("images, phi values and cyclotomic range agree") {
  auto perms = all_permutations(4);
  MultiPoly f = MultiPoly::root(4, 0, 1) * MultiPoly::root(4, 0, 2).pow(2) + MultiPoly::root(4, 0, 3);
  CHECK(kernels::permutation_images(f, perms, Exec::Serial) == kernels::permutation_images(f, perms, Exec::Parallel));

  std::vector<ApproxComplex> roots;
  for (long k = 0; k < 4; ++k) roots.push_back(ApproxComplex::root_of_unity(4, k, 128));
  auto a = kernels::phi_values(roots, make_rational(3), perms, Exec::Serial);
  auto b = kernels::phi_values(roots, make_rational(3), perms, Exec::Parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i] - b[i]).is_zero());

  CHECK(kernels::cyclotomic_identity_range(1, 40, Exec::Serial) == kernels::cyclotomic_identity_range(1, 40, Exec::Parallel));
  CHECK(kernel_threads() >= 1);
}

TEST_CASE("errors raised inside parallel regions reach the caller") {
  // Byte exponents overflow: x1^200 * x1^100.
  std::vector<MultiPoly> factors{MultiPoly::root(1, 0, 1).pow(200), MultiPoly::root(1, 0, 1).pow(100)};
  CHECK_THROWS_AS(kernels::product(factors, Exec::Parallel), MathError);
  CHECK_THROWS_AS(kernels::cyclotomic_identity_range(0, 3, Exec::Parallel), MathError);
}
