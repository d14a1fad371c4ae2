#include "galoisrad/kernels.hpp"

#include <exception>

#include "galoisrad/cyclo.hpp"
#include "symmetric_detail.hpp"

#ifdef GALOISRAD_HAVE_OPENMP
#include <omp.h>
#endif

namespace galoisrad {

Exec default_exec() {
#ifdef GALOISRAD_HAVE_OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

int kernel_threads() {
#ifdef GALOISRAD_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

namespace {

/// Holds the first exception thrown inside an OpenMP region so it can be
/// rethrown on the calling thread.
class ErrorSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(galoisrad_error_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

bool parallel(Exec exec) {
#ifdef GALOISRAD_HAVE_OPENMP
  return exec == Exec::Parallel;
#else
  (void)exec;
  return false;
#endif
}

}  // namespace

MultiPoly product(std::span<const MultiPoly> factors, Exec exec) {
  if (factors.empty()) fail(Errc::InvalidArgument, "empty product");
  std::vector<MultiPoly> level(factors.begin(), factors.end());
  if (!parallel(exec)) {
    MultiPoly acc = level.front();
    for (std::size_t i = 1; i < level.size(); ++i) acc = acc * level[i];
    return acc;
  }
  while (level.size() > 1) {
    const std::size_t half = level.size() / 2;
    std::vector<MultiPoly> next(half + level.size() % 2);
    const auto pairs = static_cast<long>(half);
    ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < pairs; ++i) {
      const auto k = static_cast<std::size_t>(i);
      errors.run([&] { next[k] = level[2 * k] * level[2 * k + 1]; });
    }
    errors.rethrow();
    if (level.size() % 2 == 1) next.back() = std::move(level.back());
    level = std::move(next);
  }
  return level.front();
}

std::vector<PartitionForm> reduce_partition_forms(int n, std::span<const PartitionForm> forms, Exec exec) {
  std::vector<PartitionForm> out(forms.size());
  if (!parallel(exec)) {
    detail::EPowerCache cache(n);
    for (std::size_t i = 0; i < forms.size(); ++i) out[i] = detail::reduce_partition_form(n, forms[i], cache);
    return out;
  }
  const auto count = static_cast<long>(forms.size());
  ErrorSlot errors;
#pragma omp parallel
  {
    detail::EPowerCache cache(n);
#pragma omp for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      errors.run([&] { out[k] = detail::reduce_partition_form(n, forms[k], cache); });
    }
  }
  errors.rethrow();
  return out;
}

std::vector<MultiPoly> permutation_images(const MultiPoly& f, std::span<const Permutation> perms, Exec exec) {
  std::vector<MultiPoly> out(perms.size());
  const auto count = static_cast<long>(perms.size());
  if (!parallel(exec)) {
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f.apply_permutation(perms[static_cast<std::size_t>(i)]);
    return out;
  }
  ErrorSlot errors;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    errors.run([&] { out[k] = f.apply_permutation(perms[k]); });
  }
  errors.rethrow();
  return out;
}

namespace {

ApproxComplex phi_one(std::span<const ApproxComplex> roots, std::span<const ApproxComplex> alpha_pows,
                      const Permutation& sigma) {
  ApproxComplex acc(roots.front().precision_bits());
  for (int i = 0; i < sigma.size(); ++i) {
    acc = acc + alpha_pows[static_cast<std::size_t>(i)] * roots[static_cast<std::size_t>(sigma.image0(i))];
  }
  return acc;
}

}  // namespace

std::vector<ApproxComplex> phi_values(std::span<const ApproxComplex> roots, const Rational& alpha,
                                      std::span<const Permutation> perms, Exec exec) {
  if (roots.empty()) return std::vector<ApproxComplex>(perms.size());
  const int prec = roots.front().precision_bits();
  std::vector<ApproxComplex> alpha_pows;
  Rational a = 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    alpha_pows.emplace_back(a, prec);
    a *= alpha;
  }
  std::vector<ApproxComplex> out(perms.size(), ApproxComplex(prec));
  const auto count = static_cast<long>(perms.size());
  if (!parallel(exec)) {
    for (long i = 0; i < count; ++i)
      out[static_cast<std::size_t>(i)] = phi_one(roots, alpha_pows, perms[static_cast<std::size_t>(i)]);
    return out;
  }
  ErrorSlot errors;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    errors.run([&] { out[k] = phi_one(roots, alpha_pows, perms[k]); });
  }
  errors.rethrow();
  return out;
}

std::vector<std::uint8_t> cyclotomic_identity_range(long lo, long hi, Exec exec) {
  if (lo < 1 || hi < lo) fail(Errc::InvalidArgument, "bad range");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(hi - lo + 1));
  if (!parallel(exec)) {
    for (long n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = verify_product_identity(n) ? 1 : 0;
    return out;
  }
  ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
  for (long n = lo; n <= hi; ++n) {
    errors.run([&] { out[static_cast<std::size_t>(n - lo)] = verify_product_identity(n) ? 1 : 0; });
  }
  errors.rethrow();
  return out;
}

}  // namespace kernels
}  // namespace galoisrad
