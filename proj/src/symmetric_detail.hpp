#pragma once

#include <map>

#include "galoisrad/kernels.hpp"

namespace galoisrad::detail {

/// Partition forms of products e1^m1 ... en^mn, built incrementally and
/// memoized by the packed exponent vector. Not thread-safe; use one per thread.
class EPowerCache {
 public:
  explicit EPowerCache(int n) : n_(n) {}
  const kernels::PartitionForm& get(MultiPoly::Monomial mu);

 private:
  kernels::PartitionForm times_e(const kernels::PartitionForm& f, int k) const;

  int n_;
  std::map<MultiPoly::Monomial, kernels::PartitionForm> cache_;
};

/// Leading-term reduction of one partition form.
kernels::PartitionForm reduce_partition_form(int n, kernels::PartitionForm form, EPowerCache& cache);

}  // namespace galoisrad::detail
