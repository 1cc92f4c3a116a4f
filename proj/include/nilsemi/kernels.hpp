#pragma once

// The inner loop of the power-group counts: a double sum over the
// conjugacy classes of the range group (substitution vectors) and of the
// domain group (monomials). The OpenMP kernel is the production path; the
// serial one is kept as its reference and for benchmarking.

#include <span>
#include <vector>

#include "nilsemi/combinatorics.hpp"
#include "nilsemi/cycle_index.hpp"

namespace nilsemi::kernels {

struct RangeClass {
  ExactInt size;
  SubstitutionVector values;
};

struct DomainClass {
  ExactInt size;
  CycleMonomial monomial;
};

/// sum_{j, k} size_j * size_k * monomial_k(values_j)
ExactInt class_pair_sum_serial(std::span<RangeClass const> range,
                               std::span<DomainClass const> domain);

ExactInt class_pair_sum_parallel(std::span<RangeClass const> range,
                                 std::span<DomainClass const> domain);

/// Range classes of U_q (point stabiliser of S_q), one per j |- q-1.
std::vector<RangeClass> range_classes(std::uint32_t q, std::size_t length);

/// Domain classes of S_r with monomials from `formula`.
template <typename Formula>
std::vector<DomainClass> domain_classes(std::uint32_t r, Formula&& formula) {
  std::vector<DomainClass> out;
  for (auto const& k : partitions(r)) {
    out.push_back({class_size(k), formula(k)});
  }
  return out;
}

}  // namespace nilsemi::kernels
