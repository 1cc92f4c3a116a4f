#include "nilsemi/kernels.hpp"

#include <omp.h>

namespace nilsemi::kernels {

ExactInt class_pair_sum_serial(std::span<RangeClass const> range,
                               std::span<DomainClass const> domain) {
  ExactInt total = 0;
  for (auto const& j : range) {
    for (auto const& k : domain) {
      total += j.size * k.size * k.monomial.evaluate(j.values);
    }
  }
  return total;
}

ExactInt class_pair_sum_parallel(std::span<RangeClass const> range,
                                 std::span<DomainClass const> domain) {
  auto const terms = static_cast<long long>(range.size() * domain.size());
  auto const width = static_cast<long long>(domain.size());
  ExactInt total = 0;
#pragma omp parallel
  {
    ExactInt local = 0;
    ExactInt term;
#pragma omp for schedule(dynamic, 4) nowait
    for (long long t = 0; t < terms; ++t) {
      auto const& j = range[static_cast<std::size_t>(t / width)];
      auto const& k = domain[static_cast<std::size_t>(t % width)];
      term = k.monomial.evaluate(j.values);
      term *= j.size;
      term *= k.size;
      local += term;
    }
#pragma omp critical(nilsemi_class_pair_sum)
    total += local;
  }
  return total;
}

std::vector<RangeClass> range_classes(std::uint32_t q, std::size_t length) {
  std::vector<RangeClass> out;
  for (auto const& j : partitions(q - 1)) {
    out.push_back({class_size(j), substituted_values(j, length)});
  }
  return out;
}

}  // namespace nilsemi::kernels
