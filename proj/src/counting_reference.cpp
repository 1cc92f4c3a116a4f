#include "nilsemi/counting_reference.hpp"

#include <stdexcept>
#include <string>

#include "nilsemi/cycle_index.hpp"

namespace nilsemi::reference {

namespace {

ExactRational power_group_index(ActionKind action, std::uint32_t p,
                                std::uint32_t q) {
  if (q < 1 || q >= p) {
    throw std::invalid_argument("reference orbit counts need 1 <= q < p");
  }
  std::uint32_t const r = p - q;
  std::size_t const length = required_length(r);
  ExactRational total = 0;
  for (auto const& j : partitions(q - 1)) {
    total += class_weight(j) *
             evaluate_cycle_index(action, r, substituted_values(j, length));
  }
  total.canonicalize();
  return total;
}

ExactInt integral(ExactRational const& value) {
  if (value.get_den() != 1) {
    throw std::logic_error("reference orbit count is not integral: " +
                           value.get_str());
  }
  return value.get_num();
}

}  // namespace

ExactRational big_n_rational(std::uint32_t p, std::uint32_t q) {
  return power_group_index(ActionKind::Pair, p, q);
}

ExactRational big_l_rational(std::uint32_t p, std::uint32_t q) {
  return power_group_index(ActionKind::TwistedPair, p, q);
}

ExactRational big_k_rational(std::uint32_t p, std::uint32_t q) {
  return power_group_index(ActionKind::Subset, p, q);
}

ExactInt big_n(std::uint32_t p, std::uint32_t q) {
  return integral(big_n_rational(p, q));
}

ExactInt big_l(std::uint32_t p, std::uint32_t q) {
  return integral(big_l_rational(p, q));
}

ExactInt big_k(std::uint32_t p, std::uint32_t q) {
  return integral(big_k_rational(p, q));
}

}  // namespace nilsemi::reference
