#pragma once

// Serial reference for N, L and K: a straight transcription of the class
// sums carried in exact rationals, one evaluate_cycle_index call per range
// class. Uncached and single-threaded; used to check the production kernels.

#include <cstdint>

#include "nilsemi/combinatorics.hpp"

namespace nilsemi::reference {

/// Unreduced rational total; the production path asserts it is integral.
ExactRational big_n_rational(std::uint32_t p, std::uint32_t q);
ExactRational big_l_rational(std::uint32_t p, std::uint32_t q);
ExactRational big_k_rational(std::uint32_t p, std::uint32_t q);

/// Throw std::logic_error if the rational total is not an integer.
ExactInt big_n(std::uint32_t p, std::uint32_t q);
ExactInt big_l(std::uint32_t p, std::uint32_t q);
ExactInt big_k(std::uint32_t p, std::uint32_t q);

}  // namespace nilsemi::reference
