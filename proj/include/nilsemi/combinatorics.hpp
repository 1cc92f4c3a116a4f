#pragma once

// Integer partitions in multiplicity form, conjugacy-class weights of the
// symmetric group, and small exact-arithmetic helpers.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nilsemi {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// A partition of n stored by multiplicities: count(i) is the number of
/// parts equal to i. The multiplicity vector is dense with length n, so
/// mult()[i - 1] == count(i). The partition of 0 is the empty vector.
class Partition {
 public:
  Partition() = default;

  /// Builds from multiplicities (index i-1 holds the count of part i).
  /// Throws std::invalid_argument if the weighted sum differs from n.
  Partition(std::uint32_t n, std::vector<std::uint32_t> mult);

  /// Builds from a list of parts in any order; zero parts are rejected.
  static Partition from_parts(std::initializer_list<std::uint32_t> parts);
  static Partition from_parts(std::vector<std::uint32_t> const& parts);

  std::uint32_t n() const noexcept { return n_; }

  /// Number of parts equal to i; zero outside 1..n.
  std::uint32_t count(std::uint32_t i) const noexcept {
    return (i >= 1 && i <= n_) ? mult_[i - 1] : 0;
  }

  std::vector<std::uint32_t> const& mult() const noexcept { return mult_; }

  /// Parts in non-increasing order.
  std::vector<std::uint32_t> parts() const;

  std::uint32_t num_parts() const noexcept;

  /// Same partition with one extra part of size 1 (n grows by one).
  Partition with_fixed_point() const;

  std::string to_string() const;

  friend bool operator==(Partition const&, Partition const&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> mult_;
};

/// Every partition of n exactly once, in reverse-lexicographic order of the
/// descending part lists: n; n-1+1; n-2+2; n-2+1+1; ... ; 1+1+...+1.
std::vector<Partition> partitions(std::uint32_t n);

/// prod_i count(i)! * i^count(i), the order of the centralizer of any
/// permutation with cycle type j.
ExactInt centralizer_order(Partition const& j);

/// Size of the conjugacy class of S_n with cycle type j: n! / centralizer.
ExactInt class_size(Partition const& j);

/// 1 / centralizer_order(j), the share of S_n taken by the class.
ExactRational class_weight(Partition const& j);

struct GcdLcm {
  std::uint64_t gcd;
  std::uint64_t lcm;
  friend bool operator==(GcdLcm const&, GcdLcm const&) = default;
};

/// Throws std::invalid_argument unless a, b >= 1.
GcdLcm gcd_lcm(std::uint64_t a, std::uint64_t b);

ExactInt factorial(std::uint64_t n);

/// C(n, k); zero when k > n.
ExactInt binomial(std::uint64_t n, std::uint64_t k);

/// Overflow-checked helpers for exponent bookkeeping. Throw
/// std::overflow_error instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace nilsemi
