#pragma once

// Cycle indices of S_r and of the three actions it induces on pairs and
// small subsets, evaluated class by class at substituted values. The
// monomials are kept as sparse exponent maps; nothing symbolic is built.
//
// Ground-truth counterparts (explicit permutations and orbit tracing) live
// here too so the closed forms can be checked against them directly.

#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include "nilsemi/combinatorics.hpp"

namespace nilsemi {

enum class ActionKind {
  Pair,         // A on X x X componentwise
  TwistedPair,  // S_2 x A on X x X, S_2 swapping the coordinates
  Subset,       // A on the 1- and 2-element subsets of X
};

std::string_view action_name(ActionKind action);

/// Values c_1..c_L substituted for the cycle-index variables x_1..x_L.
class SubstitutionVector {
 public:
  SubstitutionVector() = default;
  /// Throws std::invalid_argument on an empty or negative entry.
  explicit SubstitutionVector(std::vector<ExactInt> values);

  /// Constant vector of length L.
  static SubstitutionVector constant(std::size_t length, ExactInt const& value);

  std::size_t size() const noexcept { return values_.size(); }
  /// 1-based.
  ExactInt const& at(std::size_t i) const { return values_.at(i - 1); }
  std::vector<ExactInt> const& values() const noexcept { return values_; }

  friend bool operator==(SubstitutionVector const&,
                         SubstitutionVector const&) = default;

 private:
  std::vector<ExactInt> values_;
};

/// c_i = 1 + sum_{d | i} d * j_d for i = 1..L, where j is the cycle type of
/// a point stabiliser element of S_q restricted to the q-1 moved points.
SubstitutionVector substituted_values(Partition const& j, std::size_t length);

/// c_i = sum_{d | i} d * delta_d for a permutation whose full cycle type is
/// `beta_type` (no implicit fixed point).
SubstitutionVector cycle_type_substitution(Partition const& beta_type,
                                           std::size_t length);

/// A monomial prod_m x_m^{e_m}, keyed by cycle length m.
class CycleMonomial {
 public:
  void multiply(std::uint64_t length, std::uint64_t exponent);

  std::map<std::uint64_t, std::uint64_t> const& terms() const noexcept {
    return terms_;
  }
  std::uint64_t exponent(std::uint64_t length) const;
  std::uint64_t max_index() const noexcept;
  /// sum_m m * e_m, the size of the acted-on set.
  std::uint64_t degree() const;

  /// Throws std::invalid_argument if c does not reach max_index().
  ExactInt evaluate(SubstitutionVector const& c) const;

  /// The monomial x_m^{#m-cycles} of a single permutation.
  static CycleMonomial of_cycle_type(Partition const& type);

  friend bool operator==(CycleMonomial const&, CycleMonomial const&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> terms_;
};

// Per-class monomials of the induced actions, keyed by the cycle type k of
// the acting permutation of S_r.
CycleMonomial pair_exponents(Partition const& k);
CycleMonomial twisted_pair_exponents(Partition const& k);
CycleMonomial subset_exponents(Partition const& k);

ExactInt pair_monomial(Partition const& k, SubstitutionVector const& c);
ExactInt twisted_pair_monomial(Partition const& k, SubstitutionVector const& c);
ExactInt subset_monomial(Partition const& k, SubstitutionVector const& c);

/// Substitution length sufficient for every monomial of S_r under any of
/// the three actions: max(2r, max_{a,b<=r} lcm(2,a,b)).
std::size_t required_length(std::uint32_t r);

/// The set of monomial formulas used by the enumeration. Replaceable so the
/// verification suite can be run against deliberately broken variants.
struct MonomialFormulas {
  std::function<CycleMonomial(Partition const&)> pair = pair_exponents;
  std::function<CycleMonomial(Partition const&)> twisted =
      twisted_pair_exponents;
  std::function<CycleMonomial(Partition const&)> subset = subset_exponents;

  /// Monomial of the element (swap, alpha) with cycle type k. `swap` is only
  /// meaningful for TwistedPair; without it the pair monomial applies.
  CycleMonomial monomial(ActionKind action, Partition const& k,
                         bool swap) const;
};

/// Sum over k |- r of class_weight(k) * monomial(k, c). For TwistedPair this
/// is the full index: half the pair terms plus half the twisted terms.
ExactRational evaluate_cycle_index(ActionKind action, std::uint32_t r,
                                   SubstitutionVector const& c);

/// A bijection of {0..n-1}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::uint32_t n);
  /// Builds from 1-based disjoint cycles on {1..n}.
  static Permutation from_cycles(
      std::uint32_t n, std::vector<std::vector<std::uint32_t>> const& cycles);

  std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::vector<std::uint32_t> const& images() const noexcept { return images_; }

  Partition cycle_type() const;

 private:
  std::vector<std::uint32_t> images_;
};

/// All n! permutations of {0..n-1}, lexicographic by image list.
std::vector<Permutation> all_permutations(std::uint32_t n);

/// Points of the induced domain in a fixed order: pairs (x, y) as x * r + y,
/// subsets {x} then {x, y} with x < y in lexicographic order.
std::size_t induced_domain_size(ActionKind action, std::uint32_t r);

/// Image table of the permutation induced by (swap, alpha) on the domain.
/// Throws std::invalid_argument if swap is set for Pair or Subset.
std::vector<std::uint32_t> induced_permutation(Permutation const& alpha,
                                               bool swap, ActionKind action);

/// Cycle type of the induced permutation, by explicit orbit tracing.
Partition induced_cycle_type(Permutation const& alpha, bool swap,
                             ActionKind action);

/// Cycle type of a permutation given by its image table.
Partition cycle_type_of(std::vector<std::uint32_t> const& images);

}  // namespace nilsemi
