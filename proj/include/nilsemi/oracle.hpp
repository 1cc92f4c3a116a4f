#pragma once

// Brute-force ground truth at desk scale. Everything here works on explicit
// multiplication tables, explicit functions psi and explicit group elements;
// none of it calls the partition-compressed formulas in counting.hpp.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilsemi/combinatorics.hpp"
#include "nilsemi/cycle_index.hpp"

namespace nilsemi::oracle {

/// Largest function space that will be enumerated.
inline constexpr std::uint64_t kMaxFunctionSpace = 100'000'000;
/// Largest group that Burnside counting will walk element by element.
inline constexpr std::uint64_t kMaxGroupOrder = 10'000'000;

/// Raised instead of truncating when a request exceeds the guards.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n x n multiplication table on {1..n}.
class MulTable {
 public:
  MulTable() = default;
  /// All products equal `fill`.
  MulTable(std::uint32_t n, std::uint32_t fill);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t operator()(std::uint32_t x, std::uint32_t y) const {
    return cells_[(x - 1) * n_ + (y - 1)];
  }
  /// Throws std::out_of_range for value outside 1..n.
  void set(std::uint32_t x, std::uint32_t y, std::uint32_t value);

  std::vector<std::uint32_t> const& cells() const noexcept { return cells_; }

  friend bool operator==(MulTable const&, MulTable const&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

/// psi : ([n]\[m]) x ([n]\[m]) -> [m], 2 <= m <= n-1.
class PsiFunction {
 public:
  /// `values` lists psi(x, y) for x, y = m+1..n in row-major order.
  /// Throws std::invalid_argument on bad sizes or out-of-range values.
  PsiFunction(std::uint32_t n, std::uint32_t m,
              std::vector<std::uint32_t> values);

  /// Constant function with value `v`.
  static PsiFunction constant(std::uint32_t n, std::uint32_t m,
                              std::uint32_t v);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t operator()(std::uint32_t x, std::uint32_t y) const {
    return values_[(x - m_ - 1) * (n_ - m_) + (y - m_ - 1)];
  }
  std::vector<std::uint32_t> const& values() const noexcept { return values_; }

  /// [m] \ {1} is contained in the image.
  bool covers_nonzero_targets() const;
  bool is_symmetric() const;

 private:
  std::uint32_t n_;
  std::uint32_t m_;
  std::vector<std::uint32_t> values_;
};

enum class EquivalenceKind {
  IsoOrbit,      // S^{x2} x U_m on pair-domain functions
  IsoAntiOrbit,  // 2S^{x2} x U_m on pair-domain functions
  CommIsoOrbit,  // S^{{2}} x U_m on subset-domain functions
};

/// H([n]\[m], psi, 1): xy = psi(x,y) when x, y > m, otherwise 1.
MulTable build_table(PsiFunction const& psi);

bool is_associative(MulTable const& t);

/// Least r with |S^r| = 1, or nullopt if no r <= n qualifies.
std::optional<std::uint32_t> nilpotency_degree(MulTable const& t);

/// Number of distinct degree-3 semigroups on [n] with |S^2| = m, by
/// exhaustive enumeration of psi (symmetric psi when commutative) times the
/// C(n,m) * m relabelings. Throws InfeasibleError above kMaxFunctionSpace.
ExactInt equality_oracle(std::uint32_t n, std::uint32_t m, bool commutative);

/// Orbits of the power group on the whole function space, found by
/// union-find over the mixed-radix codes of the functions. With
/// require_image only orbits of functions covering [m]\{1} are counted.
ExactInt orbit_count_explicit(std::uint32_t n, std::uint32_t m,
                              EquivalenceKind kind, bool require_image);

/// Orbits of symmetric psi on the pair domain under S^{x2} x U_m; the
/// commutative counterpart of orbit_count_explicit on ordered pairs.
ExactInt symmetric_pair_orbit_count(std::uint32_t n, std::uint32_t m,
                                    bool require_image);

/// Burnside average over every explicit group element: the fixed functions
/// of (sigma, swap, tau) are prod_k c_k(tau)^{#k-cycles}, with the cycles of
/// the induced domain permutation traced directly.
/// Throws InfeasibleError above kMaxGroupOrder.
ExactInt burnside_count(std::uint32_t n, std::uint32_t m, EquivalenceKind kind);

/// Calls `visit` for every table on [n] in which all triple products agree
/// and some pair product differs from them, i.e. every nilpotent semigroup
/// of degree 3 on [n]. Found by backtracking on the cells.
void for_each_degree3_table(std::uint32_t n,
                            std::function<void(MulTable const&)> const& visit);

/// Relabels a degree-3 table so the zero becomes 1 and S^2 becomes [m], and
/// reads off psi. Returns nullopt if the relabeled table is not H(psi) for a
/// psi satisfying the image condition.
std::optional<PsiFunction> relabel_to_psi(MulTable const& t);

}  // namespace nilsemi::oracle
