#pragma once

// Closed-form counts of nilpotent semigroups of degree 3 on n elements.
//
// Two families of results:
//  * up to equality: inclusion-exclusion over the image of psi, summed over
//    the size m of S^2 (equality_count, comm_equality_count);
//  * up to isomorphism (and anti-isomorphism, commutative isomorphism):
//    orbit counts N, L, K of the power groups S^{x2} x U_q, 2S^{x2} x U_q and
//    S^{{2}} x U_q on functions ([p]\[q])^2 -> [q], differenced over m.
//
// Every result is an exact integer. Orbit counts are memoised per (p, q) in
// a process-wide cache that the CLI can persist.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "nilsemi/combinatorics.hpp"
#include "nilsemi/cycle_index.hpp"

namespace nilsemi {

enum class CountKind { Equality, CommEquality, Iso, IsoAnti, SelfDual, CommIso };

std::string_view kind_name(CountKind kind);
std::optional<CountKind> parse_kind(std::string_view name);
std::vector<CountKind> const& all_kinds();

struct CountResult {
  CountKind kind;
  std::uint32_t n;
  ExactInt value;
  /// (m, contribution of semigroups with |S^2| = m)
  std::vector<std::pair<std::uint32_t, ExactInt>> per_m;
};

/// max{ m : m - 1 <= (n - m)^2 }, the largest admissible |S^2|.
std::uint32_t a_bound(std::uint32_t n);
/// max{ m : m - 1 <= (n - m)(n - m + 1) / 2 }, commutative case.
std::uint32_t c_bound(std::uint32_t n);

/// C(n,m) * m * #{psi : [m]\{1} within im(psi)} for one m.
ExactInt equality_summand(std::uint32_t n, std::uint32_t m, bool commutative);
ExactInt equality_count(std::uint32_t n);
ExactInt comm_equality_count(std::uint32_t n);

/// Orbit-count families; the letter is the cache key.
enum class OrbitFunction { N, L, K };

class OrbitCountCache {
 public:
  struct Key {
    OrbitFunction function;
    std::uint32_t p;
    std::uint32_t q;
    friend auto operator<=>(Key const&, Key const&) = default;
  };

  std::optional<ExactInt> find(OrbitFunction f, std::uint32_t p,
                               std::uint32_t q) const;
  void store(OrbitFunction f, std::uint32_t p, std::uint32_t q,
             ExactInt const& value);
  std::map<Key, ExactInt> snapshot() const;
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, ExactInt> values_;
};

OrbitCountCache& default_cache();

/// Uncached: number of orbits of the power group on functions
/// ([p]\[q])^2 -> [q] (Subset: 1/2-subsets of [p]\[q] -> [q]) built from
/// the given monomial formulas. Pair gives N, TwistedPair L, Subset K.
/// Throws std::invalid_argument unless 1 <= q < p; std::logic_error if the
/// class sum is not divisible by the group order.
ExactInt orbit_count(ActionKind action, std::uint32_t p, std::uint32_t q,
                     MonomialFormulas const& formulas = {});

/// sum over classes of the swapped elements only, equal to 2L - N.
ExactInt twisted_orbit_term(std::uint32_t p, std::uint32_t q,
                            MonomialFormulas const& formulas = {});

// Cached in default_cache().
ExactInt big_n(std::uint32_t p, std::uint32_t q);
ExactInt big_l(std::uint32_t p, std::uint32_t q);
ExactInt big_k(std::uint32_t p, std::uint32_t q);

/// Called once per m with (m, last m) while a count is in progress.
using ProgressFn = std::function<void(std::uint32_t, std::uint32_t)>;

/// n < 3 gives 0 for every kind. Throws std::invalid_argument for n == 0.
CountResult count(CountKind kind, std::uint32_t n,
                  ProgressFn const& progress = {});

/// ceil(equality_count(n) / (2 n!)), n >= 3.
ExactInt semigroup_lower_bound(std::uint32_t n);

}  // namespace nilsemi
