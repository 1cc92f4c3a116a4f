#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilsemi/cycle_index.hpp"

namespace nilsemi {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failures() const;
  void add(std::string name, bool passed, std::string detail = {});
};

/// Cross-validates the closed forms against the brute-force oracle:
///  - equality oracle vs. each inclusion-exclusion summand (n <= min(max_n, 6),
///    commutative n <= min(max_n, 7));
///  - explicit orbits vs. N/L/K and their differences (n <= explicit_max);
///  - element-wise Burnside vs. N/L/K wherever the group guard admits;
///  - induced-action cycle types vs. the class monomials for S_r, r <= 6;
///  - construction soundness and the relabeling lemma on small tables.
/// The formula side uses `formulas`, so a broken variant shows up as
/// failures rather than exceptions.
VerificationReport verify_range(std::uint32_t max_n,
                                std::uint32_t explicit_max,
                                MonomialFormulas const& formulas = {});

/// Induced cycle types of every alpha in S_r (and (swap, alpha) for the
/// twisted action) against the monomials of `formulas`. Returns the number
/// of mismatching (alpha, action) combinations.
std::size_t monomial_mismatches(std::uint32_t r,
                                MonomialFormulas const& formulas = {});

}  // namespace nilsemi
