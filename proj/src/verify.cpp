#include "nilsemi/verify.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "nilsemi/counting.hpp"
#include "nilsemi/oracle.hpp"

namespace nilsemi {

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](CheckResult const& c) { return !c.passed; }));
}

void VerificationReport::add(std::string name, bool passed,
                             std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

std::size_t monomial_mismatches(std::uint32_t r,
                                MonomialFormulas const& formulas) {
  std::size_t bad = 0;
  for (auto const& alpha : all_permutations(r)) {
    auto const k = alpha.cycle_type();
    for (auto action :
         {ActionKind::Pair, ActionKind::TwistedPair, ActionKind::Subset}) {
      for (int swap = 0; swap <= (action == ActionKind::TwistedPair ? 1 : 0);
           ++swap) {
        auto const direct = CycleMonomial::of_cycle_type(
            induced_cycle_type(alpha, swap == 1, action));
        if (!(direct == formulas.monomial(action, k, swap == 1))) {
          ++bad;
        }
      }
    }
  }
  return bad;
}

namespace {

using oracle::EquivalenceKind;

constexpr std::array<std::pair<EquivalenceKind, ActionKind>, 3> kFamilies{{
    {EquivalenceKind::IsoOrbit, ActionKind::Pair},
    {EquivalenceKind::IsoAntiOrbit, ActionKind::TwistedPair},
    {EquivalenceKind::CommIsoOrbit, ActionKind::Subset},
}};

char const* family_letter(ActionKind action) {
  switch (action) {
    case ActionKind::Pair:
      return "N";
    case ActionKind::TwistedPair:
      return "L";
    case ActionKind::Subset:
      return "K";
  }
  return "?";
}

std::string nm(std::uint32_t n, std::uint32_t m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::string versus(ExactInt const& got, ExactInt const& want) {
  return got.get_str() + (got == want ? " == " : " != ") + want.get_str();
}

// orbits of functions covering [m]\{1}: formula(n,m) - formula(n-1,m-1)
ExactInt covering_orbits(ActionKind action, std::uint32_t n, std::uint32_t m,
                         MonomialFormulas const& formulas) {
  return orbit_count(action, n, m, formulas) -
         orbit_count(action, n - 1, m - 1, formulas);
}

void check_monomials(VerificationReport& report,
                     MonomialFormulas const& formulas) {
  for (std::uint32_t r = 1; r <= 6; ++r) {
    auto const bad = monomial_mismatches(r, formulas);
    report.add("cycle-index monomials S_" + std::to_string(r), bad == 0,
               std::to_string(bad) + " mismatching elements");
  }
}

void check_equality(VerificationReport& report, std::uint32_t max_n) {
  for (bool commutative : {false, true}) {
    std::uint32_t const top = std::min<std::uint32_t>(max_n, commutative ? 7 : 6);
    for (std::uint32_t n = 3; n <= top; ++n) {
      std::uint32_t const mtop = commutative ? c_bound(n) : a_bound(n);
      for (std::uint32_t m = 2; m <= mtop; ++m) {
        try {
          auto const got = oracle::equality_oracle(n, m, commutative);
          auto const want = equality_summand(n, m, commutative);
          report.add(std::string(commutative ? "comm-" : "") +
                         "equality summand " + nm(n, m),
                     got == want, versus(got, want));
        } catch (oracle::InfeasibleError const&) {
        }
      }
    }
  }
}

void check_explicit_orbits(VerificationReport& report,
                           std::uint32_t explicit_max,
                           MonomialFormulas const& formulas) {
  for (std::uint32_t n = 3; n <= explicit_max; ++n) {
    for (std::uint32_t m = 2; m < n; ++m) {
      for (auto const& [kind, action] : kFamilies) {
        try {
          auto const all = oracle::orbit_count_explicit(n, m, kind, false);
          auto const want_all = orbit_count(action, n, m, formulas);
          report.add(std::string("explicit orbits ") + family_letter(action) +
                         nm(n, m),
                     all == want_all, versus(all, want_all));
          auto const cov = oracle::orbit_count_explicit(n, m, kind, true);
          auto const want_cov = covering_orbits(action, n, m, formulas);
          report.add(std::string("explicit covering orbits ") +
                         family_letter(action) + nm(n, m),
                     cov == want_cov, versus(cov, want_cov));
        } catch (oracle::InfeasibleError const&) {
        }
      }
      try {
        auto const sym = oracle::symmetric_pair_orbit_count(n, m, false);
        auto const sub = oracle::orbit_count_explicit(
            n, m, EquivalenceKind::CommIsoOrbit, false);
        report.add("symmetric psi vs subset psi' " + nm(n, m), sym == sub,
                   versus(sym, sub));
      } catch (oracle::InfeasibleError const&) {
      }
    }
  }
}

void check_burnside(VerificationReport& report, std::uint32_t max_n,
                    MonomialFormulas const& formulas) {
  for (std::uint32_t n = 3; n <= max_n; ++n) {
    for (std::uint32_t m = 2; m < n; ++m) {
      for (auto const& [kind, action] : kFamilies) {
        try {
          auto const got = oracle::burnside_count(n, m, kind);
          auto const want = orbit_count(action, n, m, formulas);
          report.add(std::string("burnside ") + family_letter(action) +
                         nm(n, m),
                     got == want, versus(got, want));
        } catch (oracle::InfeasibleError const&) {
        }
      }
    }
  }
}

void check_construction(VerificationReport& report, std::uint32_t max_n) {
  constexpr std::uint64_t kLimit = 1u << 16;
  for (std::uint32_t n = 3; n <= std::min<std::uint32_t>(max_n, 5); ++n) {
    for (std::uint32_t m = 2; m < n; ++m) {
      std::uint32_t const cells = (n - m) * (n - m);
      std::uint64_t space = 1;
      for (std::uint32_t i = 0; i < cells && space <= kLimit; ++i) {
        space *= m;
      }
      if (space > kLimit) {
        continue;
      }
      std::size_t bad = 0;
      std::vector<std::uint32_t> values(cells);
      for (std::uint64_t code = 0; code < space; ++code) {
        auto c = code;
        bool zero = true;
        for (auto& v : values) {
          v = static_cast<std::uint32_t>(c % m) + 1;
          c /= m;
          zero = zero && v == 1;
        }
        auto const table = oracle::build_table(oracle::PsiFunction(n, m, values));
        auto const degree = oracle::nilpotency_degree(table);
        if (!oracle::is_associative(table) || !degree ||
            *degree != (zero ? 2u : 3u)) {
          ++bad;
        }
      }
      report.add("H(psi) associative with degree 2 iff psi == 1 " + nm(n, m),
                 bad == 0, std::to_string(bad) + " of " +
                               std::to_string(space) + " tables wrong");
    }
  }
}

void check_relabeling(VerificationReport& report, std::uint32_t max_n) {
  for (std::uint32_t n = 3; n <= std::min<std::uint32_t>(max_n, 4); ++n) {
    std::uint64_t tables = 0;
    std::uint64_t bad = 0;
    oracle::for_each_degree3_table(n, [&](oracle::MulTable const& t) {
      ++tables;
      if (!oracle::is_associative(t) || !oracle::relabel_to_psi(t)) {
        ++bad;
      }
    });
    ExactInt const got(std::to_string(tables));
    ExactInt const want = equality_count(n);
    report.add("all degree-3 tables on [" + std::to_string(n) + "]",
               got == want, versus(got, want));
    report.add("every degree-3 table is some H(psi), n=" + std::to_string(n),
               bad == 0, std::to_string(bad) + " tables failed relabeling");
  }
}

void check_order_three(VerificationReport& report,
                       MonomialFormulas const& formulas) {
  auto const psi = oracle::PsiFunction(3, 2, {2});
  auto const table = oracle::build_table(psi);
  auto const degree = oracle::nilpotency_degree(table);
  report.add("n=3 generator 3*3=2 has degree 3",
             table(3, 3) == 2 && degree && *degree == 3);
  auto const classes = covering_orbits(ActionKind::Pair, 3, 2, formulas);
  report.add("n=3 has one isomorphism class", classes == 1,
             versus(classes, 1));
}

}  // namespace

VerificationReport verify_range(std::uint32_t max_n,
                                std::uint32_t explicit_max,
                                MonomialFormulas const& formulas) {
  VerificationReport report;
  check_monomials(report, formulas);
  if (max_n < 3) {
    return report;
  }
  check_order_three(report, formulas);
  check_equality(report, max_n);
  check_explicit_orbits(report, explicit_max, formulas);
  check_burnside(report, max_n, formulas);
  check_construction(report, max_n);
  check_relabeling(report, max_n);
  return report;
}

}  // namespace nilsemi
