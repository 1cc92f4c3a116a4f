#include <set>
#include <stdexcept>

#include "doctest.h"
#include "nilsemi/counting.hpp"
#include "nilsemi/oracle.hpp"
#include "nilsemi/verify.hpp"

using namespace nilsemi;
using namespace nilsemi::oracle;

TEST_CASE("the unique generator of Z_{3,2}") {
  PsiFunction const psi(3, 2, {2});
  auto const t = build_table(psi);
  CHECK(t(3, 3) == 2);
  for (std::uint32_t x = 1; x <= 3; ++x) {
    for (std::uint32_t y = 1; y <= 3; ++y) {
      if (x != 3 || y != 3) {
        CHECK(t(x, y) == 1);
      }
    }
  }
  CHECK(is_associative(t));
  CHECK(nilpotency_degree(t) == 3u);
  CHECK(psi.covers_nonzero_targets());
}

TEST_CASE("constant psi with the zero gives a zero semigroup") {
  auto const t = build_table(PsiFunction::constant(4, 2, 1));
  CHECK(t == MulTable(4, 1));
  CHECK(is_associative(t));
  CHECK(nilpotency_degree(t) == 2u);
}

TEST_CASE("image condition counterexample") {
  PsiFunction const psi(4, 3, {2});
  CHECK_FALSE(psi.covers_nonzero_targets());
  CHECK(is_associative(build_table(psi)));
  CHECK(nilpotency_degree(build_table(psi)) == 3u);
}

TEST_CASE("non-associative and non-nilpotent tables") {
  // x*y = x+1 mod 2 on {1,2}: (1*1)*1 = 2*1 = 1, 1*(1*1) = 1*2 = 2
  MulTable t(2, 1);
  t.set(1, 1, 2);
  t.set(1, 2, 2);
  t.set(2, 1, 1);
  t.set(2, 2, 1);
  CHECK_FALSE(is_associative(t));
  // a group has no zero, so no power collapses to a point
  MulTable z2(2, 1);
  z2.set(1, 2, 2);
  z2.set(2, 1, 2);
  CHECK(is_associative(z2));
  CHECK(nilpotency_degree(z2) == std::nullopt);
  CHECK_THROWS_AS(t.set(3, 1, 1), std::out_of_range);
}

TEST_CASE("psi validation") {
  CHECK_THROWS_AS(PsiFunction(3, 2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(PsiFunction(3, 2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PsiFunction(3, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(PsiFunction(4, 1, {1, 1, 1, 1}), std::invalid_argument);
  CHECK(PsiFunction(4, 2, {1, 2, 2, 1}).is_symmetric());
  CHECK_FALSE(PsiFunction(4, 2, {1, 2, 1, 1}).is_symmetric());
}

TEST_CASE("equality oracle reproduces the inclusion-exclusion summands") {
  CHECK(equality_oracle(3, 2, false) == 6);
  CHECK(equality_oracle(4, 2, true) == 84);
  CHECK(equality_oracle(5, 2, false) + equality_oracle(5, 3, false) == 11720);
  for (std::uint32_t n = 3; n <= 6; ++n) {
    for (std::uint32_t m = 2; m < n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(equality_oracle(n, m, false) == equality_summand(n, m, false));
      CHECK(equality_oracle(n, m, true) == equality_summand(n, m, true));
    }
  }
}

TEST_CASE("explicit orbits on the smallest non-trivial case") {
  CHECK(orbit_count_explicit(4, 2, EquivalenceKind::IsoOrbit, false) == 10);
  CHECK(orbit_count_explicit(4, 2, EquivalenceKind::IsoAntiOrbit, false) == 9);
  CHECK(orbit_count_explicit(4, 2, EquivalenceKind::CommIsoOrbit, false) == 6);
  CHECK(orbit_count_explicit(4, 2, EquivalenceKind::IsoOrbit, true) == 9);
  CHECK(orbit_count_explicit(4, 2, EquivalenceKind::IsoAntiOrbit, true) == 8);
  CHECK(orbit_count_explicit(4, 2, EquivalenceKind::CommIsoOrbit, true) == 5);
}

TEST_CASE("Burnside over explicit elements") {
  CHECK(burnside_count(4, 2, EquivalenceKind::IsoOrbit) == 10);
  CHECK(burnside_count(5, 3, EquivalenceKind::IsoOrbit) == big_n(5, 3));
  CHECK(burnside_count(6, 2, EquivalenceKind::CommIsoOrbit) == big_k(6, 2));
  CHECK(burnside_count(7, 3, EquivalenceKind::IsoAntiOrbit) == big_l(7, 3));
}

TEST_CASE("explicit orbits, Burnside and formulas agree") {
  for (std::uint32_t n = 3; n <= 5; ++n) {
    for (std::uint32_t m = 2; m < n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      for (auto [kind, formula] :
           {std::pair{EquivalenceKind::IsoOrbit, &big_n},
            std::pair{EquivalenceKind::IsoAntiOrbit, &big_l},
            std::pair{EquivalenceKind::CommIsoOrbit, &big_k}}) {
        auto const want = formula(n, m);
        CHECK(orbit_count_explicit(n, m, kind, false) == want);
        CHECK(burnside_count(n, m, kind) == want);
        CHECK(orbit_count_explicit(n, m, kind, true) ==
              want - formula(n - 1, m - 1));
      }
    }
  }
}

TEST_CASE("symmetric psi on pairs and psi' on subsets have equal orbit counts") {
  for (std::uint32_t n = 3; n <= 6; ++n) {
    for (std::uint32_t m = 2; m < n; ++m) {
      for (bool cover : {false, true}) {
        CHECK(symmetric_pair_orbit_count(n, m, cover) ==
              orbit_count_explicit(n, m, EquivalenceKind::CommIsoOrbit, cover));
      }
    }
  }
}

TEST_CASE("oversized requests are refused, not truncated") {
  CHECK_THROWS_AS(equality_oracle(12, 2, false), InfeasibleError);
  CHECK_THROWS_AS(orbit_count_explicit(9, 2, EquivalenceKind::IsoOrbit, false),
                  InfeasibleError);
  CHECK_THROWS_AS(burnside_count(14, 2, EquivalenceKind::IsoOrbit),
                  InfeasibleError);
  CHECK_THROWS_AS(equality_oracle(5, 5, false), std::invalid_argument);
}

TEST_CASE("every degree-3 table is counted and is some H(psi)") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    std::uint64_t tables = 0;
    std::uint64_t relabeled = 0;
    for_each_degree3_table(n, [&](MulTable const& t) {
      ++tables;
      CHECK(is_associative(t));
      CHECK(nilpotency_degree(t) == 3u);
      if (auto psi = relabel_to_psi(t)) {
        ++relabeled;
        std::set<std::uint32_t> square(t.cells().begin(), t.cells().end());
        CHECK(psi->m() == square.size());
      }
    });
    CHECK(ExactInt(std::to_string(tables)) == equality_count(n));
    CHECK(relabeled == tables);
  }
}

TEST_CASE("relabeling rejects tables that are not degree 3") {
  CHECK_FALSE(relabel_to_psi(MulTable(4, 2)).has_value());
}

TEST_CASE("verification suite passes on the desk-scale range") {
  auto const small = verify_range(3, 3);
  CHECK(small.all_passed());
  bool saw_generator = false;
  for (auto const& c : small.checks) {
    saw_generator = saw_generator || c.name.find("3*3=2") != std::string::npos;
  }
  CHECK(saw_generator);

  auto const report = verify_range(6, 5);
  for (auto const& c : report.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(report.checks.size() > 50);
}

TEST_CASE("a perturbed q_a branch is reported as failures") {
  MonomialFormulas broken;
  broken.twisted = [](Partition const& k) {
    // treat a = 2 mod 4 like a = 0 mod 4
    CycleMonomial mono = twisted_pair_exponents(k);
    CycleMonomial out;
    for (std::uint64_t a = 2; a <= k.n(); a += 4) {
      if (k.count(static_cast<std::uint32_t>(a)) > 0) {
        std::uint64_t const ka = k.count(static_cast<std::uint32_t>(a));
        // replace x_{a/2}^{2k} x_a^{(a-1)k} by x_a^{ak}
        for (auto [len, e] : mono.terms()) {
          std::uint64_t drop = 0;
          if (len == a / 2) drop = 2 * ka;
          if (len == a) drop = (a - 1) * ka;
          out.multiply(len, e - drop);
        }
        out.multiply(a, a * ka);
        mono = out;
        out = CycleMonomial();
      }
    }
    return mono;
  };
  auto const report = verify_range(4, 4, broken);
  CHECK_FALSE(report.all_passed());
  bool monomial_failed = false;
  for (auto const& c : report.checks) {
    if (c.name.starts_with("cycle-index monomials") && !c.passed) {
      monomial_failed = true;
    }
  }
  CHECK(monomial_failed);
}
