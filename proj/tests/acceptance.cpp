// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nilsemi/counting.hpp"
#include "nilsemi/counting_reference.hpp"
#include "nilsemi/cycle_index.hpp"
#include "nilsemi/oracle.hpp"
#include "nilsemi/verify.hpp"

using namespace nilsemi;

namespace {

using Clock = std::chrono::steady_clock;

std::map<std::uint32_t, ExactInt> load_fixture(std::string const& name) {
  std::ifstream in(std::string(NILSEMI_FIXTURE_DIR) + "/" + name + ".csv");
  std::map<std::uint32_t, ExactInt> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    auto const comma = line.find(',');
    out[std::stoul(line.substr(0, comma))] = ExactInt(line.substr(comma + 1));
  }
  return out;
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string const& why) {
    if (passed) {
      detail = why;
    }
    passed = false;
  }
};

int failures = 0;

void criterion(int id, std::string const& title, double limit_seconds,
               std::function<Outcome()> const& body) {
  default_cache().clear();
  auto const start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (std::exception const& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double const secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (o.passed && secs > limit_seconds) {
    o.fail("took longer than " + std::to_string(limit_seconds) + " s");
  }
  failures += o.passed ? 0 : 1;
  std::printf("%s  %2d  %-58s %8.2fs%s%s\n", o.passed ? "PASS" : "FAIL", id,
              title.c_str(), secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
}

Outcome table_matches(CountKind kind, std::uint32_t last) {
  Outcome o;
  auto const expected = load_fixture(std::string(kind_name(kind)));
  if (expected.size() != last - 2) {
    o.fail("fixture has " + std::to_string(expected.size()) + " rows");
  }
  for (std::uint32_t n = 3; n <= last; ++n) {
    auto const got = count(kind, n).value;
    if (!expected.contains(n) || got != expected.at(n)) {
      o.fail("n=" + std::to_string(n) + " got " + got.get_str());
    }
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "equality counts n=3..15", 10, [] {
    return table_matches(CountKind::Equality, 15);
  });
  criterion(2, "commutative equality counts n=3..17", 10, [] {
    return table_matches(CountKind::CommEquality, 17);
  });
  criterion(3, "isomorphism classes n=3..15", 120, [] {
    return table_matches(CountKind::Iso, 15);
  });
  criterion(4, "iso-or-anti-iso classes n=3..15", 120, [] {
    return table_matches(CountKind::IsoAnti, 15);
  });
  criterion(5, "self-dual classes n=3..15 and 2*anti - iso", 120, [] {
    auto o = table_matches(CountKind::SelfDual, 15);
    for (std::uint32_t n = 3; n <= 15; ++n) {
      auto const self = count(CountKind::SelfDual, n).value;
      auto const anti = count(CountKind::IsoAnti, n).value;
      auto const iso = count(CountKind::Iso, n).value;
      if (self != 2 * anti - iso) {
        o.fail("identity fails at n=" + std::to_string(n));
      }
    }
    return o;
  });
  criterion(6, "commutative isomorphism classes n=3..19", 120, [] {
    return table_matches(CountKind::CommIso, 19);
  });
  criterion(7, "lower bound ceil(z(n)/2n!) n=3..10", 10, [] {
    Outcome o;
    auto const expected = load_fixture("lower-bound");
    for (std::uint32_t n = 3; n <= 10; ++n) {
      if (semigroup_lower_bound(n) != expected.at(n)) {
        o.fail("n=" + std::to_string(n));
      }
    }
    if (expected.size() != 8) {
      o.fail("fixture size");
    }
    return o;
  });
  criterion(8, "explicit orbits = Burnside = formula", 300, [] {
    Outcome o;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cases;
    for (std::uint32_t n = 3; n <= 5; ++n) {
      for (std::uint32_t m = 2; m <= a_bound(n); ++m) {
        cases.emplace_back(n, m);
      }
    }
    cases.emplace_back(6, 2);
    cases.emplace_back(6, 3);
    using oracle::EquivalenceKind;
    for (auto [n, m] : cases) {
      for (auto [kind, formula] :
           {std::pair{EquivalenceKind::IsoOrbit, &big_n},
            std::pair{EquivalenceKind::IsoAntiOrbit, &big_l},
            std::pair{EquivalenceKind::CommIsoOrbit, &big_k}}) {
        auto const want = formula(n, m);
        auto const explicit_count =
            oracle::orbit_count_explicit(n, m, kind, false);
        auto const burnside = oracle::burnside_count(n, m, kind);
        if (explicit_count != want || burnside != want) {
          o.fail("(n,m)=(" + std::to_string(n) + "," + std::to_string(m) +
                 ") " + explicit_count.get_str() + "/" + burnside.get_str() +
                 "/" + want.get_str());
        }
      }
    }
    return o;
  });
  criterion(9, "exhaustive psi enumeration = equality summands", 300, [] {
    Outcome o;
    for (bool comm : {false, true}) {
      std::uint32_t const last = comm ? 7 : 6;
      for (std::uint32_t n = 3; n <= last; ++n) {
        for (std::uint32_t m = 2; m < n; ++m) {
          if (oracle::equality_oracle(n, m, comm) !=
              equality_summand(n, m, comm)) {
            o.fail(std::string(comm ? "comm " : "") + "n=" +
                   std::to_string(n) + " m=" + std::to_string(m));
          }
        }
      }
    }
    return o;
  });
  criterion(10, "induced cycle types = class monomials, r<=6", 60, [] {
    Outcome o;
    for (std::uint32_t r = 1; r <= 6; ++r) {
      if (auto const bad = monomial_mismatches(r); bad != 0) {
        o.fail("S_" + std::to_string(r) + ": " + std::to_string(bad) +
               " mismatches");
      }
    }
    return o;
  });
  criterion(11, "integrality, N/2 <= L <= N, per-m parts >= 0", 300, [] {
    Outcome o;
    for (std::uint32_t p = 3; p <= 12; ++p) {
      for (std::uint32_t q = 2; q < p; ++q) {
        auto const n = reference::big_n_rational(p, q);
        auto const l = reference::big_l_rational(p, q);
        auto const k = reference::big_k_rational(p, q);
        if (n.get_den() != 1 || l.get_den() != 1 || k.get_den() != 1) {
          o.fail("non-integral at p=" + std::to_string(p));
        }
        if (!(n <= 2 * l && l <= n)) {
          o.fail("sandwich fails at p=" + std::to_string(p));
        }
        if (big_n(p, q) != n.get_num() || big_l(p, q) != l.get_num() ||
            big_k(p, q) != k.get_num()) {
          o.fail("production path disagrees at p=" + std::to_string(p));
        }
      }
    }
    for (auto kind : all_kinds()) {
      for (std::uint32_t n = 3; n <= 15; ++n) {
        for (auto const& [m, v] : count(kind, n).per_m) {
          if (v < 0) {
            o.fail(std::string(kind_name(kind)) + " n=" + std::to_string(n) +
                   " m=" + std::to_string(m));
          }
        }
      }
    }
    return o;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
