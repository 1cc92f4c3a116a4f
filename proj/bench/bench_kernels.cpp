// Times the class-pair kernel serially and under OpenMP, plus the rational
// reference path, on the largest orbit counts the tables need.
//
//   nilsemi_bench [p_max]      default p_max = 29

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "nilsemi/counting_reference.hpp"
#include "nilsemi/cycle_index.hpp"
#include "nilsemi/kernels.hpp"

using namespace nilsemi;

namespace {

template <class F>
double seconds(F&& f) {
  auto const start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint32_t const p_max = argc > 1 ? std::atoi(argv[1]) : 29;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-8s %4s %4s %10s %10s %8s %10s\n", "action", "p", "q",
              "serial", "parallel", "speedup", "reference");

  struct Case {
    ActionKind action;
    char const* name;
  };
  for (auto [action, name] : {Case{ActionKind::Pair, "pair"},
                              Case{ActionKind::TwistedPair, "twisted"},
                              Case{ActionKind::Subset, "subset"}}) {
    for (std::uint32_t p = 11; p <= p_max; p += 2) {
      std::uint32_t const q = p / 2;
      std::uint32_t const r = p - q;
      auto const range = kernels::range_classes(q, required_length(r));
      MonomialFormulas const formulas;
      auto const domain = kernels::domain_classes(
          r, [&](Partition const& k) {
            return formulas.monomial(action, k, action == ActionKind::TwistedPair);
          });

      ExactInt a, b;
      double const ts = seconds([&] { a = kernels::class_pair_sum_serial(range, domain); });
      double const tp = seconds([&] { b = kernels::class_pair_sum_parallel(range, domain); });
      if (a != b) {
        std::fprintf(stderr, "mismatch at %s p=%u q=%u\n", name, p, q);
        return 1;
      }
      // the rational reference gets slow quickly; keep it to the small end
      std::string ref = "-";
      if (p <= 19) {
        double const tr = seconds([&] {
          switch (action) {
            case ActionKind::Pair: reference::big_n_rational(p, q); break;
            case ActionKind::TwistedPair: reference::big_l_rational(p, q); break;
            case ActionKind::Subset: reference::big_k_rational(p, q); break;
          }
        });
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3fs", tr);
        ref = buf;
      }
      std::printf("%-8s %4u %4u %9.3fs %9.3fs %7.2fx %10s\n", name, p, q, ts,
                  tp, tp > 0 ? ts / tp : 0.0, ref.c_str());
    }
  }
}
