#include "nilsemi/counting.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

#include "nilsemi/kernels.hpp"

namespace nilsemi {

namespace {

constexpr std::array<std::pair<CountKind, std::string_view>, 6> kKindNames{{
    {CountKind::Equality, "equality"},
    {CountKind::CommEquality, "comm-equality"},
    {CountKind::Iso, "iso"},
    {CountKind::IsoAnti, "iso-anti"},
    {CountKind::SelfDual, "self-dual"},
    {CountKind::CommIso, "comm-iso"},
}};

void require_orbit_args(std::uint32_t p, std::uint32_t q) {
  if (q < 1 || q >= p) {
    throw std::invalid_argument("orbit counts need 1 <= q < p, got p=" +
                                std::to_string(p) + " q=" + std::to_string(q));
  }
}

// sum_{j |- q-1} sum_{k |- p-q} |C_j| |C_k| mono_k(c_j) / ((q-1)! (p-q)!)
template <typename Formula>
ExactInt averaged_class_sum(std::uint32_t p, std::uint32_t q,
                            Formula&& formula) {
  require_orbit_args(p, q);
  std::uint32_t const r = p - q;
  auto const range = kernels::range_classes(q, required_length(r));
  auto const domain = kernels::domain_classes(r, formula);
  ExactInt total = kernels::class_pair_sum_parallel(range, domain);
  ExactInt const order = factorial(q - 1) * factorial(r);
  if (!mpz_divisible_p(total.get_mpz_t(), order.get_mpz_t())) {
    throw std::logic_error("orbit count for p=" + std::to_string(p) +
                           " q=" + std::to_string(q) + " is not integral");
  }
  mpz_divexact(total.get_mpz_t(), total.get_mpz_t(), order.get_mpz_t());
  return total;
}

ExactInt half_exact(ExactInt const& twice) {
  if (!mpz_even_p(twice.get_mpz_t())) {
    throw std::logic_error("L(p,q) is not integral");
  }
  ExactInt half;
  mpz_divexact_ui(half.get_mpz_t(), twice.get_mpz_t(), 2);
  return half;
}

template <typename Compute>
ExactInt cached(OrbitFunction f, std::uint32_t p, std::uint32_t q,
                Compute&& compute) {
  require_orbit_args(p, q);
  auto& cache = default_cache();
  if (auto hit = cache.find(f, p, q)) {
    return *hit;
  }
  ExactInt value = compute();
  cache.store(f, p, q, value);
  return value;
}

ExactInt nonnegative(ExactInt value, char const* what, std::uint32_t n,
                     std::uint32_t m) {
  if (value < 0) {
    throw std::logic_error(std::string(what) + " difference negative at n=" +
                           std::to_string(n) + " m=" + std::to_string(m));
  }
  return value;
}

}  // namespace

std::string_view kind_name(CountKind kind) {
  for (auto const& [k, name] : kKindNames) {
    if (k == kind) {
      return name;
    }
  }
  return "?";
}

std::optional<CountKind> parse_kind(std::string_view name) {
  for (auto const& [k, kname] : kKindNames) {
    if (kname == name) {
      return k;
    }
  }
  return std::nullopt;
}

std::vector<CountKind> const& all_kinds() {
  static std::vector<CountKind> const kinds = [] {
    std::vector<CountKind> v;
    for (auto const& entry : kKindNames) {
      v.push_back(entry.first);
    }
    return v;
  }();
  return kinds;
}

std::uint32_t a_bound(std::uint32_t n) {
  std::uint32_t best = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::uint64_t const d = n - m;
    if (m - 1 <= d * d) {
      best = static_cast<std::uint32_t>(m);
    }
  }
  return best;
}

std::uint32_t c_bound(std::uint32_t n) {
  std::uint32_t best = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::uint64_t const d = n - m;
    if (m - 1 <= d * (d + 1) / 2) {
      best = static_cast<std::uint32_t>(m);
    }
  }
  return best;
}

ExactInt equality_summand(std::uint32_t n, std::uint32_t m, bool commutative) {
  if (m < 2 || m >= n) {
    throw std::invalid_argument("equality_summand needs 2 <= m < n");
  }
  std::uint64_t const d = n - m;
  std::uint64_t const cells = commutative ? d * (d + 1) / 2 : d * d;
  ExactInt surjective = 0;
  ExactInt power;
  for (std::uint32_t i = 0; i < m; ++i) {
    mpz_ui_pow_ui(power.get_mpz_t(), m - i, cells);
    ExactInt const term = binomial(m - 1, i) * power;
    if (i % 2 == 0) {
      surjective += term;
    } else {
      surjective -= term;
    }
  }
  return binomial(n, m) * m * surjective;
}

namespace {

ExactInt equality_total(std::uint32_t n, bool commutative) {
  ExactInt total = 0;
  if (n < 3) {
    return total;
  }
  std::uint32_t const top = commutative ? c_bound(n) : a_bound(n);
  for (std::uint32_t m = 2; m <= top; ++m) {
    total += equality_summand(n, m, commutative);
  }
  return total;
}

}  // namespace

ExactInt equality_count(std::uint32_t n) { return equality_total(n, false); }

ExactInt comm_equality_count(std::uint32_t n) {
  return equality_total(n, true);
}

std::optional<ExactInt> OrbitCountCache::find(OrbitFunction f, std::uint32_t p,
                                              std::uint32_t q) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(Key{f, p, q});
  if (it == values_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void OrbitCountCache::store(OrbitFunction f, std::uint32_t p, std::uint32_t q,
                            ExactInt const& value) {
  std::unique_lock lock(mutex_);
  values_.insert_or_assign(Key{f, p, q}, value);
}

std::map<OrbitCountCache::Key, ExactInt> OrbitCountCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return values_;
}

std::size_t OrbitCountCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void OrbitCountCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

OrbitCountCache& default_cache() {
  static OrbitCountCache cache;
  return cache;
}

ExactInt twisted_orbit_term(std::uint32_t p, std::uint32_t q,
                            MonomialFormulas const& formulas) {
  return averaged_class_sum(p, q, formulas.twisted);
}

ExactInt orbit_count(ActionKind action, std::uint32_t p, std::uint32_t q,
                     MonomialFormulas const& formulas) {
  switch (action) {
    case ActionKind::Pair:
      return averaged_class_sum(p, q, formulas.pair);
    case ActionKind::TwistedPair:
      return half_exact(averaged_class_sum(p, q, formulas.pair) +
                        twisted_orbit_term(p, q, formulas));
    case ActionKind::Subset:
      return averaged_class_sum(p, q, formulas.subset);
  }
  throw std::invalid_argument("unknown action");
}

ExactInt big_n(std::uint32_t p, std::uint32_t q) {
  return cached(OrbitFunction::N, p, q,
                [&] { return orbit_count(ActionKind::Pair, p, q); });
}

ExactInt big_l(std::uint32_t p, std::uint32_t q) {
  return cached(OrbitFunction::L, p, q, [&] {
    return half_exact(big_n(p, q) + twisted_orbit_term(p, q));
  });
}

ExactInt big_k(std::uint32_t p, std::uint32_t q) {
  return cached(OrbitFunction::K, p, q,
                [&] { return orbit_count(ActionKind::Subset, p, q); });
}

CountResult count(CountKind kind, std::uint32_t n, ProgressFn const& progress) {
  if (n == 0) {
    throw std::invalid_argument("count: n must be positive");
  }
  CountResult result{kind, n, 0, {}};
  if (n < 3) {
    return result;
  }
  bool const commutative =
      kind == CountKind::CommEquality || kind == CountKind::CommIso;
  std::uint32_t const top = commutative ? c_bound(n) : a_bound(n);
  for (std::uint32_t m = 2; m <= top; ++m) {
    if (progress) {
      progress(m, top);
    }
    ExactInt part;
    switch (kind) {
      case CountKind::Equality:
      case CountKind::CommEquality:
        part = equality_summand(n, m, commutative);
        break;
      case CountKind::Iso:
        part = nonnegative(big_n(n, m) - big_n(n - 1, m - 1), "N", n, m);
        break;
      case CountKind::IsoAnti:
        part = nonnegative(big_l(n, m) - big_l(n - 1, m - 1), "L", n, m);
        break;
      case CountKind::SelfDual: {
        // 2L - N is the swapped-element term alone; the N/2 inside L cancels
        ExactInt const upper = 2 * big_l(n, m) - big_n(n, m);
        ExactInt const lower = 2 * big_l(n - 1, m - 1) - big_n(n - 1, m - 1);
        part = nonnegative(upper - lower, "2L-N", n, m);
        break;
      }
      case CountKind::CommIso:
        part = nonnegative(big_k(n, m) - big_k(n - 1, m - 1), "K", n, m);
        break;
    }
    result.value += part;
    result.per_m.emplace_back(m, std::move(part));
  }
  return result;
}

ExactInt semigroup_lower_bound(std::uint32_t n) {
  if (n < 3) {
    throw std::invalid_argument("semigroup_lower_bound needs n >= 3");
  }
  ExactInt const denom = 2 * factorial(n);
  ExactInt bound;
  ExactInt const z = equality_count(n);
  mpz_cdiv_q(bound.get_mpz_t(), z.get_mpz_t(), denom.get_mpz_t());
  return bound;
}

}  // namespace nilsemi
