#include "nilsemi/cycle_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nilsemi {

std::string_view action_name(ActionKind action) {
  switch (action) {
    case ActionKind::Pair:
      return "pair";
    case ActionKind::TwistedPair:
      return "twisted-pair";
    case ActionKind::Subset:
      return "subset";
  }
  return "?";
}

SubstitutionVector::SubstitutionVector(std::vector<ExactInt> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("SubstitutionVector: length must be >= 1");
  }
  for (auto const& v : values_) {
    if (v < 0) {
      throw std::invalid_argument("SubstitutionVector: negative entry");
    }
  }
}

SubstitutionVector SubstitutionVector::constant(std::size_t length,
                                                ExactInt const& value) {
  return SubstitutionVector(std::vector<ExactInt>(length, value));
}

namespace {

std::vector<ExactInt> divisor_sums(Partition const& type, std::size_t length,
                                   long base) {
  if (length < 1) {
    throw std::invalid_argument("substitution length must be >= 1");
  }
  std::vector<ExactInt> c(length, base);
  for (std::uint32_t d = 1; d <= type.n(); ++d) {
    auto const jd = type.count(d);
    if (jd == 0) {
      continue;
    }
    for (std::size_t i = d; i <= length; i += d) {
      c[i - 1] += std::uint64_t{d} * jd;
    }
  }
  return c;
}

}  // namespace

SubstitutionVector substituted_values(Partition const& j, std::size_t length) {
  return SubstitutionVector(divisor_sums(j, length, 1));
}

SubstitutionVector cycle_type_substitution(Partition const& beta_type,
                                           std::size_t length) {
  return SubstitutionVector(divisor_sums(beta_type, length, 0));
}

void CycleMonomial::multiply(std::uint64_t length, std::uint64_t exponent) {
  if (length == 0) {
    throw std::invalid_argument("CycleMonomial: cycle length 0");
  }
  if (exponent == 0) {
    return;
  }
  auto& e = terms_[length];
  e = checked_add(e, exponent);
}

std::uint64_t CycleMonomial::exponent(std::uint64_t length) const {
  auto it = terms_.find(length);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t CycleMonomial::max_index() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::uint64_t CycleMonomial::degree() const {
  std::uint64_t d = 0;
  for (auto const& [m, e] : terms_) {
    d = checked_add(d, checked_mul(m, e));
  }
  return d;
}

ExactInt CycleMonomial::evaluate(SubstitutionVector const& c) const {
  if (max_index() > c.size()) {
    throw std::invalid_argument(
        "substitution vector too short: need index " +
        std::to_string(max_index()) + ", have " + std::to_string(c.size()));
  }
  ExactInt value = 1;
  ExactInt power;
  for (auto const& [m, e] : terms_) {
    mpz_pow_ui(power.get_mpz_t(), c.at(m).get_mpz_t(), e);
    value *= power;
  }
  return value;
}

CycleMonomial CycleMonomial::of_cycle_type(Partition const& type) {
  CycleMonomial mono;
  for (std::uint32_t i = 1; i <= type.n(); ++i) {
    mono.multiply(i, type.count(i));
  }
  return mono;
}

CycleMonomial pair_exponents(Partition const& k) {
  CycleMonomial mono;
  std::uint32_t const r = k.n();
  for (std::uint32_t a = 1; a <= r; ++a) {
    std::uint64_t const ka = k.count(a);
    if (ka == 0) {
      continue;
    }
    for (std::uint32_t b = 1; b <= r; ++b) {
      std::uint64_t const kb = k.count(b);
      if (kb == 0) {
        continue;
      }
      auto const [g, l] = gcd_lcm(a, b);
      mono.multiply(l, checked_mul(checked_mul(ka, kb), g));
    }
  }
  return mono;
}

namespace {

// x_{lcm(2,a,b)}^{ab * e / lcm(2,a,b)}: the p_{a,b} factor raised to e.
void multiply_swapped_block(CycleMonomial& mono, std::uint64_t a,
                            std::uint64_t b, std::uint64_t e) {
  std::uint64_t const l = gcd_lcm(2, gcd_lcm(a, b).lcm).lcm;
  std::uint64_t const num = checked_mul(checked_mul(a, b), e);
  if (num % l != 0) {
    throw std::logic_error("twisted pair exponent is not integral");
  }
  mono.multiply(l, num / l);
}

}  // namespace

CycleMonomial twisted_pair_exponents(Partition const& k) {
  CycleMonomial mono;
  std::uint32_t const r = k.n();
  for (std::uint64_t a = 1; a <= r; ++a) {
    std::uint64_t const ka = k.count(a);
    if (ka == 0) {
      continue;
    }
    // q_a^{k_a}: pairs inside one a-cycle
    if (a % 2 == 1) {
      mono.multiply(a, ka);
      mono.multiply(2 * a, checked_mul(ka, (a - 1) / 2));
    } else if (a % 4 == 0) {
      mono.multiply(a, checked_mul(ka, a));
    } else {
      mono.multiply(a / 2, checked_mul(ka, 2));
      mono.multiply(a, checked_mul(ka, a - 1));
    }
    // p_{a,a}^{k_a^2 - k_a}: two distinct a-cycles
    multiply_swapped_block(mono, a, a, checked_mul(ka, ka) - ka);
    // p_{a,b}^{2 k_a k_b}, b < a
    for (std::uint64_t b = 1; b < a; ++b) {
      std::uint64_t const kb = k.count(static_cast<std::uint32_t>(b));
      if (kb == 0) {
        continue;
      }
      multiply_swapped_block(mono, a, b, checked_mul(2, checked_mul(ka, kb)));
    }
  }
  return mono;
}

CycleMonomial subset_exponents(Partition const& k) {
  CycleMonomial mono;
  std::uint32_t const r = k.n();
  for (std::uint64_t a = 1; a <= r; ++a) {
    // r_a: one 2a-cycle contributes x_a x_{2a}^a
    std::uint64_t const k2a = k.count(static_cast<std::uint32_t>(2 * a));
    mono.multiply(a, k2a);
    mono.multiply(2 * a, checked_mul(a, k2a));
    // s_a: one (2a-1)-cycle contributes x_{2a-1}^a
    std::uint64_t const kodd = k.count(static_cast<std::uint32_t>(2 * a - 1));
    mono.multiply(2 * a - 1, checked_mul(a, kodd));
    // t_a: unordered pairs of distinct a-cycles
    std::uint64_t const ka = k.count(static_cast<std::uint32_t>(a));
    if (ka == 0) {
      continue;
    }
    mono.multiply(a, checked_mul(a, checked_mul(ka, ka - 1) / 2));
    for (std::uint64_t b = 1; b < a; ++b) {
      std::uint64_t const kb = k.count(static_cast<std::uint32_t>(b));
      if (kb == 0) {
        continue;
      }
      auto const [g, l] = gcd_lcm(a, b);
      mono.multiply(l, checked_mul(checked_mul(ka, kb), g));
    }
  }
  return mono;
}

ExactInt pair_monomial(Partition const& k, SubstitutionVector const& c) {
  return pair_exponents(k).evaluate(c);
}

ExactInt twisted_pair_monomial(Partition const& k,
                               SubstitutionVector const& c) {
  return twisted_pair_exponents(k).evaluate(c);
}

ExactInt subset_monomial(Partition const& k, SubstitutionVector const& c) {
  return subset_exponents(k).evaluate(c);
}

std::size_t required_length(std::uint32_t r) {
  std::uint64_t len = std::max<std::uint64_t>(1, 2 * std::uint64_t{r});
  for (std::uint64_t a = 1; a <= r; ++a) {
    for (std::uint64_t b = 1; b <= a; ++b) {
      len = std::max(len, gcd_lcm(2, gcd_lcm(a, b).lcm).lcm);
    }
  }
  return static_cast<std::size_t>(len);
}

CycleMonomial MonomialFormulas::monomial(ActionKind action, Partition const& k,
                                         bool swap) const {
  switch (action) {
    case ActionKind::Pair:
      return pair(k);
    case ActionKind::TwistedPair:
      return swap ? twisted(k) : pair(k);
    case ActionKind::Subset:
      return subset(k);
  }
  throw std::invalid_argument("unknown action");
}

ExactRational evaluate_cycle_index(ActionKind action, std::uint32_t r,
                                   SubstitutionVector const& c) {
  ExactRational total = 0;
  for (auto const& k : partitions(r)) {
    ExactRational const w = class_weight(k);
    switch (action) {
      case ActionKind::Pair:
        total += w * ExactRational(pair_monomial(k, c));
        break;
      case ActionKind::Subset:
        total += w * ExactRational(subset_monomial(k, c));
        break;
      case ActionKind::TwistedPair:
        total += w * ExactRational(pair_monomial(k, c) +
                                   twisted_pair_monomial(k, c)) /
                 2;
        break;
    }
  }
  total.canonicalize();
  return total;
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(
    std::uint32_t n, std::vector<std::vector<std::uint32_t>> const& cycles) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (auto const& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      auto const from = cyc[i];
      auto const to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n || to < 1 || to > n) {
        throw std::invalid_argument("Permutation: cycle entry out of range");
      }
      img[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const { return cycle_type_of(images_); }

std::vector<Permutation> all_permutations(std::uint32_t n) {
  std::vector<Permutation> out;
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Partition cycle_type_of(std::vector<std::uint32_t> const& images) {
  auto const n = static_cast<std::uint32_t>(images.size());
  std::vector<std::uint32_t> mult(n, 0);
  std::vector<bool> seen(n, false);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    std::uint32_t len = 0;
    for (auto x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      ++len;
    }
    ++mult[len - 1];
  }
  return Partition(n, std::move(mult));
}

std::size_t induced_domain_size(ActionKind action, std::uint32_t r) {
  std::size_t const n = r;
  return action == ActionKind::Subset ? n * (n + 1) / 2 : n * n;
}

namespace {

// Index of {x, y} (x <= y) in the subset domain: singletons 0..r-1, then
// 2-subsets in lexicographic order.
std::uint32_t subset_index(std::uint32_t x, std::uint32_t y, std::uint32_t r) {
  if (x > y) {
    std::swap(x, y);
  }
  if (x == y) {
    return x;
  }
  // 2-subsets with smaller element < x come first
  std::uint32_t const before = x * r - x * (x + 1) / 2;
  return r + before + (y - x - 1);
}

}  // namespace

std::vector<std::uint32_t> induced_permutation(Permutation const& alpha,
                                               bool swap, ActionKind action) {
  if (swap && action != ActionKind::TwistedPair) {
    throw std::invalid_argument(
        "induced_permutation: swap only applies to the twisted pair action");
  }
  std::uint32_t const r = alpha.size();
  std::vector<std::uint32_t> img(induced_domain_size(action, r));
  if (action == ActionKind::Subset) {
    for (std::uint32_t x = 0; x < r; ++x) {
      for (std::uint32_t y = x; y < r; ++y) {
        img[subset_index(x, y, r)] = subset_index(alpha(x), alpha(y), r);
      }
    }
    return img;
  }
  for (std::uint32_t x = 0; x < r; ++x) {
    for (std::uint32_t y = 0; y < r; ++y) {
      auto const [u, v] = swap ? std::pair{y, x} : std::pair{x, y};
      img[x * r + y] = alpha(u) * r + alpha(v);
    }
  }
  return img;
}

Partition induced_cycle_type(Permutation const& alpha, bool swap,
                             ActionKind action) {
  return cycle_type_of(induced_permutation(alpha, swap, action));
}

}  // namespace nilsemi
