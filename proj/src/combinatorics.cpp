#include "nilsemi/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nilsemi {

Partition::Partition(std::uint32_t n, std::vector<std::uint32_t> mult)
    : n_(n), mult_(std::move(mult)) {
  if (mult_.size() > n_) {
    // trailing zeros beyond n are harmless; anything else is not
    if (std::any_of(mult_.begin() + n_, mult_.end(),
                    [](std::uint32_t c) { return c != 0; })) {
      throw std::invalid_argument("Partition: part larger than n");
    }
  }
  mult_.resize(n_, 0);
  std::uint64_t total = 0;
  for (std::uint32_t i = 1; i <= n_; ++i) {
    total += std::uint64_t{i} * mult_[i - 1];
  }
  if (total != n_) {
    throw std::invalid_argument("Partition: multiplicities sum to " +
                                std::to_string(total) + ", expected " +
                                std::to_string(n_));
  }
}

Partition Partition::from_parts(std::initializer_list<std::uint32_t> parts) {
  return from_parts(std::vector<std::uint32_t>(parts));
}

Partition Partition::from_parts(std::vector<std::uint32_t> const& parts) {
  std::uint32_t n = 0;
  for (auto p : parts) {
    if (p == 0) {
      throw std::invalid_argument("Partition: zero part");
    }
    n += p;
  }
  std::vector<std::uint32_t> mult(n, 0);
  for (auto p : parts) {
    ++mult[p - 1];
  }
  return Partition(n, std::move(mult));
}

std::vector<std::uint32_t> Partition::parts() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = n_; i >= 1; --i) {
    out.insert(out.end(), mult_[i - 1], i);
  }
  return out;
}

std::uint32_t Partition::num_parts() const noexcept {
  return std::accumulate(mult_.begin(), mult_.end(), std::uint32_t{0});
}

Partition Partition::with_fixed_point() const {
  std::vector<std::uint32_t> mult = mult_;
  mult.resize(n_ + 1, 0);
  ++mult[0];
  return Partition(n_ + 1, std::move(mult));
}

std::string Partition::to_string() const {
  auto p = parts();
  if (p.empty()) {
    return "()";
  }
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) {
      s += '+';
    }
    s += std::to_string(p[i]);
  }
  return s;
}

std::vector<Partition> partitions(std::uint32_t n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Descending part lists in reverse-lex order: take the rightmost part
  // larger than 1, decrement it and refill greedily with parts no larger.
  std::vector<std::uint32_t> parts{n};
  while (true) {
    out.push_back(Partition::from_parts(parts));
    std::uint32_t ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) {
      break;
    }
    std::uint32_t const part = parts.back() - 1;
    parts.back() = part;
    std::uint32_t rest = ones + 1;
    while (rest > 0) {
      std::uint32_t const next = std::min(part, rest);
      parts.push_back(next);
      rest -= next;
    }
  }
  return out;
}

ExactInt centralizer_order(Partition const& j) {
  ExactInt prod = 1;
  ExactInt term;
  for (std::uint32_t i = 1; i <= j.n(); ++i) {
    auto const c = j.count(i);
    if (c == 0) {
      continue;
    }
    mpz_fac_ui(term.get_mpz_t(), c);
    prod *= term;
    mpz_ui_pow_ui(term.get_mpz_t(), i, c);
    prod *= term;
  }
  return prod;
}

ExactInt class_size(Partition const& j) {
  ExactInt size = factorial(j.n());
  ExactInt const c = centralizer_order(j);
  mpz_divexact(size.get_mpz_t(), size.get_mpz_t(), c.get_mpz_t());
  return size;
}

ExactRational class_weight(Partition const& j) {
  ExactRational w(ExactInt(1), centralizer_order(j));
  w.canonicalize();
  return w;
}

GcdLcm gcd_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("gcd_lcm: arguments must be positive");
  }
  auto const g = std::gcd(a, b);
  return {g, checked_mul(a / g, b)};
}

ExactInt factorial(std::uint64_t n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("exponent arithmetic overflow");
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("exponent arithmetic overflow");
  }
  return r;
}

}  // namespace nilsemi
