#include "nilsemi/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace nilsemi::oracle {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

// m^points with refusal past kMaxFunctionSpace.
std::uint64_t function_space_size(std::uint32_t m, std::uint64_t points) {
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < points; ++i) {
    size *= m;
    if (size > kMaxFunctionSpace) {
      throw InfeasibleError("function space " + std::to_string(m) + "^" +
                            std::to_string(points) + " exceeds the limit of " +
                            std::to_string(kMaxFunctionSpace));
    }
  }
  return size;
}

void require_nm(std::uint32_t n, std::uint32_t m) {
  if (m < 2 || m + 1 > n) {
    throw std::invalid_argument("oracle needs 2 <= m <= n-1, got n=" +
                                std::to_string(n) + " m=" + std::to_string(m));
  }
}

// Functions from `points` domain points to {0..m-1} (0 standing for the
// zero 1), coded in base m with point 0 least significant.
struct FunctionCodec {
  std::uint32_t m;
  std::uint32_t points;

  void decode(std::uint64_t code, std::vector<std::uint32_t>& digits) const {
    digits.resize(points);
    for (std::uint32_t i = 0; i < points; ++i) {
      digits[i] = static_cast<std::uint32_t>(code % m);
      code /= m;
    }
  }

  std::uint64_t encode(std::vector<std::uint32_t> const& digits) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = points; i-- > 0;) {
      code = code * m + digits[i];
    }
    return code;
  }
};

// Values 1..m-1 all occur among the digits.
bool covers(std::vector<std::uint32_t> const& digits, std::uint32_t m,
            std::vector<std::uint32_t>& seen, std::uint32_t stamp) {
  std::uint32_t missing = m - 1;
  for (auto v : digits) {
    if (v != 0 && seen[v] != stamp) {
      seen[v] = stamp;
      if (--missing == 0) {
        return true;
      }
    }
  }
  return missing == 0;
}

// f'(x) = range[f(domain[x])]
struct Generator {
  std::vector<std::uint32_t> domain;
  std::vector<std::uint32_t> range;
};

std::vector<Permutation> symmetric_generators(std::uint32_t n) {
  std::vector<Permutation> gens;
  if (n < 2) {
    return gens;
  }
  std::vector<std::uint32_t> cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
  }
  gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
  if (n > 2) {
    gens.emplace_back(std::move(cycle));
  }
  return gens;
}

// Permutations of {0..m-1} fixing 0.
std::vector<Permutation> stabiliser_elements(std::uint32_t m) {
  std::vector<Permutation> out;
  for (auto const& p : all_permutations(m - 1)) {
    std::vector<std::uint32_t> img(m);
    img[0] = 0;
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
      img[i + 1] = p(i) + 1;
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

std::vector<Permutation> stabiliser_generators(std::uint32_t m) {
  std::vector<Permutation> out;
  for (auto const& g : symmetric_generators(m - 1)) {
    std::vector<std::uint32_t> img(m);
    img[0] = 0;
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
      img[i + 1] = g(i) + 1;
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

ActionKind domain_action(EquivalenceKind kind) {
  switch (kind) {
    case EquivalenceKind::IsoOrbit:
      return ActionKind::Pair;
    case EquivalenceKind::IsoAntiOrbit:
      return ActionKind::TwistedPair;
    case EquivalenceKind::CommIsoOrbit:
      return ActionKind::Subset;
  }
  throw std::invalid_argument("unknown equivalence kind");
}

// Orbit count over an explicit generating set, by union-find. The images
// under each generator are computed in parallel; merging is sequential.
ExactInt union_find_orbits(FunctionCodec const& codec, std::uint64_t space,
                           std::vector<Generator> const& gens,
                           bool require_image) {
  DisjointSet sets(space);
  std::vector<std::uint32_t> image(space);
  for (auto const& g : gens) {
#pragma omp parallel
    {
      std::vector<std::uint32_t> f, h(codec.points);
#pragma omp for schedule(static)
      for (long long c = 0; c < static_cast<long long>(space); ++c) {
        codec.decode(static_cast<std::uint64_t>(c), f);
        for (std::uint32_t x = 0; x < codec.points; ++x) {
          h[x] = g.range[f[g.domain[x]]];
        }
        image[static_cast<std::size_t>(c)] =
            static_cast<std::uint32_t>(codec.encode(h));
      }
    }
    for (std::uint64_t c = 0; c < space; ++c) {
      sets.unite(static_cast<std::uint32_t>(c), image[c]);
    }
  }

  // image condition per function, then per root; it must be constant on
  // every orbit
  std::vector<char> flag(space);
  std::vector<std::uint32_t> f, seen(codec.m, 0);
  std::uint32_t stamp = 0;
  for (std::uint64_t c = 0; c < space; ++c) {
    codec.decode(c, f);
    flag[c] = covers(f, codec.m, seen, ++stamp) ? 1 : 0;
  }
  std::uint64_t orbits = 0;
  for (std::uint64_t c = 0; c < space; ++c) {
    auto const root = sets.find(static_cast<std::uint32_t>(c));
    if (flag[c] != flag[root]) {
      throw std::logic_error("image condition is not constant on an orbit");
    }
    if (root == c && (!require_image || flag[c])) {
      ++orbits;
    }
  }
  return ExactInt(std::to_string(orbits));
}

std::uint64_t factorial_u64(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    f = checked_mul(f, i);
  }
  return f;
}

}  // namespace

MulTable::MulTable(std::uint32_t n, std::uint32_t fill)
    : n_(n), cells_(std::size_t{n} * n, fill) {
  if (n > 0 && (fill < 1 || fill > n)) {
    throw std::out_of_range("MulTable: fill value out of range");
  }
}

void MulTable::set(std::uint32_t x, std::uint32_t y, std::uint32_t value) {
  if (x < 1 || x > n_ || y < 1 || y > n_ || value < 1 || value > n_) {
    throw std::out_of_range("MulTable::set: index or value out of range");
  }
  cells_[(x - 1) * n_ + (y - 1)] = value;
}

PsiFunction::PsiFunction(std::uint32_t n, std::uint32_t m,
                         std::vector<std::uint32_t> values)
    : n_(n), m_(m), values_(std::move(values)) {
  require_nm(n, m);
  std::size_t const d = n - m;
  if (values_.size() != d * d) {
    throw std::invalid_argument("PsiFunction: expected " +
                                std::to_string(d * d) + " values");
  }
  for (auto v : values_) {
    if (v < 1 || v > m) {
      throw std::invalid_argument("PsiFunction: value outside [m]");
    }
  }
}

PsiFunction PsiFunction::constant(std::uint32_t n, std::uint32_t m,
                                  std::uint32_t v) {
  require_nm(n, m);
  std::size_t const d = n - m;
  return PsiFunction(n, m, std::vector<std::uint32_t>(d * d, v));
}

bool PsiFunction::covers_nonzero_targets() const {
  std::set<std::uint32_t> image(values_.begin(), values_.end());
  for (std::uint32_t v = 2; v <= m_; ++v) {
    if (!image.contains(v)) {
      return false;
    }
  }
  return true;
}

bool PsiFunction::is_symmetric() const {
  for (std::uint32_t x = m_ + 1; x <= n_; ++x) {
    for (std::uint32_t y = x + 1; y <= n_; ++y) {
      if ((*this)(x, y) != (*this)(y, x)) {
        return false;
      }
    }
  }
  return true;
}

MulTable build_table(PsiFunction const& psi) {
  MulTable t(psi.n(), 1);
  for (std::uint32_t x = psi.m() + 1; x <= psi.n(); ++x) {
    for (std::uint32_t y = psi.m() + 1; y <= psi.n(); ++y) {
      t.set(x, y, psi(x, y));
    }
  }
  return t;
}

bool is_associative(MulTable const& t) {
  auto const n = t.n();
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = 1; b <= n; ++b) {
      auto const ab = t(a, b);
      for (std::uint32_t c = 1; c <= n; ++c) {
        if (t(ab, c) != t(a, t(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::uint32_t> nilpotency_degree(MulTable const& t) {
  auto const n = t.n();
  if (n == 0) {
    return std::nullopt;
  }
  std::vector<bool> power(n + 1, true);  // S^1
  power[0] = false;
  for (std::uint32_t r = 1; r <= n; ++r) {
    auto const size = std::count(power.begin(), power.end(), true);
    if (size == 1) {
      return r;
    }
    std::vector<bool> next(n + 1, false);
    for (std::uint32_t a = 1; a <= n; ++a) {
      if (!power[a]) {
        continue;
      }
      for (std::uint32_t b = 1; b <= n; ++b) {
        next[t(a, b)] = true;
      }
    }
    if (next == power) {
      return std::nullopt;  // S^r = S^{r+1} with more than one element
    }
    power = std::move(next);
  }
  return std::nullopt;
}

ExactInt equality_oracle(std::uint32_t n, std::uint32_t m, bool commutative) {
  require_nm(n, m);
  std::uint32_t const d = n - m;
  std::uint32_t const cells = commutative ? d * (d + 1) / 2 : d * d;
  std::uint64_t const space = function_space_size(m, cells);
  FunctionCodec const codec{m, cells};
  std::uint64_t hits = 0;
#pragma omp parallel reduction(+ : hits)
  {
    std::vector<std::uint32_t> f, seen(m, 0);
    std::uint32_t stamp = 0;
#pragma omp for schedule(static)
    for (long long c = 0; c < static_cast<long long>(space); ++c) {
      codec.decode(static_cast<std::uint64_t>(c), f);
      if (covers(f, m, seen, ++stamp)) {
        ++hits;
      }
    }
  }
  return binomial(n, m) * m * ExactInt(std::to_string(hits));
}

ExactInt orbit_count_explicit(std::uint32_t n, std::uint32_t m,
                              EquivalenceKind kind, bool require_image) {
  require_nm(n, m);
  std::uint32_t const d = n - m;
  ActionKind const action = domain_action(kind);
  auto const points = static_cast<std::uint32_t>(induced_domain_size(action, d));
  std::uint64_t const space = function_space_size(m, points);
  FunctionCodec const codec{m, points};

  auto const identity_range = Permutation::identity(m).images();
  auto const identity_domain = Permutation::identity(d);
  std::vector<Generator> gens;
  for (auto const& sigma : symmetric_generators(d)) {
    gens.push_back({induced_permutation(sigma, false, action), identity_range});
  }
  for (auto const& tau : stabiliser_generators(m)) {
    gens.push_back({induced_permutation(identity_domain, false, action),
                    tau.images()});
  }
  if (kind == EquivalenceKind::IsoAntiOrbit) {
    gens.push_back({induced_permutation(identity_domain, true, action),
                    identity_range});
  }
  return union_find_orbits(codec, space, gens, require_image);
}

ExactInt symmetric_pair_orbit_count(std::uint32_t n, std::uint32_t m,
                                    bool require_image) {
  require_nm(n, m);
  std::uint32_t const d = n - m;
  std::uint32_t const points = d * (d + 1) / 2;
  std::uint64_t const space = function_space_size(m, points);
  FunctionCodec const codec{m, points};

  // Symmetric psi stored on cells x <= y; the action is taken on ordered
  // pairs and folded back.
  std::vector<std::uint32_t> cell_of_pair(std::size_t{d} * d);
  std::vector<std::uint32_t> pair_of_cell;
  for (std::uint32_t x = 0; x < d; ++x) {
    for (std::uint32_t y = x; y < d; ++y) {
      cell_of_pair[x * d + y] = cell_of_pair[y * d + x] =
          static_cast<std::uint32_t>(pair_of_cell.size());
      pair_of_cell.push_back(x * d + y);
    }
  }
  auto fold = [&](std::vector<std::uint32_t> const& pair_perm) {
    std::vector<std::uint32_t> out(points);
    for (std::uint32_t c = 0; c < points; ++c) {
      out[c] = cell_of_pair[pair_perm[pair_of_cell[c]]];
    }
    return out;
  };

  auto const identity_range = Permutation::identity(m).images();
  std::vector<Generator> gens;
  for (auto const& sigma : symmetric_generators(d)) {
    gens.push_back(
        {fold(induced_permutation(sigma, false, ActionKind::Pair)),
         identity_range});
  }
  for (auto const& tau : stabiliser_generators(m)) {
    gens.push_back(
        {fold(induced_permutation(Permutation::identity(d), false,
                                  ActionKind::Pair)),
         tau.images()});
  }
  return union_find_orbits(codec, space, gens, require_image);
}

ExactInt burnside_count(std::uint32_t n, std::uint32_t m,
                        EquivalenceKind kind) {
  require_nm(n, m);
  std::uint32_t const d = n - m;
  ActionKind const action = domain_action(kind);
  bool const twisted = kind == EquivalenceKind::IsoAntiOrbit;

  std::uint64_t const order =
      checked_mul(checked_mul(factorial_u64(d), factorial_u64(m - 1)),
                  twisted ? 2 : 1);
  if (order > kMaxGroupOrder) {
    throw InfeasibleError("group of order " + std::to_string(order) +
                          " exceeds the limit of " +
                          std::to_string(kMaxGroupOrder));
  }

  std::size_t const points = induced_domain_size(action, d);
  std::vector<SubstitutionVector> range_values;
  for (auto const& tau : stabiliser_elements(m)) {
    range_values.push_back(cycle_type_substitution(tau.cycle_type(), points));
  }
  auto const sigmas = all_permutations(d);

  ExactInt total = 0;
#pragma omp parallel
  {
    ExactInt local = 0;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long s = 0; s < static_cast<long long>(sigmas.size()); ++s) {
      auto const& sigma = sigmas[static_cast<std::size_t>(s)];
      for (int swap = 0; swap <= (twisted ? 1 : 0); ++swap) {
        auto const mono = CycleMonomial::of_cycle_type(
            induced_cycle_type(sigma, swap == 1, action));
        for (auto const& c : range_values) {
          local += mono.evaluate(c);
        }
      }
    }
#pragma omp critical(nilsemi_burnside)
    total += local;
  }

  ExactInt const group(std::to_string(order));
  if (!mpz_divisible_p(total.get_mpz_t(), group.get_mpz_t())) {
    throw std::logic_error("Burnside total not divisible by group order");
  }
  mpz_divexact(total.get_mpz_t(), total.get_mpz_t(), group.get_mpz_t());
  return total;
}

void for_each_degree3_table(std::uint32_t n,
                            std::function<void(MulTable const&)> const& visit) {
  if (n < 1) {
    return;
  }
  // All triple products equal z  <=>  every value v occurring as a product
  // has row v and column v constantly z. Cells are filled in row-major order
  // and the condition is checked against what is already assigned.
  std::uint32_t const cells = n * n;
  std::vector<std::uint32_t> t(cells, 0);      // 0 = unassigned
  std::vector<std::uint32_t> occurs(n + 1, 0);  // times v was assigned

  for (std::uint32_t z = 1; z <= n; ++z) {
    std::function<void(std::uint32_t, bool)> fill = [&](std::uint32_t cell,
                                                        bool nonzero) {
      if (cell == cells) {
        if (!nonzero) {
          return;  // zero semigroup, degree 2
        }
        MulTable table(n, 1);
        for (std::uint32_t i = 0; i < cells; ++i) {
          table.set(i / n + 1, i % n + 1, t[i]);
        }
        visit(table);
        return;
      }
      std::uint32_t const x = cell / n + 1;
      std::uint32_t const y = cell % n + 1;
      bool const forced_zero = occurs[x] > 0 || occurs[y] > 0;
      for (std::uint32_t v = 1; v <= n; ++v) {
        if (v != z && forced_zero) {
          continue;
        }
        // row v and column v must be z wherever already assigned
        bool ok = true;
        for (std::uint32_t w = 1; w <= n && ok; ++w) {
          auto const rv = t[(v - 1) * n + (w - 1)];
          auto const cv = t[(w - 1) * n + (v - 1)];
          ok = (rv == 0 || rv == z) && (cv == 0 || cv == z);
        }
        // the new cell itself lies in row v or column v when x == v or y == v
        if (ok && (x == v || y == v) && v != z) {
          ok = false;
        }
        if (!ok) {
          continue;
        }
        t[cell] = v;
        ++occurs[v];
        fill(cell + 1, nonzero || v != z);
        --occurs[v];
        t[cell] = 0;
      }
    };
    fill(0, false);
  }
}

std::optional<PsiFunction> relabel_to_psi(MulTable const& t) {
  auto const n = t.n();
  std::vector<bool> in_square(n + 1, false);
  for (auto v : t.cells()) {
    in_square[v] = true;
  }
  auto const degree = nilpotency_degree(t);
  if (!degree || *degree != 3) {
    return std::nullopt;
  }
  // the zero is the unique element of S^3
  std::uint32_t const zero = t(t(1, 1), 1);
  std::vector<std::uint32_t> label(n + 1, 0);
  std::uint32_t next = 1;
  label[zero] = next++;
  for (std::uint32_t v = 1; v <= n; ++v) {
    if (in_square[v] && v != zero) {
      label[v] = next++;
    }
  }
  std::uint32_t const m = next - 1;
  for (std::uint32_t v = 1; v <= n; ++v) {
    if (!in_square[v]) {
      label[v] = next++;
    }
  }
  if (m < 2 || m >= n) {
    return std::nullopt;
  }
  std::vector<std::uint32_t> unlabel(n + 1);
  for (std::uint32_t v = 1; v <= n; ++v) {
    unlabel[label[v]] = v;
  }
  std::vector<std::uint32_t> values;
  for (std::uint32_t x = m + 1; x <= n; ++x) {
    for (std::uint32_t y = m + 1; y <= n; ++y) {
      auto const v = label[t(unlabel[x], unlabel[y])];
      if (v > m) {
        return std::nullopt;
      }
      values.push_back(v);
    }
  }
  PsiFunction psi(n, m, std::move(values));
  if (!psi.covers_nonzero_targets()) {
    return std::nullopt;
  }
  // the relabeled table must be H(psi) everywhere, not only on A x A
  MulTable const h = build_table(psi);
  for (std::uint32_t x = 1; x <= n; ++x) {
    for (std::uint32_t y = 1; y <= n; ++y) {
      if (label[t(x, y)] != h(label[x], label[y])) {
        return std::nullopt;
      }
    }
  }
  return psi;
}

}  // namespace nilsemi::oracle
