#include "graphpoly/factorize.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace graphpoly {

namespace {

struct BudgetExceeded {};

using Signed = Natural;

// Monomial-basis coefficients of the polynomial interpolating
// values[0..d] at 0..d, or nullopt if they are not all integers.
std::optional<std::vector<Signed>> interpolate(
    const std::vector<Natural>& values) {
  const std::size_t d = values.size() - 1;
  // Forward differences: diffs[j] = Delta^j f(0).
  std::vector<Signed> work(values.begin(), values.end());
  std::vector<Signed> newton(d + 1);
  Signed factorial = 1;
  for (std::size_t j = 0; j <= d; ++j) {
    if (j > 0) factorial *= j;
    if (work[0] % factorial != 0) return std::nullopt;
    newton[j] = work[0] / factorial;
    for (std::size_t i = 0; i + 1 < work.size(); ++i)
      work[i] = work[i + 1] - work[i];
    work.pop_back();
  }
  // sum_j newton[j] * x (x-1) ... (x-j+1), expanded.
  std::vector<Signed> coeffs(d + 1, 0);
  std::vector<Signed> falling{1};  // coefficients of x^(j falling)
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t i = 0; i < falling.size(); ++i)
      coeffs[i] += newton[j] * falling[i];
    std::vector<Signed> next(falling.size() + 1, 0);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * static_cast<long>(j);
    }
    falling = std::move(next);
  }
  return coeffs;
}

Poly1 shift_down(const Poly1& p, const BitExp& m, const Natural& content) {
  Poly1 out;
  for (const auto& [mono, c] : p.terms())
    out.add_term({subtract(mono[0], m)}, c / content);
  return out;
}

Poly1 x_pow(std::uint64_t a) { return Poly1::monomial({tau(a)}); }

// Divisors q of p0 in N[x], each with its cofactor. p0 has p0(0) > 0 and
// content 1.
std::map<Poly1, Poly1> kronecker_divisors(const Poly1& p0,
                                          const SearchBudget& budget,
                                          std::uint64_t& tuples) {
  std::map<Poly1, Poly1> found;
  found.emplace(Poly1::constant(1), p0);
  found.emplace(p0, Poly1::constant(1));
  const std::uint64_t n = from_bits_u64(degree(p0));
  for (std::uint64_t d = 1; d <= n / 2; ++d) {
    std::vector<std::vector<Natural>> choices(d + 1);
    for (std::uint64_t k = 0; k <= d; ++k) {
      if (!positive_divisors(eval(p0, Natural(k)),
                             budget.max_trial_divisions, choices[k]))
        throw BudgetExceeded{};
    }
    std::vector<std::size_t> idx(d + 1, 0);
    std::vector<Natural> values(d + 1);
    for (;;) {
      if (++tuples > budget.max_divisor_tuples) throw BudgetExceeded{};
      for (std::size_t k = 0; k <= d; ++k) values[k] = choices[k][idx[k]];
      if (auto coeffs = interpolate(values)) {
        bool ok = (*coeffs)[d] != 0;
        for (const auto& c : *coeffs) ok = ok && c >= 0;
        if (ok) {
          Poly1 q;
          for (std::size_t i = 0; i <= d; ++i) q.add_term({tau(std::uint64_t{i})}, (*coeffs)[i]);
          if (auto r = divide_exact(p0, q)) {
            found.emplace(q, *r);
            found.emplace(*r, q);
          }
        }
      }
      std::size_t k = 0;
      while (k <= d && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k > d) break;
    }
  }
  return found;
}

}  // namespace

UnivariateFactorization factor_pairs(const Poly1& p,
                                     const SearchBudget& budget) {
  if (p.is_zero()) throw std::invalid_argument("factor_pairs of 0");
  UnivariateFactorization out;
  out.x_power = p.terms().begin()->first[0];
  out.content = 0;
  for (const auto& [m, c] : p.terms()) out.content = gcd(out.content, c);

  try {
    if (out.x_power > tau(budget.max_degree) ||
        degree(p) > tau(budget.max_degree))
      throw BudgetExceeded{};
    const std::uint64_t m = from_bits_u64(out.x_power);
    const Poly1 p0 = shift_down(p, out.x_power, out.content);

    std::uint64_t tuples = 0;
    auto divisors = kronecker_divisors(p0, budget, tuples);
    std::vector<Natural> constants;
    if (!positive_divisors(out.content, budget.max_trial_divisions, constants))
      throw BudgetExceeded{};

    std::set<FactorPair<1>> pairs;
    for (const auto& [q0, r0] : divisors) {
      for (std::uint64_t a = 0; a <= m; ++a) {
        for (const auto& c : constants) {
          if (++tuples > budget.max_divisor_tuples) throw BudgetExceeded{};
          Poly1 q = scale(mul(x_pow(a), q0), c);
          Poly1 r = scale(mul(x_pow(m - a), r0), out.content / c);
          if (q.is_constant() || r.is_constant()) continue;
          if (r < q) std::swap(q, r);
          pairs.emplace(std::move(q), std::move(r));
        }
      }
    }
    out.pairs.assign(pairs.begin(), pairs.end());
  } catch (const BudgetExceeded&) {
    out.status = SearchStatus::budget_exceeded;
    out.pairs.clear();
  }
  return out;
}

template <std::size_t N>
DisjointFactorization<N> bit_disjoint_factor(const Polynomial<N>& p,
                                             const SearchBudget& budget) {
  if (p.is_zero()) throw std::invalid_argument("bit_disjoint_factor of 0");
  DisjointFactorization<N> out;
  const PositionSet support = tau_poly(p);
  if (support.size() >= 64 ||
      (std::uint64_t{1} << support.size()) > budget.max_bipartitions) {
    out.status = SearchStatus::budget_exceeded;
    return out;
  }

  using Mono = Monomial<N>;
  auto mask_mono = [](const Mono& m, const PositionSet& mask) {
    Mono r;
    for (std::size_t i = 0; i < N; ++i) r[i] = m[i].masked(mask);
    return r;
  };

  std::set<FactorPair<N>> pairs;
  const std::uint64_t count = std::uint64_t{1} << support.size();
  for (std::uint64_t choice = 0; choice < count; ++choice) {
    PositionSet s1, s2;
    for (std::size_t i = 0; i < support.size(); ++i)
      ((choice >> i) & 1u ? s1 : s2).push_back(support[i]);

    std::map<Mono, std::map<Mono, Natural>> grid;
    std::set<Mono> cols;
    for (const auto& [m, c] : p.terms()) {
      Mono a = mask_mono(m, s1);
      Mono b = mask_mono(m, s2);
      cols.insert(b);
      grid[a][b] = c;
    }
    if (grid.size() * cols.size() != p.size()) continue;

    const auto& row0 = grid.begin()->second;
    const Mono& b0 = *cols.begin();
    Natural g = 0;
    for (const auto& [a, row] : grid) g = gcd(g, row.at(b0));
    std::vector<Natural> deltas;
    if (!positive_divisors(g, budget.max_trial_divisions, deltas)) {
      out.status = SearchStatus::budget_exceeded;
      out.pairs.clear();
      return out;
    }
    for (const Natural& delta : deltas) {
      std::map<Mono, Natural> left;
      for (const auto& [a, row] : grid) left[a] = row.at(b0) / delta;
      const Natural& c0 = left.begin()->second;
      std::map<Mono, Natural> right;
      bool ok = true;
      for (const auto& [b, v] : row0) {
        if (v % c0 != 0) {
          ok = false;
          break;
        }
        right[b] = v / c0;
      }
      for (auto it = grid.begin(); ok && it != grid.end(); ++it)
        for (const auto& [b, v] : it->second)
          if (v != left[it->first] * right[b]) {
            ok = false;
            break;
          }
      if (!ok) continue;
      Polynomial<N> p1, p2;
      for (const auto& [a, c] : left) p1.add_term(a, c);
      for (const auto& [b, c] : right) p2.add_term(b, c);
      if (p1.is_one() || p2.is_one()) continue;
      if (p2 < p1) std::swap(p1, p2);
      pairs.emplace(std::move(p1), std::move(p2));
    }
  }
  out.pairs.assign(pairs.begin(), pairs.end());
  return out;
}

template DisjointFactorization<1> bit_disjoint_factor(const Poly1&,
                                                      const SearchBudget&);
template DisjointFactorization<2> bit_disjoint_factor(const Poly2&,
                                                      const SearchBudget&);

}  // namespace graphpoly
