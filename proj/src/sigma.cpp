#include "sigmaforge/sigma.hpp"

#include "sigmaforge/linalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace sigmaforge {

// --------------------------------------------------------- CommutativePoly

CommutativePoly::CommutativePoly(int variables) : variables_(variables)
{
  if (variables < 0)
    throw DomainError("negative variable count");
}

CommutativePoly CommutativePoly::constant(int variables, const Rational& c)
{
  CommutativePoly p(variables);
  p.add_term(Exponents(static_cast<std::size_t>(variables), 0), c);
  return p;
}

CommutativePoly CommutativePoly::variable(int variables, int index, int power)
{
  if (index < 0 || index >= variables)
    throw DomainError("variable index out of range");
  CommutativePoly p(variables);
  Exponents e(static_cast<std::size_t>(variables), 0);
  e[static_cast<std::size_t>(index)] = power;
  p.add_term(e, 1);
  return p;
}

void CommutativePoly::add_term(const Exponents& e, const Rational& c)
{
  if (static_cast<int>(e.size()) != variables_)
    throw DomainError("exponent vector length mismatch");
  if (sigmaforge::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sigmaforge::is_zero(it->second))
      terms_.erase(it);
  }
}

Rational CommutativePoly::coefficient(const Exponents& e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CommutativePoly::weighted_degree(std::span<const int> weights) const
{
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      w += weights[i] * e[i];
    best = std::max(best, w);
  }
  return best;
}

CommutativePoly& CommutativePoly::operator+=(const CommutativePoly& q)
{
  if (q.variables_ != variables_)
    throw DomainError("variable count mismatch");
  for (const auto& [e, c] : q.terms_)
    add_term(e, c);
  return *this;
}

CommutativePoly& CommutativePoly::operator-=(const CommutativePoly& q)
{
  if (q.variables_ != variables_)
    throw DomainError("variable count mismatch");
  for (const auto& [e, c] : q.terms_)
    add_term(e, -c);
  return *this;
}

CommutativePoly& CommutativePoly::operator*=(const Rational& c)
{
  if (sigmaforge::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_)
    x *= c;
  return *this;
}

CommutativePoly operator*(const CommutativePoly& p, const CommutativePoly& q)
{
  if (p.variables_ != q.variables_)
    throw DomainError("variable count mismatch");
  CommutativePoly out(p.variables_);
  CommutativePoly::Exponents e(static_cast<std::size_t>(p.variables_));
  for (const auto& [a, x] : p.terms_)
    for (const auto& [b, y] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = a[i] + b[i];
      out.add_term(e, x * y);
    }
  return out;
}

std::string render(const CommutativePoly& p, std::span<const std::string> names)
{
  if (p.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads more naturally than map order.
  std::vector<std::pair<CommutativePoly::Exponents, Rational>> terms(p.terms().rbegin(),
                                                                     p.terms().rend());
  for (const auto& [e, c] : terms) {
    const bool negative = sgn(c) < 0;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += names[i];
      if (e[i] != 1)
        mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out << to_string(mag);
    else if (mag == 1)
      out << mono;
    else
      out << to_string(mag) << '*' << mono;
  }
  return out.str();
}

Polynomial evaluate(const CommutativePoly& p, std::span<const Polynomial> values)
{
  if (static_cast<int>(values.size()) != p.variables())
    throw DomainError("evaluate: wrong number of substitution values");
  if (values.empty())
    throw DomainError("evaluate: need at least one value to fix the arity");
  const int n = values.front().arity();
  std::vector<std::vector<Polynomial>> powers(values.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(Polynomial::constant(n, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * values[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

// ------------------------------------------------------------------ sigma

Polynomial sigma_over(int n, std::span<const int> order, int k)
{
  const int m = static_cast<int>(order.size());
  if (k == 0)
    return Polynomial::constant(n, 1);
  if (k < 0 || k > m)
    return Polynomial(n);
  Polynomial out(n);
  // Walk all k-subsets of positions in increasing order.
  std::vector<int> pos(static_cast<std::size_t>(k));
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> letters(static_cast<std::size_t>(k));
  while (true) {
    for (int j = 0; j < k; ++j)
      letters[static_cast<std::size_t>(j)] = order[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])];
    out.add_term(monomial_normalize(letters, n), 1);
    int j = k - 1;
    while (j >= 0 && pos[static_cast<std::size_t>(j)] == m - k + j)
      --j;
    if (j < 0)
      break;
    ++pos[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t)
      pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

Polynomial build_sigma(int n, int k)
{
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return sigma_over(n, order, k);
}

Polynomial sigma_recursion_I_over(int n, std::span<const int> order, int k)
{
  if (k == 0)
    return Polynomial::constant(n, 1);
  if (k < 0 || k > static_cast<int>(order.size()))
    return Polynomial(n);
  auto rest = order.subspan(1);
  return Polynomial::variable(n, order.front()) * sigma_recursion_I_over(n, rest, k - 1) +
         sigma_recursion_I_over(n, rest, k);
}

Polynomial sigma_recursion_II_over(int n, std::span<const int> order, int k)
{
  if (k == 0)
    return Polynomial::constant(n, 1);
  if (k < 0 || k > static_cast<int>(order.size()))
    return Polynomial(n);
  auto rest = order.first(order.size() - 1);
  return sigma_recursion_II_over(n, rest, k - 1) * Polynomial::variable(n, order.back()) +
         sigma_recursion_II_over(n, rest, k);
}

namespace {

std::vector<int> natural_order(int n)
{
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return order;
}

void check_k(int n, int k)
{
  if (k < 1 || k > n)
    throw DomainError("k must lie in 1.." + std::to_string(n));
}

} // namespace

Polynomial sigma_via_recursion_I(int n, int k)
{
  check_k(n, k);
  return sigma_recursion_I_over(n, natural_order(n), k);
}

Polynomial sigma_via_recursion_II(int n, int k)
{
  check_k(n, k);
  return sigma_recursion_II_over(n, natural_order(n), k);
}

CommutativePoly abelianize(const Polynomial& p)
{
  CommutativePoly out(p.arity());
  CommutativePoly::Exponents e(static_cast<std::size_t>(p.arity()));
  for (const auto& [u, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& r : u.runs())
      e[static_cast<std::size_t>(r.index - 1)] += r.exponent;
    out.add_term(e, c);
  }
  return out;
}

CommutativePoly elementary_symmetric(int n, int k)
{
  CommutativePoly out(n);
  if (k < 0 || k > n)
    return out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k)
      continue;
    CommutativePoly::Exponents e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        e[static_cast<std::size_t>(i)] = 1;
    out.add_term(e, 1);
  }
  return out;
}

Polynomial char_poly_image(int n, int i)
{
  if (i < 1 || i > n)
    throw DomainError("index must lie in 1.." + std::to_string(n));
  Polynomial out(n);
  for (int k = 0; k <= n; ++k) {
    Polynomial x_pow = n - k == 0 ? Polynomial::constant(n, 1)
                                  : Polynomial::term(n, Monomial::variable(i, n - k));
    Polynomial term = build_sigma(n, k) * x_pow;
    out += (k % 2 == 0 ? Rational(1) : Rational(-1)) * term;
  }
  return out;
}

std::vector<Polynomial> factored_char_coefficients(int n, int rotation)
{
  // coefficient of y^{n-k} in prod_j (y - x_{o(j)}) is (-1)^k sigma_k over o.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    order[static_cast<std::size_t>(j)] = ((j + rotation) % n + n) % n + 1;
  // Expand the product directly so the identity is checked, not assumed:
  // coeffs[m] holds the coefficient of y^m.
  std::vector<Polynomial> coeffs(1, Polynomial::constant(n, 1));
  for (int idx : order) {
    std::vector<Polynomial> next(coeffs.size() + 1, Polynomial(n));
    Polynomial x = Polynomial::variable(n, idx);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      next[m + 1] += coeffs[m];
      next[m] -= coeffs[m] * x;
    }
    coeffs = std::move(next);
  }
  std::vector<Polynomial> out;
  for (int k = 0; k <= n; ++k) {
    const Polynomial& c = coeffs[static_cast<std::size_t>(n - k)];
    out.push_back(c - (k % 2 == 0 ? Rational(1) : Rational(-1)) * build_sigma(n, k));
  }
  return out;
}

Polynomial inverse_identity_poly(int n, int i)
{
  if (i < 1 || i > n)
    throw DomainError("index must lie in 1.." + std::to_string(n));
  Polynomial bracket(n);
  for (int k = 0; k <= n - 1; ++k) {
    Polynomial x_pow = n - 1 - k == 0 ? Polynomial::constant(n, 1)
                                      : Polynomial::term(n, Monomial::variable(i, n - 1 - k));
    bracket += (k % 2 == 0 ? Rational(1) : Rational(-1)) * (build_sigma(n, k) * x_pow);
  }
  Rational sign = (n + 1) % 2 == 0 ? Rational(1) : Rational(-1);
  return Polynomial::variable(n, i) * bracket - sign * build_sigma(n, n);
}

std::vector<std::vector<int>> sigma_exponent_vectors(int n, int bound)
{
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int budget) {
    if (k > n) {
      out.push_back(a);
      return;
    }
    for (int e = 0; k * e <= budget; ++e) {
      a[static_cast<std::size_t>(k - 1)] = e;
      rec(k + 1, budget - k * e);
    }
    a[static_cast<std::size_t>(k - 1)] = 0;
  };
  rec(1, bound);
  return out;
}

bool verify_sigma_independence(int n, int bound)
{
  if (bound < 1)
    throw DomainError("bound must be at least 1");
  std::vector<CommutativePoly> e;
  for (int k = 1; k <= n; ++k)
    e.push_back(abelianize(build_sigma(n, k)));
  std::vector<CommutativePoly> products;
  for (const auto& a : sigma_exponent_vectors(n, bound)) {
    CommutativePoly p = CommutativePoly::constant(n, 1);
    for (int k = 1; k <= n; ++k)
      for (int t = 0; t < a[static_cast<std::size_t>(k - 1)]; ++t)
        p = p * e[static_cast<std::size_t>(k - 1)];
    products.push_back(std::move(p));
  }
  // Column index per commutative monomial seen.
  std::map<CommutativePoly::Exponents, int> column;
  for (const auto& p : products)
    for (const auto& [ex, c] : p.terms())
      column.try_emplace(ex, static_cast<int>(column.size()));
  linalg::Echelon ech(static_cast<int>(column.size()));
  for (const auto& p : products) {
    linalg::SparseVec v;
    for (const auto& [ex, c] : p.terms())
      v.emplace_back(column.at(ex), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!ech.insert(v))
      return false;
  }
  return true;
}

} // namespace sigmaforge
