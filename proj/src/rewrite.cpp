#include "sigmaforge/rewrite.hpp"

#include "sigmaforge/cyclic.hpp"
#include "sigmaforge/linalg.hpp"
#include "sigmaforge/sigma.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sigmaforge {

bool AtomWordOrder::operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const
{
  auto total = [](const std::vector<Monomial>& w) {
    int d = 0;
    for (const auto& m : w)
      d += m.degree();
    return d;
  };
  if (int da = total(a), db = total(b); da != db)
    return da > db;
  if (arity > 0) {
    auto leading = [this](const std::vector<Monomial>& w) {
      Monomial u;
      for (const auto& m : w)
        u = semigroup_mul(u, m, arity);
      return u;
    };
    if (auto c = wolf_compare(leading(a), leading(b)); c != 0)
      return c > 0;
  }
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    auto c = wolf_compare(a[i], b[i]);
    if (c != 0)
      return c > 0;
  }
  return a.size() < b.size();
}

void AtomExpression::add_term(const Word& w, const Rational& c)
{
  if (sigmaforge::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sigmaforge::is_zero(it->second))
      terms_.erase(it);
  }
}

Rational AtomExpression::coefficient(const Word& w) const
{
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string render(const AtomExpression& e)
{
  if (e.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const bool negative = sgn(c) < 0;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    Rational mag = abs(c);
    if (w.empty()) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1)
      out << to_string(mag) << '*';
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i])
        ++j;
      if (i != 0)
        out << '*';
      out << "bar(" << render_monomial(w[i]) << ')';
      if (j - i > 1)
        out << '^' << (j - i);
      i = j;
    }
  }
  return out.str();
}

OrbitDecomposition orbit_decompose(const Polynomial& p)
{
  if (!is_invariant(p))
    throw DomainError("polynomial is not invariant under the cyclic group");
  const int n = p.arity();
  OrbitDecomposition out;
  out.constant = p.coefficient(Monomial{});
  for (const auto& [u, c] : p.terms()) {
    if (u.is_one() || u.first_index() != 1)
      continue;
    for (const auto& v : orbit(u, n))
      if (p.coefficient(v) != c)
        throw std::logic_error("orbit coefficients disagree for " + render_monomial(u));
    out.orbits.emplace_back(c, u);
  }
  return out;
}

namespace {

Polynomial orbit_product(const std::vector<Monomial>& atoms, int n)
{
  Polynomial prod = Polynomial::constant(n, 1);
  for (const auto& a : atoms)
    prod = prod * orbit_polynomial(a, n);
  return prod;
}

} // namespace

AtomExpression rewrite_invariant(const Polynomial& p, std::vector<Monomial>* leading)
{
  if (!is_invariant(p))
    throw DomainError("polynomial is not invariant under the cyclic group");
  const int n = p.arity();
  AtomExpression out(n);
  Polynomial rest = p;
  std::optional<Monomial> previous;
  while (!rest.is_zero()) {
    const Monomial u = rest.leading_monomial();
    const Rational c = rest.coefficient(u);
    if (previous && wolf_compare(u, *previous) != std::strong_ordering::less)
      throw std::logic_error("rewrite did not descend at " + render_monomial(u));
    previous = u;
    if (leading)
      leading->push_back(u);
    if (u.is_one()) {
      out.add_term({}, c);
      rest.add_term(u, -c);
      continue;
    }
    // The largest monomial of an invariant polynomial is orbit-maximal.
    if (u.first_index() != 1)
      throw std::logic_error("leading monomial outside Q0: " + render_monomial(u));
    AtomWord w = factor_atoms(u, n);
    out.add_term(w.factors, c);
    rest -= c * orbit_product(w.factors, n);
  }
  return out;
}

Polynomial eval_atom_expr(const AtomExpression& e)
{
  const int n = e.arity();
  Polynomial out(n);
  for (const auto& [w, c] : e.terms())
    out += c * orbit_product(w, n);
  return out;
}

std::vector<std::pair<int, Monomial>> sigma_alpha_decomposition(int n, int k)
{
  if (k < 1 || k > n)
    throw DomainError("k must lie in 1.." + std::to_string(n));
  Polynomial orbit_sum = average(build_sigma(n, k)) * Rational(n);
  OrbitDecomposition dec = orbit_decompose(orbit_sum);
  std::vector<std::pair<int, Monomial>> out;
  Polynomial rebuilt(n);
  for (const auto& [c, u] : dec.orbits) {
    if (c.get_den() != 1 || sgn(c) <= 0 || !c.get_num().fits_sint_p())
      throw std::logic_error("alpha coefficient is not a positive integer");
    auto cx = u.complexion();
    if (!is_atom(u) || !std::is_sorted(cx.begin(), cx.end()) ||
        std::adjacent_find(cx.begin(), cx.end()) != cx.end())
      throw std::logic_error("orbit representative lacks an increasing complexion");
    out.emplace_back(static_cast<int>(c.get_num().get_si()), u);
    rebuilt += c * orbit_polynomial(u, n);
  }
  if (!is_zero(dec.constant) || rebuilt != orbit_sum)
    throw std::logic_error("alpha decomposition does not reconstruct the orbit sum");
  return out;
}

bool atom_terms_independent(const AtomExpression& e)
{
  const int n = e.arity();
  std::map<int, std::vector<Polynomial>> by_degree;
  for (const auto& [w, c] : e.terms()) {
    Polynomial prod = orbit_product(w, n);
    by_degree[prod.degree()].push_back(std::move(prod));
  }
  for (const auto& [d, polys] : by_degree) {
    std::unordered_map<Monomial, int> column;
    for (const auto& q : polys)
      for (const auto& [u, c] : q.terms())
        column.try_emplace(u, static_cast<int>(column.size()));
    linalg::Echelon ech(static_cast<int>(column.size()));
    for (const auto& q : polys) {
      linalg::SparseVec v;
      for (const auto& [u, c] : q.terms())
        v.emplace_back(column.at(u), c);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!ech.insert(v))
        return false;
    }
  }
  return true;
}

} // namespace sigmaforge
