#include "sigmaforge/cyclic.hpp"

namespace sigmaforge {

CircularPermutation::CircularPermutation(int arity, int power) : arity_(arity)
{
  if (arity < 1)
    throw DomainError("arity must be positive");
  power_ = ((power % arity) + arity) % arity;
}

CircularPermutation CircularPermutation::taking(int arity, int from, int to)
{
  return {arity, to - from};
}

CircularPermutation operator*(const CircularPermutation& a, const CircularPermutation& b)
{
  if (a.arity_ != b.arity_)
    throw DomainError("arity mismatch");
  return {a.arity_, a.power_ + b.power_};
}

Monomial act(const CircularPermutation& g, const Monomial& u)
{
  if (g.power() == 0)
    return u;
  Monomial out;
  for (const auto& r : u.runs()) {
    if (r.index > g.arity())
      throw DomainError("monomial index exceeds arity");
    out = out * Monomial::variable(g.apply(r.index), r.exponent);
  }
  return out;
}

Polynomial act(const CircularPermutation& g, const Polynomial& p)
{
  if (g.arity() != p.arity())
    throw DomainError("arity mismatch between permutation and polynomial");
  if (g.power() == 0)
    return p;
  Polynomial out(p.arity());
  for (const auto& [u, c] : p.terms())
    out.add_term(act(g, u), c);
  return out;
}

std::vector<Monomial> orbit(const Monomial& u, int n)
{
  if (u.is_one())
    throw DomainError("orbit of the empty monomial");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(act(CircularPermutation(n, i), u));
  return out;
}

Polynomial orbit_polynomial(const Monomial& u, int n)
{
  Polynomial out(n);
  for (const auto& v : orbit(u, n))
    out.add_term(v, 1);
  return out;
}

bool is_invariant(const Polynomial& p)
{
  return act(CircularPermutation::generator(p.arity()), p) == p;
}

Polynomial average(const Polynomial& p)
{
  const int n = p.arity();
  Polynomial out(n);
  for (int i = 0; i < n; ++i)
    out += act(CircularPermutation(n, i), p);
  return out * Rational(1, n);
}

} // namespace sigmaforge
