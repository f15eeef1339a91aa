#pragma once

// The cyclic group generated by (1 2 ... n) acting on subscripts.

#include "sigmaforge/freering.hpp"

#include <vector>

namespace sigmaforge {

/// g(power): subscript i goes to ((i - 1 + power) mod n) + 1.
class CircularPermutation {
public:
  CircularPermutation(int arity, int power);
  static CircularPermutation identity(int arity) { return {arity, 0}; }
  static CircularPermutation generator(int arity) { return {arity, 1}; }
  /// The element taking subscript `from` to subscript `to`.
  static CircularPermutation taking(int arity, int from, int to);

  int arity() const { return arity_; }
  int power() const { return power_; }
  int apply(int index) const { return (index - 1 + power_) % arity_ + 1; }
  CircularPermutation inverse() const { return {arity_, arity_ - power_}; }

  friend CircularPermutation operator*(const CircularPermutation& a, const CircularPermutation& b);
  friend bool operator==(const CircularPermutation&, const CircularPermutation&) = default;

private:
  int arity_;
  int power_;
};

/// Shifts the complexion; exponents are untouched.
Monomial act(const CircularPermutation& g, const Monomial& u);
Polynomial act(const CircularPermutation& g, const Polynomial& p);

/// The n images u^{g(i)}, i = 0..n-1. Throws for the empty monomial.
std::vector<Monomial> orbit(const Monomial& u, int n);
/// Sum of the orbit, every coefficient 1.
Polynomial orbit_polynomial(const Monomial& u, int n);

bool is_invariant(const Polynomial& p);
/// (1/n) * sum over the group of p^g.
Polynomial average(const Polynomial& p);

} // namespace sigmaforge
