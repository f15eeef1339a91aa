#pragma once

// Orbit-maximal monomials Q0, the semigroup product on Q0 u {1}, and the
// free factorization of Q0 into atoms.

#include "sigmaforge/freering.hpp"

#include <compare>
#include <vector>

namespace sigmaforge {

// The ordering (wolf_compare) is declared with Monomial in freering.hpp.

/// Atom factorization u = a_1 . a_2 . ... . a_k (semigroup product).
struct AtomWord {
  std::vector<Monomial> factors;
  friend bool operator==(const AtomWord&, const AtomWord&) = default;
};

/// Wolf-largest element of the orbit of u; begins with x1.
Monomial orbit_max(const Monomial& u, int n);

/// Membership in Q0: the first subscript is 1.
bool is_in_Q0(const Monomial& u);

/// u . v: u times the unique orbit image of v whose first letter equals
/// the last letter of u. 1 is the unit.
Monomial semigroup_mul(const Monomial& u, const Monomial& v, int n);

/// A Q0 monomial all of whose exponents are 1.
bool is_atom(const Monomial& u);

/// The (n-1)^(d-1) atoms of degree d, in decreasing Wolf order.
std::vector<Monomial> enumerate_atoms(int n, int d);

/// Cuts u inside every repeated-letter run; each segment, shifted to begin
/// with x1, is an atom.
AtomWord factor_atoms(const Monomial& u, int n);

/// Left fold of semigroup_mul over the factors (1 for an empty list).
Monomial fold_atoms(const AtomWord& w, int n);

std::string render_atom_word(const AtomWord& w);

} // namespace sigmaforge
