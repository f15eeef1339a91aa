#pragma once

// Rewriting G-invariant polynomials of P as polynomials in orbit
// polynomials of atoms.

#include "sigmaforge/atoms.hpp"
#include "sigmaforge/freering.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sigmaforge {

/// Orders formal atom words by decreasing Wolf order of the leading monomial
/// of their product, which is the semigroup product of the atoms. Products
/// of distinct atom words have distinct leading monomials. Without an arity
/// the words are compared by total degree and then factor by factor.
struct AtomWordOrder {
  int arity = 0;
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const;
};

/// Formal noncommutative polynomial in the symbols bar(a), a an atom.
/// The key is the ordered list of atoms of one product; the empty key is
/// the constant term.
class AtomExpression {
public:
  using Word = std::vector<Monomial>;
  using TermMap = std::map<Word, Rational, AtomWordOrder>;

  explicit AtomExpression(int arity) : arity_(arity), terms_(AtomWordOrder{arity}) {}

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Rational& c);
  Rational coefficient(const Word& w) const;

  friend bool operator==(const AtomExpression&, const AtomExpression&) = default;

private:
  int arity_;
  TermMap terms_;
};

/// e.g. "bar(x1)^2 - bar(x1*x2) - bar(x1*x3)".
std::string render(const AtomExpression& e);

struct OrbitDecomposition {
  Rational constant;
  /// (coefficient, orbit representative in Q0), decreasing Wolf order.
  std::vector<std::pair<Rational, Monomial>> orbits;
};

/// p = constant + sum c_i * bar(u_i). Throws DomainError if p is not invariant.
OrbitDecomposition orbit_decompose(const Polynomial& p);

/// Greedy rewrite: repeatedly take the Wolf-largest remaining monomial u,
/// factor it into atoms a_1..a_k and subtract c * bar(a_1)...bar(a_k).
/// When `leading` is given it receives the sequence of monomials u.
AtomExpression rewrite_invariant(const Polynomial& p, std::vector<Monomial>* leading = nullptr);

/// Substitutes the orbit polynomial for each symbol and multiplies in P.
Polynomial eval_atom_expr(const AtomExpression& e);

/// (alpha_j, atom) with n*sigma_k congruent to sum alpha_j * bar(atom_j);
/// in P the right side equals the orbit sum of sigma_k exactly.
std::vector<std::pair<int, Monomial>> sigma_alpha_decomposition(int n, int k);

/// True when, for every total degree, the evaluated products of the
/// expression's terms are linearly independent in P.
bool atom_terms_independent(const AtomExpression& e);

} // namespace sigmaforge
