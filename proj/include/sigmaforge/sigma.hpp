#pragma once

// Elementary polynomials sigma_k in noncommuting variables, their two
// recursions, the abelianization map and the characteristic-polynomial
// identities.

#include "sigmaforge/freering.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace sigmaforge {

/// Polynomial in commuting variables: exponent vector -> coefficient.
class CommutativePoly {
public:
  using Exponents = std::vector<int>;

  explicit CommutativePoly(int variables);
  static CommutativePoly constant(int variables, const Rational& c);
  static CommutativePoly variable(int variables, int index, int power = 1);

  int variables() const { return variables_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;
  /// Weighted total degree sum_i weights[i]*e[i]; -1 for zero.
  int weighted_degree(std::span<const int> weights) const;

  CommutativePoly& operator+=(const CommutativePoly& q);
  CommutativePoly& operator-=(const CommutativePoly& q);
  CommutativePoly& operator*=(const Rational& c);
  friend CommutativePoly operator+(CommutativePoly p, const CommutativePoly& q) { return p += q; }
  friend CommutativePoly operator-(CommutativePoly p, const CommutativePoly& q) { return p -= q; }
  friend CommutativePoly operator-(CommutativePoly p) { return p *= Rational(-1); }
  friend CommutativePoly operator*(const CommutativePoly& p, const CommutativePoly& q);
  friend CommutativePoly operator*(CommutativePoly p, const Rational& c) { return p *= c; }
  friend CommutativePoly operator*(const Rational& c, CommutativePoly p) { return p *= c; }
  friend bool operator==(const CommutativePoly& a, const CommutativePoly& b) = default;

private:
  int variables_;
  std::map<Exponents, Rational> terms_;
};

/// Renders with the given variable names, e.g. "s1*s2 - 3*s3".
std::string render(const CommutativePoly& p, std::span<const std::string> names);

/// Substitutes values[i] for variable i and multiplies in P, factors in
/// variable order.
Polynomial evaluate(const CommutativePoly& p, std::span<const Polynomial> values);

/// sigma_k(x1..xn): sum of all strictly increasing words of length k.
/// sigma_0 = 1 and sigma_k = 0 outside 0..n.
Polynomial build_sigma(int n, int k);

/// sigma_k over an ordered list of variable indices (the order replaces
/// 1 < 2 < ... < n), as an element of P with arity n.
Polynomial sigma_over(int n, std::span<const int> order, int k);

/// sigma_k = x1 * sigma_{k-1}(x2..xn) + sigma_k(x2..xn), unrolled.
Polynomial sigma_via_recursion_I(int n, int k);
/// sigma_k = sigma_{k-1}(x1..x_{n-1}) * xn + sigma_k(x1..x_{n-1}), unrolled.
Polynomial sigma_via_recursion_II(int n, int k);
/// Recursion I over an arbitrary ordered index list.
Polynomial sigma_recursion_I_over(int n, std::span<const int> order, int k);
Polynomial sigma_recursion_II_over(int n, std::span<const int> order, int k);

/// Image in the commutative ring: each word goes to its exponent vector.
CommutativePoly abelianize(const Polynomial& p);

/// Commutative elementary symmetric polynomial e_k in n variables.
CommutativePoly elementary_symmetric(int n, int k);

/// f(x_i) = x_i^n - sigma_1 x_i^{n-1} + ... + (-1)^n sigma_n, sigmas on the left.
Polynomial char_poly_image(int n, int i);

/// For k = 0..n: coefficient of y^{n-k} in (y - x_{1+s})(y - x_{2+s})...(y - x_{n+s})
/// (indices mod n, y central) minus (-1)^k sigma_k.
std::vector<Polynomial> factored_char_coefficients(int n, int rotation = 0);

/// x_i (x_i^{n-1} - sigma_1 x_i^{n-2} + ... + (-1)^{n-1} sigma_{n-1}) - (-1)^{n+1} sigma_n.
Polynomial inverse_identity_poly(int n, int i);

/// True iff the abelianized products sigma_1^{a_1}...sigma_n^{a_n} with
/// sum k*a_k <= bound are linearly independent.
bool verify_sigma_independence(int n, int total_degree_bound);

/// Weight vectors a with sum k*a_k <= bound, in lexicographic order.
std::vector<std::vector<int>> sigma_exponent_vectors(int n, int total_degree_bound);

} // namespace sigmaforge
