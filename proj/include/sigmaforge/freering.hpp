#pragma once

// Exact arithmetic in the free ring Q<x1,...,xn>.

#include "sigmaforge/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigmaforge {

/// One factor x_index^exponent of a monomial written in run-length form.
struct Run {
  int index = 1;
  int exponent = 1;
  friend bool operator==(const Run&, const Run&) = default;
};

/// A word in the free monoid on x1..xn, stored as its complexion
/// (index sequence, adjacent entries distinct) and exponent sequence.
/// The empty monomial is 1. Monomials carry no arity of their own; the
/// owning Polynomial does.
class Monomial {
public:
  Monomial() = default;

  /// Run-length form of a letter sequence. No range check on the letters;
  /// see monomial_normalize for the checked entry point.
  static Monomial from_letters(std::span<const int> letters);
  static Monomial variable(int index, int exponent = 1);

  const std::vector<Run>& runs() const { return runs_; }
  std::vector<int> complexion() const;
  std::vector<int> exponents() const;
  /// Expansion as a letter sequence, each exponent unit separate.
  std::vector<int> letters() const;

  int degree() const { return degree_; }
  std::size_t length() const { return runs_.size(); }
  bool is_one() const { return runs_.empty(); }
  int first_index() const { return runs_.front().index; }
  int last_index() const { return runs_.back().index; }
  int max_index() const;

  friend bool operator==(const Monomial& a, const Monomial& b)
  {
    return a.runs_ == b.runs_;
  }
  friend Monomial operator*(const Monomial& u, const Monomial& v);

private:
  void push(int index, int exponent);

  std::vector<Run> runs_;
  int degree_ = 0;
};

/// Checked normalization: merges adjacent equal letters. Throws DomainError
/// when a letter falls outside 1..n.
Monomial monomial_normalize(std::span<const int> letters, int n);

inline Monomial monomial_mul(const Monomial& u, const Monomial& v) { return u * v; }

/// Total monomial order: degree first; then, for equal exponent sequences,
/// the complexion with the smaller first differing subscript is larger;
/// otherwise the exponent sequence with the larger first differing entry
/// is larger.
std::strong_ordering wolf_compare(const Monomial& u, const Monomial& v);

/// Strict "greater" in the Wolf order; used to keep terms descending.
struct WolfGreater {
  bool operator()(const Monomial& a, const Monomial& b) const
  {
    return wolf_compare(a, b) == std::strong_ordering::greater;
  }
};

std::string render_monomial(const Monomial& u);

/// Element of Q<x1,...,xn>. Terms are kept in strictly decreasing Wolf
/// order with no zero coefficients; the empty monomial holds the constant.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, WolfGreater>;

  explicit Polynomial(int arity);
  static Polynomial constant(int arity, const Rational& value);
  static Polynomial term(int arity, const Monomial& u, const Rational& coefficient = 1);
  static Polynomial variable(int arity, int index);
  /// Product x_{letters[0]} x_{letters[1]} ... with coefficient 1.
  static Polynomial word(int arity, std::span<const int> letters);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& u) const;
  /// Largest degree present; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }

  /// Adds c*u in place, dropping the term if it cancels.
  void add_term(const Monomial& u, const Rational& c);

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
  void check_arity(const Polynomial& q) const;

  int arity_;
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, int e);
/// The additive commutator pq - qp.
Polynomial commutator(const Polynomial& p, const Polynomial& q);
/// [i,j] = x_i x_j - x_j x_i.
Polynomial index_commutator(int n, int i, int j);

std::map<int, Polynomial> homogeneous_components(const Polynomial& p);

/// Thrown by parse_poly; carries the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Grammar (whitespace-insensitive):
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := [rat '*'] factor ('*' factor)* | rat
///   factor := 'x' int ['^' int]
///   rat    := int ['/' int]
Polynomial parse_poly(std::string_view text, int n);
/// Single monomial such as "x1*x3^4*x1^2*x2" or "1".
Monomial parse_monomial(std::string_view text, int n);

std::string render_poly(const Polynomial& p);

/// All n^d words of length d, in decreasing Wolf order.
std::vector<Monomial> enumerate_basis_words(int n, int d);

} // namespace sigmaforge

template <>
struct std::hash<sigmaforge::Monomial> {
  std::size_t operator()(const sigmaforge::Monomial& u) const noexcept;
};
