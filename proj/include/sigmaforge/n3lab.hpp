#pragma once

// The three-variable quotient: the element c = [1,2], the central
// symbols sigma_1..3, c^3 and D = bar(x1*x2*x1), and the reduction of
// invariant polynomials to the form z0 + z1*c + z2*c^2.

#include "sigmaforge/checks.hpp"
#include "sigmaforge/freering.hpp"
#include "sigmaforge/sigma.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sigmaforge {

/// Indices of the central symbols inside the coefficient polynomials.
enum CentralSymbol : int { kSigma1 = 0, kSigma2 = 1, kSigma3 = 2, kCubeC = 3, kOrbitD = 4 };
inline constexpr int kCentralSymbols = 5;

/// Symbol names used for rendering: s1 s2 s3 C3 D.
const std::vector<std::string>& central_symbol_names();

/// Weighted degree of each central symbol (c itself has weight 2).
const std::vector<int>& central_symbol_weights();

/// z0 + z1*c + z2*c^2 with z_i commutative polynomials in the central
/// symbols; multiplication uses c^3 = C3.
struct SReduced {
  CommutativePoly z0{kCentralSymbols};
  CommutativePoly z1{kCentralSymbols};
  CommutativePoly z2{kCentralSymbols};

  static SReduced constant(const Rational& v);
  static SReduced symbol(CentralSymbol s);
  /// The element c.
  static SReduced c();

  SReduced& operator+=(const SReduced& o);
  SReduced& operator-=(const SReduced& o);
  friend SReduced operator+(SReduced a, const SReduced& b) { return a += b; }
  friend SReduced operator-(SReduced a, const SReduced& b) { return a -= b; }
  friend SReduced operator*(const Rational& k, const SReduced& a);
  friend bool operator==(const SReduced&, const SReduced&) = default;
};

SReduced sreduced_mul(const SReduced& a, const SReduced& b);
std::string render(const SReduced& s);

/// c = x1*x2 - x2*x1 in P (n = 3).
Polynomial n3_c();
/// bar(x1*x2*x1) in P.
Polynomial n3_d();

struct N3Generators {
  Polynomial A, B, C, D;
};
N3Generators n3_generators();

/// Substitutes sigma_k, c^3 = n3_c()^3 and D = n3_d(), and c = n3_c().
Polynomial expand_sreduced(const SReduced& s);

/// Orbit values of the seven atoms of degree at most 3.
std::vector<std::pair<Monomial, SReduced>> base_table();

struct ReductionOptions {
  int max_degree = 6;
};

/// Reduces invariant-mod-I polynomials, memoizing orbit symbols. Every
/// orbit symbol value and every final result is certified by membership
/// of the difference in I; a failed certification throws std::logic_error.
class N3Reducer {
public:
  explicit N3Reducer(ReductionOptions options = {});

  /// Throws DomainError if p is not invariant modulo I or exceeds the bound.
  SReduced reduce(const Polynomial& p);

  /// Value of bar(u) for a monomial u of P (any orbit representative).
  SReduced reduce_orbit(const Monomial& u);

  /// (degree of atom, degree of a symbol it was rewritten through) for
  /// every application of an atom rule so far.
  const std::vector<std::pair<int, int>>& rule_edges() const { return edges_; }
  int certifications() const { return certifications_; }

private:
  SReduced reduce_word(std::vector<int> letters);
  SReduced reduce_atom(const Monomial& a);
  void certify(const Polynomial& lhs, const SReduced& value, const std::string& what);

  ReductionOptions options_;
  std::map<std::vector<int>, SReduced> memo_;
  std::vector<std::pair<int, int>> edges_;
  int certifications_ = 0;
};

SReduced reduce_to_S_form(const Polynomial& p, const ReductionOptions& options = {});

/// The c-conjugation, c^3 centrality, D centrality, non-centrality of c,
/// cubic for bar(x1*x2), central quadratics, base table and reduction
/// soundness items, each as one report line under check "n3".
CheckReport verify_n3_suite();

} // namespace sigmaforge
