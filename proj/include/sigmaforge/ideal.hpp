#pragma once

// Homogeneous two-sided ideals of P and exact membership testing at
// bounded degree. A degree-d slice is the row space of all products
// u*g*v (u, v words) of total degree d, written in the word basis.

#include "sigmaforge/freering.hpp"
#include "sigmaforge/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sigmaforge {

enum class GeneratorKind {
  Comm,        ///< [x_i, sigma_k], 1 <= i, k <= n
  Diff,        ///< sigma_k - sigma_k^g, g in the cyclic group
  Commutators, ///< [x_i, x_j]; generates the commutator ideal J
  Custom,
};

struct GeneratorSet {
  GeneratorKind kind = GeneratorKind::Custom;
  int n = 0;
  /// Homogeneous, nonzero, pairwise distinct.
  std::vector<Polynomial> generators;

  static GeneratorSet comm(int n);
  static GeneratorSet diff(int n);
  static GeneratorSet commutators(int n);
  /// Throws DomainError for a non-homogeneous generator or arity mismatch.
  static GeneratorSet custom(int n, std::vector<Polynomial> gens);

  std::string name() const;
};

/// Parses "comm", "diff" or "j". Throws DomainError otherwise.
GeneratorKind parse_generator_kind(const std::string& name);
GeneratorSet make_generators(GeneratorKind kind, int n);

/// The n^d words of degree d in decreasing Wolf order. Column c of a slice
/// is words[c]; a word's base-n letter code maps to its column.
struct WordBasis {
  int n = 0;
  int degree = 0;
  std::vector<Monomial> words;
  std::vector<int> column_of_code;

  WordBasis(int n, int degree);
  std::size_t size() const { return words.size(); }
  int column(const Monomial& u) const;
  /// Coefficient vector of a homogeneous degree-d polynomial.
  linalg::SparseVec to_vector(const Polynomial& p) const;
  Polynomial to_polynomial(const linalg::SparseVec& v) const;
};

/// Which generator and which outer words produced one spanning row.
struct RowSource {
  int generator = 0;
  Monomial left;
  Monomial right;
};

struct DegreeSlice {
  int n = 0;
  int degree = 0;
  std::shared_ptr<const WordBasis> basis;
  linalg::Echelon rowspace{0};
  /// Filled only for certifying slices, indexed by insertion order.
  std::vector<RowSource> sources;

  int rank() const { return rowspace.rank(); }
};

/// Builds the degree-d slice. Row generation uses up to `jobs` threads;
/// the result does not depend on `jobs`.
DegreeSlice degree_slice(const GeneratorSet& gens, int d, int jobs = 1, bool track = false);

/// One term c * u * g_i * v of a membership certificate.
struct CertificateTerm {
  Rational coefficient;
  RowSource source;
};

struct MembershipResult {
  bool member = true;
  /// Nonzero residual per failing degree (canonical representatives).
  std::map<int, Polynomial> residuals;
  /// With certify: p minus the sum of residuals equals the sum of these terms.
  std::vector<CertificateTerm> certificate;
};

/// Membership oracle for one generator set with a per-degree slice cache.
/// Safe to share between threads.
class IdealOracle {
public:
  explicit IdealOracle(GeneratorSet gens, int jobs = 1);

  const GeneratorSet& generators() const { return gens_; }
  int arity() const { return gens_.n; }

  const DegreeSlice& slice(int d) const;
  const DegreeSlice& tracked_slice(int d) const;

  bool member(const Polynomial& p) const;
  MembershipResult check(const Polynomial& p, bool certify = false) const;
  /// Sum over degrees of the canonical residuals.
  Polynomial normal_form(const Polynomial& p) const;
  bool congruent(const Polynomial& p, const Polynomial& q) const;

private:
  const DegreeSlice& cached(int d, bool track) const;

  GeneratorSet gens_;
  int jobs_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, bool>, std::unique_ptr<DegreeSlice>> slices_;
};

/// Shared oracle for a standard generator kind, created on first use.
const IdealOracle& standard_oracle(GeneratorKind kind, int n);

/// Worker count used by standard oracles created after the call.
void set_default_jobs(int jobs);
int default_jobs();

/// Expands a certificate back into P.
Polynomial expand_certificate(const GeneratorSet& gens, const std::vector<CertificateTerm>& terms);

bool member(const Polynomial& p, const GeneratorSet& gens);
MembershipResult member_certified(const Polynomial& p, const GeneratorSet& gens);

bool spans_equal(const GeneratorSet& a, const GeneratorSet& b, int d, int jobs = 1);

/// n^d minus the rank of the degree-d slice of the [x_i, sigma_k] ideal.
long quotient_dim(int n, int d);

/// p = sum a_i x_i^2 + sum_{i<j} b_ij x_i x_j + sum_{i<j<n} c_ij [i, j+1] mod I.
struct CanonicalQuadratic {
  int n = 0;
  std::map<int, Rational> a;
  std::map<std::pair<int, int>, Rational> b;
  /// Key (i, j) stands for the commutator [i, j+1].
  std::map<std::pair<int, int>, Rational> c;

  Polynomial reconstruct() const;
};

/// The spanning set of the canonical form, in the order a, b, c.
std::vector<Polynomial> canonical_quadratic_basis(int n);
CanonicalQuadratic canonical_quadratic(const Polynomial& p);

/// [k, k-1] written as the unique combination of off-diagonal commutators
/// [i, j] (j > i + 1) congruent to it, together with which sign of the
/// trailing sum sum_{j=k+1}^n [k-1, j] makes the closed formula
/// sum_{p=1}^{k-2} sum_{j=k}^n [p, j] +/- sum_{j=k+1}^n [k-1, j] hold.
struct DiagonalExpansion {
  Polynomial expression;
  bool plus_form_holds = false;
  bool minus_form_holds = false;
};

DiagonalExpansion expand_diagonal_commutator(int n, int k);

/// Closed formula for [k, k-1] with the chosen sign of the trailing sum.
Polynomial diagonal_closed_form(int n, int k, int trailing_sign);

/// sum_{k=2}^n [k,k-1] - sum_{p=1}^{n-2} sum_{j=2}^{n-p} j [p, j+p].
Polynomial diagonal_sum_identity(int n);

/// Default certification degree bound per arity.
int default_max_degree(int n);

} // namespace sigmaforge
