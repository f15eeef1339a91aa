#pragma once

// The defining relations evaluated on tuples of rational matrices, and a
// seeded search for commutator products that vanish or are singular.

#include "sigmaforge/linalg.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sigmaforge {

using Matrix = linalg::DenseMatrix;

Matrix identity_matrix(int dim);
Matrix zero_matrix(int dim);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_commutator(const Matrix& a, const Matrix& b);
bool mat_is_zero(const Matrix& a);
std::string render_matrix(const Matrix& a);

struct MatrixTuple {
  int n = 0;
  int dim = 0;
  std::vector<Matrix> mats;

  /// Throws DomainError unless there are n >= 1 square matrices of size dim.
  void validate() const;
};

MatrixTuple make_tuple(std::vector<Matrix> mats);

/// The tuple with entry i replaced by entry g(i) for the rotation g = g(power).
MatrixTuple rotate(const MatrixTuple& t, int power);

/// sigma_k(M_1, ..., M_n): the sum of ordered products over increasing
/// index sets of size k; sigma_0 is the identity.
Matrix eval_sigma_matrices(const MatrixTuple& t, int k);

struct C12Result {
  bool invariant = false;
  bool commuting = false;
};

/// invariant: every sigma_k agrees with its value on every rotated tuple.
/// commuting: every sigma_k commutes with every M_i. Throws
/// std::logic_error if the two disagree.
C12Result check_c12(const MatrixTuple& t);

enum class Family { Commuting, ConjCyclic, BlockUpper, Dense };

/// "commuting", "conj-cyclic", "block-upper", "dense".
Family parse_family(const std::string& name);
std::string family_name(Family f);
const std::vector<Family>& all_families();

/// One random tuple of the family with small integer entries.
MatrixTuple generate_tuple(Family family, int n, int dim, std::mt19937_64& rng);

struct SearchParams {
  int n = 3;
  int dim = 3;
  Family family = Family::ConjCyclic;
  std::uint64_t seed = 1;
  int budget = 100;
};

struct SearchCandidate {
  int index = 0;
  MatrixTuple tuple;
  /// [M_1, M_2][M_2, M_3] ... [M_{n-1}, M_n].
  Matrix product;
  int product_rank = 0;
  bool vanishes = false;
  bool singular = false;
};

struct SearchReport {
  SearchParams params;
  int generated = 0;
  int relations_hold = 0;
  int non_commuting = 0;
  bool budget_exhausted = false;
  std::vector<SearchCandidate> candidates;

  nlohmann::ordered_json to_json() const;
};

/// Generates `budget` tuples from the seed, keeps those satisfying the
/// relations with some non-commuting pair, and records the commutator
/// product of each. The report does not depend on `jobs`.
SearchReport zero_divisor_search(const SearchParams& params, int jobs = 1);

} // namespace sigmaforge
