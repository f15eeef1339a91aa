#include "sigmaforge/matmodel.hpp"

#include "parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace sigmaforge {

using nlohmann::ordered_json;

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void require_same_shape(const Matrix& a, const Matrix& b)
{
  if (a.size() != b.size() || (!a.empty() && a.front().size() != b.front().size()))
    throw DomainError("matrix shapes differ");
}

} // namespace

Matrix identity_matrix(int dim)
{
  Matrix m = zero_matrix(dim);
  for (int i = 0; i < dim; ++i)
    m[sz(i)][sz(i)] = 1;
  return m;
}

Matrix zero_matrix(int dim) { return Matrix(sz(dim), std::vector<Rational>(sz(dim))); }

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
  require_same_shape(a, b);
  const std::size_t m = a.size();
  Matrix out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (is_zero(a[i][k]))
        continue;
      for (std::size_t j = 0; j < m; ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b)
{
  require_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      out[i][j] += b[i][j];
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b)
{
  require_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      out[i][j] -= b[i][j];
  return out;
}

Matrix mat_commutator(const Matrix& a, const Matrix& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

bool mat_is_zero(const Matrix& a)
{
  for (const auto& row : a)
    for (const auto& x : row)
      if (!is_zero(x))
        return false;
  return true;
}

std::string render_matrix(const Matrix& a)
{
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a[i].size(); ++j)
      out << (j ? ", " : "") << to_string(a[i][j]);
    out << ']';
  }
  out << ']';
  return out.str();
}

void MatrixTuple::validate() const
{
  if (n < 1 || static_cast<int>(mats.size()) != n)
    throw DomainError("a tuple needs n >= 1 matrices");
  for (const auto& m : mats) {
    if (static_cast<int>(m.size()) != dim)
      throw DomainError("matrix dimension mismatch");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != dim)
        throw DomainError("matrix is not square");
  }
}

MatrixTuple make_tuple(std::vector<Matrix> mats)
{
  MatrixTuple t;
  t.n = static_cast<int>(mats.size());
  t.dim = mats.empty() ? 0 : static_cast<int>(mats.front().size());
  t.mats = std::move(mats);
  t.validate();
  return t;
}

MatrixTuple rotate(const MatrixTuple& t, int power)
{
  MatrixTuple out = t;
  for (int i = 0; i < t.n; ++i)
    out.mats[sz(i)] = t.mats[sz(((i + power) % t.n + t.n) % t.n)];
  return out;
}

Matrix eval_sigma_matrices(const MatrixTuple& t, int k)
{
  t.validate();
  if (k < 0 || k > t.n)
    throw DomainError("k must lie in 0.." + std::to_string(t.n));
  // Dynamic programming over prefixes: level[j] = sigma_j of the first i matrices.
  std::vector<Matrix> level(sz(k + 1), zero_matrix(t.dim));
  level[0] = identity_matrix(t.dim);
  for (int i = 0; i < t.n; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j)
      level[sz(j)] = mat_add(level[sz(j)], mat_mul(level[sz(j - 1)], t.mats[sz(i)]));
  return level[sz(k)];
}

C12Result check_c12(const MatrixTuple& t)
{
  t.validate();
  C12Result r{true, true};
  std::vector<Matrix> sigmas;
  for (int k = 1; k <= t.n; ++k)
    sigmas.push_back(eval_sigma_matrices(t, k));
  for (int p = 1; p < t.n && r.invariant; ++p) {
    MatrixTuple g = rotate(t, p);
    for (int k = 1; k <= t.n && r.invariant; ++k)
      if (eval_sigma_matrices(g, k) != sigmas[sz(k - 1)])
        r.invariant = false;
  }
  for (const auto& s : sigmas)
    for (const auto& m : t.mats)
      if (!mat_is_zero(mat_commutator(m, s)))
        r.commuting = false;
  if (r.invariant != r.commuting)
    throw std::logic_error("invariance and centrality of the sigma values disagree");
  return r;
}

// ------------------------------------------------------------ families

Family parse_family(const std::string& name)
{
  for (Family f : all_families())
    if (family_name(f) == name)
      return f;
  throw DomainError("unknown family '" + name + "' (expected commuting, conj-cyclic, block-upper or dense)");
}

std::string family_name(Family f)
{
  switch (f) {
  case Family::Commuting:
    return "commuting";
  case Family::ConjCyclic:
    return "conj-cyclic";
  case Family::BlockUpper:
    return "block-upper";
  case Family::Dense:
    return "dense";
  }
  return "unknown";
}

const std::vector<Family>& all_families()
{
  static const std::vector<Family> f = {Family::Commuting, Family::ConjCyclic, Family::BlockUpper,
                                        Family::Dense};
  return f;
}

namespace {

Matrix random_matrix(int dim, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix m = zero_matrix(dim);
  for (auto& row : m)
    for (auto& x : row)
      x = entry(rng);
  return m;
}

Matrix cyclic_permutation_matrix(int dim, int shift)
{
  Matrix p = zero_matrix(dim);
  for (int i = 0; i < dim; ++i)
    p[sz(((i + shift) % dim + dim) % dim)][sz(i)] = 1;
  return p;
}

} // namespace

MatrixTuple generate_tuple(Family family, int n, int dim, std::mt19937_64& rng)
{
  if (n < 1 || dim < 1)
    throw DomainError("tuple needs n >= 1 and dim >= 1");
  std::vector<Matrix> mats;
  switch (family) {
  case Family::Commuting: {
    // Polynomials in one matrix commute with each other.
    const Matrix a = random_matrix(dim, rng);
    const Matrix a2 = mat_mul(a, a);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int i = 0; i < n; ++i) {
      Matrix m = zero_matrix(dim);
      const Rational c0 = coef(rng), c1 = coef(rng), c2 = coef(rng);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          m[sz(r)][sz(c)] = c1 * a[sz(r)][sz(c)] + c2 * a2[sz(r)][sz(c)] + (r == c ? c0 : Rational(0));
      mats.push_back(std::move(m));
    }
    break;
  }
  case Family::ConjCyclic: {
    // M_i = P^-(i-1) A P^(i-1) with P the cyclic shift; P^-1 = P^T.
    const Matrix a = random_matrix(dim, rng);
    for (int i = 0; i < n; ++i)
      mats.push_back(mat_mul(mat_mul(cyclic_permutation_matrix(dim, -i), a), cyclic_permutation_matrix(dim, i)));
    break;
  }
  case Family::BlockUpper: {
    const int split = dim / 2;
    for (int i = 0; i < n; ++i) {
      Matrix m = random_matrix(dim, rng);
      for (int r = split; r < dim; ++r)
        for (int c = 0; c < split; ++c)
          m[sz(r)][sz(c)] = 0;
      mats.push_back(std::move(m));
    }
    break;
  }
  case Family::Dense:
    for (int i = 0; i < n; ++i)
      mats.push_back(random_matrix(dim, rng));
    break;
  }
  MatrixTuple t;
  t.n = n;
  t.dim = dim;
  t.mats = std::move(mats);
  return t;
}

// ------------------------------------------------------------ search

ordered_json SearchReport::to_json() const
{
  ordered_json j;
  j["n"] = params.n;
  j["dim"] = params.dim;
  j["family"] = family_name(params.family);
  j["seed"] = params.seed;
  j["budget"] = params.budget;
  j["generated"] = generated;
  j["relations_hold"] = relations_hold;
  j["non_commuting"] = non_commuting;
  j["budget_exhausted"] = budget_exhausted;
  ordered_json list = ordered_json::array();
  for (const auto& c : candidates) {
    ordered_json e;
    e["index"] = c.index;
    ordered_json mats = ordered_json::array();
    for (const auto& m : c.tuple.mats)
      mats.push_back(render_matrix(m));
    e["matrices"] = mats;
    e["commutator_product"] = render_matrix(c.product);
    e["product_rank"] = c.product_rank;
    e["vanishes"] = c.vanishes;
    e["singular"] = c.singular;
    list.push_back(std::move(e));
  }
  j["candidates"] = list;
  return j;
}

SearchReport zero_divisor_search(const SearchParams& params, int jobs)
{
  if (params.n < 2 || params.dim < 1 || params.budget < 0)
    throw DomainError("search needs n >= 2, dim >= 1 and a non-negative budget");
  SearchReport report;
  report.params = params;
  std::mt19937_64 rng(params.seed);
  std::vector<MatrixTuple> tuples;
  tuples.reserve(sz(params.budget));
  for (int i = 0; i < params.budget; ++i)
    tuples.push_back(generate_tuple(params.family, params.n, params.dim, rng));

  struct Outcome {
    bool holds = false;
    bool non_commuting = false;
    SearchCandidate candidate;
  };
  std::vector<Outcome> outcomes(tuples.size());
  detail::parallel_for(tuples.size(), jobs, [&](std::size_t i) {
    const MatrixTuple& t = tuples[i];
    Outcome& o = outcomes[i];
    o.holds = check_c12(t).invariant;
    if (!o.holds)
      return;
    for (int a = 0; a < t.n && !o.non_commuting; ++a)
      for (int b = a + 1; b < t.n && !o.non_commuting; ++b)
        o.non_commuting = !mat_is_zero(mat_commutator(t.mats[sz(a)], t.mats[sz(b)]));
    if (!o.non_commuting)
      return;
    Matrix prod = identity_matrix(t.dim);
    for (int a = 0; a + 1 < t.n; ++a)
      prod = mat_mul(prod, mat_commutator(t.mats[sz(a)], t.mats[sz(a + 1)]));
    o.candidate.index = static_cast<int>(i);
    o.candidate.tuple = t;
    o.candidate.product_rank = linalg::rank(prod);
    o.candidate.vanishes = mat_is_zero(prod);
    o.candidate.singular = o.candidate.product_rank < t.dim;
    o.candidate.product = std::move(prod);
  });

  report.generated = static_cast<int>(tuples.size());
  report.budget_exhausted = report.generated == params.budget;
  for (auto& o : outcomes) {
    report.relations_hold += o.holds;
    report.non_commuting += o.non_commuting;
    if (o.non_commuting)
      report.candidates.push_back(std::move(o.candidate));
  }
  return report;
}

} // namespace sigmaforge
