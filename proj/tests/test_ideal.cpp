#include "sigmaforge/checks.hpp"
#include "sigmaforge/cyclic.hpp"
#include "sigmaforge/ideal.hpp"
#include "sigmaforge/sigma.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace sigmaforge;
using namespace testsupport;

namespace {

// Independent slice model: every product u*g*v of degree d, written as a
// dense row over the words of degree d in lexicographic letter order, and
// ranked by plain Gaussian elimination.
class DenseSlice {
public:
  DenseSlice(const GeneratorSet& gens, int d) : n_(gens.n)
  {
    const auto words = words_of(d);
    for (std::size_t i = 0; i < words.size(); ++i)
      column_[words[i]] = static_cast<int>(i);
    for (const auto& g : gens.generators) {
      const int e = g.degree();
      if (e > d)
        continue;
      for (int left = 0; left <= d - e; ++left)
        for (const auto& u : words_of(left))
          for (const auto& v : words_of(d - e - left))
            rows_.push_back(dense(Polynomial::word(n_, u) * g * Polynomial::word(n_, v)));
    }
    rank_ = rank_of(rows_);
  }

  int rank() const { return rank_; }

  bool contains(const Polynomial& p) const
  {
    auto rows = rows_;
    rows.push_back(dense(p));
    return rank_of(rows) == rank_;
  }

private:
  std::vector<std::vector<int>> words_of(int length) const
  {
    std::vector<std::vector<int>> words{{}};
    for (int i = 0; i < length; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words)
        for (int l = 1; l <= n_; ++l) {
          next.push_back(w);
          next.back().push_back(l);
        }
      words.swap(next);
    }
    return words;
  }

  std::vector<Rational> dense(const Polynomial& p) const
  {
    std::vector<Rational> row(column_.size());
    for (const auto& [u, c] : p.terms())
      row[static_cast<std::size_t>(column_.at(u.letters()))] = c;
    return row;
  }

  static int rank_of(std::vector<std::vector<Rational>> m)
  {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
      std::size_t pivot = static_cast<std::size_t>(rank);
      while (pivot < m.size() && sgn(m[pivot][c]) == 0)
        ++pivot;
      if (pivot == m.size())
        continue;
      std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
      const auto& prow = m[static_cast<std::size_t>(rank)];
      for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
        if (sgn(m[r][c]) == 0)
          continue;
        const Rational f = m[r][c] / prow[c];
        for (std::size_t k = c; k < cols; ++k)
          m[r][k] -= f * prow[k];
      }
      ++rank;
    }
    return rank;
  }

  int n_;
  std::map<std::vector<int>, int> column_;
  std::vector<std::vector<Rational>> rows_;
  int rank_ = 0;
};

Polynomial commutator_of(int n, int i, int j) { return index_commutator(n, i, j); }

// Every positive membership must also have zero abelianization.
bool is_member(const Polynomial& p, int n = 3)
{
  const bool result = standard_oracle(GeneratorKind::Comm, n).member(p);
  if (result)
    CHECK(abelianize(p).is_zero());
  return result;
}

// Random element of I of degree d: a combination of products u*g*v.
Polynomial random_member(std::mt19937_64& rng, const GeneratorSet& gens, int d, int terms)
{
  Polynomial p(gens.n);
  for (int t = 0; t < terms; ++t) {
    const auto& g = gens.generators[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(gens.generators.size()) - 1))];
    if (g.degree() > d)
      continue;
    const int left = uniform(rng, 0, d - g.degree());
    const Polynomial u = Polynomial::word(gens.n, random_letters(rng, gens.n, left));
    const Polynomial v = Polynomial::word(gens.n, random_letters(rng, gens.n, d - g.degree() - left));
    p += random_coefficient(rng) * (u * g * v);
  }
  return p;
}

} // namespace

TEST_CASE("generator sets")
{
  const auto comm = GeneratorSet::comm(3);
  CHECK(comm.name() == "comm");
  CHECK(GeneratorSet::diff(3).name() == "diff");
  CHECK(GeneratorSet::commutators(3).name() == "j");
  for (const auto& g : comm.generators) {
    CHECK(g.is_homogeneous());
    CHECK_FALSE(g.is_zero());
  }
  CHECK(parse_generator_kind("diff") == GeneratorKind::Diff);
  CHECK_THROWS_AS(parse_generator_kind("xyz"), DomainError);
  CHECK_THROWS_AS(GeneratorSet::custom(3, {parse_poly("x1 + x1*x2", 3)}), DomainError);
  CHECK_THROWS_AS(GeneratorSet::custom(3, {Polynomial::variable(4, 1)}), DomainError);
}

TEST_CASE("word basis columns")
{
  const WordBasis basis(3, 3);
  REQUIRE(basis.size() == 27);
  for (std::size_t c = 0; c < basis.size(); ++c)
    CHECK(basis.column(basis.words[c]) == static_cast<int>(c));
  const Polynomial p = parse_poly("2*x1*x3*x2 - x3^3", 3);
  CHECK(basis.to_polynomial(basis.to_vector(p)) == p);
}

TEST_CASE("slice ranks")
{
  const auto comm = GeneratorSet::comm(3);
  CHECK(degree_slice(comm, 0).rank() == 0);
  CHECK(degree_slice(comm, 1).rank() == 0);
  CHECK(degree_slice(comm, 2).rank() == 2);
  for (int n = 3; n <= 4; ++n) {
    for (int d = 0; d <= (n == 3 ? 4 : 3); ++d) {
      for (const auto& gens : {GeneratorSet::comm(n), GeneratorSet::diff(n), GeneratorSet::commutators(n)}) {
        CAPTURE(n);
        CAPTURE(d);
        CHECK(degree_slice(gens, d).rank() == DenseSlice(gens, d).rank());
      }
    }
  }
}

TEST_CASE("membership examples")
{
  CHECK(is_member(commutator_of(3, 1, 2) + commutator_of(3, 1, 3)));
  CHECK_FALSE(is_member(parse_poly("x1*x3*x2 - x3*x2*x1", 3)));
  CHECK(is_member(Polynomial(3)));
  CHECK_FALSE(is_member(commutator_of(3, 1, 2)));
  CHECK_FALSE(is_member(Polynomial::constant(3, 1)));
  const auto result = standard_oracle(GeneratorKind::Comm, 3).check(commutator_of(3, 1, 2));
  CHECK_FALSE(result.member);
  REQUIRE(result.residuals.count(2) == 1);
  CHECK(is_member(commutator_of(3, 1, 2) - result.residuals.at(2)));
}

TEST_CASE("membership agrees with the dense model")
{
  std::mt19937_64 rng(61);
  const auto comm = GeneratorSet::comm(3);
  for (int d = 2; d <= 4; ++d) {
    const DenseSlice dense(comm, d);
    for (int t = 0; t < 25; ++t) {
      Polynomial p = random_member(rng, comm, d, 3);
      if (uniform(rng, 0, 1))
        p += random_homogeneous(rng, 3, d, 1);
      CHECK(is_member(p) == dense.contains(p));
    }
  }
}

TEST_CASE("certificates expand back to the polynomial")
{
  std::mt19937_64 rng(62);
  const auto comm = GeneratorSet::comm(3);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = random_member(rng, comm, uniform(rng, 2, 5), 3) + random_poly(rng, 3, 3, 1);
    const MembershipResult r = member_certified(p, comm);
    Polynomial residual(3);
    for (const auto& [d, part] : r.residuals)
      residual += part;
    Polynomial rebuilt(3);
    for (const auto& term : r.certificate) {
      const Polynomial& g = comm.generators[static_cast<std::size_t>(term.source.generator)];
      rebuilt += term.coefficient * (Polynomial::term(3, term.source.left, 1) * g *
                                     Polynomial::term(3, term.source.right, 1));
    }
    CHECK(rebuilt == p - residual);
    CHECK(expand_certificate(comm, r.certificate) == rebuilt);
    CHECK(r.member == residual.is_zero());
  }
}

TEST_CASE("membership is componentwise and stable under the cyclic group")
{
  std::mt19937_64 rng(63);
  for (int n = 3; n <= 4; ++n) {
    const auto comm = GeneratorSet::comm(n);
    for (int t = 0; t < 20; ++t) {
      Polynomial p = random_member(rng, comm, 2, 2) + random_member(rng, comm, 3, 2);
      if (uniform(rng, 0, 2) == 0)
        p += random_homogeneous(rng, n, uniform(rng, 1, 3), 1);
      bool all = true;
      for (const auto& [d, part] : homogeneous_components(p))
        all = all && is_member(part, n);
      CHECK(is_member(p, n) == all);
      const CircularPermutation g(n, uniform(rng, 1, n - 1));
      CHECK(is_member(act(g, p), n) == is_member(p, n));
    }
  }
}

TEST_CASE("the ideal lies properly inside the commutator ideal")
{
  for (int n = 3; n <= 4; ++n) {
    const auto j = GeneratorSet::commutators(n);
    for (const auto& g : GeneratorSet::comm(n).generators)
      CHECK(member(g, j));
    CHECK(member(commutator_of(n, 1, 2), j));
    CHECK_FALSE(is_member(commutator_of(n, 1, 2), n));
  }
}

TEST_CASE("slices are deterministic across worker counts")
{
  const auto comm = GeneratorSet::comm(3);
  const DegreeSlice one = degree_slice(comm, 5, 1);
  const DegreeSlice four = degree_slice(comm, 5, 4);
  CHECK(one.rowspace == four.rowspace);
  CHECK(degree_slice(comm, 5, 3).rowspace == one.rowspace);
}

TEST_CASE("generated by commutators with sigma or by differences of rotated sigma")
{
  for (int d = 0; d <= 5; ++d)
    CHECK(spans_equal(GeneratorSet::comm(3), GeneratorSet::diff(3), d));
  for (int d = 0; d <= 4; ++d)
    CHECK(spans_equal(GeneratorSet::comm(4), GeneratorSet::diff(4), d, 2));
  CHECK(spans_equal(GeneratorSet::comm(3), GeneratorSet::comm(3), 3));
  CHECK_FALSE(spans_equal(GeneratorSet::comm(3), GeneratorSet::commutators(3), 2));
}

TEST_CASE("quotient dimensions")
{
  CHECK(quotient_dim(3, 0) == 1);
  CHECK(quotient_dim(3, 1) == 3);
  CHECK(quotient_dim(3, 2) == 7);
  for (int n = 3; n <= 5; ++n)
    CHECK(quotient_dim(n, 2) == n * n - n + 1);
  for (int d = 0; d <= 4; ++d) {
    long words = 1;
    for (int i = 0; i < d; ++i)
      words *= 3;
    CHECK(quotient_dim(3, d) == words - DenseSlice(GeneratorSet::comm(3), d).rank());
  }
}

TEST_CASE("canonical quadratic form")
{
  const auto x1sq = canonical_quadratic(parse_poly("x1^2", 3));
  CHECK(x1sq.a == std::map<int, Rational>{{1, 1}});
  CHECK(x1sq.b.empty());
  CHECK(x1sq.c.empty());

  const auto c13 = canonical_quadratic(commutator_of(3, 1, 3));
  CHECK(c13.a.empty());
  CHECK(c13.b.empty());
  CHECK(c13.c == std::map<std::pair<int, int>, Rational>{{{1, 2}, 1}});

  // x2x1 = x1x2 - [1,2], and [1,2] is congruent to [3,1] = -[1,3].
  const auto x2x1 = canonical_quadratic(parse_poly("x2*x1", 3));
  CHECK(x2x1.a.empty());
  CHECK(x2x1.b == std::map<std::pair<int, int>, Rational>{{{1, 2}, 1}});
  CHECK(x2x1.c == std::map<std::pair<int, int>, Rational>{{{1, 2}, 1}});
  CHECK(is_member(x2x1.reconstruct() - parse_poly("x2*x1", 3)));

  CHECK(canonical_quadratic_basis(3).size() == 7);
  CHECK(canonical_quadratic_basis(4).size() == 13);
  CHECK_THROWS_AS(canonical_quadratic(parse_poly("x1", 3)), DomainError);
  CHECK_THROWS_AS(canonical_quadratic(parse_poly("x1^2 + x2", 3)), DomainError);
}

TEST_CASE("canonical quadratic form round trips and is unique")
{
  std::mt19937_64 rng(64);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform(rng, 3, 5);
    const Polynomial p = random_homogeneous(rng, n, 2, uniform(rng, 1, 6));
    const CanonicalQuadratic q = canonical_quadratic(p);
    CHECK(is_member(q.reconstruct() - p, n));
    CHECK(canonical_quadratic(q.reconstruct()).reconstruct() == q.reconstruct());
    // Adding an element of I does not change the coefficients.
    const Polynomial shifted = p + random_member(rng, GeneratorSet::comm(n), 2, 2);
    const CanonicalQuadratic r = canonical_quadratic(shifted);
    CHECK(r.reconstruct() == q.reconstruct());
  }
}

TEST_CASE("diagonal commutators in terms of off-diagonal ones")
{
  CHECK(expand_diagonal_commutator(3, 2).expression == commutator_of(3, 1, 3));
  CHECK(expand_diagonal_commutator(4, 4).expression == commutator_of(4, 1, 4) + commutator_of(4, 2, 4));
  CHECK_THROWS_AS(expand_diagonal_commutator(3, 1), DomainError);
  CHECK_THROWS_AS(expand_diagonal_commutator(3, 4), DomainError);
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const DiagonalExpansion e = expand_diagonal_commutator(n, k);
      CHECK(is_member(commutator_of(n, k, k - 1) - e.expression, n));
      for (const auto& [u, c] : e.expression.terms()) {
        const auto l = u.letters();
        CHECK(std::abs(l[0] - l[1]) >= 2);
      }
      const bool plus = is_member(commutator_of(n, k, k - 1) - diagonal_closed_form(n, k, 1), n);
      const bool minus = is_member(commutator_of(n, k, k - 1) - diagonal_closed_form(n, k, -1), n);
      CHECK(e.plus_form_holds == plus);
      CHECK(e.minus_form_holds == minus);
      CHECK(plus);
      CHECK(minus == (k == n));
    }
  }
}

TEST_CASE("sum of diagonal commutators")
{
  // For three variables: [2,1] + [3,2] - 2[1,3].
  CHECK(diagonal_sum_identity(3) ==
        commutator_of(3, 2, 1) + commutator_of(3, 3, 2) - Rational(2) * commutator_of(3, 1, 3));
  for (int n = 3; n <= 6; ++n)
    CHECK(is_member(diagonal_sum_identity(n), n));
}

TEST_CASE("default certification degrees")
{
  CHECK(default_max_degree(3) == 6);
  CHECK(default_max_degree(4) == 5);
  CHECK(default_max_degree(5) == 4);
}

TEST_CASE("named checks")
{
  const CheckParams small{3, 2};
  for (const auto& name : check_names()) {
    if (name == "n3")
      continue;
    CAPTURE(name);
    const CheckReport r = run_check(name, 3, small);
    CHECK_FALSE(r.lines.empty());
    CHECK(r.passed());
    for (const auto& line : r.lines) {
      CHECK(line.check == name);
      CHECK(line.n == 3);
    }
  }
  CHECK_THROWS_AS(run_check("bogus", 3), DomainError);
  CHECK_THROWS_AS(run_check("eq_4", 2), DomainError);

  const CheckReport indep = run_check("thm_1_3_independence", 4, small);
  CHECK(indep.passed());
  const auto json = indep.lines.front().to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : json.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"check", "n", "degree", "status", "witness"});
}
