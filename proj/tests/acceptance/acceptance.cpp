// Acceptance gate: one line per criterion, each with a pinned time limit.
// Exits nonzero when any criterion fails or runs over its limit.

#include "generators.hpp"

#include "sigmaforge/atoms.hpp"
#include "sigmaforge/checks.hpp"
#include "sigmaforge/cyclic.hpp"
#include "sigmaforge/ideal.hpp"
#include "sigmaforge/matmodel.hpp"
#include "sigmaforge/n3lab.hpp"
#include "sigmaforge/rewrite.hpp"
#include "sigmaforge/sigma.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <thread>

using namespace sigmaforge;
using namespace testsupport;

namespace {

// Records the first failed condition of a criterion.
class Verdict {
public:
  void expect(bool ok, const std::string& what)
  {
    if (!ok && failure_.empty())
      failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

private:
  std::string failure_;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Verdict&)> body;
};

int worker_count()
{
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

bool in_ideal(const Polynomial& p)
{
  const bool result = standard_oracle(GeneratorKind::Comm, p.arity()).member(p);
  // Any member of the ideal has zero image in the commutative ring.
  if (result && !abelianize(p).is_zero())
    throw std::logic_error("member with nonzero abelianization: " + render_poly(p));
  return result;
}

long binomial(int n, int k)
{
  long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// Random element of the degree-2 slice of the ideal.
Polynomial random_ideal_element(std::mt19937_64& rng, int n)
{
  std::vector<Polynomial> quadratic;
  for (const auto& g : GeneratorSet::comm(n).generators)
    if (g.degree() == 2)
      quadratic.push_back(g);
  Polynomial p(n);
  for (int t = 0; t < 2; ++t)
    p += random_coefficient(rng) * quadratic[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(quadratic.size()) - 1))];
  return p;
}

void sigma_construction(Verdict& v)
{
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const Polynomial s = build_sigma(n, k);
      v.expect(static_cast<long>(s.size()) == binomial(n, k), "monomial count n=" + std::to_string(n));
      if (k >= 1) {
        v.expect(sigma_via_recursion_I(n, k) == s, "recursion I");
        v.expect(sigma_via_recursion_II(n, k) == s, "recursion II");
      }
    }
}

void comm_and_diff_agree(Verdict& v)
{
  const int jobs = worker_count();
  for (int d = 2; d <= 6; ++d)
    v.expect(spans_equal(GeneratorSet::comm(3), GeneratorSet::diff(3), d, jobs), "n=3 d=" + std::to_string(d));
  for (int d = 2; d <= 5; ++d)
    v.expect(spans_equal(GeneratorSet::comm(4), GeneratorSet::diff(4), d, jobs), "n=4 d=" + std::to_string(d));
}

void independence_and_diagonal_expansions(Verdict& v)
{
  for (int n = 3; n <= 6; ++n) {
    v.expect(run_check("thm_1_3_independence", n).passed(), "independence n=" + std::to_string(n));
    v.expect(run_check("eq_4", n).passed(), "eq_4 n=" + std::to_string(n));
    for (int k = 2; k <= n; ++k) {
      const DiagonalExpansion e = expand_diagonal_commutator(n, k);
      v.expect(in_ideal(index_commutator(n, k, k - 1) - e.expression), "diagonal expansion");
      v.expect(e.plus_form_holds, "derived sign of the trailing sum");
      v.expect(in_ideal(index_commutator(n, k, k - 1) - diagonal_closed_form(n, k, 1)), "closed form");
    }
  }
  const Polynomial c12 = index_commutator(3, 1, 2), c23 = index_commutator(3, 2, 3), c31 = index_commutator(3, 3, 1);
  v.expect(in_ideal(c12 - c23) && in_ideal(c23 - c31) && in_ideal(c12 - c31), "[1,2] = [2,3] = [3,1]");
}

void distinct_variables_do_not_commute(Verdict& v)
{
  for (int n = 3; n <= 5; ++n) {
    const auto& oracle = standard_oracle(GeneratorKind::Comm, n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const MembershipResult r = oracle.check(index_commutator(n, i, j));
        v.expect(!r.member && r.residuals.count(2) == 1 && !r.residuals.at(2).is_zero(),
                 "[" + std::to_string(i) + "," + std::to_string(j) + "] n=" + std::to_string(n));
      }
  }
}

void diagonal_commutator_sum(Verdict& v)
{
  for (int n = 3; n <= 5; ++n)
    v.expect(in_ideal(diagonal_sum_identity(n)), "identity n=" + std::to_string(n));
  const Polynomial three = index_commutator(3, 2, 1) + index_commutator(3, 3, 2) - Rational(2) * index_commutator(3, 1, 3);
  v.expect(diagonal_sum_identity(3) == three, "n=3 form");
}

void quadratic_quotient(Verdict& v)
{
  const long expected[] = {7, 13, 21, 31};
  for (int n = 3; n <= 6; ++n)
    v.expect(quotient_dim(n, 2) == expected[n - 3], "quotient dimension n=" + std::to_string(n));
  std::mt19937_64 rng(1006);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform(rng, 3, 6);
    const Polynomial p = random_homogeneous(rng, n, 2, uniform(rng, 1, 6));
    const CanonicalQuadratic q = canonical_quadratic(p);
    v.expect(in_ideal(q.reconstruct() - p), "reconstruction");
    const CanonicalQuadratic shifted = canonical_quadratic(p + random_ideal_element(rng, n));
    v.expect(shifted.a == q.a && shifted.b == q.b && shifted.c == q.c, "uniqueness");
  }
}

void root_identities(Verdict& v)
{
  for (int n = 3; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      v.expect(in_ideal(char_poly_image(n, i)), "root identity");
      v.expect(in_ideal(inverse_identity_poly(n, i)), "inverse identity");
    }
    for (int s = 0; s < n; ++s)
      for (const auto& diff : factored_char_coefficients(n, s))
        v.expect(in_ideal(diff), "factored coefficient");
  }
}

void combinatorics(Verdict& v)
{
  for (int n = 3; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d) {
      long expect = 1;
      for (int i = 1; i < d; ++i)
        expect *= n - 1;
      v.expect(static_cast<long>(enumerate_atoms(n, d).size()) == expect, "atom count");
    }
  std::mt19937_64 rng(1008);
  for (int t = 0; t < 500; ++t) {
    const int n = uniform(rng, 2, 5);
    const Monomial u = random_q0(rng, n, uniform(rng, 1, 8));
    v.expect(fold_atoms(factor_atoms(u, n), n) == u, "factor round trip");
  }
  for (int t = 0; t < 10000; ++t) {
    const int n = uniform(rng, 1, 4);
    const Monomial a = random_monomial(rng, n, uniform(rng, 0, 5));
    const Monomial b = random_monomial(rng, n, uniform(rng, 0, 5));
    const Monomial c = random_monomial(rng, n, uniform(rng, 0, 5));
    const auto ab = wolf_compare(a, b);
    v.expect((ab > 0) + (ab < 0) + (a == b) == 1 && ((ab == 0) == (a == b)), "trichotomy");
    if (ab > 0 && wolf_compare(b, c) > 0)
      v.expect(wolf_compare(a, c) > 0, "transitivity");
  }
}

void rewriter(Verdict& v)
{
  const Polynomial sq = orbit_polynomial(Monomial::variable(1, 2), 3);
  v.expect(render(rewrite_invariant(sq)) == "bar(x1)^2 - bar(x1*x2) - bar(x1*x3)", "square example");
  AtomExpression cube(3);
  auto word = [](std::initializer_list<std::vector<int>> factors) {
    AtomExpression::Word w;
    for (const auto& f : factors)
      w.push_back(Monomial::from_letters(f));
    return w;
  };
  cube.add_term(word({{1}, {1}, {1}}), 1);
  for (auto w : {word({{1, 2, 1}}), word({{1, 2, 3}}), word({{1, 3, 1}}), word({{1, 3, 2}})})
    cube.add_term(w, 1);
  for (auto w : {word({{1}, {1, 2}}), word({{1, 2}, {1}}), word({{1}, {1, 3}}), word({{1, 3}, {1}})})
    cube.add_term(w, -1);
  v.expect(rewrite_invariant(orbit_polynomial(Monomial::variable(1, 3), 3)) == cube, "cube example");

  std::mt19937_64 rng(1009);
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(rng, 2, 4);
    const Polynomial p = random_invariant(rng, n, 5, 4);
    v.expect(eval_atom_expr(rewrite_invariant(p)) == p, "round trip");
  }
  using Alpha = std::vector<std::pair<int, Monomial>>;
  auto m = [](std::vector<int> l) { return Monomial::from_letters(l); };
  v.expect(sigma_alpha_decomposition(4, 2) == Alpha{{3, m({1, 2})}, {2, m({1, 3})}, {1, m({1, 4})}}, "alpha k=2");
  v.expect(sigma_alpha_decomposition(4, 3) == Alpha{{2, m({1, 2, 3})}, {1, m({1, 2, 4})}, {1, m({1, 3, 4})}},
           "alpha k=3");
  v.expect(sigma_alpha_decomposition(4, 4) == Alpha{{1, m({1, 2, 3, 4})}}, "alpha k=4");
}

void three_variable_suite(Verdict& v)
{
  const CheckReport report = verify_n3_suite();
  for (const auto& line : report.lines)
    v.expect(line.status == "pass", line.to_text());
  v.expect(!report.lines.empty(), "empty report");
}

void matrix_invariance(Verdict& v)
{
  std::mt19937_64 rng(1011);
  const auto& families = all_families();
  for (int t = 0; t < 10000; ++t) {
    const Family f = families[static_cast<std::size_t>(t) % families.size()];
    const MatrixTuple tuple = generate_tuple(f, uniform(rng, 3, 4), uniform(rng, 2, 3), rng);
    const C12Result r = check_c12(tuple);
    v.expect(r.invariant == r.commuting, "disagreement in family " + family_name(f));
  }
}

} // namespace

int main()
{
  set_default_jobs(worker_count());
  const std::vector<Criterion> criteria = {
      {1, "sigma construction and both recursions", 1, sigma_construction},
      {2, "comm and diff generate the same slices", 60, comm_and_diff_agree},
      {3, "off-diagonal independence and diagonal expansions", 5, independence_and_diagonal_expansions},
      {4, "distinct variables do not commute", 5, distinct_variables_do_not_commute},
      {5, "sum of diagonal commutators", 5, diagonal_commutator_sum},
      {6, "quadratic quotient and canonical form", 10, quadratic_quotient},
      {7, "root, factored and inverse identities", 60, root_identities},
      {8, "atoms, factorization and the Wolf order", 10, combinatorics},
      {9, "invariant rewriting", 10, rewriter},
      {10, "three-variable suite", 120, three_variable_suite},
      {11, "matrix invariance matches commuting", 30, matrix_invariance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = v.ok() && in_time;
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  (" << timing << ")";
    if (!v.ok())
      std::cout << "  first failure: " << v.failure();
    else if (!in_time)
      std::cout << "  over the time limit";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
