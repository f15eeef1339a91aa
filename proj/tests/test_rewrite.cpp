#include "sigmaforge/cyclic.hpp"
#include "sigmaforge/rewrite.hpp"
#include "sigmaforge/sigma.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sigmaforge;
using namespace testsupport;

namespace {

Polynomial bar(int n, std::initializer_list<int> letters) { return orbit_polynomial(mono(letters), n); }

AtomExpression::Word atoms(std::initializer_list<std::initializer_list<int>> factors)
{
  AtomExpression::Word w;
  for (const auto& f : factors)
    w.push_back(mono(f));
  return w;
}

// Orbit sum of sigma_k computed letter by letter, independent of averaging.
Polynomial orbit_sum_of_sigma(int n, int k)
{
  Polynomial out(n);
  const Polynomial sigma = build_sigma(n, k);
  for (int power = 0; power < n; ++power)
    for (const auto& [u, c] : sigma.terms()) {
      std::vector<int> letters = u.letters();
      for (auto& l : letters)
        l = (l - 1 + power) % n + 1;
      out.add_term(Monomial::from_letters(letters), c);
    }
  return out;
}

} // namespace

TEST_CASE("orbit decomposition")
{
  const auto d = orbit_decompose(bar(3, {1, 2}));
  REQUIRE(d.orbits.size() == 1);
  CHECK(d.orbits[0].first == 1);
  CHECK(d.orbits[0].second == mono({1, 2}));
  CHECK(orbit_decompose(Polynomial(3)).orbits.empty());

  const auto four = orbit_decompose(orbit_sum_of_sigma(4, 2));
  REQUIRE(four.orbits.size() == 3);
  CHECK(four.orbits[0] == std::pair<Rational, Monomial>{3, mono({1, 2})});
  CHECK(four.orbits[1] == std::pair<Rational, Monomial>{2, mono({1, 3})});
  CHECK(four.orbits[2] == std::pair<Rational, Monomial>{1, mono({1, 4})});

  const auto with_constant = orbit_decompose(Polynomial::constant(3, 5) + bar(3, {1}));
  CHECK(with_constant.constant == 5);
  CHECK_THROWS_AS(orbit_decompose(build_sigma(4, 2)), DomainError);
  CHECK_THROWS_AS(orbit_decompose(Polynomial::variable(3, 2)), DomainError);
}

TEST_CASE("orbit decomposition reconstructs random invariants")
{
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform(rng, 2, 4);
    const Polynomial p = random_invariant(rng, n, 5, 4);
    const auto d = orbit_decompose(p);
    Polynomial sum = Polynomial::constant(n, d.constant);
    for (std::size_t i = 0; i < d.orbits.size(); ++i) {
      CHECK(is_in_Q0(d.orbits[i].second));
      if (i > 0)
        CHECK(wolf_compare(d.orbits[i - 1].second, d.orbits[i].second) > 0);
      sum += d.orbits[i].first * orbit_polynomial(d.orbits[i].second, n);
    }
    CHECK(sum == p);
  }
}

TEST_CASE("worked rewrite examples for three variables")
{
  const int n = 3;
  const AtomExpression sq = rewrite_invariant(bar(n, {1, 1}));
  AtomExpression sq_expect(n);
  sq_expect.add_term(atoms({{1}, {1}}), 1);
  sq_expect.add_term(atoms({{1, 2}}), -1);
  sq_expect.add_term(atoms({{1, 3}}), -1);
  CHECK(sq == sq_expect);
  CHECK(render(sq) == "bar(x1)^2 - bar(x1*x2) - bar(x1*x3)");

  const AtomExpression cube = rewrite_invariant(bar(n, {1, 1, 1}));
  AtomExpression cube_expect(n);
  cube_expect.add_term(atoms({{1}, {1}, {1}}), 1);
  for (auto a : {atoms({{1, 2, 1}}), atoms({{1, 2, 3}}), atoms({{1, 3, 1}}), atoms({{1, 3, 2}})})
    cube_expect.add_term(a, 1);
  for (auto a : {atoms({{1}, {1, 2}}), atoms({{1, 2}, {1}}), atoms({{1}, {1, 3}}), atoms({{1, 3}, {1}})})
    cube_expect.add_term(a, -1);
  CHECK(cube == cube_expect);
  CHECK(cube.coefficient(atoms({{1}, {1, 2}})) == -1);
  CHECK(cube.coefficient(atoms({{1, 2}, {1}})) == -1);

  AtomExpression single(n);
  single.add_term(atoms({{1, 2}}), 1);
  CHECK(rewrite_invariant(bar(n, {1, 2})) == single);
  CHECK(rewrite_invariant(Polynomial(n)).is_zero());
  CHECK_THROWS_AS(rewrite_invariant(build_sigma(3, 2)), DomainError);
}

TEST_CASE("evaluating atom expressions")
{
  AtomExpression e(3);
  e.add_term(atoms({{1}}), 1);
  CHECK(eval_atom_expr(e) == build_sigma(3, 1));
  AtomExpression sq(3);
  sq.add_term(atoms({{1}, {1}}), 1);
  CHECK(eval_atom_expr(sq) == build_sigma(3, 1) * build_sigma(3, 1));
  AtomExpression constant(3);
  constant.add_term({}, Rational(7, 2));
  CHECK(eval_atom_expr(constant) == Polynomial::constant(3, Rational(7, 2)));
}

TEST_CASE("rewrite round trip with strictly descending leading monomials")
{
  std::mt19937_64 rng(52);
  for (int t = 0; t < 120; ++t) {
    const int n = uniform(rng, 2, 4);
    const Polynomial p = random_invariant(rng, n, 5, 4);
    std::vector<Monomial> leading;
    const AtomExpression e = rewrite_invariant(p, &leading);
    CHECK(eval_atom_expr(e) == p);
    for (std::size_t i = 1; i < leading.size(); ++i)
      CHECK(wolf_compare(leading[i - 1], leading[i]) > 0);
    for (const auto& [w, c] : e.terms())
      for (const auto& a : w)
        CHECK(is_atom(a));
  }
}

TEST_CASE("atom expression terms are independent in each degree")
{
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform(rng, 2, 4);
    CHECK(atom_terms_independent(rewrite_invariant(random_invariant(rng, n, 4, 5))));
  }
  AtomExpression square(3);
  for (auto w : {atoms({{1}, {1}}), atoms({{1, 2}}), atoms({{1, 3}}), atoms({{1, 2, 1}})})
    square.add_term(w, 1);
  CHECK(atom_terms_independent(square));
}

TEST_CASE("alpha decomposition of sigma orbit sums")
{
  using Alpha = std::vector<std::pair<int, Monomial>>;
  CHECK(sigma_alpha_decomposition(4, 2) == Alpha{{3, mono({1, 2})}, {2, mono({1, 3})}, {1, mono({1, 4})}});
  CHECK(sigma_alpha_decomposition(4, 3) ==
        Alpha{{2, mono({1, 2, 3})}, {1, mono({1, 2, 4})}, {1, mono({1, 3, 4})}});
  CHECK(sigma_alpha_decomposition(4, 4) == Alpha{{1, mono({1, 2, 3, 4})}});
  CHECK_THROWS_AS(sigma_alpha_decomposition(4, 0), DomainError);
  CHECK_THROWS_AS(sigma_alpha_decomposition(4, 5), DomainError);

  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Polynomial sum = orbit_sum_of_sigma(n, k);
      const auto alpha = sigma_alpha_decomposition(n, k);
      Polynomial rebuilt(n);
      int total = 0;
      for (const auto& [a, u] : alpha) {
        CHECK(a > 0);
        CHECK(sum.coefficient(u) == a);
        const auto l = u.letters();
        CHECK(l[0] == 1);
        CHECK(std::adjacent_find(l.begin(), l.end(), std::greater_equal<>()) == l.end());
        rebuilt += Rational(a) * orbit_polynomial(u, n);
        total += a;
      }
      CHECK(rebuilt == sum);
      // Each of the C(n,k) monomials of sigma_k contributes n images.
      long subsets = 1;
      for (int i = 1; i <= k; ++i)
        subsets = subsets * (n - k + i) / i;
      CHECK(static_cast<long>(total) == subsets);
    }
  }
}
