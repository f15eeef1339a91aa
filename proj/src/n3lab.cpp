#include "sigmaforge/n3lab.hpp"

#include "sigmaforge/atoms.hpp"
#include "sigmaforge/cyclic.hpp"
#include "sigmaforge/ideal.hpp"
#include "sigmaforge/rewrite.hpp"

#include <stdexcept>

namespace sigmaforge {

using nlohmann::ordered_json;

const std::vector<std::string>& central_symbol_names()
{
  static const std::vector<std::string> names = {"s1", "s2", "s3", "C3", "D"};
  return names;
}

const std::vector<int>& central_symbol_weights()
{
  static const std::vector<int> weights = {1, 2, 3, 6, 3};
  return weights;
}

// ------------------------------------------------------------ SReduced

SReduced SReduced::constant(const Rational& v)
{
  SReduced s;
  s.z0 = CommutativePoly::constant(kCentralSymbols, v);
  return s;
}

SReduced SReduced::symbol(CentralSymbol sym)
{
  SReduced s;
  s.z0 = CommutativePoly::variable(kCentralSymbols, sym);
  return s;
}

SReduced SReduced::c()
{
  SReduced s;
  s.z1 = CommutativePoly::constant(kCentralSymbols, 1);
  return s;
}

SReduced& SReduced::operator+=(const SReduced& o)
{
  z0 += o.z0;
  z1 += o.z1;
  z2 += o.z2;
  return *this;
}

SReduced& SReduced::operator-=(const SReduced& o)
{
  z0 -= o.z0;
  z1 -= o.z1;
  z2 -= o.z2;
  return *this;
}

SReduced operator*(const Rational& k, const SReduced& a)
{
  SReduced out;
  out.z0 = k * a.z0;
  out.z1 = k * a.z1;
  out.z2 = k * a.z2;
  return out;
}

SReduced sreduced_mul(const SReduced& a, const SReduced& b)
{
  const CommutativePoly cube = CommutativePoly::variable(kCentralSymbols, kCubeC);
  SReduced out;
  out.z0 = a.z0 * b.z0 + cube * (a.z1 * b.z2 + a.z2 * b.z1);
  out.z1 = a.z0 * b.z1 + a.z1 * b.z0 + cube * (a.z2 * b.z2);
  out.z2 = a.z0 * b.z2 + a.z1 * b.z1 + a.z2 * b.z0;
  return out;
}

std::string render(const SReduced& s)
{
  const auto& names = central_symbol_names();
  std::string out;
  auto part = [&](const CommutativePoly& z, const std::string& power) {
    if (z.is_zero())
      return;
    std::string body = render(z, names);
    const bool unit = z == CommutativePoly::constant(kCentralSymbols, 1);
    if (!power.empty()) {
      if (unit)
        body = power;
      else if (z.terms().size() > 1)
        body = "(" + body + ")*" + power;
      else
        body += "*" + power;
    }
    if (out.empty()) {
      out = body;
    } else if (body.front() == '-') {
      out += " - " + body.substr(1);
    } else {
      out += " + " + body;
    }
  };
  part(s.z0, "");
  part(s.z1, "c");
  part(s.z2, "c^2");
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------ P side

Polynomial n3_c() { return index_commutator(3, 1, 2); }

Polynomial n3_d() { return orbit_polynomial(Monomial::from_letters(std::vector<int>{1, 2, 1}), 3); }

N3Generators n3_generators()
{
  auto x = [](int i) { return Polynomial::variable(3, i); };
  auto br = [](int i, int j) { return index_commutator(3, i, j); };
  return {br(1, 2) + br(1, 3), br(2, 3) + br(2, 1), x(2) * br(1, 3) + br(1, 2) * x(3),
          x(3) * br(2, 1) + br(2, 3) * x(1)};
}

Polynomial expand_sreduced(const SReduced& s)
{
  const Polynomial c = n3_c();
  const std::vector<Polynomial> values = {build_sigma(3, 1), build_sigma(3, 2), build_sigma(3, 3),
                                          pow(c, 3), n3_d()};
  Polynomial out = evaluate(s.z0, values);
  if (!s.z1.is_zero())
    out += evaluate(s.z1, values) * c;
  if (!s.z2.is_zero())
    out += evaluate(s.z2, values) * (c * c);
  return out;
}

std::vector<std::pair<Monomial, SReduced>> base_table()
{
  auto word = [](std::initializer_list<int> l) { return Monomial::from_letters(std::vector<int>(l)); };
  const SReduced s1 = SReduced::symbol(kSigma1);
  const SReduced s2 = SReduced::symbol(kSigma2);
  const SReduced s3 = SReduced::symbol(kSigma3);
  const SReduced d = SReduced::symbol(kOrbitD);
  const SReduced c = SReduced::c();
  return {
      {word({1}), s1},
      {word({1, 2}), s2 + c},
      {word({1, 3}), s2 - Rational(2) * c},
      {word({1, 2, 1}), d},
      {word({1, 2, 3}), Rational(3) * s3},
      {word({1, 3, 1}), sreduced_mul(s1, s2) - Rational(3) * s3 - d},
      {word({1, 3, 2}), Rational(3) * s3 - sreduced_mul(s1, c)},
  };
}

// ------------------------------------------------------------ reduction

N3Reducer::N3Reducer(ReductionOptions options) : options_(options)
{
  for (auto& [u, value] : base_table())
    memo_.emplace(u.letters(), std::move(value));
}

void N3Reducer::certify(const Polynomial& lhs, const SReduced& value, const std::string& what)
{
  ++certifications_;
  const Polynomial diff = lhs - expand_sreduced(value);
  MembershipResult r = standard_oracle(GeneratorKind::Comm, 3).check(diff);
  if (!r.member) {
    Polynomial residual(3);
    for (const auto& [d, q] : r.residuals)
      residual += q;
    throw std::logic_error("certification failed for " + what + " -> " + render(value) +
                           "; residual " + render_poly(residual));
  }
}

SReduced N3Reducer::reduce_word(std::vector<int> letters)
{
  if (letters.empty())
    return SReduced::constant(1);
  return reduce_orbit(Monomial::from_letters(letters));
}

SReduced N3Reducer::reduce_orbit(const Monomial& u_in)
{
  if (u_in.is_one())
    return SReduced::constant(1);
  if (u_in.max_index() > 3)
    throw DomainError("monomial uses a variable beyond x3");
  const Monomial u = orbit_max(u_in, 3);
  if (u.degree() > options_.max_degree)
    throw DomainError("degree " + std::to_string(u.degree()) + " exceeds the reduction bound " +
                      std::to_string(options_.max_degree));
  const std::vector<int> key = u.letters();
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;

  SReduced value;
  if (is_atom(u)) {
    value = reduce_atom(u);
  } else {
    AtomExpression e = rewrite_invariant(orbit_polynomial(u, 3));
    for (const auto& [atoms, coef] : e.terms()) {
      SReduced prod = SReduced::constant(1);
      for (const auto& a : atoms)
        prod = sreduced_mul(prod, reduce_orbit(a));
      value += coef * prod;
    }
  }
  certify(orbit_polynomial(u, 3), value, "bar(" + render_monomial(u) + ")");
  memo_.emplace(key, value);
  return value;
}

SReduced N3Reducer::reduce_atom(const Monomial& a)
{
  const std::vector<int> l = a.letters();
  const int deg = static_cast<int>(l.size());
  auto with = [&](std::vector<int> prefix, std::size_t from) {
    prefix.insert(prefix.end(), l.begin() + static_cast<std::ptrdiff_t>(from), l.end());
    edges_.emplace_back(deg, static_cast<int>(prefix.size()));
    return reduce_word(std::move(prefix));
  };
  const SReduced s2 = SReduced::symbol(kSigma2);
  const SReduced s3 = SReduced::symbol(kSigma3);
  const SReduced c = SReduced::c();
  auto mul = sreduced_mul;

  if (deg < 4)
    throw std::logic_error("atom " + render_monomial(a) + " missing from the base table");
  if (l[1] == 2 && l[2] == 1 && l[3] == 2)
    return mul(s2, with({1, 2}, 4)) - mul(s3, with({1}, 4)) - mul(s3, with({2}, 4));
  if (l[1] == 2 && l[2] == 1 && l[3] == 3)
    return mul(s3, with({1}, 4)) - mul(c, with({2, 3}, 4));
  if (l[1] == 2 && l[2] == 3)
    return mul(s3, with({}, 3));
  if (l[1] == 3 && l[2] == 1 && l[3] == 2)
    return mul(s3, with({1}, 4));
  if (l[1] == 3 && l[2] == 1 && l[3] == 3) {
    // The last term is the 1213w rule applied in place.
    return mul(s2, with({1, 3}, 4)) - mul(s3, with({3}, 4)) - mul(s3, with({1}, 4)) +
           mul(c, with({2, 3}, 4));
  }
  if (l[1] == 3 && l[2] == 2)
    return mul(s3, with({}, 3)) - mul(c, with({2}, 3));
  throw std::logic_error("no reduction rule for atom " + render_monomial(a));
}

SReduced N3Reducer::reduce(const Polynomial& p)
{
  if (p.arity() != 3)
    throw DomainError("S-form reduction is defined for n = 3");
  if (p.degree() > options_.max_degree)
    throw DomainError("degree " + std::to_string(p.degree()) + " exceeds the reduction bound " +
                      std::to_string(options_.max_degree));
  const IdealOracle& oracle = standard_oracle(GeneratorKind::Comm, 3);
  const Polynomial avg = average(p);
  if (!oracle.member(avg - p))
    throw DomainError("polynomial is not invariant modulo the ideal");
  SReduced value;
  const AtomExpression expr = rewrite_invariant(avg);
  for (const auto& [atoms, coef] : expr.terms()) {
    SReduced prod = SReduced::constant(1);
    for (const auto& a : atoms)
      prod = sreduced_mul(prod, reduce_orbit(a));
    value += coef * prod;
  }
  certify(p, value, render_poly(p));
  return value;
}

SReduced reduce_to_S_form(const Polynomial& p, const ReductionOptions& options)
{
  return N3Reducer(options).reduce(p);
}

// ------------------------------------------------------------ suite

namespace {

ReportLine suite_line(const std::string& item, int degree, bool ok, ordered_json witness = ordered_json::object())
{
  ordered_json w;
  w["item"] = item;
  for (auto& [k, v] : witness.items())
    w[k] = v;
  return {"n3", 3, degree, ok ? "pass" : "fail", std::move(w)};
}

ReportLine membership(const std::string& item, const Polynomial& p, bool expect_member = true)
{
  MembershipResult r = standard_oracle(GeneratorKind::Comm, 3).check(p);
  ordered_json w;
  w["member"] = r.member;
  if (!r.member) {
    Polynomial residual(3);
    for (const auto& [d, q] : r.residuals)
      residual += q;
    w["residual"] = render_poly(residual);
  }
  return suite_line(item, p.degree(), r.member == expect_member, std::move(w));
}

// Dimension of the space of degree-2 classes commuting with every x_i, and
// whether that space is spanned by sigma_1^2 and sigma_2.
ReportLine central_quadratics()
{
  const IdealOracle& oracle = standard_oracle(GeneratorKind::Comm, 3);
  const std::vector<Polynomial> basis = canonical_quadratic_basis(3);
  const DegreeSlice& s3 = oracle.slice(3);
  const int cols = static_cast<int>(basis.size());
  linalg::DenseMatrix m;
  for (int i = 1; i <= 3; ++i) {
    std::vector<linalg::SparseVec> images;
    for (const auto& b : basis)
      images.push_back(s3.rowspace.reduce(s3.basis->to_vector(commutator(Polynomial::variable(3, i), b))));
    for (std::size_t row = 0; row < s3.basis->size(); ++row) {
      std::vector<Rational> r(static_cast<std::size_t>(cols));
      bool any = false;
      for (int j = 0; j < cols; ++j) {
        r[static_cast<std::size_t>(j)] = linalg::entry(images[static_cast<std::size_t>(j)], static_cast<int>(row));
        any = any || !is_zero(r[static_cast<std::size_t>(j)]);
      }
      if (any)
        m.push_back(std::move(r));
    }
  }
  const auto kernel = linalg::nullspace(m, cols);
  auto coords = [&](const Polynomial& p) {
    CanonicalQuadratic q = canonical_quadratic(p);
    std::vector<Rational> v;
    for (int i = 1; i <= 3; ++i)
      v.push_back(q.a.count(i) ? q.a.at(i) : Rational(0));
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        v.push_back(q.b.count({i, j}) ? q.b.at({i, j}) : Rational(0));
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        v.push_back(q.c.count({i, j}) ? q.c.at({i, j}) : Rational(0));
    return v;
  };
  const Polynomial s1 = build_sigma(3, 1);
  linalg::DenseMatrix both = kernel;
  const int kernel_rank = linalg::rank(both);
  both.push_back(coords(s1 * s1));
  both.push_back(coords(build_sigma(3, 2)));
  const int joint_rank = linalg::rank(both);
  linalg::DenseMatrix sig = {coords(s1 * s1), coords(build_sigma(3, 2))};
  const int sigma_rank = linalg::rank(sig);
  ordered_json w;
  w["central_dim"] = kernel_rank;
  w["sigma_span_dim"] = sigma_rank;
  return suite_line("f: central quadratics are polynomials in s1, s2", 2,
                    kernel_rank == 2 && sigma_rank == 2 && joint_rank == 2, std::move(w));
}

ReportLine cubic_line()
{
  const IdealOracle& oracle = standard_oracle(GeneratorKind::Comm, 3);
  const Polynomial t = orbit_polynomial(Monomial::from_letters(std::vector<int>{1, 2}), 3);
  const Polynomial s2 = build_sigma(3, 2);
  const Polynomial c3 = pow(n3_c(), 3);
  const Polynomial head = t * t * t - Rational(3) * s2 * t * t;
  const Polynomial tail = pow(s2, 3) + c3;
  const Polynomial binomial = head + Rational(3) * s2 * s2 * t - tail;
  const Polynomial printed = head + Rational(3) * s2 * t - tail;
  const bool binomial_member = oracle.member(binomial);
  const bool printed_member = oracle.member(printed);
  ordered_json w;
  w["verified_cubic"] = binomial_member ? "t^3 - 3*s2*t^2 + 3*s2^2*t - (s2^3 + c^3) = 0" : "none";
  w["square_on_linear_coefficient_member"] = binomial_member;
  w["unsquared_linear_coefficient_member"] = printed_member;
  return suite_line("e: cubic for t = bar(x1*x2)", 6, binomial_member && !printed_member,
                    std::move(w));
}

} // namespace

CheckReport verify_n3_suite()
{
  CheckReport out;
  auto x = [](int i) { return Polynomial::variable(3, i); };
  const Polynomial c = n3_c();
  const Polynomial c2 = c * c;
  const Polynomial c3 = c2 * c;

  out.add(membership("a: x2*c - c*x3", x(2) * c - c * x(3)));
  out.add(membership("a: x3*c - c*x1", x(3) * c - c * x(1)));
  out.add(membership("a: x1*c - c*x2", x(1) * c - c * x(2)));

  out.add(membership("b: x1*c^2 - c^2*x3", x(1) * c2 - c2 * x(3)));
  out.add(membership("b: x2*c^2 - c^2*x1", x(2) * c2 - c2 * x(1)));
  out.add(membership("b: x3*c^2 - c^2*x2", x(3) * c2 - c2 * x(2)));
  for (int i = 1; i <= 3; ++i)
    out.add(membership("b: x" + std::to_string(i) + "*c^3 - c^3*x" + std::to_string(i),
                       x(i) * c3 - c3 * x(i)));

  for (int i = 1; i <= 3; ++i)
    out.add(membership("c: [x" + std::to_string(i) + ", D]", commutator(x(i), n3_d())));

  out.add(membership("d: x1*x3*x2 - x3*x2*x1 (c is not central)",
                     x(1) * x(3) * x(2) - x(3) * x(2) * x(1), false));

  out.add(cubic_line());
  out.add(central_quadratics());

  const N3Generators g = n3_generators();
  out.add(membership("generator A", g.A));
  out.add(membership("generator B", g.B));
  out.add(membership("generator C", g.C));
  out.add(membership("generator D", g.D));

  for (const auto& [u, value] : base_table()) {
    const Polynomial diff = orbit_polynomial(u, 3) - expand_sreduced(value);
    ReportLine l = membership("base table: bar(" + render_monomial(u) + ") = " + render(value), diff);
    l.degree = u.degree();
    out.add(std::move(l));
  }

  N3Reducer reducer;
  for (int d = 1; d <= 4; ++d) {
    int count = 0;
    bool ok = true;
    ordered_json w;
    for (const auto& u : enumerate_basis_words(3, d)) {
      if (u.first_index() != 1)
        continue;
      ++count;
      try {
        reducer.reduce(orbit_polynomial(u, 3));
      } catch (const std::exception& e) {
        ok = false;
        w["failure"] = e.what();
        break;
      }
    }
    w["orbits_reduced"] = count;
    out.add(suite_line("reduction soundness", d, ok, std::move(w)));
  }

  {
    ordered_json w;
    bool ok = true;
    try {
      const SReduced r = reducer.reduce(c3);
      w["result"] = render(r);
      w["syntactic"] = r == SReduced::symbol(kCubeC);
    } catch (const std::exception& e) {
      ok = false;
      w["failure"] = e.what();
    }
    out.add(suite_line("c^3 reduces to C3", 6, ok, std::move(w)));
  }
  return out;
}

} // namespace sigmaforge
