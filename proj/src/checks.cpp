#include "sigmaforge/checks.hpp"

#include "parallel.hpp"
#include "sigmaforge/ideal.hpp"
#include "sigmaforge/n3lab.hpp"
#include "sigmaforge/sigma.hpp"

#include <algorithm>
#include <sstream>

namespace sigmaforge {

using nlohmann::ordered_json;

ordered_json ReportLine::to_json() const
{
  ordered_json j;
  j["check"] = check;
  j["n"] = n;
  j["degree"] = degree ? ordered_json(*degree) : ordered_json(nullptr);
  j["status"] = status;
  j["witness"] = witness;
  return j;
}

std::string ReportLine::to_text() const
{
  std::ostringstream out;
  out << status << "  " << check << "  n=" << n;
  if (degree)
    out << "  degree=" << *degree;
  if (!witness.empty())
    out << "  " << witness.dump();
  return out.str();
}

bool CheckReport::passed() const
{
  return std::none_of(lines.begin(), lines.end(),
                      [](const ReportLine& l) { return l.status == "fail"; });
}

void CheckReport::append(const CheckReport& other)
{
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

const std::vector<std::string>& check_names()
{
  static const std::vector<std::string> names = {
      "thm_1_1",      "thm_1_3_independence", "eq_4",
      "cor_1_4",      "cor_1_5",              "cor_1_6_dim",
      "root_identity", "factored_coeffs",     "inverse_identity",
      "sigma_independence", "n3"};
  return names;
}

namespace {

const char* status_of(bool ok) { return ok ? "pass" : "fail"; }

ReportLine line(const std::string& check, int n, std::optional<int> degree, bool ok,
                ordered_json witness = ordered_json::object())
{
  return {check, n, degree, status_of(ok), std::move(witness)};
}

ReportLine skipped(const std::string& check, int n, int degree, int bound)
{
  ordered_json w;
  w["reason"] = "degree " + std::to_string(degree) + " exceeds the bound " + std::to_string(bound);
  return {check, n, degree, "skipped", std::move(w)};
}

const IdealOracle& comm(int n) { return standard_oracle(GeneratorKind::Comm, n); }

// Membership line; a failure carries the residual as witness.
ReportLine membership_line(const std::string& check, int n, int degree, const Polynomial& p,
                           ordered_json witness)
{
  MembershipResult r = comm(n).check(p);
  if (!r.member) {
    Polynomial residual(n);
    for (const auto& [d, q] : r.residuals)
      residual += q;
    witness["residual"] = render_poly(residual);
  }
  return line(check, n, degree, r.member, std::move(witness));
}

CheckReport comm_diff_slices(int n, int bound, int jobs)
{
  const GeneratorSet a = GeneratorSet::comm(n);
  const GeneratorSet b = GeneratorSet::diff(n);
  const int count = std::max(0, bound - 1);
  std::vector<ReportLine> lines(static_cast<std::size_t>(count));
  detail::parallel_for(static_cast<std::size_t>(count), jobs, [&](std::size_t i) {
    const int d = static_cast<int>(i) + 2;
    DegreeSlice sa = degree_slice(a, d);
    DegreeSlice sb = degree_slice(b, d);
    ordered_json w;
    w["rank_comm"] = sa.rank();
    w["rank_diff"] = sb.rank();
    w["scope"] = "evidence up to degree " + std::to_string(bound);
    lines[i] = line("thm_1_1", n, d, sa.rowspace == sb.rowspace, std::move(w));
  });
  return {std::move(lines)};
}

CheckReport off_diagonal_independence(int n)
{
  CheckReport out;
  const DegreeSlice& s = comm(n).slice(2);
  linalg::Echelon ech(static_cast<int>(s.basis->size()));
  int count = 0;
  ordered_json names = ordered_json::array();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      ech.insert(s.rowspace.reduce(s.basis->to_vector(index_commutator(n, i, j))));
      ++count;
      names.push_back("[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  ordered_json w;
  w["off_diagonal"] = names;
  w["count"] = count;
  w["rank_mod_ideal"] = ech.rank();
  w["slice_rank"] = s.rank();
  out.add(line("thm_1_3_independence", n, 2, ech.rank() == count, std::move(w)));
  // The quotient has dimension n^2 - (n-1), so the n diagonal commutators
  // satisfy exactly n-1 independent relations.
  ordered_json r;
  r["slice_rank"] = s.rank();
  r["expected"] = n - 1;
  out.add(line("thm_1_3_independence", n, 2, s.rank() == n - 1, std::move(r)));
  if (n == 3) {
    const Polynomial c12 = index_commutator(3, 1, 2);
    const Polynomial c23 = index_commutator(3, 2, 3);
    const Polynomial c31 = index_commutator(3, 3, 1);
    const std::pair<const char*, Polynomial> diffs[] = {
        {"[1,2]-[2,3]", c12 - c23}, {"[2,3]-[3,1]", c23 - c31}, {"[1,2]-[3,1]", c12 - c31}};
    for (const auto& [label, p] : diffs) {
      ordered_json w3;
      w3["relation"] = label;
      out.add(membership_line("thm_1_3_independence", 3, 2, p, std::move(w3)));
    }
  }
  return out;
}

CheckReport diagonal_expansions(int n)
{
  CheckReport out;
  for (int k = 2; k <= n; ++k) {
    DiagonalExpansion e = expand_diagonal_commutator(n, k);
    ordered_json w;
    w["k"] = k;
    w["expression"] = render_poly(e.expression);
    const char* reading = e.plus_form_holds ? (e.minus_form_holds ? "either sign" : "plus")
                                            : (e.minus_form_holds ? "minus" : "neither");
    w["trailing_sum_sign"] = reading;
    const bool ok = comm(n).congruent(index_commutator(n, k, k - 1), e.expression) &&
                    (e.plus_form_holds || e.minus_form_holds);
    out.add(line("eq_4", n, 2, ok, std::move(w)));
  }
  return out;
}

CheckReport distinct_commutators(int n)
{
  CheckReport out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      MembershipResult r = comm(n).check(index_commutator(n, i, j));
      ordered_json w;
      w["commutator"] = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      if (!r.member)
        w["residual"] = render_poly(r.residuals.begin()->second);
      out.add(line("cor_1_4", n, 2, !r.member, std::move(w)));
    }
  }
  return out;
}

CheckReport diagonal_sum(int n)
{
  CheckReport out;
  const Polynomial p = diagonal_sum_identity(n);
  ordered_json w;
  w["difference"] = render_poly(p);
  out.add(membership_line("cor_1_5", n, 2, p, std::move(w)));
  return out;
}

CheckReport quadratic_quotient(int n)
{
  CheckReport out;
  const long dim = quotient_dim(n, 2);
  ordered_json w;
  w["quotient_dim"] = dim;
  w["expected"] = n * n - n + 1;
  w["spanning_set"] = canonical_quadratic_basis(n).size();
  out.add(line("cor_1_6_dim", n, 2, dim == n * n - n + 1, std::move(w)));
  return out;
}

CheckReport root_identity(int n, int bound)
{
  CheckReport out;
  for (int i = 1; i <= n; ++i) {
    if (n > bound) {
      out.add(skipped("root_identity", n, n, bound));
      continue;
    }
    ordered_json w;
    w["i"] = i;
    out.add(membership_line("root_identity", n, n, char_poly_image(n, i), std::move(w)));
  }
  return out;
}

CheckReport factored_coeffs(int n, int bound)
{
  CheckReport out;
  for (int s = 0; s < n; ++s) {
    std::vector<Polynomial> diffs = factored_char_coefficients(n, s);
    for (int k = 0; k <= n; ++k) {
      if (k > bound) {
        out.add(skipped("factored_coeffs", n, k, bound));
        continue;
      }
      ordered_json w;
      w["rotation"] = s;
      w["k"] = k;
      out.add(membership_line("factored_coeffs", n, k, diffs[static_cast<std::size_t>(k)],
                              std::move(w)));
    }
  }
  return out;
}

CheckReport inverse_identity(int n, int bound)
{
  CheckReport out;
  for (int i = 1; i <= n; ++i) {
    if (n > bound) {
      out.add(skipped("inverse_identity", n, n, bound));
      continue;
    }
    ordered_json w;
    w["i"] = i;
    out.add(membership_line("inverse_identity", n, n, inverse_identity_poly(n, i), std::move(w)));
  }
  return out;
}

CheckReport sigma_independence(int n, int bound)
{
  CheckReport out;
  ordered_json w;
  w["products"] = sigma_exponent_vectors(n, bound).size();
  w["scope"] = "weighted degree up to " + std::to_string(bound);
  out.add(line("sigma_independence", n, bound, verify_sigma_independence(n, bound), std::move(w)));
  return out;
}

} // namespace

CheckReport run_check(const std::string& name, int n, const CheckParams& params)
{
  if (n < 3)
    throw DomainError("n must be at least 3");
  const int bound = params.max_degree > 0 ? params.max_degree : default_max_degree(n);
  if (name == "thm_1_1")
    return comm_diff_slices(n, bound, params.jobs);
  if (name == "thm_1_3_independence")
    return off_diagonal_independence(n);
  if (name == "eq_4")
    return diagonal_expansions(n);
  if (name == "cor_1_4")
    return distinct_commutators(n);
  if (name == "cor_1_5")
    return diagonal_sum(n);
  if (name == "cor_1_6_dim")
    return quadratic_quotient(n);
  if (name == "root_identity")
    return root_identity(n, bound);
  if (name == "factored_coeffs")
    return factored_coeffs(n, bound);
  if (name == "inverse_identity")
    return inverse_identity(n, bound);
  if (name == "sigma_independence")
    return sigma_independence(n, bound);
  if (name == "n3") {
    if (n != 3)
      throw DomainError("the n3 suite is defined for n = 3 only");
    return verify_n3_suite();
  }
  throw DomainError("unknown check '" + name + "'");
}

} // namespace sigmaforge
