#include "sigmaforge/cli.hpp"

#include "sigmaforge/atoms.hpp"
#include "sigmaforge/checks.hpp"
#include "sigmaforge/cyclic.hpp"
#include "sigmaforge/ideal.hpp"
#include "sigmaforge/matmodel.hpp"
#include "sigmaforge/n3lab.hpp"
#include "sigmaforge/rewrite.hpp"
#include "sigmaforge/sigma.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace sigmaforge {

namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
public:
  using Error::Error;
};

void require_n(int n)
{
  if (n < 3)
    throw UsageError("n = " + std::to_string(n) +
                     ": n must be at least 3; for n = 2 the ideal equals the commutator ideal");
}

int env_jobs()
{
  if (const char* v = std::getenv("SIGMAFORGE_JOBS")) {
    try {
      return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

struct Options {
  bool json = false;
  int jobs = 1;
  int n = 3;
  int max_degree = 0;
  int k = 0;
  int d = 0;
  std::string text;
  std::string check;
  std::string gens = "comm";
  std::string family = "conj-cyclic";
  int dim = 3;
  std::uint64_t seed = 1;
  int budget = 100;
};

int print_report(const CheckReport& report, const Options& o, std::ostream& out)
{
  for (const auto& line : report.lines)
    out << (o.json ? line.to_json().dump() : line.to_text()) << '\n';
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_sigma(const Options& o, std::ostream& out)
{
  require_n(o.n);
  if (o.k < 0 || o.k > o.n)
    throw UsageError("k must lie in 0.." + std::to_string(o.n));
  const Polynomial s = build_sigma(o.n, o.k);
  if (o.json)
    out << ordered_json{{"n", o.n}, {"k", o.k}, {"sigma", render_poly(s)}}.dump() << '\n';
  else
    out << render_poly(s) << '\n';
  return kExitOk;
}

int cmd_orbit(const Options& o, std::ostream& out)
{
  require_n(o.n);
  const Monomial u = parse_monomial(o.text, o.n);
  const auto images = orbit(u, o.n);
  const Monomial top = orbit_max(u, o.n);
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const auto& v : images)
      list.push_back(render_monomial(v));
    out << ordered_json{{"monomial", render_monomial(u)}, {"orbit", list}, {"orbit_max", render_monomial(top)}}.dump()
        << '\n';
  } else {
    for (const auto& v : images)
      out << render_monomial(v) << '\n';
    out << "orbit max: " << render_monomial(top) << '\n';
  }
  return kExitOk;
}

int cmd_factor(const Options& o, std::ostream& out)
{
  require_n(o.n);
  const Monomial u = parse_monomial(o.text, o.n);
  const AtomWord w = factor_atoms(u, o.n);
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const auto& a : w.factors)
      list.push_back(render_monomial(a));
    out << ordered_json{{"monomial", render_monomial(u)}, {"atoms", list}}.dump() << '\n';
  } else {
    out << render_atom_word(w) << '\n';
  }
  return kExitOk;
}

int cmd_atoms(const Options& o, std::ostream& out)
{
  require_n(o.n);
  const auto atoms = enumerate_atoms(o.n, o.d);
  if (o.json) {
    ordered_json list = ordered_json::array();
    for (const auto& a : atoms)
      list.push_back(render_monomial(a));
    out << ordered_json{{"n", o.n}, {"degree", o.d}, {"count", atoms.size()}, {"atoms", list}}.dump() << '\n';
  } else {
    for (const auto& a : atoms)
      out << render_monomial(a) << '\n';
  }
  return kExitOk;
}

int cmd_rewrite(const Options& o, std::ostream& out)
{
  require_n(o.n);
  const Polynomial p = parse_poly(o.text, o.n);
  const AtomExpression e = rewrite_invariant(p);
  if (o.json)
    out << ordered_json{{"input", render_poly(p)}, {"atom_expression", render(e)}}.dump() << '\n';
  else
    out << render(e) << '\n';
  return kExitOk;
}

int cmd_member(const Options& o, std::ostream& out)
{
  require_n(o.n);
  const Polynomial p = parse_poly(o.text, o.n);
  const IdealOracle& oracle = standard_oracle(parse_generator_kind(o.gens), o.n);
  const MembershipResult r = oracle.check(p);
  ReportLine line{"member", o.n, p.is_zero() ? std::optional<int>() : p.degree(), r.member ? "pass" : "fail", {}};
  line.witness["polynomial"] = render_poly(p);
  line.witness["generators"] = o.gens;
  line.witness["member"] = r.member;
  if (!r.member) {
    Polynomial residual(o.n);
    for (const auto& [d, q] : r.residuals)
      residual += q;
    line.witness["residual"] = render_poly(residual);
  }
  out << (o.json ? line.to_json().dump() : line.to_text()) << '\n';
  return r.member ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out)
{
  require_n(o.n);
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), o.check) == names.end())
    throw UsageError("unknown check '" + o.check + "'");
  if (o.check == "n3" && o.n != 3)
    throw UsageError("--n " + std::to_string(o.n) + ": the n3 check needs n = 3");
  return print_report(run_check(o.check, o.n, {o.max_degree, o.jobs}), o, out);
}

int cmd_n3_reduce(const Options& o, std::ostream& out)
{
  const Polynomial p = parse_poly(o.text, 3);
  ReductionOptions ro;
  if (o.max_degree > 0)
    ro.max_degree = o.max_degree;
  N3Reducer reducer(ro);
  const SReduced s = reducer.reduce(p);
  if (o.json) {
    ordered_json j;
    j["input"] = render_poly(p);
    j["s_form"] = render(s);
    j["z0"] = render(s.z0, central_symbol_names());
    j["z1"] = render(s.z1, central_symbol_names());
    j["z2"] = render(s.z2, central_symbol_names());
    j["certifications"] = reducer.certifications();
    out << j.dump() << '\n';
  } else {
    out << render(s) << '\n';
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out)
{
  require_n(o.n);
  SearchParams sp;
  sp.n = o.n;
  sp.dim = o.dim;
  sp.family = parse_family(o.family);
  sp.seed = o.seed;
  sp.budget = o.budget;
  const SearchReport r = zero_divisor_search(sp, o.jobs);
  if (o.json) {
    out << r.to_json().dump() << '\n';
  } else {
    out << "family " << family_name(sp.family) << ", n=" << sp.n << ", dim=" << sp.dim
        << ", seed=" << sp.seed << '\n'
        << "generated " << r.generated << ", relations hold " << r.relations_hold
        << ", non-commuting " << r.non_commuting << (r.budget_exhausted ? " (budget exhausted)" : "")
        << '\n';
    for (const auto& c : r.candidates)
      out << "candidate " << c.index << ": product rank " << c.product_rank
          << (c.vanishes ? ", product vanishes" : "") << (c.singular ? ", singular" : "") << '\n';
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options o;
  o.jobs = env_jobs();
  std::function<int(const Options&, std::ostream&)> action;

  CLI::App app{"Exact computation with noncommutative elementary polynomials", "sigmaforge"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON lines instead of text");
  app.add_option("--jobs", o.jobs, "Worker threads (default: SIGMAFORGE_JOBS or 1)")
      ->check(CLI::PositiveNumber);

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of variables (at least 3)");
  };
  // Output and worker flags are accepted before or after the subcommand.
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* sigma = app.add_subcommand("sigma", "Print sigma_k in n variables");
  sigma->add_option("n", o.n, "Number of variables")->required();
  sigma->add_option("k", o.k, "Degree")->required();
  add_json(sigma);
  sigma->callback([&] { action = cmd_sigma; });

  auto* orb = app.add_subcommand("orbit", "Orbit of a monomial under the cyclic group");
  orb->add_option("monomial", o.text, "Monomial such as x1*x3^2")->required();
  add_n(orb);
  add_json(orb);
  orb->callback([&] { action = cmd_orbit; });

  auto* fac = app.add_subcommand("factor", "Atom factorization of a monomial beginning with x1");
  fac->add_option("monomial", o.text, "Monomial")->required();
  add_n(fac);
  add_json(fac);
  fac->callback([&] { action = cmd_factor; });

  auto* atm = app.add_subcommand("atoms", "List the atoms of degree d");
  atm->add_option("n", o.n, "Number of variables")->required();
  atm->add_option("d", o.d, "Degree")->required()->check(CLI::PositiveNumber);
  add_json(atm);
  atm->callback([&] { action = cmd_atoms; });

  auto* rw = app.add_subcommand("rewrite", "Rewrite an invariant polynomial in orbit polynomials of atoms");
  rw->add_option("poly", o.text, "Polynomial")->required();
  add_n(rw);
  add_json(rw);
  rw->callback([&] { action = cmd_rewrite; });

  auto* mem = app.add_subcommand("member", "Test membership in the ideal");
  mem->add_option("poly", o.text, "Polynomial")->required();
  add_n(mem);
  mem->add_option("--gens", o.gens, "Generator set: comm, diff or j")
      ->check(CLI::IsMember({"comm", "diff", "j"}));
  add_json(mem);
  mem->callback([&] { action = cmd_member; });

  auto* ver = app.add_subcommand("verify", "Run a named verification suite");
  ver->add_option("check", o.check, "Check name")->required();
  add_n(ver);
  ver->add_option("--max-degree", o.max_degree, "Certification degree bound")
      ->check(CLI::PositiveNumber);
  add_json(ver);
  ver->callback([&] { action = cmd_verify; });

  auto* n3 = app.add_subcommand("n3", "Three-variable quotient tools");
  n3->require_subcommand(1);
  auto* red = n3->add_subcommand("reduce", "Reduce an invariant polynomial to z0 + z1*c + z2*c^2");
  red->add_option("poly", o.text, "Polynomial in x1, x2, x3")->required();
  red->add_option("--max-degree", o.max_degree, "Degree bound")->check(CLI::PositiveNumber);
  add_json(red);
  red->callback([&] { action = cmd_n3_reduce; });
  auto* n3v = n3->add_subcommand("verify", "Run the three-variable suite");
  add_json(n3v);
  n3v->callback([&] {
    o.n = 3;
    o.check = "n3";
    action = cmd_verify;
  });

  auto* srch = app.add_subcommand("search", "Search matrix models for vanishing commutator products");
  add_n(srch);
  srch->add_option("--dim", o.dim, "Matrix size")->check(CLI::PositiveNumber);
  srch->add_option("--family", o.family, "commuting, conj-cyclic, block-upper or dense")
      ->check(CLI::IsMember({"commuting", "conj-cyclic", "block-upper", "dense"}));
  srch->add_option("--seed", o.seed, "Random seed");
  srch->add_option("--budget", o.budget, "Number of tuples to generate")
      ->check(CLI::NonNegativeNumber);
  add_json(srch);
  srch->callback([&] { action = cmd_search; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    set_default_jobs(o.jobs);
    return action(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

} // namespace sigmaforge
