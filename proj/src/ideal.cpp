#include "sigmaforge/ideal.hpp"

#include "parallel.hpp"
#include "sigmaforge/cyclic.hpp"
#include "sigmaforge/sigma.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

namespace sigmaforge {

// ------------------------------------------------------------ generators

namespace {

void add_unique(std::vector<Polynomial>& gens, Polynomial p)
{
  if (p.is_zero())
    return;
  if (std::find(gens.begin(), gens.end(), p) == gens.end())
    gens.push_back(std::move(p));
}

void require_arity(int n)
{
  if (n < 1)
    throw DomainError("arity must be positive");
}

} // namespace

GeneratorSet GeneratorSet::comm(int n)
{
  require_arity(n);
  GeneratorSet out{GeneratorKind::Comm, n, {}};
  for (int k = 1; k <= n; ++k) {
    Polynomial s = build_sigma(n, k);
    for (int i = 1; i <= n; ++i)
      add_unique(out.generators, commutator(Polynomial::variable(n, i), s));
  }
  return out;
}

GeneratorSet GeneratorSet::diff(int n)
{
  require_arity(n);
  GeneratorSet out{GeneratorKind::Diff, n, {}};
  for (int k = 1; k <= n; ++k) {
    Polynomial s = build_sigma(n, k);
    for (int p = 1; p < n; ++p)
      add_unique(out.generators, s - act(CircularPermutation(n, p), s));
  }
  return out;
}

GeneratorSet GeneratorSet::commutators(int n)
{
  require_arity(n);
  GeneratorSet out{GeneratorKind::Commutators, n, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add_unique(out.generators, index_commutator(n, i, j));
  return out;
}

GeneratorSet GeneratorSet::custom(int n, std::vector<Polynomial> gens)
{
  require_arity(n);
  GeneratorSet out{GeneratorKind::Custom, n, {}};
  for (auto& g : gens) {
    if (g.arity() != n)
      throw DomainError("generator arity differs from the generator set");
    if (!g.is_homogeneous())
      throw DomainError("generator " + render_poly(g) + " is not homogeneous");
    add_unique(out.generators, std::move(g));
  }
  return out;
}

std::string GeneratorSet::name() const
{
  switch (kind) {
  case GeneratorKind::Comm:
    return "comm";
  case GeneratorKind::Diff:
    return "diff";
  case GeneratorKind::Commutators:
    return "j";
  case GeneratorKind::Custom:
    break;
  }
  return "custom";
}

GeneratorKind parse_generator_kind(const std::string& name)
{
  if (name == "comm")
    return GeneratorKind::Comm;
  if (name == "diff")
    return GeneratorKind::Diff;
  if (name == "j")
    return GeneratorKind::Commutators;
  throw DomainError("unknown generator set '" + name + "' (expected comm, diff or j)");
}

GeneratorSet make_generators(GeneratorKind kind, int n)
{
  switch (kind) {
  case GeneratorKind::Comm:
    return GeneratorSet::comm(n);
  case GeneratorKind::Diff:
    return GeneratorSet::diff(n);
  case GeneratorKind::Commutators:
    return GeneratorSet::commutators(n);
  case GeneratorKind::Custom:
    break;
  }
  throw DomainError("custom generator sets need explicit generators");
}

// ------------------------------------------------------------ word basis

namespace {

long ipow(int base, int e)
{
  long r = 1;
  for (int i = 0; i < e; ++i)
    r *= base;
  return r;
}

long word_code(const Monomial& u, int n)
{
  long code = 0;
  for (const auto& r : u.runs())
    for (int e = 0; e < r.exponent; ++e)
      code = code * n + (r.index - 1);
  return code;
}

Monomial word_of_code(long code, int n, int d)
{
  std::vector<int> letters(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = static_cast<int>(code % n) + 1;
    code /= n;
  }
  return Monomial::from_letters(letters);
}

} // namespace

WordBasis::WordBasis(int n_, int degree_) : n(n_), degree(degree_)
{
  if (degree < 0)
    throw DomainError("degree must be non-negative");
  words = enumerate_basis_words(n, degree);
  column_of_code.assign(words.size(), -1);
  for (std::size_t c = 0; c < words.size(); ++c)
    column_of_code[static_cast<std::size_t>(word_code(words[c], n))] = static_cast<int>(c);
}

int WordBasis::column(const Monomial& u) const
{
  if (u.degree() != degree || (!u.is_one() && u.max_index() > n))
    throw DomainError("monomial " + render_monomial(u) + " is not a basis word");
  return column_of_code[static_cast<std::size_t>(word_code(u, n))];
}

linalg::SparseVec WordBasis::to_vector(const Polynomial& p) const
{
  linalg::SparseVec v;
  v.reserve(p.size());
  for (const auto& [u, c] : p.terms())
    v.emplace_back(column(u), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Polynomial WordBasis::to_polynomial(const linalg::SparseVec& v) const
{
  Polynomial p(n);
  for (const auto& [c, x] : v)
    p.add_term(words.at(static_cast<std::size_t>(c)), x);
  return p;
}

// ------------------------------------------------------------ slices

namespace {

struct EncodedGenerator {
  int degree = 0;
  std::vector<std::pair<long, Rational>> terms;
};

struct Row {
  linalg::SparseVec entries;
  RowSource source;
};

void generate_rows(const EncodedGenerator& g, int gi, const WordBasis& basis,
                   std::vector<Row>& out)
{
  const int n = basis.n;
  const int s = basis.degree - g.degree;
  for (int l = 0; l <= s; ++l) {
    const int r = s - l;
    const long left_count = ipow(n, l);
    const long right_count = ipow(n, r);
    const long right_shift = right_count;
    const long left_shift = ipow(n, g.degree + r);
    for (long lc = 0; lc < left_count; ++lc) {
      for (long rc = 0; rc < right_count; ++rc) {
        Row row;
        row.entries.reserve(g.terms.size());
        for (const auto& [code, x] : g.terms) {
          long full = lc * left_shift + code * right_shift + rc;
          row.entries.emplace_back(basis.column_of_code[static_cast<std::size_t>(full)], x);
        }
        std::sort(row.entries.begin(), row.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        row.source = {gi, word_of_code(lc, n, l), word_of_code(rc, n, r)};
        out.push_back(std::move(row));
      }
    }
  }
}

} // namespace

DegreeSlice degree_slice(const GeneratorSet& gens, int d, int jobs, bool track)
{
  if (d < 0)
    throw DomainError("degree must be non-negative");
  auto basis = std::make_shared<const WordBasis>(gens.n, d);
  DegreeSlice slice;
  slice.n = gens.n;
  slice.degree = d;
  slice.basis = basis;
  slice.rowspace = linalg::Echelon(static_cast<int>(basis->size()), track);

  std::vector<EncodedGenerator> encoded;
  std::vector<int> index;
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    const Polynomial& g = gens.generators[i];
    const int e = g.degree();
    if (e > d || e < 0)
      continue;
    EncodedGenerator eg;
    eg.degree = e;
    for (const auto& [u, c] : g.terms())
      eg.terms.emplace_back(word_code(u, gens.n), c);
    encoded.push_back(std::move(eg));
    index.push_back(static_cast<int>(i));
  }

  std::vector<std::vector<Row>> per_generator(encoded.size());
  detail::parallel_for(encoded.size(), jobs, [&](std::size_t i) {
    generate_rows(encoded[i], index[i], *basis, per_generator[i]);
  });

  std::set<linalg::SparseVec> seen;
  for (auto& rows : per_generator) {
    for (auto& row : rows) {
      if (!seen.insert(row.entries).second)
        continue;
      slice.rowspace.insert(row.entries);
      if (track)
        slice.sources.push_back(std::move(row.source));
    }
    rows.clear();
    rows.shrink_to_fit();
  }
  return slice;
}

// ------------------------------------------------------------ oracle

IdealOracle::IdealOracle(GeneratorSet gens, int jobs) : gens_(std::move(gens)), jobs_(jobs) {}

const DegreeSlice& IdealOracle::cached(int d, bool track) const
{
  const auto key = std::make_pair(d, track);
  {
    std::lock_guard lock(mutex_);
    if (auto it = slices_.find(key); it != slices_.end())
      return *it->second;
  }
  auto built = std::make_unique<DegreeSlice>(degree_slice(gens_, d, jobs_, track));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = slices_.try_emplace(key, std::move(built));
  return *it->second;
}

const DegreeSlice& IdealOracle::slice(int d) const { return cached(d, false); }

const DegreeSlice& IdealOracle::tracked_slice(int d) const { return cached(d, true); }

bool IdealOracle::member(const Polynomial& p) const { return check(p, false).member; }

MembershipResult IdealOracle::check(const Polynomial& p, bool certify) const
{
  if (p.arity() != gens_.n)
    throw DomainError("polynomial arity differs from the ideal's");
  MembershipResult result;
  for (const auto& [d, component] : homogeneous_components(p)) {
    const DegreeSlice& s = certify ? tracked_slice(d) : slice(d);
    linalg::SparseVec v = s.basis->to_vector(component);
    linalg::SparseVec residual;
    if (certify) {
      auto [res, combo] = s.rowspace.reduce_tracked(v);
      residual = std::move(res);
      for (const auto& [id, c] : combo)
        result.certificate.push_back({c, s.sources.at(static_cast<std::size_t>(id))});
    } else {
      residual = s.rowspace.reduce(v);
    }
    if (!residual.empty()) {
      result.member = false;
      result.residuals.emplace(d, s.basis->to_polynomial(residual));
    }
  }
  // Every element of the ideal lies in the commutator ideal, which is the
  // kernel of abelianization.
  if (result.member && gens_.kind != GeneratorKind::Custom && !abelianize(p).is_zero())
    throw std::logic_error("member with nonzero abelianization: " + render_poly(p));
  return result;
}

Polynomial IdealOracle::normal_form(const Polynomial& p) const
{
  MembershipResult r = check(p, false);
  Polynomial out(gens_.n);
  for (const auto& [d, q] : r.residuals)
    out += q;
  return out;
}

bool IdealOracle::congruent(const Polynomial& p, const Polynomial& q) const
{
  return member(p - q);
}

namespace {

std::atomic<int> g_default_jobs{1};

} // namespace

void set_default_jobs(int jobs) { g_default_jobs = std::max(1, jobs); }

int default_jobs() { return g_default_jobs; }

const IdealOracle& standard_oracle(GeneratorKind kind, int n)
{
  static std::mutex mutex;
  static std::map<std::pair<GeneratorKind, int>, std::unique_ptr<IdealOracle>> oracles;
  std::lock_guard lock(mutex);
  auto& slot = oracles[{kind, n}];
  if (!slot)
    slot = std::make_unique<IdealOracle>(make_generators(kind, n), default_jobs());
  return *slot;
}

Polynomial expand_certificate(const GeneratorSet& gens, const std::vector<CertificateTerm>& terms)
{
  Polynomial out(gens.n);
  for (const auto& t : terms) {
    Polynomial prod = Polynomial::term(gens.n, t.source.left, t.coefficient) *
                      gens.generators.at(static_cast<std::size_t>(t.source.generator)) *
                      Polynomial::term(gens.n, t.source.right);
    out += prod;
  }
  return out;
}

bool member(const Polynomial& p, const GeneratorSet& gens)
{
  if (gens.kind != GeneratorKind::Custom)
    return standard_oracle(gens.kind, gens.n).member(p);
  return IdealOracle(gens).member(p);
}

MembershipResult member_certified(const Polynomial& p, const GeneratorSet& gens)
{
  if (gens.kind != GeneratorKind::Custom)
    return standard_oracle(gens.kind, gens.n).check(p, true);
  return IdealOracle(gens).check(p, true);
}

bool spans_equal(const GeneratorSet& a, const GeneratorSet& b, int d, int jobs)
{
  if (a.n != b.n)
    return false;
  DegreeSlice sa = degree_slice(a, d, jobs);
  DegreeSlice sb = degree_slice(b, d, jobs);
  return sa.rowspace == sb.rowspace;
}

long quotient_dim(int n, int d)
{
  if (d < 0)
    throw DomainError("degree must be non-negative");
  const auto& s = standard_oracle(GeneratorKind::Comm, n).slice(d);
  return static_cast<long>(s.basis->size()) - s.rank();
}

// ------------------------------------------------------------ degree two

std::vector<Polynomial> canonical_quadratic_basis(int n)
{
  std::vector<Polynomial> out;
  for (int i = 1; i <= n; ++i)
    out.push_back(Polynomial::term(n, Monomial::variable(i, 2)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back(Polynomial::variable(n, i) * Polynomial::variable(n, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.push_back(index_commutator(n, i, j + 1));
  return out;
}

namespace {

// Coordinates of `target` in terms of `spanning` modulo the degree-2 slice.
// Throws when the spanning residuals are dependent (coordinates not unique).
std::optional<std::vector<Rational>> solve_mod_slice(const std::vector<Polynomial>& spanning,
                                                     const Polynomial& target, int n)
{
  const DegreeSlice& s = standard_oracle(GeneratorKind::Comm, n).slice(2);
  const int rows = static_cast<int>(s.basis->size());
  const int cols = static_cast<int>(spanning.size());
  linalg::DenseMatrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (int j = 0; j < cols; ++j)
    for (const auto& [c, x] : s.rowspace.reduce(s.basis->to_vector(spanning[static_cast<std::size_t>(j)])))
      m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] = x;
  if (linalg::rank(m) != cols)
    throw std::logic_error("degree-2 spanning set is dependent modulo the ideal");
  std::vector<Rational> b(static_cast<std::size_t>(rows));
  for (const auto& [c, x] : s.rowspace.reduce(s.basis->to_vector(target)))
    b[static_cast<std::size_t>(c)] = x;
  return linalg::solve(std::move(m), b, cols);
}

} // namespace

Polynomial CanonicalQuadratic::reconstruct() const
{
  Polynomial out(n);
  for (const auto& [i, x] : a)
    out += Polynomial::term(n, Monomial::variable(i, 2), x);
  for (const auto& [ij, x] : b)
    out += x * (Polynomial::variable(n, ij.first) * Polynomial::variable(n, ij.second));
  for (const auto& [ij, x] : c)
    out += x * index_commutator(n, ij.first, ij.second + 1);
  return out;
}

CanonicalQuadratic canonical_quadratic(const Polynomial& p)
{
  const int n = p.arity();
  if (!p.is_zero() && (p.degree() != 2 || !p.is_homogeneous()))
    throw DomainError("canonical_quadratic needs a homogeneous quadratic");
  auto x = solve_mod_slice(canonical_quadratic_basis(n), p, n);
  if (!x)
    throw std::logic_error("quadratic has no canonical form; the spanning set is incomplete");
  CanonicalQuadratic out;
  out.n = n;
  std::size_t idx = 0;
  auto take = [&] { return (*x)[idx++]; };
  for (int i = 1; i <= n; ++i)
    if (Rational v = take(); !is_zero(v))
      out.a[i] = v;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (Rational v = take(); !is_zero(v))
        out.b[{i, j}] = v;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (Rational v = take(); !is_zero(v))
        out.c[{i, j}] = v;
  return out;
}

Polynomial diagonal_closed_form(int n, int k, int trailing_sign)
{
  if (k < 2 || k > n)
    throw DomainError("k must lie in 2.." + std::to_string(n));
  Polynomial out(n);
  for (int p = 1; p <= k - 2; ++p)
    for (int j = k; j <= n; ++j)
      out += index_commutator(n, p, j);
  for (int j = k + 1; j <= n; ++j)
    out += Rational(trailing_sign) * index_commutator(n, k - 1, j);
  return out;
}

DiagonalExpansion expand_diagonal_commutator(int n, int k)
{
  if (k < 2 || k > n)
    throw DomainError("k must lie in 2.." + std::to_string(n));
  std::vector<Polynomial> off;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      off.push_back(index_commutator(n, i, j));
  const Polynomial target = index_commutator(n, k, k - 1);
  DiagonalExpansion out{Polynomial(n)};
  if (!off.empty()) {
    auto y = solve_mod_slice(off, target, n);
    if (!y)
      throw std::logic_error("diagonal commutator is not congruent to off-diagonal ones");
    for (std::size_t i = 0; i < off.size(); ++i)
      out.expression += (*y)[i] * off[i];
  }
  const IdealOracle& oracle = standard_oracle(GeneratorKind::Comm, n);
  out.plus_form_holds = oracle.congruent(target, diagonal_closed_form(n, k, +1));
  out.minus_form_holds = oracle.congruent(target, diagonal_closed_form(n, k, -1));
  return out;
}

Polynomial diagonal_sum_identity(int n)
{
  Polynomial out(n);
  for (int k = 2; k <= n; ++k)
    out += index_commutator(n, k, k - 1);
  for (int p = 1; p <= n - 2; ++p)
    for (int j = 2; j <= n - p; ++j)
      out -= Rational(j) * index_commutator(n, p, j + p);
  return out;
}

int default_max_degree(int n)
{
  switch (n) {
  case 3:
    return 6;
  case 4:
    return 5;
  case 5:
  case 6:
    return 4;
  default:
    return 3;
  }
}

} // namespace sigmaforge
