#include "sigmaforge/linalg.hpp"

#include <algorithm>

namespace sigmaforge::linalg {

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x)
{
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational v = iy->second + a * ix->second;
      if (!is_zero(v))
        out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  return out;
}

SparseVec scale(const SparseVec& v, const Rational& a)
{
  if (is_zero(a))
    return {};
  SparseVec out = v;
  for (auto& [c, x] : out)
    x *= a;
  return out;
}

Rational entry(const SparseVec& v, int column)
{
  auto it = std::lower_bound(v.begin(), v.end(), column,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != v.end() && it->first == column)
    return it->second;
  return 0;
}

Echelon::Echelon(int columns, bool track) : columns_(columns), track_(track) {}

std::vector<int> Echelon::pivots() const
{
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_)
    out.push_back(p);
  return out;
}

namespace {

// Dense accumulator reduction. Rows are RREF, so sweeping columns in
// increasing order and clearing each pivot column once is enough.
SparseVec reduce_impl(const std::map<int, SparseVec>& rows, const SparseVec& v, int columns,
                      const std::map<int, SparseVec>* combos, SparseVec* combo_out)
{
  if (v.empty())
    return {};
  std::vector<Rational> acc(static_cast<std::size_t>(columns));
  std::vector<char> nonzero(static_cast<std::size_t>(columns), 0);
  for (const auto& [c, x] : v) {
    acc[static_cast<std::size_t>(c)] = x;
    nonzero[static_cast<std::size_t>(c)] = 1;
  }
  SparseVec combo;
  for (int c = v.front().first; c < columns; ++c) {
    auto uc = static_cast<std::size_t>(c);
    if (!nonzero[uc] || is_zero(acc[uc]))
      continue;
    auto it = rows.find(c);
    if (it == rows.end())
      continue;
    Rational factor = acc[uc];
    for (const auto& [col, x] : it->second) {
      auto ucol = static_cast<std::size_t>(col);
      acc[ucol] -= factor * x;
      nonzero[ucol] = 1;
    }
    if (combos)
      combo = axpy(combo, factor, combos->at(c));
  }
  SparseVec out;
  for (int c = 0; c < columns; ++c) {
    auto uc = static_cast<std::size_t>(c);
    if (nonzero[uc] && !is_zero(acc[uc]))
      out.emplace_back(c, std::move(acc[uc]));
  }
  if (combo_out)
    *combo_out = std::move(combo);
  return out;
}

} // namespace

SparseVec Echelon::reduce(const SparseVec& v) const
{
  return reduce_impl(rows_, v, columns_, nullptr, nullptr);
}

std::pair<SparseVec, SparseVec> Echelon::reduce_tracked(const SparseVec& v) const
{
  if (!track_)
    throw DomainError("reduce_tracked on an untracked echelon form");
  SparseVec combo;
  SparseVec residual = reduce_impl(rows_, v, columns_, &combos_, &combo);
  return {std::move(residual), std::move(combo)};
}

bool Echelon::insert(const SparseVec& row)
{
  const int id = inserted_++;
  SparseVec combo;
  SparseVec r = reduce_impl(rows_, row, columns_, track_ ? &combos_ : nullptr,
                            track_ ? &combo : nullptr);
  if (r.empty())
    return false;
  const int pivot = r.front().first;
  Rational inv = 1 / r.front().second;
  r = scale(r, inv);
  if (track_) {
    // row - sum(combo) = r_unscaled, so r = inv * (e_id - combo).
    combo = scale(combo, Rational(-1));
    combo = axpy(combo, 1, SparseVec{{id, Rational(1)}});
    combo = scale(combo, inv);
  }
  for (auto& [p, other] : rows_) {
    Rational x = entry(other, pivot);
    if (is_zero(x))
      continue;
    other = axpy(other, -x, r);
    if (track_)
      combos_[p] = axpy(combos_[p], -x, combo);
  }
  rows_.emplace(pivot, std::move(r));
  if (track_)
    combos_.emplace(pivot, std::move(combo));
  return true;
}

// ------------------------------------------------------------------ dense

std::vector<int> rref(DenseMatrix& m)
{
  std::vector<int> pivots;
  if (m.empty())
    return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && is_zero(m[sel][c]))
      ++sel;
    if (sel == m.size())
      continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row])
      x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][c]))
        continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        m[r][k] -= f * m[row][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  return pivots;
}

int rank(DenseMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> nullspace(DenseMatrix m, int columns)
{
  for (auto& row : m)
    row.resize(static_cast<std::size_t>(columns));
  std::vector<int> piv = rref(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(columns), 0);
  for (int p : piv)
    is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < columns; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)])
      continue;
    std::vector<Rational> x(static_cast<std::size_t>(columns));
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      x[static_cast<std::size_t>(piv[r])] = -m[r][static_cast<std::size_t>(f)];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(DenseMatrix m, const std::vector<Rational>& b,
                                           int columns)
{
  if (m.size() != b.size())
    throw DomainError("solve: row count mismatch");
  for (std::size_t r = 0; r < m.size(); ++r) {
    m[r].resize(static_cast<std::size_t>(columns));
    m[r].push_back(b[r]);
  }
  std::vector<int> piv = rref(m);
  if (!piv.empty() && piv.back() == columns)
    return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(columns));
  for (std::size_t r = 0; r < piv.size(); ++r)
    x[static_cast<std::size_t>(piv[r])] = m[r][static_cast<std::size_t>(columns)];
  return x;
}

} // namespace sigmaforge::linalg
