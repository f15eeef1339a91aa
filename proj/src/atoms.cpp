#include "sigmaforge/atoms.hpp"

#include "sigmaforge/cyclic.hpp"

#include <algorithm>

namespace sigmaforge {

namespace {

void require_nonempty(const Monomial& u)
{
  if (u.is_one())
    throw DomainError("operation needs a non-empty monomial");
}

void require_Q0(const Monomial& u)
{
  if (!u.is_one() && u.first_index() != 1)
    throw DomainError("monomial " + render_monomial(u) + " is not in Q0");
}

Monomial shift_to_x1(const Monomial& u, int n)
{
  return act(CircularPermutation::taking(n, u.first_index(), 1), u);
}

} // namespace

Monomial orbit_max(const Monomial& u, int n)
{
  require_nonempty(u);
  auto images = orbit(u, n);
  return *std::max_element(images.begin(), images.end(),
                           [](const Monomial& a, const Monomial& b) { return WolfGreater{}(b, a); });
}

bool is_in_Q0(const Monomial& u)
{
  require_nonempty(u);
  return u.first_index() == 1;
}

Monomial semigroup_mul(const Monomial& u, const Monomial& v, int n)
{
  require_Q0(u);
  require_Q0(v);
  if (u.is_one())
    return v;
  if (v.is_one())
    return u;
  return u * act(CircularPermutation::taking(n, 1, u.last_index()), v);
}

bool is_atom(const Monomial& u)
{
  require_nonempty(u);
  require_Q0(u);
  return std::all_of(u.runs().begin(), u.runs().end(),
                     [](const Run& r) { return r.exponent == 1; });
}

std::vector<Monomial> enumerate_atoms(int n, int d)
{
  if (d < 1)
    throw DomainError("atom degree must be at least 1");
  std::vector<Monomial> out;
  std::vector<int> letters(static_cast<std::size_t>(d), 1);
  // Depth-first in increasing letter order gives decreasing Wolf order.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == letters.size()) {
      out.push_back(Monomial::from_letters(letters));
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (x == letters[pos - 1])
        continue;
      letters[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
  return out;
}

AtomWord factor_atoms(const Monomial& u, int n)
{
  require_nonempty(u);
  require_Q0(u);
  AtomWord w;
  std::vector<int> segment;
  for (int letter : u.letters()) {
    if (!segment.empty() && segment.back() == letter) {
      w.factors.push_back(shift_to_x1(Monomial::from_letters(segment), n));
      segment.clear();
    }
    segment.push_back(letter);
  }
  w.factors.push_back(shift_to_x1(Monomial::from_letters(segment), n));
  return w;
}

Monomial fold_atoms(const AtomWord& w, int n)
{
  Monomial acc;
  for (const auto& a : w.factors)
    acc = semigroup_mul(acc, a, n);
  return acc;
}

std::string render_atom_word(const AtomWord& w)
{
  std::string out;
  for (const auto& a : w.factors) {
    if (!out.empty())
      out += " . ";
    out += "(" + render_monomial(a) + ")";
  }
  return out.empty() ? "1" : out;
}

} // namespace sigmaforge
