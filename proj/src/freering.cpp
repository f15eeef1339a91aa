#include "sigmaforge/freering.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sigmaforge {

// ---------------------------------------------------------------- Monomial

void Monomial::push(int index, int exponent)
{
  if (!runs_.empty() && runs_.back().index == index)
    runs_.back().exponent += exponent;
  else
    runs_.push_back({index, exponent});
  degree_ += exponent;
}

Monomial Monomial::from_letters(std::span<const int> letters)
{
  Monomial u;
  for (int letter : letters)
    u.push(letter, 1);
  return u;
}

Monomial Monomial::variable(int index, int exponent)
{
  Monomial u;
  u.push(index, exponent);
  return u;
}

std::vector<int> Monomial::complexion() const
{
  std::vector<int> out;
  out.reserve(runs_.size());
  for (const auto& r : runs_)
    out.push_back(r.index);
  return out;
}

std::vector<int> Monomial::exponents() const
{
  std::vector<int> out;
  out.reserve(runs_.size());
  for (const auto& r : runs_)
    out.push_back(r.exponent);
  return out;
}

std::vector<int> Monomial::letters() const
{
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (const auto& r : runs_)
    out.insert(out.end(), static_cast<std::size_t>(r.exponent), r.index);
  return out;
}

int Monomial::max_index() const
{
  int m = 0;
  for (const auto& r : runs_)
    m = std::max(m, r.index);
  return m;
}

Monomial operator*(const Monomial& u, const Monomial& v)
{
  Monomial w = u;
  for (const auto& r : v.runs_)
    w.push(r.index, r.exponent);
  return w;
}

Monomial monomial_normalize(std::span<const int> letters, int n)
{
  for (int letter : letters)
    if (letter < 1 || letter > n)
      throw DomainError("index " + std::to_string(letter) + " outside 1.." + std::to_string(n));
  return Monomial::from_letters(letters);
}

std::strong_ordering wolf_compare(const Monomial& u, const Monomial& v)
{
  if (auto c = u.degree() <=> v.degree(); c != 0)
    return c;
  const auto& ru = u.runs();
  const auto& rv = v.runs();
  const std::size_t common = std::min(ru.size(), rv.size());
  for (std::size_t p = 0; p < common; ++p)
    if (ru[p].exponent != rv[p].exponent)
      return ru[p].exponent <=> rv[p].exponent;
  // Equal degree with one exponent sequence a proper prefix of the other
  // cannot happen, so the exponent sequences agree here.
  for (std::size_t p = 0; p < common; ++p)
    if (ru[p].index != rv[p].index)
      return rv[p].index <=> ru[p].index;
  return ru.size() <=> rv.size();
}

std::string render_monomial(const Monomial& u)
{
  if (u.is_one())
    return "1";
  std::string out;
  for (const auto& r : u.runs()) {
    if (!out.empty())
      out += '*';
    out += 'x';
    out += std::to_string(r.index);
    if (r.exponent != 1) {
      out += '^';
      out += std::to_string(r.exponent);
    }
  }
  return out;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(int arity) : arity_(arity)
{
  if (arity < 1)
    throw DomainError("arity must be positive");
}

Polynomial Polynomial::constant(int arity, const Rational& value)
{
  Polynomial p(arity);
  p.add_term(Monomial{}, value);
  return p;
}

Polynomial Polynomial::term(int arity, const Monomial& u, const Rational& coefficient)
{
  if (u.max_index() > arity)
    throw DomainError("monomial index exceeds arity " + std::to_string(arity));
  Polynomial p(arity);
  p.add_term(u, coefficient);
  return p;
}

Polynomial Polynomial::variable(int arity, int index)
{
  return term(arity, Monomial::variable(index));
}

Polynomial Polynomial::word(int arity, std::span<const int> letters)
{
  return term(arity, monomial_normalize(letters, arity));
}

Rational Polynomial::coefficient(const Monomial& u) const
{
  auto it = terms_.find(u);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const
{
  // Descending order puts the largest degree first.
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const
{
  if (terms_.empty())
    return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& u, const Rational& c)
{
  if (sigmaforge::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (sigmaforge::is_zero(it->second))
      terms_.erase(it);
  }
}

void Polynomial::check_arity(const Polynomial& q) const
{
  if (arity_ != q.arity_)
    throw DomainError("arity mismatch: " + std::to_string(arity_) + " vs " +
                      std::to_string(q.arity_));
}

Polynomial& Polynomial::operator+=(const Polynomial& q)
{
  check_arity(q);
  for (const auto& [u, c] : q.terms_)
    add_term(u, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q)
{
  check_arity(q);
  for (const auto& [u, c] : q.terms_)
    add_term(u, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (sigmaforge::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [u, coef] : terms_)
    coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
  p.check_arity(q);
  Polynomial out(p.arity_);
  for (const auto& [u, a] : p.terms_)
    for (const auto& [v, b] : q.terms_)
      out.add_term(u * v, a * b);
  return out;
}

bool operator==(const Polynomial& p, const Polynomial& q)
{
  return p.arity_ == q.arity_ && p.terms_ == q.terms_;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, int e)
{
  if (e < 0)
    throw DomainError("negative exponent");
  Polynomial out = Polynomial::constant(p.arity(), 1);
  for (int i = 0; i < e; ++i)
    out = out * p;
  return out;
}

Polynomial commutator(const Polynomial& p, const Polynomial& q) { return p * q - q * p; }

Polynomial index_commutator(int n, int i, int j)
{
  return commutator(Polynomial::variable(n, i), Polynomial::variable(n, j));
}

std::map<int, Polynomial> homogeneous_components(const Polynomial& p)
{
  std::map<int, Polynomial> out;
  for (const auto& [u, c] : p.terms())
    out.try_emplace(u.degree(), p.arity()).first->second.add_term(u, c);
  return out;
}

// ------------------------------------------------------------------ Parser

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position)
{
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, int n) : text_(text), n_(n) {}

  Polynomial parse_polynomial()
  {
    Polynomial out(n_);
    skip_ws();
    if (at_end())
      throw ParseError("empty polynomial", pos_);
    Rational sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    parse_term(out, sign);
    for (skip_ws(); !at_end(); skip_ws()) {
      char op = peek();
      if (op != '+' && op != '-')
        throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      ++pos_;
      parse_term(out, op == '-' ? Rational(-1) : Rational(1));
    }
    return out;
  }

  Monomial parse_single_monomial()
  {
    skip_ws();
    if (!at_end() && peek() == '1') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end())
        return Monomial{};
      pos_ = save;
    }
    std::vector<int> letters;
    parse_factor(letters);
    for (skip_ws(); !at_end(); skip_ws()) {
      expect('*');
      parse_factor(letters);
    }
    return Monomial::from_letters(letters);
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  void expect(char ch)
  {
    skip_ws();
    if (at_end() || peek() != ch)
      throw ParseError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }

  long parse_uint(bool allow_zero)
  {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected integer", start);
    if (pos_ - start > 9)
      throw ParseError("integer too large", start);
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (!allow_zero && v == 0)
      throw ParseError("expected positive integer", start);
    return v;
  }

  std::string parse_digits()
  {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_factor(std::vector<int>& letters)
  {
    skip_ws();
    if (at_end() || peek() != 'x')
      throw ParseError("expected variable 'x<i>'", pos_);
    ++pos_;
    std::size_t index_pos = pos_;
    long index = parse_uint(false);
    if (index > n_)
      throw ParseError("variable index " + std::to_string(index) + " exceeds n=" +
                           std::to_string(n_),
                       index_pos);
    long exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exponent = parse_uint(false);
    }
    letters.insert(letters.end(), static_cast<std::size_t>(exponent), static_cast<int>(index));
  }

  void parse_term(Polynomial& out, const Rational& sign)
  {
    skip_ws();
    if (at_end())
      throw ParseError("expected term", pos_);
    Rational coef = sign;
    std::vector<int> letters;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = parse_digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        std::size_t slash = pos_;
        ++pos_;
        skip_ws();
        std::string den = parse_digits();
        if (den.find_first_not_of('0') == std::string::npos)
          throw ParseError("zero denominator", slash);
        num += "/" + den;
      }
      coef *= Rational(num);
      coef.canonicalize();
      skip_ws();
      if (at_end() || peek() != '*') {
        out.add_term(Monomial{}, coef);
        return;
      }
      ++pos_;
    }
    parse_factor(letters);
    for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
      ++pos_;
      parse_factor(letters);
    }
    out.add_term(Monomial::from_letters(letters), coef);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_poly(std::string_view text, int n)
{
  if (n < 1)
    throw DomainError("arity must be positive");
  return PolyParser(text, n).parse_polynomial();
}

Monomial parse_monomial(std::string_view text, int n)
{
  if (n < 1)
    throw DomainError("arity must be positive");
  return PolyParser(text, n).parse_single_monomial();
}

std::string render_poly(const Polynomial& p)
{
  if (p.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [u, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    Rational mag = abs(c);
    if (u.is_one()) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1)
      out << to_string(mag) << '*';
    out << render_monomial(u);
  }
  return out.str();
}

std::vector<Monomial> enumerate_basis_words(int n, int d)
{
  if (n < 1 || d < 0)
    throw DomainError("enumerate_basis_words needs n >= 1 and d >= 0");
  std::vector<Monomial> out;
  std::vector<int> letters(static_cast<std::size_t>(d), 1);
  while (true) {
    out.push_back(Monomial::from_letters(letters));
    int pos = d - 1;
    while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == n) {
      letters[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0)
      break;
    ++letters[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end(), WolfGreater{});
  return out;
}

} // namespace sigmaforge

std::size_t std::hash<sigmaforge::Monomial>::operator()(const sigmaforge::Monomial& u) const noexcept
{
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& r : u.runs()) {
    h ^= static_cast<std::size_t>(r.index) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(r.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
