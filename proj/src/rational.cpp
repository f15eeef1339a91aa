#include "sigmaforge/rational.hpp"

#include <cctype>

namespace sigmaforge {

Rational make_rational(long num, long den)
{
  if (den == 0)
    throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text)
{
  if (text.empty())
    throw DomainError("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+')
    ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      seen_digit = true;
    } else if (ch == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit)
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  std::string body(text);
  if (body[0] == '+')
    body.erase(0, 1);
  Rational q;
  q.set_str(body, 10);
  if (sgn(q.get_den()) == 0)
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

} // namespace sigmaforge
