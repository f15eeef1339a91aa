#pragma once

// Generators plus doctest printers so failed checks show readable values.

#include "generators.hpp"

#include <doctest.h>

namespace doctest {

template <>
struct StringMaker<sigmaforge::Polynomial> {
  static String convert(const sigmaforge::Polynomial& p) { return sigmaforge::render_poly(p).c_str(); }
};

template <>
struct StringMaker<sigmaforge::Monomial> {
  static String convert(const sigmaforge::Monomial& u) { return sigmaforge::render_monomial(u).c_str(); }
};

} // namespace doctest
