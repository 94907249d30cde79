#pragma once

#include <random>
#include <string>
#include <vector>

#include "pwb/families.hpp"
#include "pwb/parser.hpp"

namespace pwb::test {

inline Poly P(const PolyRing& r, const std::string& s) { return parse_poly(r, s); }
inline Poly var(const PolyRing& r, int i) { return Poly::variable(r, i); }
inline Cyclo w3() { return Cyclo::zeta(3); }

inline PoissonAlgebra two_var(const std::string& rhs) {
  PolyRing r({"x", "y"});
  return PoissonAlgebra(r, {{{0, 1}, parse_poly(r, rhs)}});
}

// Small rationals and roots of unity of conductor 1, 3, 4 and 12.
inline Cyclo random_cyclo(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), cond(0, 3), pow(0, 11);
  static const long conductors[] = {1, 3, 4, 12};
  long n = conductors[cond(rng)];
  Cyclo c(Rational(num(rng), den(rng)));
  if (n > 1) c += Cyclo::zeta(n, pow(rng)) * Cyclo(Rational(num(rng), den(rng)));
  return c;
}

// Random polynomial with up to `terms` terms of total degree <= deg.
inline Poly random_poly(std::mt19937& rng, const PolyRing& r, int terms, int deg) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Exponents x(r.nvars());
    int left = deg;
    for (auto& v : x) {
      v = std::uniform_int_distribution<int>(0, left)(rng);
      left -= v;
    }
    ts.push_back({x, random_cyclo(rng)});
  }
  return Poly::from_terms(r, ts);
}

}  // namespace pwb::test
