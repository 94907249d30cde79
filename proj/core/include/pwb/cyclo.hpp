#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pwb {

// Canonical form is guaranteed by GMP: reduced, denominator positive.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

long gcd(long a, long b);
long lcm(long a, long b);
long euler_phi(long n);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_poly(long n);

// Element of Q(zeta_N) in the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1).
// Mixed-conductor arithmetic lifts to the lcm; nothing descends implicitly.
class Cyclo {
 public:
  Cyclo() : conductor_(1), coeffs_(1) {}
  Cyclo(long v) : conductor_(1), coeffs_{Rational(v)} {}
  Cyclo(const Rational& r) : conductor_(1), coeffs_{r} { coeffs_[0].canonicalize(); }
  // Accepts any number of coefficients of zeta_N^k and reduces mod Phi_N.
  Cyclo(long conductor, std::vector<Rational> coeffs);

  static Cyclo zeta(long n, long k = 1);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  const Rational& rational() const { return coeffs_[0]; }

  // m must be a multiple of conductor().
  Cyclo lift(long m) const;
  // Smallest conductor field containing the value.
  Cyclo descend() const;
  Cyclo inverse() const;
  Cyclo pow(long e) const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
  Cyclo operator-() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Sum of c*zeta(N)^k terms; parseable by the scalar grammar.
  std::string str() const;
  // Number of nonzero basis coefficients.
  int term_count() const;

 private:
  long conductor_;
  std::vector<Rational> coeffs_;
};

// Least m >= 1 with c^m = 1, searched up to lcm(2, conductor). Throws
// ZeroElement on 0.
std::optional<long> is_root_of_unity(const Cyclo& c);

inline Cyclo cyclo_make(long n, long k) { return Cyclo::zeta(n, k); }

}  // namespace pwb
