#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pwb/cyclo.hpp"

namespace pwb {

// Dense univariate polynomial over cyclotomic fields, constant term first.
// The zero polynomial has no coefficients; otherwise the top one is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Cyclo> coeffs);
  UPoly(const Cyclo& c) : UPoly(std::vector<Cyclo>{c}) {}

  static UPoly monomial(const Cyclo& c, int k);
  static UPoly t() { return monomial(Cyclo(1), 1); }
  static UPoly cyclotomic(long d);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  const std::vector<Cyclo>& coeffs() const { return coeffs_; }
  Cyclo coeff(int k) const;
  const Cyclo& lead() const { return coeffs_.back(); }

  Cyclo eval(const Cyclo& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(int e) const;
  // Galois image under zeta_N -> zeta_N^a applied to each coefficient.
  UPoly conjugate(long n, long a) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Cyclo> coeffs_;
};

// Quotient and remainder; throws DivisorZero on b = 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);
// Product of all Galois conjugates; has rational coefficients.
UPoly norm_down(const UPoly& p);

struct RootSearch {
  std::vector<Cyclo> roots;  // distinct
  UPoly cofactor;            // p / prod (t - r) up to a unit; degree 0 means fully split
  bool complete() const { return cofactor.degree() <= 0; }
};

// Roots that are rational or roots of unity, found via rational-root
// candidates and cyclotomic factors Phi_d of the norm.
RootSearch find_roots(const UPoly& p);

}  // namespace pwb
