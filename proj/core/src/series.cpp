#include "pwb/series.hpp"

#include "pwb/errors.hpp"

namespace pwb {

RationalSeries::RationalSeries(UPoly num, UPoly den) {
  if (den.is_zero() || den.coeff(0).is_zero()) throw ZeroElement("series denominator must not vanish at t = 0");
  UPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Cyclo inv = den.coeff(0).inverse();
  num_ = num * UPoly(inv);
  den_ = den * UPoly(inv);
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  if (den_ == o.den_) return RationalSeries(num_ + o.num_, den_);
  UPoly g = gcd(den_, o.den_);
  UPoly a = divmod(o.den_, g).first;
  UPoly b = divmod(den_, g).first;
  return RationalSeries(num_ * a + o.num_ * b, den_ * a);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  return RationalSeries(num_ * o.num_, den_ * o.den_);
}

RationalSeries RationalSeries::scaled(const Cyclo& c) const { return RationalSeries(num_ * UPoly(c), den_); }

std::string RationalSeries::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

std::vector<Cyclo> series_taylor(const RationalSeries& s, int order) {
  std::vector<Cyclo> c(order + 1);
  const UPoly& num = s.num();
  const UPoly& den = s.den();
  // den(0) = 1 so c_k = num_k - sum_{i >= 1} den_i c_{k-i}.
  for (int k = 0; k <= order; ++k) {
    Cyclo v = num.coeff(k);
    for (int i = 1; i <= std::min(k, den.degree()); ++i) v -= den.coeffs()[i] * c[k - i];
    c[k] = v;
  }
  return c;
}

RationalSeries free_hilbert_series(const std::vector<int>& degrees) {
  UPoly den(Cyclo(1));
  for (int d : degrees) den = den * (UPoly(Cyclo(1)) - UPoly::monomial(Cyclo(1), d));
  return RationalSeries(UPoly(Cyclo(1)), den);
}

}  // namespace pwb
