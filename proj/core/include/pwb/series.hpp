#pragma once

#include <string>
#include <vector>

#include "pwb/upoly.hpp"

namespace pwb {

// num/den in t with gcd(num, den) = 1 and den(0) = 1.
class RationalSeries {
 public:
  RationalSeries() : num_(Cyclo(0)), den_(Cyclo(1)) {}
  RationalSeries(UPoly num, UPoly den);
  static RationalSeries one() { return RationalSeries(UPoly(Cyclo(1)), UPoly(Cyclo(1))); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator*(const RationalSeries& o) const;
  RationalSeries scaled(const Cyclo& c) const;
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  UPoly num_, den_;
};

// Coefficients of t^0 .. t^order.
std::vector<Cyclo> series_taylor(const RationalSeries& s, int order);

// 1 / prod (1 - t^d).
RationalSeries free_hilbert_series(const std::vector<int>& degrees);

}  // namespace pwb
