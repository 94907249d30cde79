#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwb/cyclo.hpp"
#include "pwb/matrix.hpp"

namespace pwb {

using Exponents = std::vector<int>;

// Graded lexicographic comparison by variable order.
bool grlex_less(const Exponents& a, const Exponents& b);
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_less(b, a); }
};
int exp_degree(const Exponents& e);
// Componentwise sum with the 2^31 - 1 degree cap; throws ExponentOverflow.
Exponents exp_add(const Exponents& a, const Exponents& b);
bool exp_divides(const Exponents& a, const Exponents& b);

// Variable names plus the default coefficient conductor. Copies share state;
// equality is by variable names.
class PolyRing {
 public:
  PolyRing() : PolyRing(std::vector<std::string>{}) {}
  explicit PolyRing(std::vector<std::string> vars, long conductor = 1,
                    std::map<std::string, int> aliases = {});

  int nvars() const { return static_cast<int>(data_->vars.size()); }
  const std::vector<std::string>& vars() const { return data_->vars; }
  const std::string& var(int i) const { return data_->vars[i]; }
  const std::map<std::string, int>& aliases() const { return data_->aliases; }
  long conductor() const { return data_->conductor; }
  std::optional<int> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.data_ == b.data_ || a.data_->vars == b.data_->vars;
  }
  friend bool operator!=(const PolyRing& a, const PolyRing& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<std::string> vars;
    long conductor;
    std::map<std::string, int> aliases;
  };
  std::shared_ptr<const Data> data_;
};

struct Term {
  Exponents exp;
  Cyclo coeff;
};

// Sparse polynomial; terms are sorted grlex-descending with nonzero
// coefficients, so equal polynomials have equal term vectors.
class Poly {
 public:
  explicit Poly(PolyRing ring = PolyRing()) : ring_(std::move(ring)) {}
  static Poly constant(const PolyRing& ring, const Cyclo& c);
  static Poly variable(const PolyRing& ring, int i);
  static Poly monomial(const PolyRing& ring, Exponents e, const Cyclo& c = Cyclo(1));
  // Combines duplicates and sorts.
  static Poly from_terms(const PolyRing& ring, std::vector<Term> terms);
  // Sum of coeffs[i] * x_i.
  static Poly linear(const PolyRing& ring, const Vec& coeffs);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  Cyclo coeff(const Exponents& e) const;
  Cyclo constant_term() const;
  int total_degree() const;  // -1 for zero
  int min_degree() const;    // -1 for zero
  bool is_homogeneous() const;
  Poly homogeneous_part(int k) const;
  // Degree in one variable; -1 for zero.
  int degree_in(int var) const;
  // Variables that occur.
  std::vector<int> support() const;
  // Coefficient vector of a linear form; requires degree <= 1.
  Vec linear_coeffs() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Cyclo& c) const;
  Poly mul_monomial(const Exponents& e, const Cyclo& c) const;
  Poly pow(int e) const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly partial(int var) const;
  // Ring map sending x_i to images[i]; images share one target ring.
  Poly substitute(const std::vector<Poly>& images, const PolyRing& target) const;
  // Renames variables: x_i of this ring becomes x_{index_map[i]} of target.
  Poly remap(const PolyRing& target, const std::vector<int>& index_map) const;

  std::string str() const;

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

// Exponent vectors of total degree k in n variables, grlex-descending.
std::vector<Exponents> monomials_of_degree(int n, int k);
std::string monomial_str(const PolyRing& ring, const Exponents& e);

// Exact quotient f / u when u divides f; throws DivisorZero for u = 0.
std::optional<Poly> divides(const Poly& u, const Poly& f);
// Division with remainder by a single divisor in grlex order.
std::pair<Poly, Poly> divide_with_remainder(const Poly& f, const Poly& u);

// Column convention: x_i -> sum_j g(j, i) x_j. Throws SingularMatrix.
Poly apply_linear(const Matrix& g, const Poly& f);
// Image of x_i under g as a linear form.
Poly linear_image(const Matrix& g, const PolyRing& ring, int i);

// Splits f by the exponents of the variables in outer: returns, for each
// outer exponent pattern, the coefficient polynomial in inner_ring, whose
// variables are f's remaining variables in order.
std::map<Exponents, Poly, GrlexGreater> split_coefficients(const Poly& f, const std::vector<int>& outer,
                                                           const PolyRing& inner_ring);

// Coefficient vectors of homogeneous polynomials against a monomial basis.
struct MonomialIndex {
  std::vector<Exponents> monomials;
  std::map<Exponents, int> index;
  explicit MonomialIndex(std::vector<Exponents> monos);
  Vec coords(const Poly& f) const;  // throws InvalidArgument on a foreign monomial
  Poly poly(const PolyRing& ring, const Vec& v) const;
};
// Index over every monomial occurring in the given polynomials.
MonomialIndex monomial_index_of(const std::vector<Poly>& polys);
// Coordinate rows of the polynomials against a shared monomial index.
Matrix coefficient_matrix(const std::vector<Poly>& polys, const MonomialIndex& idx);

}  // namespace pwb
