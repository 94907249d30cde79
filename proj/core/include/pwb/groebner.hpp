#pragma once

#include <optional>
#include <vector>

#include "pwb/poly.hpp"

namespace pwb {

enum class OrderKind { Grlex, Lex, Elimination };

struct MonomialOrder {
  OrderKind kind = OrderKind::Grlex;
  // Elimination: the first `block` variables are eliminated (block order,
  // grlex inside each block).
  int block = 0;

  static MonomialOrder grlex() { return {OrderKind::Grlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(int k) { return {OrderKind::Elimination, k}; }
  bool less(const Exponents& a, const Exponents& b) const;
};

struct GroebnerOptions {
  // Largest total degree of an S-pair lcm before DegreeBudgetExceeded.
  int degree_budget = 24;
};

// Reduced Groebner basis, monic, sorted by increasing leading monomial.
// Buchberger with the Gebauer-Moeller pair criteria.
std::vector<Poly> groebner(const std::vector<Poly>& gens, MonomialOrder order = MonomialOrder::grlex(),
                           GroebnerOptions opts = {});

Exponents leading_exponents(const Poly& f, MonomialOrder order);
// Fully reduced remainder of f by a Groebner basis in the given order.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order = MonomialOrder::grlex());
bool is_unit_ideal(const std::vector<Poly>& basis);

bool ideal_member(const Poly& f, const std::vector<Poly>& gens, GroebnerOptions opts = {});

// Expresses polynomials in the subalgebra k[g_1..g_k] through the
// elimination ideal of (t_i - g_i) with the original variables eliminated.
class SubalgebraMembership {
 public:
  SubalgebraMembership(std::vector<Poly> gens, PolyRing tag_ring, GroebnerOptions opts = {});

  // P in tag_ring with P(g) = f, or nullopt when f is outside the subalgebra.
  std::optional<Poly> express(const Poly& f) const;
  // Generators of the ideal of relations among the g_i, in tag_ring.
  std::vector<Poly> relations() const;
  const PolyRing& tag_ring() const { return tag_ring_; }

 private:
  std::vector<Poly> gens_;
  PolyRing source_, tag_ring_, joint_;
  std::vector<Poly> basis_;
};

std::optional<Poly> subalgebra_member(const Poly& f, const std::vector<Poly>& gens, GroebnerOptions opts = {});
// Ring with variables t1..tk.
PolyRing tag_ring(int k);

}  // namespace pwb
