#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pwb/symmetry.hpp"

namespace pwb {

// A word in the free algebra; letter i < n is m_i, letter n + i is h_i.
using Word = std::vector<int>;

// Formal sum of words, kept in first-occurrence order with nonzero coefficients.
struct NCPoly {
  std::vector<std::pair<Word, Cyclo>> terms;
  void add(const Word& w, const Cyclo& c);
  bool is_zero() const { return terms.empty(); }
};

struct NCPresentation {
  int n = 0;
  std::vector<std::string> generators;  // m_<var>..., then h_<var>...
  std::vector<NCPoly> relations;        // homogeneous of degree 2
  long conductor = 1;

  // "h_x*m_y - m_y*h_x - 2*m_x*m_y = 0".
  std::string relation_str(std::size_t i) const;
  std::string str(const NCPoly& p) const;
};

// [m_i,m_j] (i<j); [h_i,m_j] - m{x_i,x_j} (all i,j); [h_i,h_j] - h{x_i,x_j}
// (i<j), where m(x_k x_l) = m_k m_l and h(x_k x_l) = m_k h_l + m_l h_k.
// With paper_aliases the generators are named <var>1 for m and <var>2 for h.
// Throws NotQuadratic.
NCPresentation envelope_presentation(const PoissonAlgebra& a, bool paper_aliases = false);

// diag(g, g) on (m, h), checked to map the relation space into itself.
// Throws NotAutomorphism.
GradedMap envelope_extend(const PoissonAlgebra& a, const GradedMap& g);

struct EnvelopeTrace {
  RationalSeries series;       // trace series of g on A, squared
  RationalSeries extended;     // trace series of diag(g, g)
  bool quasi_reflection = false;
};
// Throws NotReflection when g is not a Poisson reflection of A.
EnvelopeTrace envelope_trace(const PoissonAlgebra& a, const GradedMap& g);

// True when s = 1 / ((1 - xi t)(1 - t)^(nvars - 1)) with xi a root of unity != 1.
bool is_quasi_reflection_series(const RationalSeries& s, int nvars);

// Dimensions of the degree 0..d components of the free algebra on 2n letters
// modulo span{u r v}. Throws NotQuadratic, CapExceeded when d > cap.
std::vector<long> envelope_dims(const PoissonAlgebra& a, int d, int cap = 4);

}  // namespace pwb
