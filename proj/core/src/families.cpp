#include "pwb/families.hpp"

#include <algorithm>

#include "pwb/errors.hpp"

namespace pwb {

std::vector<std::string> default_names(int n) {
  static const std::vector<std::string> xyz{"x", "y", "z"};
  if (n <= 3) return std::vector<std::string>(xyz.begin(), xyz.begin() + std::max(n, 0));
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

PoissonAlgebra skew_symmetric(const Matrix& q, std::vector<std::string> names) {
  int n = q.rows();
  if (q.cols() != n) throw NotSkew("q must be square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q(i, j) != -q(j, i))
        throw NotSkew("q_" + std::to_string(i + 1) + std::to_string(j + 1) + " != -q_" + std::to_string(j + 1) +
                      std::to_string(i + 1));
  if (names.empty()) names = default_names(n);
  long cond = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cond = lcm(cond, q(i, j).conductor());
  PolyRing ring(std::move(names), cond);
  PoissonAlgebra::Table t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (q(i, j).is_zero()) continue;
      Exponents e(n, 0);
      e[i] = e[j] = 1;
      t.emplace(std::make_pair(i, j), Poly::monomial(ring, e, q(i, j)));
    }
  return PoissonAlgebra(ring, t, true, "skew");
}

PoissonAlgebra jacobian(const Poly& f) {
  const PolyRing& ring = f.ring();
  if (ring.nvars() != 3) throw InvalidArgument("a Jacobian bracket needs exactly 3 variables");
  if (f.is_zero()) throw ZeroPotential("potential must be nonzero");
  PoissonAlgebra::Table t;
  auto put = [&](int i, int j, int k) {
    Poly p = f.partial(k);
    if (!p.is_zero()) t.emplace(std::make_pair(i, j), p);
  };
  put(0, 1, 2);
  put(1, 2, 0);
  // {z, x} = f_y is stored as {x, z} = -f_y.
  Poly fy = f.partial(1);
  if (!fy.is_zero()) t.emplace(std::make_pair(0, 2), -fy);
  return PoissonAlgebra(ring, t, false, "jacobian");
}

Poly potential_fpq(const Cyclo& p, const Cyclo& q, const PolyRing& ring) {
  Poly out(ring);
  Cyclo third = p * Cyclo(Rational(1, 3));
  for (int i = 0; i < 3; ++i) {
    Exponents e(3, 0);
    e[i] = 3;
    out += Poly::monomial(ring, e, third);
  }
  out += Poly::monomial(ring, {1, 1, 1}, q);
  return out;
}

PoissonAlgebra jacobian_fpq(const Cyclo& p, const Cyclo& q) {
  PolyRing ring({"x", "y", "z"}, lcm(p.conductor(), q.conductor()));
  return jacobian(potential_fpq(p, q, ring));
}

PoissonAlgebra quantum_matrices(int n) {
  if (n < 2) throw InvalidArgument("quantum matrices need n >= 2");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
  std::map<std::string, int> aliases;
  if (n == 2) aliases = {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 3}};
  PolyRing ring(names, 1, aliases);
  auto x = [&](int i, int j) { return Poly::variable(ring, qm_index(n, i, j)); };
  PoissonAlgebra::Table t;
  auto put = [&](int i1, int j1, int i2, int j2, const Poly& p) {
    if (!p.is_zero()) t.emplace(std::make_pair(qm_index(n, i1, j1), qm_index(n, i2, j2)), p);
  };
  // i < j and l < m: {x_il, x_im} = x_il x_im, {x_il, x_jl} = x_il x_jl,
  // {x_il, x_jm} = 2 x_im x_jl, {x_im, x_jl} = 0.
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n; ++l)
      for (int m = l + 1; m <= n; ++m) put(i, l, i, m, x(i, l) * x(i, m));
  for (int l = 1; l <= n; ++l)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) put(i, l, j, l, x(i, l) * x(j, l));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m) put(i, l, j, m, (x(i, m) * x(j, l)).scaled(Cyclo(2)));
  return PoissonAlgebra(ring, t, false, "O(M" + std::to_string(n) + ")");
}

namespace {

std::vector<std::string> weyl_names(int n, bool with_z) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  if (with_z) names.push_back("z");
  return names;
}

}  // namespace

PoissonAlgebra weyl(int n) {
  if (n < 1) throw InvalidArgument("Weyl algebra needs n >= 1");
  PolyRing ring(weyl_names(n, false));
  PoissonAlgebra::Table t;
  for (int i = 0; i < n; ++i) t.emplace(std::make_pair(i, n + i), Poly::constant(ring, Cyclo(1)));
  return PoissonAlgebra(ring, t, true, "P" + std::to_string(n));
}

PoissonAlgebra homogenized_weyl(int n) {
  if (n < 1) throw InvalidArgument("homogenized Weyl algebra needs n >= 1");
  PolyRing ring(weyl_names(n, true));
  Poly z2 = Poly::variable(ring, 2 * n).pow(2);
  PoissonAlgebra::Table t;
  for (int i = 0; i < n; ++i) t.emplace(std::make_pair(i, n + i), z2);
  return PoissonAlgebra(ring, t, true, "H" + std::to_string(n));
}

Vec LieData::bracket(int i, int j) const {
  if (i == j) return Vec(dim);
  if (i < j) {
    auto it = brackets.find({i, j});
    return it == brackets.end() ? Vec(dim) : it->second;
  }
  Vec v = bracket(j, i);
  for (auto& c : v) c = -c;
  return v;
}

Vec LieData::bracket(const Vec& a, const Vec& b) const {
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero() || i == j) continue;
      Cyclo s = a[i] * b[j];
      Vec c = bracket(i, j);
      for (int k = 0; k < dim; ++k)
        if (!c[k].is_zero()) out[k] += s * c[k];
    }
  }
  return out;
}

Matrix LieData::ad(int i) const {
  std::vector<Vec> cols;
  for (int j = 0; j < dim; ++j) cols.push_back(bracket(i, j));
  return Matrix::from_columns(cols);
}

LieData lie_abelian(int n) {
  LieData l;
  l.dim = n;
  for (int i = 1; i <= n; ++i) l.names.push_back("x" + std::to_string(i));
  return l;
}

LieData lie_two_dim() {
  LieData l = lie_abelian(2);
  l.brackets[{0, 1}] = Vec{Cyclo(0), Cyclo(1)};
  return l;
}

LieData lie_sl2() {
  LieData l;
  l.dim = 3;
  l.names = {"e", "f", "h"};
  l.brackets[{0, 1}] = Vec{Cyclo(0), Cyclo(0), Cyclo(1)};   // [e,f] = h
  l.brackets[{0, 2}] = Vec{Cyclo(-2), Cyclo(0), Cyclo(0)};  // [e,h] = -2e
  l.brackets[{1, 2}] = Vec{Cyclo(0), Cyclo(2), Cyclo(0)};   // [f,h] = 2f
  return l;
}

void lie_jacobi_check(const LieData& l) {
  auto e = [&](int i) {
    Vec v(l.dim);
    v[i] = Cyclo(1);
    return v;
  };
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j)
      for (int k = j + 1; k < l.dim; ++k) {
        Vec s(l.dim);
        Vec a = l.bracket(e(i), l.bracket(j, k));
        Vec b = l.bracket(e(j), l.bracket(k, i));
        Vec c = l.bracket(e(k), l.bracket(i, j));
        for (int t = 0; t < l.dim; ++t) s[t] = a[t] + b[t] + c[t];
        if (!is_zero_vec(s))
          throw LieJacobiFails("Lie Jacobi identity fails on (" + l.names[i] + "," + l.names[j] + "," + l.names[k] + ")");
      }
}

PoissonAlgebra ph_lie(const LieData& l) {
  lie_jacobi_check(l);
  int n = l.dim;
  std::vector<std::string> names = l.names;
  names.push_back("z");
  long cond = 1;
  for (const auto& [k, v] : l.brackets)
    for (const auto& c : v) cond = lcm(cond, c.conductor());
  PolyRing ring(names, cond);
  Poly z = Poly::variable(ring, n);
  PoissonAlgebra::Table t;
  for (const auto& [key, v] : l.brackets) {
    Vec full(n + 1);
    for (int k = 0; k < n; ++k) full[k] = v[k];
    Poly p = Poly::linear(ring, full) * z;
    if (!p.is_zero()) t.emplace(key, p);
  }
  return PoissonAlgebra(ring, t, false, "PH");
}

SolutionSet lie_one_dim_ideals(const LieData& l, GroebnerOptions opts) {
  int n = l.dim;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("mu" + std::to_string(i));
  long cond = 1;
  for (const auto& [k, v] : l.brackets)
    for (const auto& c : v) cond = lcm(cond, c.conductor());
  PolyRing ring(names, cond);
  std::vector<Poly> mu;
  for (int i = 0; i < n; ++i) mu.push_back(Poly::variable(ring, i));
  // [x_i, b] is parallel to b: all 2x2 minors of (ad_i mu | mu) vanish.
  std::vector<Poly> eqs;
  for (int i = 0; i < n; ++i) {
    Matrix ad = l.ad(i);
    std::vector<Poly> img(n, Poly(ring));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (!ad(p, q).is_zero()) img[p] += mu[q].scaled(ad(p, q));
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        Poly m = img[p] * mu[q] - img[q] * mu[p];
        if (!m.is_zero()) eqs.push_back(std::move(m));
      }
  }
  return solve_projective(eqs, ring, opts);
}

}  // namespace pwb
