#include "pwb/poisson.hpp"

#include <algorithm>

#include "pwb/errors.hpp"

namespace pwb {

PoissonAlgebra::PoissonAlgebra(PolyRing ring, const Table& table, bool defer_jacobi, std::string name)
    : ring_(std::move(ring)), name_(std::move(name)) {
  int n = ring_.nvars();
  full_.assign(static_cast<std::size_t>(n) * n, Poly(ring_));
  for (const auto& [key, p] : table) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("bracket index out of range");
    if (p.ring() != ring_) throw InvalidArgument("bracket entry over a different ring");
    if (i == j) {
      if (!p.is_zero()) throw InvalidArgument("{" + ring_.var(i) + "," + ring_.var(i) + "} must vanish");
      continue;
    }
    full_[static_cast<std::size_t>(i) * n + j] = p;
    full_[static_cast<std::size_t>(j) * n + i] = -p;
  }
  bool first = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Poly& p = this->table(i, j);
      if (p.is_zero()) continue;
      int d = p.is_homogeneous() ? p.total_degree() : -1;
      if (d != 2) quadratic_ = false;
      if (first) {
        shift_ = d >= 0 ? std::optional<int>(d) : std::nullopt;
        first = false;
      } else if (!shift_ || *shift_ != d) {
        shift_.reset();
      }
    }
  if (first) shift_ = 2;
  if (!defer_jacobi) {
    JacobiResult r = jacobi_check(*this);
    if (!r.ok)
      throw JacobiFailure("Jacobi identity fails on (" + ring_.var(r.triple[0]) + "," + ring_.var(r.triple[1]) + "," +
                          ring_.var(r.triple[2]) + "): " + r.cyclic_sum.str());
  }
}

PoissonAlgebra::Table PoissonAlgebra::entries() const {
  Table t;
  for (int i = 0; i < nvars(); ++i)
    for (int j = i + 1; j < nvars(); ++j)
      if (!table(i, j).is_zero()) t.emplace(std::make_pair(i, j), table(i, j));
  return t;
}

bool PoissonAlgebra::is_zero() const {
  return std::all_of(full_.begin(), full_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly bracket(const PoissonAlgebra& a, const Poly& f, const Poly& g) {
  int n = a.nvars();
  Poly out(a.ring());
  if (f.is_constant() || g.is_constant()) return out;
  std::vector<Poly> df(n, Poly(a.ring())), dg(n, Poly(a.ring()));
  for (int i : f.support()) df[i] = f.partial(i);
  for (int i : g.support()) dg[i] = g.partial(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Poly& p = a.table(i, j);
      if (p.is_zero()) continue;
      Poly w = df[i] * dg[j] - df[j] * dg[i];
      if (!w.is_zero()) out += p * w;
    }
  return out;
}

JacobiResult jacobi_check(const PoissonAlgebra& a) {
  int n = a.nvars();
  JacobiResult r;
  r.cyclic_sum = Poly(a.ring());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto x = [&](int v) { return Poly::variable(a.ring(), v); };
        Poly s = bracket(a, x(i), a.table(j, k)) + bracket(a, x(j), a.table(k, i)) + bracket(a, x(k), a.table(i, j));
        if (!s.is_zero()) {
          r.ok = false;
          r.triple = {i, j, k};
          r.cyclic_sum = s;
          return r;
        }
      }
  return r;
}

Poly PoissonDerivation::apply(const Poly& f) const {
  const PolyRing& ring = f.ring();
  Poly out(ring);
  for (int i : f.support())
    if (!images[i].is_zero()) out += f.partial(i) * images[i];
  return out;
}

bool PoissonDerivation::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<PoissonDerivation> normal_check(const PoissonAlgebra& a, const Poly& u) {
  if (u.is_zero()) throw ZeroElement("normal_check needs u != 0");
  PoissonDerivation pi;
  for (int j = 0; j < a.nvars(); ++j) {
    auto q = divides(u, bracket(a, u, Poly::variable(a.ring(), j)));
    if (!q) return std::nullopt;
    pi.images.push_back(std::move(*q));
  }
  return pi;
}

SolutionSet normal_find_deg1(const PoissonAlgebra& a, GroebnerOptions opts) {
  int n = a.nvars();
  std::vector<ChartSystem> charts;
  for (int k = 0; k < n; ++k) {
    int m = n - k - 1;
    // Joint ring: unknowns mu_{k+1..n-1} first, then x_1..x_n.
    std::vector<std::string> mu_names, joint_names;
    for (int i = k + 1; i < n; ++i) mu_names.push_back("mu" + std::to_string(i + 1));
    joint_names = mu_names;
    for (const auto& v : a.ring().vars()) joint_names.push_back(v);
    PolyRing mu_ring(mu_names, a.ring().conductor());
    PolyRing joint(joint_names, a.ring().conductor());
    std::vector<int> lift(n);
    for (int j = 0; j < n; ++j) lift[j] = m + j;
    auto mu = [&](int i) { return Poly::variable(joint, i - k - 1); };

    // x_k = -sum mu_i x_i kills exactly the multiples of u = x_k + sum mu_i x_i.
    std::vector<Poly> images;
    for (int i = 0; i < m; ++i) images.push_back(Poly::variable(joint, i));
    Poly xk(joint);
    for (int i = k + 1; i < n; ++i) xk -= mu(i) * Poly::variable(joint, m + i);
    for (int j = 0; j < n; ++j) images.push_back(j == k ? xk : Poly::variable(joint, m + j));

    std::vector<int> outer;
    for (int j = 0; j < n; ++j) outer.push_back(m + j);
    ChartSystem ch{k, mu_ring, {}};
    for (int j = 0; j < n; ++j) {
      Poly b = a.table(k, j).remap(joint, lift);
      for (int i = k + 1; i < n; ++i)
        if (!a.table(i, j).is_zero()) b += mu(i) * a.table(i, j).remap(joint, lift);
      if (b.is_zero()) continue;
      Poly r = b.substitute(images, joint);
      for (auto& [e, c] : split_coefficients(r, outer, mu_ring)) ch.equations.push_back(c);
    }
    charts.push_back(std::move(ch));
  }
  return solve_charts(n, charts, opts);
}

PoissonDerivation modular_derivation(const PoissonAlgebra& a) {
  PoissonDerivation phi;
  for (int k = 0; k < a.nvars(); ++k) {
    Poly s(a.ring());
    for (int j = 0; j < a.nvars(); ++j)
      if (j != k && !a.table(k, j).is_zero()) s += a.table(k, j).partial(j);
    phi.images.push_back(std::move(s));
  }
  return phi;
}

bool is_unimodular(const PoissonAlgebra& a) { return modular_derivation(a).is_zero(); }

std::vector<std::vector<Poly>> center_truncated(const PoissonAlgebra& a, int d) {
  if (d < 0) throw InvalidArgument("degree bound must be nonnegative");
  int n = a.nvars();
  std::vector<std::vector<Poly>> out;
  for (int k = 0; k <= d; ++k) {
    MonomialIndex mons(monomials_of_degree(n, k));
    // images[j][c] = {m_c, x_j}
    std::vector<std::vector<Poly>> images(n);
    for (int j = 0; j < n; ++j)
      for (const auto& e : mons.monomials)
        images[j].push_back(bracket(a, Poly::monomial(a.ring(), e), Poly::variable(a.ring(), j)));
    std::vector<Vec> rows;
    for (int j = 0; j < n; ++j) {
      MonomialIndex idx = monomial_index_of(images[j]);
      Matrix cm = coefficient_matrix(images[j], idx).transpose();
      for (int r = 0; r < cm.rows(); ++r) rows.push_back(cm.row(r));
    }
    std::vector<Poly> basis;
    if (rows.empty()) {
      for (const auto& e : mons.monomials) basis.push_back(Poly::monomial(a.ring(), e));
    } else {
      Matrix sys = Matrix::from_rows(rows);
      for (auto& v : sys.kernel()) basis.push_back(mons.poly(a.ring(), v));
    }
    out.push_back(std::move(basis));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> monomial_minimal_primes(const std::vector<Poly>& gens, int n) {
  if (n > 20) throw CapExceeded("minimal primes are enumerated for at most 20 variables");
  std::vector<unsigned long> supports;
  for (const auto& g : gens) {
    unsigned long mask = 0;
    for (int v : g.support()) mask |= 1UL << v;
    if (mask == 0) return {};  // unit ideal
    supports.push_back(mask);
  }
  std::vector<unsigned long> masks;
  for (unsigned long s = 0; s < (1UL << n); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned long x, unsigned long y) { return __builtin_popcountl(x) < __builtin_popcountl(y); });
  std::vector<unsigned long> found;
  for (unsigned long s : masks) {
    bool covers = std::all_of(supports.begin(), supports.end(), [s](unsigned long g) { return (g & s) != 0; });
    if (!covers) continue;
    bool minimal = std::none_of(found.begin(), found.end(), [s](unsigned long f) { return (f & s) == f; });
    if (minimal) found.push_back(s);
  }
  std::vector<std::vector<int>> out;
  for (unsigned long s : found) {
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1UL) vars.push_back(v);
    out.push_back(std::move(vars));
  }
  return out;
}

}  // namespace

DerivedIdeal derived_ideal_truncated(const PoissonAlgebra& a, int d, GroebnerOptions opts) {
  int n = a.nvars();
  DerivedIdeal out;
  for (const auto& [key, p] : a.entries()) out.generators.push_back(p);
  bool graded = a.degree_shift().has_value();
  for (int k = 0; k <= d; ++k) {
    std::vector<Poly> span;
    for (const auto& p : out.generators) {
      int dp = p.total_degree();
      int lo = graded ? k - dp : 0;
      for (int e = std::max(lo, 0); e <= k - dp; ++e)
        for (const auto& m : monomials_of_degree(n, e)) span.push_back(p.mul_monomial(m, Cyclo(1)));
    }
    std::vector<Poly> basis;
    if (!span.empty()) {
      MonomialIndex idx = monomial_index_of(span);
      std::vector<Vec> rows;
      Matrix cm = coefficient_matrix(span, idx);
      for (int r = 0; r < cm.rows(); ++r) rows.push_back(cm.row(r));
      for (const auto& v : rref_basis(rows)) basis.push_back(idx.poly(a.ring(), v));
    }
    out.dims.push_back(static_cast<int>(basis.size()));
    out.basis.push_back(std::move(basis));
  }
  if (!out.generators.empty()) {
    out.groebner = groebner(out.generators, MonomialOrder::grlex(), opts);
    out.monomial = std::all_of(out.groebner.begin(), out.groebner.end(), [](const Poly& p) { return p.size() == 1; });
  } else {
    out.monomial = true;
  }
  if (out.monomial) out.minimal_primes = out.generators.empty() ? std::vector<std::vector<int>>{{}}
                                                                : monomial_minimal_primes(out.groebner, n);
  return out;
}

std::vector<std::vector<int>> derived_ideal_components(const PoissonAlgebra& a, GroebnerOptions opts) {
  DerivedIdeal di = derived_ideal_truncated(a, 0, opts);
  if (!di.monomial) throw NotMonomial("derived ideal is not monomial in these coordinates");
  return di.minimal_primes;
}

PoissonAlgebra linear_change(const PoissonAlgebra& a, const Matrix& columns, std::vector<std::string> names,
                             std::string name) {
  int n = a.nvars();
  if (columns.rows() != n || columns.cols() != n || static_cast<int>(names.size()) != n)
    throw InvalidArgument("coordinate change must be square of size " + std::to_string(n));
  Matrix inv = columns.inverse();
  PolyRing target(std::move(names), a.ring().conductor());
  std::vector<Poly> y;
  for (int i = 0; i < n; ++i) y.push_back(Poly::linear(a.ring(), columns.column(i)));
  // x_j = sum_i inv(i, j) y_i.
  std::vector<Poly> x_images;
  for (int j = 0; j < n; ++j) {
    Vec c(n);
    for (int i = 0; i < n; ++i) c[i] = inv(i, j);
    x_images.push_back(Poly::linear(target, c));
  }
  PoissonAlgebra::Table t;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly b = bracket(a, y[i], y[j]);
      if (!b.is_zero()) t.emplace(std::make_pair(i, j), b.substitute(x_images, target));
    }
  return PoissonAlgebra(target, t, true, std::move(name));
}

std::optional<Matrix> skew_matrix(const PoissonAlgebra& a) {
  int n = a.nvars();
  Matrix q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Poly& p = a.table(i, j);
      if (p.is_zero()) continue;
      Exponents e(n, 0);
      e[i] += 1;
      e[j] += 1;
      if (p.size() != 1 || p.leading().exp != e) return std::nullopt;
      q(i, j) = p.leading().coeff;
      q(j, i) = -p.leading().coeff;
    }
  return q;
}

OreSplit ore_split(const PoissonAlgebra& a, const Vec& u, std::optional<std::vector<Vec>> complement) {
  int n = a.nvars();
  if (static_cast<int>(u.size()) != n || is_zero_vec(u)) throw InvalidArgument("u must be a nonzero linear form");
  OreSplit s;
  s.normal_var = u;
  int pivot = 0;
  while (u[pivot].is_zero()) ++pivot;
  if (complement) {
    s.complement = *complement;
  } else {
    for (int j = 0; j < n; ++j)
      if (j != pivot) {
        Vec e(n);
        e[j] = Cyclo(1);
        s.complement.push_back(e);
      }
  }
  if (static_cast<int>(s.complement.size()) != n - 1) throw InvalidArgument("complement needs n - 1 vectors");
  std::vector<Vec> cols{u};
  cols.insert(cols.end(), s.complement.begin(), s.complement.end());
  Matrix basis = Matrix::from_columns(cols);
  if (basis.rank() != n) throw InvalidArgument("u and the complement do not form a basis");

  auto name_of = [&](const Vec& v, const std::string& fallback) {
    int nz = 0, at = -1;
    for (int j = 0; j < n; ++j)
      if (!v[j].is_zero()) {
        ++nz;
        at = j;
      }
    return nz == 1 && v[at].is_one() ? a.ring().var(at) : fallback;
  };
  std::vector<std::string> names{name_of(u, "u")};
  for (int i = 0; i < n - 1; ++i) names.push_back(name_of(s.complement[i], "c" + std::to_string(i + 1)));
  s.changed = linear_change(a, basis, names, a.name() + "'");

  const PolyRing& full = s.changed.ring();
  std::vector<std::string> base_names(names.begin() + 1, names.end());
  PolyRing base_ring(base_names, a.ring().conductor());
  std::vector<int> drop(n);
  drop[0] = -1;
  for (int i = 1; i < n; ++i) drop[i] = i - 1;
  Poly y0 = Poly::variable(full, 0);

  auto witness = [&](int i, int j) {
    return "{" + names[i] + "," + names[j] + "} = " + s.changed.table(i, j).str();
  };
  for (int i = 1; i < n; ++i) {
    auto q = divides(y0, s.changed.table(0, i));
    if (!q) throw NotSplittable("u is not Poisson normal: " + witness(0, i));
    if (q->degree_in(0) > 0) throw NotSplittable("alpha leaves the complement: " + witness(0, i));
    s.alpha.images.push_back(q->remap(base_ring, drop));
  }
  PoissonAlgebra::Table bt;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Poly& p = s.changed.table(i, j);
      if (p.degree_in(0) > 0) throw NotSplittable("complement does not close: " + witness(i, j));
      if (!p.is_zero()) bt.emplace(std::make_pair(i - 1, j - 1), p.remap(base_ring, drop));
    }
  s.base = PoissonAlgebra(base_ring, bt, true, a.name() + "_base");
  return s;
}

PoissonAlgebra ore_reconstruct(const OreSplit& s) {
  const PolyRing& full = s.changed.ring();
  int n = full.nvars();
  std::vector<int> lift(n - 1);
  for (int i = 0; i < n - 1; ++i) lift[i] = i + 1;
  PoissonAlgebra::Table t;
  Poly y0 = Poly::variable(full, 0);
  for (int i = 1; i < n; ++i) {
    Poly p = s.alpha.images[i - 1].remap(full, lift) * y0;
    if (!p.is_zero()) t.emplace(std::make_pair(0, i), p);
  }
  for (const auto& [key, p] : s.base.entries()) t.emplace(std::make_pair(key.first + 1, key.second + 1), p.remap(full, lift));
  return PoissonAlgebra(full, t, true, s.changed.name());
}

}  // namespace pwb
