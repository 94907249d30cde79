#include "pwb/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pwb/errors.hpp"

namespace pwb {
namespace {

long matrix_conductor(const Matrix& m) {
  long c = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c = lcm(c, m(i, j).conductor());
  return c;
}

LinearClass compute_linear_class(const Matrix& m) {
  LinearClass lc;
  int n = m.rows();
  Matrix id = Matrix::identity(n);
  if (m.is_identity()) {
    lc.identity = true;
    lc.order = 1;
    return lc;
  }
  if (m.det().is_zero()) return lc;
  UPoly mp = m.minpoly();
  if (gcd(mp, mp.derivative()).degree() > 0) return lc;
  // Roots of unity in a degree-n extension of Q(zeta_N) have phi(d) <= n phi(N).
  long bound = n * euler_phi(matrix_conductor(m));
  long order = 1;
  UPoly rest = mp;
  for (long d = 1; rest.degree() > 0 && d <= 2 * bound * bound + 2; ++d) {
    if (euler_phi(d) > bound) continue;
    UPoly g = gcd(rest, UPoly::cyclotomic(d));
    if (g.degree() <= 0) continue;
    rest = divmod(rest, g).first;
    order = lcm(order, d);
  }
  if (rest.degree() > 0) return lc;
  lc.order = order;
  Matrix gm1 = m - id;
  if (gm1.rank() == 1) {
    lc.reflection = true;
    lc.xi = m.trace() - Cyclo(n - 1);
    auto eig = (m - id.scaled(lc.xi)).kernel();
    lc.eigenbasis.push_back(normalize_first(eig.at(0)));
    for (auto& v : gm1.kernel()) lc.eigenbasis.push_back(v);
  }
  return lc;
}

// Coefficients over x of a polynomial on the joint ring [params..., x...].
void push_x_coefficients(const Poly& f, int nparams, const PolyRing& param_ring, std::vector<Poly>& out) {
  std::vector<int> outer;
  for (int j = nparams; j < f.ring().nvars(); ++j) outer.push_back(j);
  for (auto& [e, c] : split_coefficients(f, outer, param_ring)) out.push_back(c);
}

// Full bracket table moved onto a ring whose x variables start at offset.
std::vector<Poly> lift_table(const PoissonAlgebra& a, const PolyRing& joint, int offset) {
  int n = a.nvars();
  std::vector<int> lift(n);
  for (int j = 0; j < n; ++j) lift[j] = offset + j;
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back(a.table(i, j).remap(joint, lift));
  return out;
}

std::string matrix_key(const Matrix& m, long conductor) {
  std::string k;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Cyclo c = m(i, j).lift(conductor);
      for (const auto& r : c.coeffs()) k += r.get_str() + ",";
      k += ";";
    }
  return k;
}

}  // namespace

GradedMap::GradedMap(Matrix m, std::string name)
    : m_(std::move(m)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("graded map must be square");
}

const LinearClass& GradedMap::linear_class() const {
  if (!cache_) throw InvalidArgument("empty graded map");
  std::call_once(cache_->once, [this] { cache_->value = compute_linear_class(m_); });
  return cache_->value;
}

AutomorphismCheck is_poisson_automorphism(const PoissonAlgebra& a, const Matrix& g) {
  int n = a.nvars();
  if (g.rows() != n || g.cols() != n) throw InvalidArgument("map size does not match the algebra");
  if (g.det().is_zero()) throw SingularMatrix("graded map is not invertible");
  std::vector<Poly> img;
  for (int i = 0; i < n; ++i) img.push_back(linear_image(g, a.ring(), i));
  AutomorphismCheck r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (apply_linear(g, a.table(i, j)) != bracket(a, img[i], img[j])) {
        r.ok = false;
        r.failing = {i, j};
        return r;
      }
  return r;
}

const char* kind_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::NotAutomorphism:
      return "NotAutomorphism";
    case Classification::Kind::InfiniteOrder:
      return "InfiniteOrder";
    case Classification::Kind::Identity:
      return "Identity";
    case Classification::Kind::Reflection:
      return "Reflection";
    case Classification::Kind::FiniteNonReflection:
      return "FiniteNonReflection";
  }
  return "?";
}

Classification classify(const PoissonAlgebra& a, const GradedMap& g) {
  Classification c;
  if (g.matrix().det().is_zero()) {
    c.kind = Classification::Kind::NotAutomorphism;
    return c;
  }
  AutomorphismCheck ac = is_poisson_automorphism(a, g.matrix());
  if (!ac.ok) {
    c.kind = Classification::Kind::NotAutomorphism;
    c.failing = ac.failing;
    return c;
  }
  const LinearClass& lc = g.linear_class();
  if (lc.identity) {
    c.kind = Classification::Kind::Identity;
  } else if (!lc.order) {
    c.kind = Classification::Kind::InfiniteOrder;
    c.order = 0;
  } else if (lc.reflection) {
    c.kind = Classification::Kind::Reflection;
    c.order = *lc.order;
    c.xi = lc.xi;
    c.eigenbasis = lc.eigenbasis;
  } else {
    c.kind = Classification::Kind::FiniteNonReflection;
    c.order = *lc.order;
  }
  return c;
}

std::vector<Poly> automorphism_ideal(const PoissonAlgebra& a, GroebnerOptions opts) {
  int n = a.nvars();
  int np = n * n + (n <= 3 ? 1 : 0);
  std::vector<std::string> pnames, jnames;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) pnames.push_back("g_" + std::to_string(i) + "_" + std::to_string(j));
  if (n <= 3) pnames.push_back("w");
  jnames = pnames;
  for (const auto& v : a.ring().vars()) jnames.push_back(v);
  PolyRing params(pnames, a.ring().conductor()), joint(jnames, a.ring().conductor());
  auto gv = [&](int i, int j) { return Poly::variable(joint, i * n + j); };
  std::vector<Poly> p = lift_table(a, joint, np);
  auto P = [&](int i, int j) -> const Poly& { return p[static_cast<std::size_t>(i) * n + j]; };

  // g(x_i) = sum_j g_j_i x_j.
  std::vector<Poly> images;
  for (int k = 0; k < np; ++k) images.push_back(Poly::variable(joint, k));
  for (int i = 0; i < n; ++i) {
    Poly gi(joint);
    for (int j = 0; j < n; ++j) gi += gv(j, i) * Poly::variable(joint, np + j);
    images.push_back(gi);
  }
  std::vector<Poly> eqs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly lhs = P(i, j).substitute(images, joint);
      Poly rhs(joint);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (k != l && !P(k, l).is_zero()) rhs += gv(k, i) * gv(l, j) * P(k, l);
      push_x_coefficients(lhs - rhs, np, params, eqs);
    }
  if (n <= 3) {
    // det via the Leibniz expansion on parameter polynomials.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Poly det(params);
    do {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inv;
      Poly term = Poly::constant(params, Cyclo(inv % 2 ? -1 : 1));
      for (int i = 0; i < n; ++i) term = term * Poly::variable(params, i * n + perm[i]);
      det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    eqs.push_back(Poly::variable(params, n * n) * det - Poly::constant(params, Cyclo(1)));
  }
  return groebner(eqs, MonomialOrder::grlex(), opts);
}

const char* kind_name(ReflectionReport::Kind k) {
  switch (k) {
    case ReflectionReport::Kind::NoReflections:
      return "NoReflections";
    case ReflectionReport::Kind::Families:
      return "Families";
    case ReflectionReport::Kind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

struct Candidate {
  Vec direction;
  std::vector<Vec> basis;
  int chart = -1;
};

// Equations in [lambda..., phi_1..phi_n, w] for g = I + u phi^T to be a
// Poisson automorphism with s = phi . u satisfying s (1 + s) != 0.
struct ReflectionSystem {
  PolyRing params;
  std::vector<Poly> equations;
  std::vector<Poly> u;  // coordinates of u in params
  Poly s;
  int nlambda = 0;
};

ReflectionSystem reflection_system(const PoissonAlgebra& a, const Candidate& c) {
  int n = a.nvars();
  ReflectionSystem rs;
  int r = static_cast<int>(c.basis.size());
  rs.nlambda = c.basis.empty() ? 0 : r - c.chart - 1;
  std::vector<std::string> pnames;
  for (int i = c.chart + 1; i < r && !c.basis.empty(); ++i) pnames.push_back("lambda" + std::to_string(i + 1));
  for (int i = 1; i <= n; ++i) pnames.push_back("phi" + std::to_string(i));
  pnames.push_back("w");
  int np = static_cast<int>(pnames.size());
  std::vector<std::string> jnames = pnames;
  for (const auto& v : a.ring().vars()) jnames.push_back(v);
  rs.params = PolyRing(pnames, a.ring().conductor());
  PolyRing joint(jnames, a.ring().conductor());

  // u as polynomials in lambda, on both rings.
  std::vector<Poly> uj(n, Poly(joint));
  if (c.basis.empty()) {
    for (int j = 0; j < n; ++j) uj[j] = Poly::constant(joint, c.direction[j]);
  } else {
    for (int j = 0; j < n; ++j) uj[j] = Poly::constant(joint, c.basis[c.chart][j]);
    for (int i = c.chart + 1; i < r; ++i)
      for (int j = 0; j < n; ++j)
        if (!c.basis[i][j].is_zero()) uj[j] += Poly::variable(joint, i - c.chart - 1).scaled(c.basis[i][j]);
  }
  auto phi = [&](int i) { return Poly::variable(joint, rs.nlambda + i); };
  Poly w = Poly::variable(joint, np - 1);
  Poly U(joint);
  for (int j = 0; j < n; ++j) U += uj[j] * Poly::variable(joint, np + j);

  std::vector<Poly> p = lift_table(a, joint, np);
  auto P = [&](int i, int j) -> const Poly& { return p[static_cast<std::size_t>(i) * n + j]; };

  std::vector<Poly> images;
  for (int k = 0; k < np; ++k) images.push_back(Poly::variable(joint, k));
  for (int i = 0; i < n; ++i) images.push_back(Poly::variable(joint, np + i) + phi(i) * U);
  // {x_i, U} = sum_k u_k P_ik.
  std::vector<Poly> xu(n, Poly(joint));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!P(i, k).is_zero()) xu[i] += uj[k] * P(i, k);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly lhs = P(i, j).substitute(images, joint);
      Poly rhs = P(i, j) + phi(j) * xu[i] - phi(i) * xu[j];
      push_x_coefficients(lhs - rhs, np, rs.params, rs.equations);
    }
  std::vector<int> to_params(np + n, -1);
  for (int k = 0; k < np; ++k) to_params[k] = k;
  Poly s(joint);
  for (int j = 0; j < n; ++j) s += phi(j) * uj[j];
  rs.s = s.remap(rs.params, to_params);
  for (int j = 0; j < n; ++j) rs.u.push_back(uj[j].remap(rs.params, to_params));
  Poly one = Poly::constant(rs.params, Cyclo(1));
  rs.equations.push_back(w.remap(rs.params, to_params) * rs.s * (one + rs.s) - one);
  return rs;
}

}  // namespace

ReflectionReport find_reflections(const PoissonAlgebra& a, GroebnerOptions opts) {
  ReflectionReport rep;
  rep.normal = normal_find_deg1(a, opts);
  if (rep.normal.kind == SolutionSet::Kind::IdealOnly) {
    rep.kind = ReflectionReport::Kind::Inconclusive;
    return rep;
  }
  std::vector<Candidate> cands;
  for (const auto& p : rep.normal.points) cands.push_back({p, {}, -1});
  if (rep.normal.kind == SolutionSet::Kind::LinearSubspace)
    for (int k = 0; k < static_cast<int>(rep.normal.basis.size()); ++k) cands.push_back({{}, rep.normal.basis, k});

  for (const auto& c : cands) {
    ReflectionSystem rs = reflection_system(a, c);
    std::vector<Poly> gb = groebner(rs.equations, MonomialOrder::grlex(), opts);
    if (is_unit_ideal(gb)) continue;

    // Eliminate every parameter but xi = 1 + s.
    int np = rs.params.nvars();
    std::vector<std::string> names = rs.params.vars();
    names.push_back("xi");
    PolyRing ext(names, rs.params.conductor());
    std::vector<int> up(np);
    for (int k = 0; k < np; ++k) up[k] = k;
    std::vector<Poly> eqs;
    for (const auto& g : gb) eqs.push_back(g.remap(ext, up));
    Poly xi = Poly::variable(ext, np);
    eqs.push_back(xi - Poly::constant(ext, Cyclo(1)) - rs.s.remap(ext, up));
    std::vector<Poly> elim = groebner(eqs, MonomialOrder::elimination(np), opts);
    UPoly acc;
    bool constrained = false;
    for (const auto& g : elim) {
      auto supp = g.support();
      if (supp.size() != 1 || supp[0] != np) continue;
      std::vector<Cyclo> cs(g.degree_in(np) + 1);
      for (const auto& t : g.terms()) cs[t.exp[np]] += t.coeff;
      UPoly u(cs);
      acc = constrained ? gcd(acc, u) : u;
      constrained = true;
    }
    ReflectionFamily fam;
    fam.direction = c.direction;
    fam.direction_basis = c.basis;
    fam.chart = c.chart;
    fam.params = rs.params;
    fam.ideal = gb;
    fam.xi_unconstrained = !constrained;
    if (constrained) {
      if (acc.degree() <= 0) continue;
      for (const auto& r : find_roots(acc).roots)
        if (!r.is_one() && is_root_of_unity(r)) fam.xi_values.push_back(r);
      if (fam.xi_values.empty()) continue;
      fam.order_two = fam.xi_values.size() == 1 && fam.xi_values[0] == Cyclo(-1);
    }
    rep.families.push_back(std::move(fam));
  }
  rep.kind = rep.families.empty() ? ReflectionReport::Kind::NoReflections : ReflectionReport::Kind::Families;
  return rep;
}

std::optional<Matrix> sample_reflection(const PoissonAlgebra& a, const ReflectionFamily& f, const Cyclo& xi,
                                        GroebnerOptions opts) {
  int n = a.nvars();
  Candidate c{f.direction, f.direction_basis, f.chart};
  ReflectionSystem rs = reflection_system(a, c);
  std::vector<Poly> eqs = f.ideal;
  eqs.push_back(rs.s - Poly::constant(rs.params, xi - Cyclo(1)));
  if (is_unit_ideal(groebner(eqs, MonomialOrder::grlex(), opts))) return std::nullopt;
  int np = rs.params.nvars();
  // Pin free parameters to small values while the system stays consistent.
  for (int k = 0; k + 1 < np; ++k) {
    for (int v : {0, 1, -1, 2}) {
      std::vector<Poly> trial = eqs;
      trial.push_back(Poly::variable(rs.params, k) - Poly::constant(rs.params, Cyclo(v)));
      if (!is_unit_ideal(groebner(trial, MonomialOrder::grlex(), opts))) {
        eqs = std::move(trial);
        break;
      }
    }
  }
  AffineSolution sol = solve_affine(eqs, rs.params, opts);
  if (!sol.resolved || sol.pieces.empty()) return std::nullopt;
  const Vec& pt = sol.pieces.front().point;
  std::vector<Poly> vals;
  for (const auto& v : pt) vals.push_back(Poly::constant(PolyRing(), v));
  Vec u(n), phi(n);
  for (int j = 0; j < n; ++j) u[j] = rs.u[j].substitute(vals, PolyRing()).constant_term();
  for (int j = 0; j < n; ++j) phi[j] = pt[rs.nlambda + j];
  Matrix g = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) += u[i] * phi[j];
  if (!is_poisson_automorphism(a, g).ok) return std::nullopt;
  return g;
}

RationalSeries trace_series(const Matrix& g) {
  if (g.det().is_zero()) throw SingularMatrix("trace series needs an invertible map");
  int n = g.rows();
  UPoly cp = g.charpoly();
  std::vector<Cyclo> rev(n + 1);
  for (int k = 0; k <= n; ++k) rev[k] = cp.coeff(n - k);
  return RationalSeries(UPoly(Cyclo(1)), UPoly(std::move(rev)));
}

PoissonGroup group_closure(const std::vector<GradedMap>& gens, std::size_t bound) {
  if (gens.empty()) throw InvalidArgument("group needs at least one generator");
  int n = gens[0].dim();
  long cond = 1;
  for (const auto& g : gens) {
    if (g.dim() != n) throw InvalidArgument("generators act on different dimensions");
    if (!g.order()) throw InvalidArgument("generator " + g.name() + " has infinite order");
    cond = lcm(cond, matrix_conductor(g.matrix()));
  }
  PoissonGroup G;
  G.generators = gens;
  std::map<std::string, std::size_t> seen;
  std::deque<std::size_t> frontier;
  auto add = [&](Matrix m) {
    std::string k = matrix_key(m, cond);
    if (seen.count(k)) return;
    if (G.elements.size() >= bound) throw BoundExceeded("group closure exceeds " + std::to_string(bound) + " elements");
    seen.emplace(std::move(k), G.elements.size());
    frontier.push_back(G.elements.size());
    G.elements.push_back(std::move(m));
  };
  add(Matrix::identity(n));
  while (!frontier.empty()) {
    std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) add(G.elements[i] * g.matrix());
  }
  for (const auto& m : G.elements) {
    Matrix p = m;
    long k = 1;
    while (!p.is_identity()) {
      p = p * m;
      ++k;
    }
    G.exponent = lcm(G.exponent, k);
  }
  return G;
}

RationalSeries molien_series(const PoissonGroup& g) {
  if (g.elements.empty()) throw InvalidArgument("group closure not materialized");
  // Elements sharing a characteristic polynomial share a trace series.
  std::map<std::string, std::pair<RationalSeries, long>> classes;
  long cond = 1;
  for (const auto& m : g.elements) cond = lcm(cond, matrix_conductor(m));
  for (const auto& m : g.elements) {
    UPoly cp = m.charpoly();
    std::string key;
    for (const auto& c : cp.coeffs()) {
      Cyclo l = c.lift(cond);
      for (const auto& r : l.coeffs()) key += r.get_str() + ",";
      key += ";";
    }
    auto it = classes.find(key);
    if (it == classes.end())
      classes.emplace(key, std::make_pair(trace_series(m), 1L));
    else
      ++it->second.second;
  }
  RationalSeries sum;
  for (const auto& [k, v] : classes) sum = sum + v.first.scaled(Cyclo(v.second));
  return sum.scaled(Cyclo(Rational(1, static_cast<long>(g.elements.size()))));
}

namespace {

void require_skew(const Matrix& q) {
  if (q.rows() != q.cols()) throw NotSkew("q must be square");
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j)
      if (q(i, j) != -q(j, i)) throw NotSkew("q is not skew-symmetric");
}

}  // namespace

Vec l_degree(const Matrix& q, const std::vector<int>& exps) {
  require_skew(q);
  int n = q.rows();
  if (static_cast<int>(exps.size()) != n) throw InvalidArgument("multi-index length mismatch");
  Vec out(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (exps[i]) out[j] += q(i, j) * Cyclo(exps[i]);
  return out;
}

Cyclo bicharacter(const Matrix& q, const std::vector<int>& i, const std::vector<int>& j) {
  Vec a = l_degree(q, i);
  Cyclo s;
  for (std::size_t k = 0; k < j.size(); ++k)
    if (j[k]) s += a[k] * Cyclo(j[k]);
  return s;
}

std::vector<std::vector<int>> block_decomposition(const Matrix& q) {
  require_skew(q);
  int n = q.rows();
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<int> b{i};
    used[i] = true;
    for (int k = i + 1; k < n; ++k)
      if (!used[k] && q.row(k) == q.row(i)) {
        if (!q(i, k).is_zero()) throw NotSkew("q_ik must vanish inside a block");
        b.push_back(k);
        used[k] = true;
      }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace pwb
