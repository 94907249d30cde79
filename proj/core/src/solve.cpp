#include "pwb/solve.hpp"

#include <algorithm>

#include "pwb/errors.hpp"

namespace pwb {

const char* kind_name(SolutionSet::Kind k) {
  switch (k) {
    case SolutionSet::Kind::Empty:
      return "Empty";
    case SolutionSet::Kind::LinearSubspace:
      return "LinearSubspace";
    case SolutionSet::Kind::FinitePoints:
      return "FinitePoints";
    case SolutionSet::Kind::IdealOnly:
      return "IdealOnly";
  }
  return "?";
}

bool SolutionSet::contains(const Vec& v) const {
  if (is_zero_vec(v)) return false;
  switch (kind) {
    case Kind::FinitePoints: {
      Vec w = normalize_first(v);
      return std::find(points.begin(), points.end(), w) != points.end();
    }
    case Kind::LinearSubspace: {
      std::vector<Vec> rows = basis;
      rows.push_back(v);
      return Matrix::from_rows(rows).rank() == static_cast<int>(basis.size());
    }
    default:
      return false;
  }
}

namespace {

constexpr int kMaxSplitDepth = 8;

// Univariate restriction of g to variable k, given values for variables > k.
UPoly restrict_to(const Poly& g, int k, const std::vector<Cyclo>& values) {
  std::vector<Cyclo> c;
  for (const auto& t : g.terms()) {
    Cyclo v = t.coeff;
    for (std::size_t j = k + 1; j < t.exp.size(); ++j)
      if (t.exp[j]) v *= values[j].pow(t.exp[j]);
    int e = t.exp[k];
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1);
    c[e] += v;
  }
  return UPoly(std::move(c));
}

bool only_vars_from(const Poly& g, int k) {
  for (const auto& t : g.terms())
    for (int j = 0; j < k; ++j)
      if (t.exp[j]) return false;
  return true;
}

bool is_zero_dimensional(const std::vector<Poly>& gb, int m) {
  std::vector<bool> seen(m, false);
  for (const auto& g : gb) {
    const Exponents& e = g.leading().exp;
    int nz = 0, var = -1;
    for (int j = 0; j < m; ++j)
      if (e[j]) {
        ++nz;
        var = j;
      }
    if (nz == 1) seen[var] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

AffinePiece linear_piece(const std::vector<Poly>& gb, int m) {
  Matrix a(static_cast<int>(gb.size()), m + 1);
  for (std::size_t r = 0; r < gb.size(); ++r) {
    Vec lc = gb[r].linear_coeffs();
    for (int j = 0; j < m; ++j) a(static_cast<int>(r), j) = lc[j];
    a(static_cast<int>(r), m) = -gb[r].constant_term();
  }
  auto piv = a.rref();
  AffinePiece piece;
  piece.point.assign(m, Cyclo());
  std::vector<bool> is_pivot(m, false);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    is_pivot[piv[r]] = true;
    piece.point[piv[r]] = a(static_cast<int>(r), m);
  }
  for (int f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    Vec d(m);
    d[f] = Cyclo(1);
    for (std::size_t r = 0; r < piv.size(); ++r) d[piv[r]] = -a(static_cast<int>(r), f);
    piece.directions.push_back(std::move(d));
  }
  return piece;
}

// Radical-preserving simplifications: squarefree univariate elements and
// squarefree monomials. Returns true when something changed.
bool shrink_to_radical(std::vector<Poly>& gb, const PolyRing& ring) {
  bool changed = false;
  for (auto& g : gb) {
    auto supp = g.support();
    if (g.size() == 1 && !supp.empty()) {
      Exponents e(ring.nvars(), 0);
      for (int v : supp) e[v] = 1;
      if (e != g.leading().exp) {
        g = Poly::monomial(ring, e);
        changed = true;
      }
    } else if (supp.size() == 1) {
      int v = supp[0];
      std::vector<Cyclo> c(g.degree_in(v) + 1);
      for (const auto& t : g.terms()) c[t.exp[v]] += t.coeff;
      UPoly sq = squarefree_part(UPoly(c));
      if (sq.degree() < g.degree_in(v)) {
        std::vector<Term> ts;
        for (int k = 0; k <= sq.degree(); ++k) {
          Exponents e(ring.nvars(), 0);
          e[v] = k;
          ts.push_back({e, sq.coeff(k)});
        }
        g = Poly::from_terms(ring, std::move(ts));
        changed = true;
      }
    }
  }
  return changed;
}

AffineSolution solve_rec(std::vector<Poly> eqs, const PolyRing& ring, GroebnerOptions opts, int depth) {
  AffineSolution out;
  int m = ring.nvars();
  eqs.erase(std::remove_if(eqs.begin(), eqs.end(), [](const Poly& p) { return p.is_zero(); }), eqs.end());
  std::vector<Poly> gb = eqs.empty() ? std::vector<Poly>{} : groebner(eqs, MonomialOrder::grlex(), opts);
  if (is_unit_ideal(gb)) return out;
  for (int round = 0; round < 6 && shrink_to_radical(gb, ring); ++round) {
    gb = groebner(gb, MonomialOrder::grlex(), opts);
    if (is_unit_ideal(gb)) return out;
  }
  bool linear = std::all_of(gb.begin(), gb.end(), [](const Poly& p) { return p.total_degree() <= 1; });
  if (linear) {
    out.pieces.push_back(linear_piece(gb, m));
    return out;
  }
  if (is_zero_dimensional(gb, m)) {
    std::vector<Poly> lex = groebner(gb, MonomialOrder::lex(), opts);
    std::vector<Cyclo> values(m);
    bool ok = true;
    auto rec = [&](auto&& self, int k) -> void {
      if (!ok) return;
      if (k < 0) {
        out.pieces.push_back({values, {}});
        return;
      }
      UPoly acc;
      for (const auto& g : lex) {
        if (!only_vars_from(g, k) || g.degree_in(k) <= 0) continue;
        UPoly u = restrict_to(g, k, values);
        acc = acc.is_zero() ? u : gcd(acc, u);
      }
      if (acc.is_zero()) {
        ok = false;
        return;
      }
      if (acc.degree() == 0) return;
      RootSearch rs = find_roots(acc);
      if (!rs.complete()) {
        ok = false;
        return;
      }
      for (const auto& r : rs.roots) {
        values[k] = r;
        self(self, k - 1);
      }
      values[k] = Cyclo();
    };
    rec(rec, m - 1);
    if (!ok) {
      out.resolved = false;
      out.pieces.clear();
      out.unresolved_basis = lex;
    }
    return out;
  }
  if (depth < kMaxSplitDepth) {
    // V(I) = V(I + v) u V(I + g / v) when the variable v divides g.
    for (const auto& g : gb) {
      for (int v = 0; v < m; ++v) {
        bool divisible = std::all_of(g.terms().begin(), g.terms().end(), [v](const Term& t) { return t.exp[v] > 0; });
        if (!divisible) continue;
        Exponents ev(m, 0);
        ev[v] = 1;
        Poly cof = *divides(Poly::monomial(ring, ev), g);
        std::vector<Poly> left = gb, right = gb;
        left.push_back(Poly::variable(ring, v));
        right.push_back(cof);
        AffineSolution a = solve_rec(left, ring, opts, depth + 1);
        AffineSolution b = solve_rec(right, ring, opts, depth + 1);
        if (!a.resolved) return a;
        if (!b.resolved) return b;
        out.pieces = a.pieces;
        out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
        return out;
      }
    }
    // Split on the roots of a univariate element.
    for (const auto& g : gb) {
      auto supp = g.support();
      if (supp.size() != 1) continue;
      int v = supp[0];
      std::vector<Cyclo> c(g.degree_in(v) + 1);
      for (const auto& t : g.terms()) c[t.exp[v]] += t.coeff;
      RootSearch rs = find_roots(UPoly(c));
      if (!rs.complete()) break;
      for (const auto& r : rs.roots) {
        std::vector<Poly> sub = gb;
        sub.push_back(Poly::variable(ring, v) - Poly::constant(ring, r));
        AffineSolution a = solve_rec(sub, ring, opts, depth + 1);
        if (!a.resolved) return a;
        out.pieces.insert(out.pieces.end(), a.pieces.begin(), a.pieces.end());
      }
      return out;
    }
  }
  out.resolved = false;
  out.unresolved_basis = gb;
  return out;
}

// Affine subspace {v in span(rows) : v_j = 0 for j < k, v_k = 1}; nullopt if empty.
std::optional<AffinePiece> chart_slice(const std::vector<Vec>& rows, int n, int k) {
  int r = static_cast<int>(rows.size());
  Matrix a(k + 1, r + 1);
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i < r; ++i) a(j, i) = rows[i][j];
    a(j, r) = Cyclo(j == k ? 1 : 0);
  }
  auto piv = a.rref();
  if (!piv.empty() && piv.back() == r) return std::nullopt;
  Vec c(r);
  std::vector<bool> is_pivot(r, false);
  for (std::size_t q = 0; q < piv.size(); ++q) {
    is_pivot[piv[q]] = true;
    c[piv[q]] = a(static_cast<int>(q), r);
  }
  auto combine = [&](const Vec& coef) {
    Vec v(n);
    for (int i = 0; i < r; ++i)
      if (!coef[i].is_zero())
        for (int j = 0; j < n; ++j) v[j] += coef[i] * rows[i][j];
    return v;
  };
  AffinePiece piece;
  piece.point = combine(c);
  for (int f = 0; f < r; ++f) {
    if (is_pivot[f]) continue;
    Vec d(r);
    d[f] = Cyclo(1);
    for (std::size_t q = 0; q < piv.size(); ++q) d[piv[q]] = -a(static_cast<int>(q), f);
    piece.directions.push_back(combine(d));
  }
  return piece;
}

bool affine_contains(const AffinePiece& big, const AffinePiece& small) {
  std::vector<Vec> base = big.directions;
  int rank = base.empty() ? 0 : Matrix::from_rows(base).rank();
  auto in_span = [&](const Vec& v) {
    if (is_zero_vec(v)) return true;
    std::vector<Vec> rows = base;
    rows.push_back(v);
    return Matrix::from_rows(rows).rank() == rank;
  };
  Vec diff = small.point;
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= big.point[j];
  if (!in_span(diff)) return false;
  for (const auto& d : small.directions)
    if (!in_span(d)) return false;
  return true;
}

}  // namespace

AffineSolution solve_affine(const std::vector<Poly>& equations, const PolyRing& ring, GroebnerOptions opts) {
  return solve_rec(equations, ring, opts, 0);
}

SolutionSet solve_charts(int n, const std::vector<ChartSystem>& charts, GroebnerOptions opts) {
  SolutionSet out;
  out.ambient = n;
  std::vector<std::vector<AffinePiece>> per_chart(n);
  for (const auto& ch : charts) {
    AffineSolution s = solve_affine(ch.equations, ch.ring, opts);
    if (!s.resolved) {
      out.kind = SolutionSet::Kind::IdealOnly;
      out.unresolved_chart = ch.chart;
      out.ideal = s.unresolved_basis;
      return out;
    }
    for (auto& p : s.pieces) {
      AffinePiece full;
      full.point.assign(n, Cyclo());
      full.point[ch.chart] = Cyclo(1);
      for (std::size_t j = 0; j < p.point.size(); ++j) full.point[ch.chart + 1 + j] = p.point[j];
      for (const auto& d : p.directions) {
        Vec fd(n);
        for (std::size_t j = 0; j < d.size(); ++j) fd[ch.chart + 1 + j] = d[j];
        full.directions.push_back(std::move(fd));
      }
      per_chart[ch.chart].push_back(std::move(full));
    }
  }
  bool any = false, finite = true;
  std::vector<Vec> span;
  for (const auto& pieces : per_chart)
    for (const auto& p : pieces) {
      any = true;
      finite = finite && p.directions.empty();
      span.push_back(p.point);
      span.insert(span.end(), p.directions.begin(), p.directions.end());
    }
  if (!any) return out;
  if (finite) {
    out.kind = SolutionSet::Kind::FinitePoints;
    for (const auto& pieces : per_chart)
      for (const auto& p : pieces) out.points.push_back(p.point);
    return out;
  }
  std::vector<Vec> basis = rref_basis(span);
  // The union is the whole projective subspace iff each chart slice of the
  // span lies inside one computed piece of that chart.
  for (int k = 0; k < n; ++k) {
    auto slice = chart_slice(basis, n, k);
    if (!slice) continue;
    bool covered = false;
    for (const auto& p : per_chart[k])
      if (affine_contains(p, *slice)) covered = true;
    if (!covered) {
      out.kind = SolutionSet::Kind::IdealOnly;
      out.unresolved_chart = k;
      return out;
    }
  }
  out.kind = SolutionSet::Kind::LinearSubspace;
  out.basis = std::move(basis);
  return out;
}

SolutionSet solve_projective(const std::vector<Poly>& ideal, const PolyRing& ring, GroebnerOptions opts) {
  int n = ring.nvars();
  for (const auto& g : ideal)
    if (!g.is_homogeneous()) throw InvalidArgument("solve_projective needs homogeneous generators: " + g.str());
  std::vector<ChartSystem> charts;
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> names(ring.vars().begin() + k + 1, ring.vars().end());
    ChartSystem ch{k, PolyRing(names, ring.conductor()), {}};
    std::vector<Poly> images;
    for (int j = 0; j < n; ++j) {
      if (j < k)
        images.push_back(Poly(ch.ring));
      else if (j == k)
        images.push_back(Poly::constant(ch.ring, Cyclo(1)));
      else
        images.push_back(Poly::variable(ch.ring, j - k - 1));
    }
    for (const auto& g : ideal) {
      Poly s = g.substitute(images, ch.ring);
      if (!s.is_zero()) ch.equations.push_back(std::move(s));
    }
    charts.push_back(std::move(ch));
  }
  return solve_charts(n, charts, opts);
}

}  // namespace pwb
