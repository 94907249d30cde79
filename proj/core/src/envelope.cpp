#include "pwb/envelope.hpp"

#include <map>

#include "pwb/errors.hpp"

namespace pwb {

void NCPoly::add(const Word& w, const Cyclo& c) {
  if (c.is_zero()) return;
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (it->first == w) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
      return;
    }
  terms.emplace_back(w, c);
}

std::string NCPresentation::str(const NCPoly& p) const {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms) {
    std::string cs = c.str();
    bool simple = c.term_count() == 1;
    bool neg = simple && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!simple) cs = "(" + cs + ")";
    std::string word;
    for (int l : w) word += (word.empty() ? "" : "*") + generators[l];
    std::string body = word.empty() ? cs : (cs == "1" ? word : cs + "*" + word);
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

std::string NCPresentation::relation_str(std::size_t i) const { return str(relations.at(i)) + " = 0"; }

namespace {

void require_quadratic(const PoissonAlgebra& a) {
  if (!a.quadratic()) throw NotQuadratic("enveloping algebra presentations need a quadratic bracket");
}

// m-image and h-image of a quadratic polynomial, subtracted from rel.
void subtract_images(NCPoly& rel, const Poly& p, int n, bool h_image) {
  for (const auto& t : p.terms()) {
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      for (int e = 0; e < t.exp[v]; ++e) vars.push_back(v);
    int k = vars[0], l = vars[1];
    if (!h_image) {
      rel.add({k, l}, -t.coeff);
    } else {
      rel.add({k, n + l}, -t.coeff);
      rel.add({l, n + k}, -t.coeff);
    }
  }
}

using SparseRow = std::map<long, Cyclo>;

// Rank of a growing set of sparse rows; pivot = smallest column.
class SparseEchelon {
 public:
  bool add(SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto piv = pivots_.find(lead->first);
      if (piv == pivots_.end()) {
        Cyclo inv = lead->second.inverse();
        for (auto& [col, c] : row) c *= inv;
        pivots_.emplace(lead->first, std::move(row));
        return true;
      }
      Cyclo f = lead->second;
      for (const auto& [col, c] : piv->second) {
        auto it = row.find(col);
        if (it == row.end()) {
          row.emplace(col, -(f * c));
        } else {
          it->second -= f * c;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
    return false;
  }
  long rank() const { return static_cast<long>(pivots_.size()); }

 private:
  std::map<long, SparseRow> pivots_;
};

long word_index(const Word& w, int base) {
  long idx = 0;
  for (int l : w) idx = idx * base + l;
  return idx;
}

std::vector<Word> words_of_length(int base, int len) {
  std::vector<Word> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int l = 0; l < base; ++l) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

NCPresentation envelope_presentation(const PoissonAlgebra& a, bool paper_aliases) {
  require_quadratic(a);
  int n = a.nvars();
  NCPresentation p;
  p.n = n;
  p.conductor = a.ring().conductor();
  for (int i = 0; i < n; ++i) p.generators.push_back(paper_aliases ? a.ring().var(i) + "1" : "m_" + a.ring().var(i));
  for (int i = 0; i < n; ++i) p.generators.push_back(paper_aliases ? a.ring().var(i) + "2" : "h_" + a.ring().var(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NCPoly r;
      r.add({i, j}, Cyclo(1));
      r.add({j, i}, Cyclo(-1));
      p.relations.push_back(std::move(r));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly r;
      r.add({n + i, j}, Cyclo(1));
      r.add({j, n + i}, Cyclo(-1));
      subtract_images(r, a.table(i, j), n, false);
      p.relations.push_back(std::move(r));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NCPoly r;
      r.add({n + i, n + j}, Cyclo(1));
      r.add({n + j, n + i}, Cyclo(-1));
      subtract_images(r, a.table(i, j), n, true);
      p.relations.push_back(std::move(r));
    }
  return p;
}

GradedMap envelope_extend(const PoissonAlgebra& a, const GradedMap& g) {
  int n = a.nvars();
  if (g.dim() != n) throw InvalidArgument("map acts on a different dimension");
  auto chk = is_poisson_automorphism(a, g.matrix());
  if (!chk.ok)
    throw NotAutomorphism("bracket {" + a.ring().var(chk.failing.first) + "," + a.ring().var(chk.failing.second) +
                          "} is not preserved");
  Matrix big(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      big(i, j) = g.matrix()(i, j);
      big(n + i, n + j) = g.matrix()(i, j);
    }
  NCPresentation p = envelope_presentation(a);
  int base = 2 * n;
  Echelon span(base * base);
  auto coords = [&](const NCPoly& r) {
    Vec v(base * base);
    for (const auto& [w, c] : r.terms) v[word_index(w, base)] += c;
    return v;
  };
  for (const auto& r : p.relations) span.add(coords(r));
  // Column convention: letter l maps to sum_k big(k, l) letter k.
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    Vec img(base * base);
    for (const auto& [w, c] : p.relations[ri].terms)
      for (int k1 = 0; k1 < base; ++k1) {
        if (big(k1, w[0]).is_zero()) continue;
        for (int k2 = 0; k2 < base; ++k2)
          if (!big(k2, w[1]).is_zero()) img[k1 * base + k2] += c * big(k1, w[0]) * big(k2, w[1]);
      }
    if (!span.contains(img)) throw NotAutomorphism("extension does not preserve " + p.relation_str(ri));
  }
  return GradedMap(big, g.name() + "_U");
}

bool is_quasi_reflection_series(const RationalSeries& s, int nvars) {
  if (s.num().degree() != 0 || !s.num().coeff(0).is_one()) return false;
  if (s.den().degree() != nvars || nvars < 1) return false;
  UPoly ones(Cyclo(1));
  UPoly one_minus_t(std::vector<Cyclo>{Cyclo(1), Cyclo(-1)});
  for (int i = 0; i < nvars - 1; ++i) ones = ones * one_minus_t;
  auto [q, r] = divmod(s.den(), ones);
  if (!r.is_zero() || q.degree() != 1) return false;
  Cyclo xi = -q.coeff(1);
  return !xi.is_one() && is_root_of_unity(xi).has_value();
}

EnvelopeTrace envelope_trace(const PoissonAlgebra& a, const GradedMap& g) {
  Classification c = classify(a, g);
  if (c.kind != Classification::Kind::Reflection)
    throw NotReflection(std::string("map is ") + kind_name(c.kind) + ", not a Poisson reflection");
  EnvelopeTrace out;
  RationalSeries t = trace_series(g.matrix());
  out.series = t * t;
  out.extended = trace_series(envelope_extend(a, g).matrix());
  out.quasi_reflection = is_quasi_reflection_series(out.extended, 2 * a.nvars());
  return out;
}

std::vector<long> envelope_dims(const PoissonAlgebra& a, int d, int cap) {
  require_quadratic(a);
  if (d < 0) throw InvalidArgument("degree must be nonnegative");
  if (d > cap) throw CapExceeded("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap));
  NCPresentation p = envelope_presentation(a);
  int base = 2 * a.nvars();
  std::vector<long> dims;
  long words = 1;
  for (int k = 0; k <= d; ++k) {
    if (k < 2) {
      dims.push_back(words);
    } else {
      SparseEchelon ideal;
      for (int left = 0; left <= k - 2; ++left) {
        auto us = words_of_length(base, left);
        auto vs = words_of_length(base, k - 2 - left);
        for (const auto& r : p.relations)
          for (const auto& u : us)
            for (const auto& v : vs) {
              SparseRow row;
              for (const auto& [w, c] : r.terms) {
                Word full = u;
                full.insert(full.end(), w.begin(), w.end());
                full.insert(full.end(), v.begin(), v.end());
                row[word_index(full, base)] += c;
              }
              ideal.add(std::move(row));
            }
      }
      dims.push_back(words - ideal.rank());
    }
    words *= base;
  }
  return dims;
}

}  // namespace pwb
