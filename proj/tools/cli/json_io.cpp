#include "json_io.hpp"

namespace pwb::cli {

Json to_json(const Cyclo& value) {
  Cyclo c = value.descend();
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}, {"str", c.str()}};
}

Json to_json(const RationalSeries& s, int taylor_order) {
  Json j{{"str", s.str()}};
  Json num = Json::array(), den = Json::array(), taylor = Json::array();
  for (const auto& c : s.num().coeffs()) num.push_back(c.str());
  for (const auto& c : s.den().coeffs()) den.push_back(c.str());
  j["num"] = num;
  j["den"] = den;
  if (taylor_order >= 0) {
    for (const auto& c : series_taylor(s, taylor_order)) taylor.push_back(c.str());
    j["taylor"] = taylor;
  }
  return j;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

std::string linear_form(const PolyRing& ring, const Vec& v) { return Poly::linear(ring, v).str(); }

Json to_json(const SolutionSet& s, const PolyRing& ring) {
  Json j{{"kind", kind_name(s.kind)}};
  switch (s.kind) {
    case SolutionSet::Kind::Empty:
      break;
    case SolutionSet::Kind::FinitePoints: {
      Json pts = Json::array();
      for (const auto& p : s.points) pts.push_back(linear_form(ring, p));
      j["points"] = pts;
      break;
    }
    case SolutionSet::Kind::LinearSubspace: {
      Json basis = Json::array();
      for (const auto& b : s.basis) basis.push_back(linear_form(ring, b));
      j["span"] = basis;
      break;
    }
    case SolutionSet::Kind::IdealOnly:
      j["chart"] = s.unresolved_chart;
      j["ideal"] = to_json(s.ideal);
      break;
  }
  return j;
}

Json bracket_table(const PolyRing& ring, const PoissonAlgebra::Table& entries) {
  Json t = Json::object();
  for (const auto& [k, p] : entries) t["{" + ring.var(k.first) + "," + ring.var(k.second) + "}"] = p.str();
  return t;
}

Json to_json(const PresentedPoisson& p) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < p.names.size(); ++i)
    gens.push_back(Json{{"name", p.names[i]}, {"expr", p.expressions[i].str()}, {"degree", p.degrees[i]}});
  Json j{{"generators", gens}, {"relations", to_json(p.relations)}, {"brackets", bracket_table(p.gen_ring, p.brackets)}};
  j["polynomial"] = p.polynomial();
  j["degree_bound"] = p.degree_bound;
  j["molien"] = to_json(p.molien, p.degree_bound);
  if (auto q = is_skew_presentation(p)) j["skew_matrix"] = to_json(*q);
  return j;
}

namespace {

Json pair_of(const Json& a, const Json& ag) { return Json{{"A", a}, {"AG", ag}}; }

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const RigidityReport& r) {
  Json j;
  j["unimodular"] = pair_of(r.a.unimodular, r.ag.polynomial ? Json(r.ag.unimodular) : Json(nullptr));
  j["center_dims"] = pair_of(r.a.center_dims, r.ag.center_dims);
  j["derived_dims"] = pair_of(r.a.derived_dims, r.ag.derived_dims);
  j["skew"] = pair_of(r.a.skew, r.ag.polynomial ? Json(r.ag.skew) : Json(nullptr));
  j["derived_components"] = pair_of(opt(r.a.derived_components), opt(r.ag.derived_components));
  j["central_in_derived"] = pair_of(opt(r.a.central_in_derived), opt(r.ag.central_in_derived));
  j["polynomial_AG"] = r.ag.polynomial;
  j["verdict"] = r.distinguished ? "Distinguished" : "NotDistinguished";
  j["witness"] = r.distinguished ? Json(r.witness) : Json(nullptr);
  j["fixed"] = to_json(r.fixed);
  return j;
}

Json to_json(const PoissonDerivation& d, const PolyRing& ring) {
  Json j = Json::object();
  for (int i = 0; i < ring.nvars(); ++i) j[ring.var(i)] = d.images[i].str();
  return j;
}

}  // namespace pwb::cli
