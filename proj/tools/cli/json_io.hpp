#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pwb/envelope.hpp"
#include "pwb/fixed.hpp"

namespace pwb::cli {

using Json = nlohmann::ordered_json;

// {"conductor": N, "coeffs": [...], "str": "..."}; coefficients are rational strings.
Json to_json(const Cyclo& c);
Json to_json(const RationalSeries& s, int taylor_order);
// Rows of scalar strings.
Json to_json(const Matrix& m);
Json to_json(const std::vector<Poly>& ps);
// Points and basis vectors rendered as linear forms in the given variables.
Json to_json(const SolutionSet& s, const PolyRing& ring);
Json to_json(const PresentedPoisson& p);
Json to_json(const RigidityReport& r);
Json to_json(const PoissonDerivation& d, const PolyRing& ring);

Json bracket_table(const PolyRing& ring, const PoissonAlgebra::Table& entries);
std::string linear_form(const PolyRing& ring, const Vec& v);

}  // namespace pwb::cli
