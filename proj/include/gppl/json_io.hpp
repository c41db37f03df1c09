#pragma once

#include "gppl/exact.hpp"
#include "gppl/graphon.hpp"
#include "gppl/normal_form.hpp"
#include "gppl/radonominal.hpp"
#include "gppl/sampler.hpp"

#include <json.hpp>

namespace gppl::io {

using json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings ("num" when the denominator is 1).
json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

json outcomes_json(const exact::FinDist& d);
json findist_json(const exact::FinDist& d);  // {"outcomes": [...]}

json finite_model_json(const exact::FiniteModel& m);
exact::FiniteModel finite_model_from_json(const json& j);

json graphon_json(const graphon::Graphon& w);
graphon::Graphon graphon_from_json(const json& j);

// Implementation specs mirror graphon specs plus "er-memo" and "finite".
mc::GraphImpl impl_from_json(const json& j);

json normal_form_json(const sym::NormalForm& nf);
json empirical_json(const mc::EmpiricalDist& d);
json adj_dist_json(const graphon::AdjDist& dist);

json definable_set1_json(const rado::DefinableSet1& s);
rado::DefinableSet1 definable_set1_from_json(const json& j);

}  // namespace gppl::io
