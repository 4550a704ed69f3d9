// JSON views of fans, presentations and graded groups.
#pragma once

#include "json.hpp"

#include "loghilb/chow/compare.hpp"
#include "loghilb/chow/presentation.hpp"
#include "loghilb/fan/stacky_fan.hpp"

namespace loghilb::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

inline Json fan_json(const fan::StackyFan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back({{"label", r.label}, {"vector", r.vector}});
  Json cones = Json::array();
  for (const auto& c : f.max_cones()) cones.push_back(f.labels_of(c));
  return {{"dim", f.dim()}, {"rays", rays}, {"max_cones", cones}, {"census", fan::cone_census(f)}};
}

inline Json presentation_json(const chow::GradedPresentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(r.to_string());
  return {{"base", p.base.describe()}, {"generators", gens}, {"relations", rels}};
}

inline Json group_json(const chow::GradedGroupEntry& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
  return {{"degree", g.degree}, {"rank", g.rank}, {"torsion", torsion}};
}

inline Json groups_json(const std::vector<chow::GradedGroupEntry>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back(group_json(g));
  return out;
}

inline Json comparison_json(const chow::ComparisonReport& rep, const chow::GeneratorMap& map) {
  Json m = Json::object();
  for (const auto& [k, v] : map) m[k] = v.to_string();
  Json rels = Json::array();
  for (const auto& r : rep.relations)
    rels.push_back({{"relation", r.relation}, {"image", r.image}, {"member", r.member}});
  Json degs = Json::array();
  for (const auto& d : rep.degrees)
    degs.push_back({{"degree", d.a.degree}, {"a", group_json(d.a)}, {"b", group_json(d.b)}, {"equal", d.equal()}});
  return {{"map", m},
          {"relations", rels},
          {"degrees", degs},
          {"surjective_in_degree_one", rep.surjective_in_degree_one},
          {"passed", rep.ok()}};
}

}  // namespace loghilb::io
