#include "rcm/serialize.hpp"

namespace rcm {

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const RootSequence& seq) { return Json(seq.roots); }

Json to_json(const RootSequence& seq, const MinorModel& m) {
  Json sets = Json::array();
  for (const VertexSet& s : m.branch_sets) sets.push_back(to_json(s));
  return Json{{"roots", to_json(seq)}, {"branch_sets", sets}};
}

Json to_json(const Separation& sep) {
  return Json{{"A", to_json(sep.a)},
              {"B", to_json(sep.b)},
              {"separator", to_json(sep.separator())},
              {"order", sep.order()}};
}

Json to_json(const PathSystem& ps) { return Json(ps.paths); }

Json to_json(const MassedReport& r) {
  return Json{{"lambda", r.lambda.str()},
              {"m1_holds", r.m1_holds},
              {"m1_slack", r.m1_slack.str()},
              {"m2_holds", r.m2_holds},
              {"m2_violator", r.m2_violator ? to_json(*r.m2_violator) : Json(nullptr)},
              {"separators_checked", r.separators_checked},
              {"massed", r.massed()}};
}

Json to_json(const CycleLinkReport& r) {
  Json witnesses = Json::array();
  for (const auto& [order, model] : r.witnesses) witnesses.push_back(to_json(order, model));
  return Json{{"linked", r.linked},
              {"witnesses", witnesses},
              {"failing_order", r.failing_order ? to_json(*r.failing_order) : Json(nullptr)}};
}

Json to_json(const ExtremalCertificate& c) {
  Json comps = Json::array();
  for (const TightComponent& tc : c.components)
    comps.push_back(Json{{"vertices", to_json(tc.vertices)},
                         {"attachment", tc.attachment},
                         {"attachment_set", to_json(attachment_set(c, tc.attachment))}});
  return Json{{"labeling", to_json(c.labeling)},
              {"apex_pair", Json::array({c.apex_a, c.apex_b})},
              {"components", comps}};
}

Json to_json(const ReductionStep& step) {
  Json j{{"kind", to_string(step.kind)}, {"depth", step.depth}};
  switch (step.kind) {
    case StepKind::separation_split:
      j["separation"] = to_json(*step.separation);
      j["lifted"] = step.lifted;
      break;
    case StepKind::contraction:
      j["u"] = step.u;
      j["v"] = step.v;
      j["lifted"] = step.lifted;
      break;
    case StepKind::dense_construction:
      j["apex"] = *step.apex;
      j["route"] = step.route;
      j["found"] = step.found;
      j["instance"] = Json::array({step.instance_order, step.instance_size});
      break;
    case StepKind::leaf_search:
    case StepKind::fallback_search:
      j["found"] = step.found;
      j["on_input"] = step.on_input;
      j["instance"] = Json::array({step.instance_order, step.instance_size});
      break;
  }
  return j;
}

Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const ReductionStep& s : trace.steps) steps.push_back(to_json(s));
  Json obs = Json::array();
  for (const Observation& o : trace.observations)
    obs.push_back(Json{{"name", o.name}, {"depth", o.depth}, {"holds", o.holds}, {"detail", o.detail}});
  return Json{{"steps", steps}, {"observations", obs}};
}

Json to_json(const RootSequence& seq, const SolveResult& r) {
  return Json{{"outcome", to_string(r.outcome)},
              {"model", r.model ? to_json(seq, *r.model) : Json(nullptr)},
              {"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)},
              {"massed", to_json(r.massed)},
              {"trace", to_json(r.trace)}};
}

MinorModel model_from_json(const Json& j) {
  MinorModel m;
  for (const auto& set : j.at("branch_sets")) m.branch_sets.push_back(VertexSet::of(set.get<std::vector<VertexId>>()));
  return m;
}

}  // namespace rcm
