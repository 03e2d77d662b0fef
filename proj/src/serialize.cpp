#include "glie/serialize.hpp"

namespace glie {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json violations_json(const std::vector<Violation>& list) {
  Json out = Json::array();
  for (const auto& v : list) out.push_back({{"rule", v.rule}, {"message", v.message}});
  return out;
}

}  // namespace

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const ValidationReport& report) {
  const auto& s = report.stats;
  return {{"ok", report.ok},
          {"violations", violations_json(report.violations)},
          {"warnings", violations_json(report.warnings)},
          {"stats",
           {{"vertices", s.vertex_count},
            {"edges", s.edge_count},
            {"labels", s.label_count},
            {"degrees", s.degrees},
            {"connected", s.connected},
            {"satisfies_H", s.satisfies_h}}}};
}

Json parse_error_json(const GraphError& error) {
  Json violation = {{"rule", error.rule()},
                    {"message", error.what()},
                    {"line", error.line()},
                    {"column", error.column()}};
  return {{"ok", false}, {"violations", Json::array({violation})}, {"warnings", Json::array()}, {"stats", nullptr}};
}

Json structure_json(const TwoStepAlgebra& alg) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < alg.generator_count(); ++i)
    for (const auto& t : alg.terms(i))
      if (i < t.other)
        brackets.push_back({{"i", i}, {"j", t.other}, {"l", t.label}, {"sign", t.coefficient}});
  return {{"generators", alg.gen_names()}, {"labels", alg.lab_names()}, {"brackets", brackets}};
}

Json to_json(const CorankOneCertificate& cert) {
  Json hyperplane = Json::array();
  for (const auto& y : cert.hyperplane_basis) hyperplane.push_back(to_json(y));
  return {{"x", to_json(cert.x)}, {"hyperplane", hyperplane}, {"provenance", provenance_name(cert.provenance)}};
}

Json to_json(const RigidityVerdict& verdict) {
  return {{"kind", kind_name(verdict.kind)},
          {"certificate", verdict.certificate ? to_json(*verdict.certificate) : Json(nullptr)},
          {"vanishing_degree", optional_json(verdict.vanishing_degree)},
          {"explored_to", optional_json(verdict.explored_to)},
          {"reasoning", verdict.reasoning},
          {"evidence", {{"level_dims", verdict.level_dims}}}};
}

Json to_json(const TwoStepAlgebra& alg, const CenterInfo& info) {
  Json in_g1 = Json::array();
  for (const auto& v : info.in_g1) in_g1.push_back(to_json(v));
  Json basis = Json::array();
  for (const auto& e : info.basis) basis.push_back({{"g_minus_1", to_json(e.neg1)}, {"g_minus_2", to_json(e.neg2)}});
  return {{"generators", alg.gen_names()},
          {"labels", alg.lab_names()},
          {"center_dim", info.basis.size()},
          {"center_basis", basis},
          {"center_g1_dim", info.in_g1.size()},
          {"center_g1_basis", in_g1}};
}

Json to_json(const TwoStepAlgebra& alg, const ProlongationResult& result, bool emit_bases) {
  const auto& report = result.report;
  Json levels = Json::array();
  for (const auto& [degree, dim] : report.level_dims) levels.push_back({{"degree", degree}, {"dim", dim}});
  const bool vanished = report.termination == ProlongationReport::Termination::Vanished;
  Json out = {{"levels", levels},
              {"terminated", {{"kind", vanished ? "vanished" : "max_degree"}, {"at", report.terminated_at}}},
              {"total_dim_if_finite", optional_json(report.total_dim_if_finite)},
              {"negative_dims", {{"g_minus_1", report.g_minus_1}, {"g_minus_2", report.g_minus_2}}}};
  if (emit_bases) {
    Json bases = Json::array();
    for (std::size_t k = 0; k < result.levels.size(); ++k) {
      const auto& level = result.levels[k];
      const auto d1 = level_dim(alg, result.levels, level.degree - 1);
      const auto d2 = level_dim(alg, result.levels, level.degree - 2);
      Json elements = Json::array();
      for (const auto& u : level.basis) {
        Json on_gen = Json::array(), on_lab = Json::array();
        for (const auto& v : u.on_generators) on_gen.push_back(to_json(to_dense(v, d1)));
        for (const auto& v : u.on_labels) on_lab.push_back(to_json(to_dense(v, d2)));
        elements.push_back({{"on_generators", on_gen}, {"on_labels", on_lab}});
      }
      bases.push_back({{"degree", level.degree}, {"elements", elements}});
    }
    out["bases"] = bases;
  }
  return out;
}

}  // namespace glie
