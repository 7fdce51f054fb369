#include "foliage/report.hpp"

namespace foliage {

using nlohmann::json;

namespace {

json check_to_json(const CheckEntry& c) {
  return {{"id", c.id}, {"pass", c.pass}, {"value", c.value}, {"note", c.note}};
}

json class_to_json(const ClassTest& c) {
  return {{"trivial", c.trivial},
          {"projection_norm", c.projection_norm},
          {"residual", c.residual},
          {"relative_residual", c.relative_residual},
          {"form_norm", c.form_norm}};
}

}  // namespace

json to_json(const Thresholds& th) {
  return {{"kernel_tol", th.kernel_tol},
          {"identity_tol", th.identity_tol},
          {"class_tol", th.class_tol},
          {"stability_step", th.stability_step}};
}

json to_json(const ModelFlags& f) {
  return {{"hermitian", f.hermitian}, {"integrable", f.integrable}, {"kahler", f.kahler}, {"taut_candidate", f.taut_candidate}};
}

json to_json(const CohomologyReport& rep) {
  json j;
  j["tables"] = {{"betti", rep.betti},
                 {"dolbeault", rep.hodge},
                 {"ddbar", rep.ddbar},
                 {"harmonic_types", rep.harmonic_types}};
  j["stability"] = {{"K_next", rep.K + rep.thresholds.stability_step},
                    {"betti", rep.betti_next},
                    {"dolbeault", rep.hodge_next},
                    {"ddbar", rep.ddbar_next},
                    {"converged", rep.converged},
                    {"unconverged", rep.unconverged}};
  j["flags"] = {{"kahler", rep.model_flags.kahler},
                {"taut", rep.taut},
                {"eta_trivial", rep.eta_trivial},
                {"automorphic", rep.automorphic}};
  j["diagnostics"] = {{"xi", class_to_json(rep.xi)},
                      {"eta", class_to_json(rep.eta)},
                      {"automorphy",
                       {{"residual_flow", rep.automorphy.residual_flow},
                        {"residual_contract", rep.automorphy.residual_contract},
                        {"residual_laplacian", rep.automorphy.residual_laplacian},
                        {"residual_bidegree", rep.automorphy.residual_bidegree},
                        {"equivalence_checked", rep.automorphy.equivalence_checked},
                        {"equivalence_holds", rep.automorphy.equivalence_holds}}}};
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back(check_to_json(c));
  j["checks"] = checks;
  return j;
}

json to_json(const IdentitySuiteResult& res) {
  json entries = json::array();
  for (const IdentityEntry& e : res.entries) {
    json x = {{"id", e.id},
              {"level", to_string(e.level)},
              {"statement", e.statement},
              {"applicable", e.applicable},
              {"pass", e.pass},
              {"max_residual", e.max_residual},
              {"trial_residual", e.trial_residual},
              {"matrix_residual", e.matrix_residual},
              {"trials", e.trials},
              {"sweep_K", e.sweep_K}};
    if (!e.applicable) x["skip_reason"] = e.skip_reason;
    entries.push_back(x);
  }
  return {{"seed", res.seed}, {"trials", res.trials}, {"filter", res.filter}, {"all_pass", res.all_pass()},
          {"entries", entries}};
}

json to_json(const Sl2Report& r) {
  return {{"K", r.K},
          {"lambda_l_minus_counting", r.lambda_l},
          {"counting_lambda", r.counting_lambda},
          {"counting_l", r.counting_l}};
}

json to_json(const LefschetzRank& r) {
  return {{"rank", r.rank},
          {"domain_dim", r.domain_dim},
          {"codomain_dim", r.codomain_dim},
          {"injective", r.injective},
          {"surjective", r.surjective}};
}

json to_json(const HodgeDiamondReport& r) {
  return {{"qualifies", r.qualifies},
          {"harmonic_types", r.harmonic_types},
          {"dolbeault", r.dolbeault},
          {"betti", r.betti},
          {"types_symmetric", r.types_symmetric},
          {"dolbeault_symmetric", r.dolbeault_symmetric},
          {"types_sum_to_betti", r.types_sum_to_betti},
          {"dolbeault_sum_to_betti", r.dolbeault_sum_to_betti},
          {"odd_betti_even", r.odd_betti_even},
          {"asymmetries", r.asymmetries}};
}

json report_header(const std::string& kind, const FoliationModel& model, int K, const Thresholds& th) {
  json deformation = json::array();
  for (const auto& [m, c] : model.deformation().terms())
    deformation.push_back({{"mode", std::vector<int>(m.begin(), m.begin() + model.dims())}, {"re", c.real()}, {"im", c.imag()}});
  return {{"schema", kReportSchema},
          {"kind", kind},
          {"model", {{"id", model.id()},
                     {"n", model.n()},
                     {"dims", model.dims()},
                     {"flags", to_json(model.flags())},
                     {"log_lambda", model.log_lambda()},
                     {"nijenhuis_residual", model.nijenhuis_residual()},
                     {"deformation", deformation}}},
          {"K", K},
          {"tol", th.kernel_tol},
          {"thresholds", to_json(th)}};
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

void validate_report(const json& doc) {
  auto need = [&](const char* key, json::value_t type) {
    if (!doc.contains(key)) throw ValidationError(std::string("report lacks field '") + key + "'");
    const json::value_t t = doc.at(key).type();
    const bool integer = t == json::value_t::number_integer || t == json::value_t::number_unsigned;
    const bool number_ok = (type == json::value_t::number_float || type == json::value_t::number_integer) && integer;
    if (t != type && !number_ok) throw ValidationError(std::string("report field '") + key + "' has the wrong type");
  };
  need("schema", json::value_t::string);
  if (doc.at("schema") != kReportSchema) throw ValidationError("report schema is not " + std::string(kReportSchema));
  need("kind", json::value_t::string);
  need("model", json::value_t::object);
  need("K", json::value_t::number_integer);
  need("tol", json::value_t::number_float);
  need("thresholds", json::value_t::object);
  const std::string kind = doc.at("kind");
  if (kind == "cohomology") {
    need("tables", json::value_t::object);
    need("flags", json::value_t::object);
    need("diagnostics", json::value_t::object);
  }
  if (kind == "identities") need("identities", json::value_t::object);
  if (kind == "lefschetz") need("sl2", json::value_t::object);
}

}  // namespace foliage
