#include "foliage/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>

#include "foliage/assembly.hpp"
#include "foliage/cohomology.hpp"
#include "foliage/exterior.hpp"
#include "foliage/identities.hpp"
#include "foliage/lefschetz.hpp"
#include "foliage/model_config.hpp"
#include "foliage/report.hpp"

namespace foliage {

namespace {

using nlohmann::json;

struct Options {
  std::string model;
  std::string matrix;
  std::string config;
  std::string deformation;
  std::string out;
  std::string then = "cohomology";
  std::string kind;
  std::string component = "all";
  std::string filter = "all";
  int K = 4;
  std::uint64_t seed = 42;
  int trials = 20;
  bool with_identities = false;
  Thresholds th;
};

void add_model_options(CLI::App* app, Options& o) {
  app->add_option("--model", o.model, "Built-in model: " + [] {
    std::string s;
    for (const auto& n : model_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  app->add_option("--A", o.matrix, "Hyperbolic matrix a,b,c,d for the carriere-based models");
  app->add_option("--config", o.config, "JSON model description");
  app->add_option("--K", o.K, "Fourier truncation (max |mode| per coordinate)")->check(CLI::NonNegativeNumber);
  app->add_option("--tol", o.th.kernel_tol, "Relative singular-value cutoff for kernels");
  app->add_option("--identity-tol", o.th.identity_tol, "Identity residual threshold");
  app->add_option("--class-tol", o.th.class_tol, "Class triviality and automorphy threshold");
  app->add_option("--stability-step", o.th.stability_step, "Dims must agree at K and K + step")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--out", o.out, "Write the report to this file instead of standard output");
}

void add_identity_options(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "Seed for the random forms");
  app->add_option("--trials", o.trials, "Random forms per identity")->check(CLI::NonNegativeNumber);
  app->add_option("--filter", o.filter, "all, a structure level, or ids such as I1,I5");
}

ModelConfig load_config(const Options& o) {
  ModelConfig c;
  if (!o.config.empty()) {
    c = load_model_config(o.config);
    if (!o.model.empty() && parse_model_name(o.model) != c.name)
      throw ArgumentError("--model disagrees with the name in " + o.config);
  } else if (o.model.empty()) {
    std::string names;
    for (const auto& n : model_names()) names += (names.empty() ? "" : ", ") + n;
    throw ArgumentError("--model or --config is required; valid models: " + names);
  } else {
    c.name = parse_model_name(o.model);
  }
  if (!o.matrix.empty()) c.params = parse_matrix_spec(o.matrix);
  for (const auto& t : parse_deformation_spec(o.deformation)) c.deformation.push_back(t);
  return c;
}

void emit(const json& doc, const Options& o, std::ostream& out) {
  validate_report(doc);
  if (o.out.empty()) {
    out << render(doc);
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ArgumentError("cannot write " + o.out);
  f << render(doc);
  out << "wrote " << o.out << "\n";
}

bool checks_pass(const CohomologyReport& rep) {
  return std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckEntry& c) { return c.pass; });
}

int run_cohomology(const FoliationModel& model, const Options& o, json& doc, std::ostream& err) {
  const CohomologyReport rep = betti_table(model, o.K, o.th);
  doc.update(to_json(rep));
  int code = rep.converged && checks_pass(rep) ? kExitOk : kExitFailure;
  if (!rep.converged)
    for (const auto& u : rep.unconverged) err << "not converged: " << u << "\n";
  for (const auto& c : rep.checks)
    if (!c.pass) err << "check failed: " << c.id << " (" << c.note << ")\n";
  json ids = json::array();
  if (o.with_identities) {
    const IdentitySuiteResult res = run_identities(model, o.filter, o.K, o.seed, o.trials, o.th);
    ids = to_json(res)["entries"];
    if (!res.all_pass()) code = kExitFailure;
  }
  doc["identities"] = ids;
  return code;
}

int run_identity_suite(const FoliationModel& model, const Options& o, json& doc, std::ostream& err) {
  const IdentitySuiteResult res = run_identities(model, o.filter, o.K, o.seed, o.trials, o.th);
  doc["identities"] = to_json(res);
  for (const auto& e : res.entries)
    if (e.applicable && !e.pass) err << "identity failed: " << e.id << " residual " << e.max_residual << "\n";
  return res.all_pass() ? kExitOk : kExitFailure;
}

int run_lefschetz(const FoliationModel& model, const Options& o, json& doc, std::ostream& err) {
  if (!model.flags().hermitian) throw CapabilityError("lefschetz needs the hermitian flag");
  const Sl2Report sl2 = sl2_check(model, o.K);
  json s = to_json(sl2);
  s["pass"] = sl2.pass(o.th.identity_tol);
  doc["sl2"] = s;
  const int n = model.n();
  json forms = json::array(), cohom = json::array();
  for (int r = 0; r <= 2 * n; ++r)
    for (int k = 1; r + 2 * k <= 2 * n; ++k) {
      json f = to_json(lefschetz_rank(model, r, k, o.K, LefschetzDomain::forms, o.th));
      f["r"] = r;
      f["k"] = k;
      forms.push_back(f);
      if (model.flags().kahler) {
        json c = to_json(lefschetz_rank(model, r, k, o.K, LefschetzDomain::cohomology, o.th));
        c["r"] = r;
        c["k"] = k;
        cohom.push_back(c);
      }
    }
  doc["lefschetz_forms"] = forms;
  doc["lefschetz_cohomology"] = cohom;
  if (!model.flags().kahler) doc["lefschetz_cohomology_skipped"] = "model not Kahler";
  const HodgeDiamondReport hd = hodge_diamond_report(model, o.K, o.th);
  doc["hodge_diamond"] = to_json(hd);
  if (!sl2.pass(o.th.identity_tol)) {
    err << "sl2 relations fail at identity tolerance\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_export(const FoliationModel& model, const Options& o, std::ostream& out) {
  const OperatorKind kind = parse_operator_kind(o.kind);
  const Component comp = Component::parse(o.component);
  const AssembledOperator op =
      info(kind).laplacian ? laplacian(model, kind, o.K, comp) : assemble(model, kind, o.K, comp);
  if (o.out.empty()) {
    export_matrix_market(op, out);
    return kExitOk;
  }
  std::ofstream f(o.out);
  if (!f) throw ArgumentError("cannot write " + o.out);
  export_matrix_market(op, f);
  out << "wrote " << o.out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Basic cohomology and transverse Kahler identities of Riemannian foliation models", "foliage"};
  app.require_subcommand(1);
  Options o;

  auto* coh = app.add_subcommand("cohomology", "Betti, Dolbeault and del-delbar tables with class diagnostics");
  add_model_options(coh, o);
  add_identity_options(coh, o);
  coh->add_flag("--with-identities", o.with_identities, "Append the identity residual list");

  auto* ids = app.add_subcommand("identities", "Run the gated identity suite I1..I23");
  add_model_options(ids, o);
  add_identity_options(ids, o);

  auto* lef = app.add_subcommand("lefschetz", "sl2 relations, Lefschetz ranks and the Hodge diamond");
  add_model_options(lef, o);

  auto* def = app.add_subcommand("deform", "Apply a leafwise deformation, then run cohomology or identities");
  add_model_options(def, o);
  add_identity_options(def, o);
  def->add_option("--f", o.deformation, "Real deformation 'm1[,m2]:re:im;...'")->required();
  def->add_option("--then", o.then, "cohomology or identities")->check(CLI::IsMember({"cohomology", "identities"}));
  def->add_flag("--with-identities", o.with_identities, "Append the identity residual list");

  auto* exp = app.add_subcommand("export-op", "Write an assembled operator in matrix-market style text");
  add_model_options(exp, o);
  exp->add_option("--kind", o.kind, "Operator kind: " + operator_names())->required();
  exp->add_option("--component", o.component, "all, a degree such as 2, or a bidegree such as 1,1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ModelConfig config = load_config(o);
    const FoliationModel model = realize(config);
    if (*exp) return run_export(model, o, out);

    const std::string kind =
        coh->parsed() ? "cohomology" : ids->parsed() ? "identities" : lef->parsed() ? "lefschetz" : o.then;
    json doc = report_header(kind, model, o.K, o.th);
    int code = kExitOk;
    if (!config.deformation.empty()) {
      ModelConfig plain = config;
      plain.deformation.clear();
      const BasicForm shift = model.kappa() - realize(plain).kappa();
      const BasicForm df = d_basic(model, BasicForm::scalar(model.n(), model.deformation()));
      doc["deformation_check"] = {{"kappa_shift_minus_df", norm(shift - df)}};
    }
    if (kind == "cohomology") code = run_cohomology(model, o, doc, err);
    else if (kind == "identities") code = run_identity_suite(model, o, doc, err);
    else code = run_lefschetz(model, o, doc, err);
    emit(doc, o, out);
    return code;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace foliage
