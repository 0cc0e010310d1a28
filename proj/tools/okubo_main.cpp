// Command-line front end: canonical / katz / connection / monodromy / verify.
// JSON on stdout (or --out). Exit codes: 0 ok, 1 numerical failure, 2 usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "okubo/canonical.hpp"
#include "okubo/verify.hpp"

namespace {

using namespace okubo;

std::vector<Complex> parse_points(const std::string& csv, ChartType type) {
  if (csv.empty()) return default_points(type);
  std::vector<Complex> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.emplace_back(std::stod(item), 0.0);
  return out;
}

ExponentChart load_chart(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open chart file " + path);
  Json j = Json::parse(in);
  return chart_from_json(j);
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

BranchConvention branch_for(const std::vector<Complex>& points,
                            const std::string& spec) {
  BranchConvention bc = BranchConvention::default_for(points);
  if (spec.empty()) return bc;
  // "i,j,arg;i,j,arg;..." (1-based indices, arg in units of pi)
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::stringstream es(item);
    std::string f;
    std::vector<double> v;
    while (std::getline(es, f, ',')) v.push_back(std::stod(f));
    if (v.size() != 3)
      throw Error(ErrorCode::BadInput, "branch override: i,j,arg_in_pi");
    bc.set_arg(static_cast<int>(v[0]) - 1, static_cast<int>(v[1]) - 1,
               v[2] * kPi);
  }
  return bc;
}

int run(int argc, char** argv) {
  CLI::App app{"canonical rigid Okubo systems: construction, connection "
               "coefficients, monodromy, numeric verification"};
  app.require_subcommand(1);

  std::string chart_path, points_csv, out_path, chain_path, branch_spec;
  std::string type_str = "III*3";
  int n = 2;
  int samples = 20;
  std::uint64_t seed = 1;
  bool literal = false, corrected = false;

  auto add_common = [&](CLI::App* cmd, bool needs_chart) {
    if (needs_chart)
      cmd->add_option("--chart", chart_path, "chart JSON file")->required();
    cmd->add_option("--points", points_csv,
                    "comma-separated real singular points");
    cmd->add_option("--branch", branch_spec,
                    "argument table overrides 'i,j,arg_in_pi;...'");
    cmd->add_option("--out", out_path, "write JSON here instead of stdout");
  };

  auto* canonical = app.add_subcommand("canonical", "build a canonical system");
  canonical->add_option("--type", type_str, "II*|III*|IV|IV*|III*3");
  add_common(canonical, true);

  auto* katz = app.add_subcommand("katz", "apply a chain of add-mc-add steps");
  katz->add_option("--chain", chain_path,
                   "JSON {start: chart or system, steps: [{k,c,rho}...]}")
      ->required();
  katz->add_option("--points", points_csv, "singular points");
  katz->add_option("--out", out_path, "output path");

  auto* conn = app.add_subcommand("connection", "closed-form coefficients");
  conn->add_option("--type", type_str, "II*|III*|IV|IV*|III*3");
  conn->add_flag("--literal", literal, "literal transcription variant");
  conn->add_flag("--corrected", corrected, "corrected variant (default)");
  add_common(conn, true);

  auto* mono = app.add_subcommand("monodromy", "monodromy tuple + relations");
  mono->add_option("--type", type_str, "II*|III*|IV|IV*|III*3");
  add_common(mono, true);

  auto* verify = app.add_subcommand("verify", "oracle cross-check");
  verify->add_option("--type", type_str, "II*|III*|IV|IV*|III*3");
  verify->add_option("--n", n, "family parameter for II*/III*");
  verify->add_option("--samples", samples, "number of seeded charts");
  verify->add_option("--seed", seed, "RNG seed");
  double tol_scale = 0.0;
  verify->add_option("--tol", tol_scale,
                     "scale factor on the default tolerances");
  verify->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }
  Tolerances tol = Tolerances::from_env();

  if (canonical->parsed()) {
    ExponentChart chart = load_chart(chart_path);
    auto points = parse_points(points_csv, chart.type);
    OkuboSystem sys = build_canonical(chart, points);
    auto rep = validate(sys);
    Json j = to_json(sys);
    j["validation"] = Json{{"ok", rep.ok()},
                           {"violations", rep.violations},
                           {"warnings", rep.warnings}};
    emit(j, out_path);
    return rep.ok() ? 0 : 1;
  }

  if (katz->parsed()) {
    std::ifstream in(chain_path);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open " + chain_path);
    Json spec = Json::parse(in);
    OkuboSystem sys;
    if (spec.at("start").contains("A")) {
      sys = system_from_json(spec["start"]);
    } else {
      ExponentChart chart = chart_from_json(spec["start"]);
      sys = build_canonical(chart, parse_points(points_csv, chart.type));
    }
    Json maps = Json::array();
    for (const auto& js : spec.at("steps")) {
      KatzStep step = katz_step_from_json(js);
      auto [next, map] = katz_apply(sys, step);
      sys = next;
      maps.push_back(Json{{"old_partition", map.old_partition},
                          {"new_partition", map.new_partition},
                          {"grown_block", map.grown_block + 1},
                          {"new_column", map.new_column + 1},
                          {"renaming", map.exponent_renaming}});
    }
    Json j{{"system", to_json(sys)}, {"blockmap", maps}};
    emit(j, out_path);
    return 0;
  }

  if (conn->parsed()) {
    ExponentChart chart = load_chart(chart_path);
    auto points = parse_points(points_csv, chart.type);
    auto branch = branch_for(points, branch_spec);
    Variant v = literal ? Variant::Literal : Variant::Corrected;
    ConnectionTable table = closed_form(chart, branch, v);
    Json j = to_json(table);
    j["variant"] = literal ? "literal" : "corrected";
    Json notes = Json::object();
    for (const auto& e : formula_registry()) {
      if (e.id.rfind(to_string(chart.type), 0) == 0) notes[e.id] = e.note;
    }
    j["registry"] = notes;
    emit(j, out_path);
    return 0;
  }

  if (mono->parsed()) {
    ExponentChart chart = load_chart(chart_path);
    auto points = parse_points(points_csv, chart.type);
    auto branch = branch_for(points, branch_spec);
    OkuboSystem sys = build_canonical(chart, points);
    ConnectionTable table = closed_form(chart, branch, Variant::Corrected);
    MonodromyTuple tuple = assemble(sys, table);
    auto prod = product_relation(tuple);
    bool defective = false;
    int idx = rigidity_index(tuple, 1e-6, &defective);
    Json j = to_json(tuple);
    j["M_inf"] = to_json(prod.M_inf);
    j["product_residual"] = prod.residual;
    j["rigidity"] = idx;
    if (defective) j["defective_warning"] = true;
    emit(j, out_path);
    return prod.residual <= tol.product ? 0 : 1;
  }

  if (verify->parsed()) {
    ChartType type = chart_type_from_string(type_str);
    if (tol_scale > 0.0) {
      tol.monodromy *= tol_scale;
      tol.connection *= tol_scale;
      tol.chain *= tol_scale;
      tol.katz *= tol_scale;
      tol.spectra *= tol_scale;
      tol.product *= tol_scale;
      tol.eigen *= tol_scale;
    }
    Json j = verify_type(type, n, samples, seed, tol);
    emit(j, out_path);
    return j["pass"].get<bool>() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const okubo::Error& e) {
    okubo::Json j{{"error", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
