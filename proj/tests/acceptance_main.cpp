// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and scaled only by OKUBO_TOL.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {
std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}
}  // namespace

#include "okubo/canonical.hpp"
#include "okubo/verify.hpp"

using namespace okubo;

namespace {

struct Criterion {
  std::string id;
  bool pass = true;
  std::string detail;
};

std::vector<Criterion> results;

void report(const std::string& id, bool pass, const std::string& detail) {
  results.push_back({id, pass, detail});
  std::printf("%s %s  %s\n", id.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

struct Family {
  ChartType type;
  int n;
  const char* label;
};

const std::vector<Family> kFamilies = {
    {ChartType::III_star_3, 1, "(III*)_3"}, {ChartType::II_star, 2, "(II*)_4"},
    {ChartType::III_star, 2, "(III*)_5"},   {ChartType::II_star, 3, "(II*)_6"},
    {ChartType::III_star, 3, "(III*)_7"},   {ChartType::IV, 0, "(IV)_6"},
    {ChartType::IV_star, 0, "(IV*)_6"}};

constexpr int kSamples = 20;
constexpr std::uint64_t kSeed = 20260810;

}  // namespace

int main() {
  Tolerances tol = Tolerances::from_env();

  // A1/A2/A5/A6: oracle equivalence of monodromy and connection blocks,
  // spectra/partitions, group relations -- per family, >= 20 charts
  double a1_worst = 0.0, a2_worst = 0.0, a5_worst = 0.0, a6_prod = 0.0,
         a6_eig = 0.0;
  bool a1 = true, a2 = true, a5 = true, a6 = true;
  double slowest = 0.0;
  std::string slowest_label;
  for (const auto& fam : kFamilies) {
    auto t0 = std::chrono::steady_clock::now();
    Json rep = verify_type(fam.type, fam.n, kSamples, kSeed, tol);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (secs > slowest) {
      slowest = secs;
      slowest_label = fam.label;
    }
    for (const auto& s : rep["per_sample"]) {
      a1_worst = std::max(a1_worst, s["monodromy_max_err"].get<double>());
      a2_worst = std::max(a2_worst, s["connection_max_err"].get<double>());
      a5_worst = std::max(a5_worst, s["fuchs_global_residual"].get<double>());
      a6_prod = std::max(a6_prod, s["product_residual"].get<double>());
      a6_eig = std::max(a6_eig, s["eigenvalue_max_err"].get<double>());
      a1 = a1 && s["monodromy_max_err"].get<double>() <= tol.monodromy &&
           s["ordering_residual"].get<double>() <= tol.monodromy;
      a2 = a2 && s["connection_max_err"].get<double>() <= tol.connection;
      a5 = a5 && s["validate_ok"].get<bool>() &&
           s["fuchs_global_residual"].get<double>() <= tol.spectra;
      a6 = a6 && s["product_residual"].get<double>() <= tol.product &&
           s["eigenvalue_max_err"].get<double>() <= tol.eigen &&
           s["rigidity_index"].get<int>() == 2;
    }
    // A5 also wants the partition tables; spectral() inside verify_sample
    // throws on mismatch, so reaching here means they held.
  }
  bool a1_time = slowest <= 60.0 * kSamples;  // budget is per system
  report("A1", a1 && a1_time,
         "formula vs loop monodromy (incl. product ordering), worst err " +
             sci(a1_worst) + " (tol " + sci(tol.monodromy) +
             "); slowest family " + slowest_label + " " +
             sci(slowest) + " s / " + std::to_string(kSamples) +
             " systems");
  report("A2", a2,
         "closed-form vs extracted connection blocks, worst err " +
             sci(a2_worst));

  Json chain = chain_report(kSamples, kSeed, tol);
  double a3_worst = 0.0;
  for (const auto& c : chain["cases"])
    a3_worst = std::max(a3_worst, c["max_step_deviation"].get<double>());
  report("A3", chain["pass"].get<bool>(),
         "recurrence telescoping from the 3x3 seed, worst step deviation " +
             sci(a3_worst) + " (tol " + sci(tol.chain) +
             ")");

  Json katz = katz_report(kSamples, kSeed, tol);
  double a4_worst = 0.0;
  for (const auto& c : katz["cases"])
    a4_worst = std::max(a4_worst, c["max_err"].get<double>());
  report("A4", katz["pass"].get<bool>(),
         "katz chains vs canonical constructors, worst entrywise err " +
             sci(a4_worst) + " (tol " + sci(tol.katz) +
             ")");

  report("A5", a5,
         "partition tables + Fuchs trace identity, worst residual " +
             sci(a5_worst));
  report("A6", a6,
         "product relation residual " + sci(a6_prod) +
             ", eigenvalue multisets err " + sci(a6_eig) +
             ", rigidity = 2 on all samples");

  Json num = numerics_report(kSeed);
  report("A7", num["pass"].get<bool>(),
         "gamma recurrence " +
             sci(num["gamma_recurrence_max_rel_err"].get<double>()) +
             ", reflection " +
             sci(num["gamma_reflection_max_err"].get<double>()) +
             ", series doubling " +
             sci(num["series_doubling_err"].get<double>()));

  Json reg = registry_report(5, kSeed, tol);
  int failing_literals = 0, passing_literals = 0;
  for (const auto& e : reg["entries"]) {
    if (e["literal_passes"].get<bool>())
      ++passing_literals;
    else
      ++failing_literals;
  }
  report("A8", reg["pass"].get<bool>(),
         "typo ledger: " + std::to_string(failing_literals) +
             " literal displays mismatch > 1e-3 with corrected <= tol, " +
             std::to_string(passing_literals) + " already pass as printed");

  bool all = true;
  for (const auto& c : results) all = all && c.pass;
  std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASS"
                          : "ACCEPTANCE FAILURES PRESENT");
  return all ? 0 : 1;
}
