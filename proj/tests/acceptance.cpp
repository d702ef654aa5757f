// Acceptance gate: every release-blocking property at its stated size bound,
// one line per criterion, with the runtime budget part of the pass condition.
#include <clopen/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace clopen;

namespace {

struct Criterion {
  std::string label;
  double budget_seconds;
  std::vector<std::function<CheckResult(const Config&)>> checks;
  Config config;
};

}  // namespace

int main() {
  Config standard;
  standard.seed = 0;
  standard.max_points = 6;
  standard.random_cases = 1000;

  std::vector<Criterion> criteria{
      {"boolean laws and characteristic-two ring roundtrip, <= 4 atoms",
       1.0,
       {check_boolean_laws},
       standard},
      {"generated filters match brute force and the wedge condition, <= 3 atoms",
       5.0,
       {check_filter_generation},
       standard},
      {"ultrafilters are the maximal proper filters, one per atom, <= 4 atoms",
       5.0,
       {check_ultrafilter_axioms},
       standard},
      {"ultrafilter spaces: size, density, cluster points, verdicts, idempotence, <= 6 points",
       60.0,
       {check_uf_spaces},
       standard},
      {"maps into discrete targets factor uniquely through the ultrafilter space",
       30.0,
       {check_uf_map},
       standard},
      {"maximal ideals and ultrafilters are inverse bijections, <= 8 points",
       10.0,
       {check_ideal_bijection},
       standard},
      {"seminorm identities with brute-force infimum oracle, >= 10^3 cases per field",
       60.0,
       {check_absolute_value_laws, check_seminorm_identities},
       standard},
      {"orthogonal decomposition of constants against maximal ideals, >= 10^3 cases",
       5.0,
       {check_orthogonality},
       standard},
      {"spectra over different base fields induce the same bijection, <= 6 points",
       10.0,
       {check_spectrum_bijection},
       standard},
      {"indicator-algebra roundtrip for all partitions, <= 6 points",
       10.0,
       {check_gelfand},
       standard},
      {"locally constant approximation within epsilon, >= 10^3 cases",
       10.0,
       {check_approximation},
       standard},
      {"tensor extension isometry over both catalogue extensions, >= 10^3 cases each",
       10.0,
       {check_tensor_isometry},
       standard},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& cr = criteria[i];
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> details;
    auto start = std::chrono::steady_clock::now();
    for (const auto& check : cr.checks) {
      CheckResult result = check(cr.config);
      cases += result.cases;
      failures += result.failure_count;
      for (const std::string& d : result.failures) details.push_back(d);
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = seconds < cr.budget_seconds;
    bool ok = failures == 0 && in_budget;
    all_ok = all_ok && ok;
    std::printf("criterion %2zu: %s  [%s]\n", i + 1, cr.label.c_str(),
                ok ? "PASS" : "FAIL");
    std::printf("              %zu cases, %zu failures, %.2fs (budget %.0fs%s)\n",
                cases, failures, seconds, cr.budget_seconds,
                in_budget ? "" : " EXCEEDED");
    for (const std::string& d : details)
      std::printf("              detail: %s\n", d.c_str());
  }
  std::printf("%s\n", all_ok ? "acceptance: PASS" : "acceptance: FAIL");
  return all_ok ? 0 : 1;
}
