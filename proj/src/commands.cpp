#include "hardy/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>

#include "hardy/analysis.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/numerics.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/spectral.hpp"
#include "hardy/weights.hpp"

namespace hardy::cli {

bool in_proven_range(double alpha) { return (alpha >= 0.0 && alpha < 1.0) || alpha >= 5.0; }

VerificationReport cmd_weight(double alpha, double beta, std::int64_t n_max, double tol) {
  if (n_max < 1) throw UsageError("weight: --n-max must be positive");
  const WeightParams p(alpha, beta);
  const double c = WeightParams::hardy_optimal(alpha).hardy_constant();

  VerificationReport r;
  r.command = "weight";
  r.params = {{"alpha", alpha}, {"beta", beta}, {"n_max", n_max}, {"c", c}, {"tol", tol}};
  r.columns = {"n", "w", "bound", "margin", "scale"};
  const std::vector<double> w = kernels::weight_table(p, n_max, kernels::Exec::parallel);
  double worst = std::numeric_limits<double>::infinity();
  bool ok = true;
  r.rows.reserve(w.size());
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double wn = w[static_cast<std::size_t>(n - 1)];
    const double bound = c * power(static_cast<double>(n), alpha - 2.0);
    const double margin = wn - bound;
    const double scale = margin_scale(p, c, n);
    worst = std::min(worst, margin / scale);
    ok = ok && margin >= -tol * scale;
    r.rows.push_back({n, wn, bound, margin, scale});
  }
  r.min_margin = worst;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

VerificationReport cmd_verify(double alpha, double beta, std::int64_t trials, std::int64_t support_max,
                              std::uint64_t seed) {
  if (trials < 0) throw UsageError("verify: --trials must be nonnegative");
  if (support_max < 1) throw UsageError("verify: --support-max must be positive");
  const WeightParams p(alpha, beta);

  VerificationReport r;
  r.command = "verify";
  r.params = {{"alpha", alpha},
              {"beta", beta},
              {"trials", trials},
              {"support_max", support_max},
              {"seed", static_cast<std::int64_t>(seed)}};
  r.columns = {"trial", "support", "lhs", "rhs", "difference", "criterion_ok", "pass"};
  const auto outcomes = kernels::random_trials(p, trials, support_max, seed, kernels::Exec::parallel);
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& o : outcomes) {
    const auto& c = o.check;
    ok = ok && c.pass && c.criterion_ok;
    worst = std::min(worst, c.difference / (1.0 + std::abs(c.lhs)));
    r.rows.push_back({o.trial, o.support, c.lhs, c.rhs, c.difference, c.criterion_ok, c.pass});
  }
  if (!outcomes.empty()) r.min_margin = worst;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

VerificationReport cmd_sharp(double alpha, const std::vector<std::int64_t>& schedule, double tol) {
  if (schedule.empty()) throw UsageError("sharp: empty N schedule");
  if (!(tol > 0.0)) throw UsageError("sharp: --tol must be positive");
  const double bound = WeightParams::hardy_optimal(alpha).hardy_constant();
  const auto est = sharp_constant_estimate(alpha, schedule, tol);

  VerificationReport r;
  r.command = "sharp";
  r.params = {{"alpha", alpha}, {"schedule", schedule}, {"tol", tol}, {"bound", bound}};
  r.columns = {"N", "lambda_min", "bound", "margin"};
  bool monotone = true;
  bool above = true;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < est.size(); ++i) {
    const double lam = est[i].lambda_min;
    if (i > 0) monotone = monotone && lam <= est[i - 1].lambda_min + tol * (1.0 + std::abs(lam));
    above = above && lam >= bound - tol;
    worst = std::min(worst, lam - bound);
    r.rows.push_back({est[i].n, lam, bound, lam - bound});
  }
  r.min_margin = worst;
  if (!monotone) {
    r.verdict = Verdict::fail;
  } else if (in_proven_range(alpha)) {
    r.verdict = above ? Verdict::pass : Verdict::fail;
  } else {
    r.verdict = Verdict::exploratory;
  }
  return r;
}

VerificationReport cmd_coeffs(double alpha, std::int64_t k_max) {
  if (k_max < 2) throw UsageError("coeffs: --k-max must be >= 2");
  const CoefficientTable t = coefficient_signs(alpha, k_max);

  VerificationReport r;
  r.command = "coeffs";
  r.params = {{"alpha", alpha}, {"k_max", k_max}};
  r.columns = {"k", "b_k", "sign"};
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& e : t.entries) {
    if (e.k >= 3) {
      ok = ok && e.sign != SignClass::negative;
      worst = std::min(worst, e.value);
    }
    r.rows.push_back({e.k, e.value, std::string(to_string(e.sign))});
  }
  if (std::isfinite(worst)) r.min_margin = worst;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

VerificationReport cmd_scan(const std::vector<double>& alphas, double x_max, std::int64_t points, double tol) {
  if (alphas.empty()) throw UsageError("scan: at least one --alpha required");
  if (!(x_max > 0.0 && x_max <= 1.0)) throw UsageError("scan: --x-max must lie in (0, 1]");
  if (points < 1) throw UsageError("scan: --points must be positive");
  std::vector<double> sorted = alphas;
  std::sort(sorted.begin(), sorted.end());

  std::vector<ScanReport> scans;
  scans.reserve(sorted.size());
  for (double a : sorted) scans.push_back(remainder_scan(a, x_max, points));

  VerificationReport r;
  r.command = "scan";
  r.params = {{"alpha", sorted}, {"x_max", x_max}, {"points", points}, {"tol", tol}};
  r.columns = {"x", "alpha", "margin"};
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < static_cast<std::size_t>(points); ++i) {
    for (const auto& s : scans) r.rows.push_back({s.xs[i], s.alpha, s.margins[i]});
  }
  for (const auto& s : scans) worst = std::min(worst, s.min_margin);
  r.min_margin = worst;
  r.verdict = worst >= -tol ? Verdict::pass : Verdict::fail;
  return r;
}

VerificationReport cmd_family(double alpha, const std::vector<double>& betas,
                              const std::vector<std::int64_t>& sizes, double tol) {
  if (betas.empty() || sizes.empty()) throw UsageError("family: need at least one beta and one N");
  std::vector<std::int64_t> sorted_sizes = sizes;
  std::sort(sorted_sizes.begin(), sorted_sizes.end());
  const double bound = WeightParams::hardy_optimal(alpha).hardy_constant();
  const SharpnessSweepResult res = sweep(alpha, betas, sorted_sizes);

  VerificationReport r;
  r.command = "family";
  r.params = {{"alpha", alpha}, {"beta", betas}, {"N", sorted_sizes}, {"tol", tol}, {"bound", bound}};
  r.columns = {"N", "beta", "lhs", "rhs", "quotient"};
  bool above = true;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& row : res.rows) {
    above = above && row.quotient >= bound - tol;
    worst = std::min(worst, row.quotient - bound);
    r.rows.push_back({row.n, row.beta, row.lhs, row.rhs, row.quotient});
  }
  r.min_margin = worst;
  r.verdict = in_proven_range(alpha) ? (above ? Verdict::pass : Verdict::fail) : Verdict::exploratory;
  return r;
}

VerificationReport cmd_conjecture(const std::vector<double>& alphas, std::int64_t k_max) {
  if (alphas.empty()) throw UsageError("conjecture: at least one --alpha required");
  if (k_max < 3) throw UsageError("conjecture: --k-max must be >= 3");
  std::vector<double> sorted = alphas;
  std::sort(sorted.begin(), sorted.end());
  const auto findings = conjecture_scan(sorted, k_max);

  VerificationReport r;
  r.command = "conjecture";
  r.params = {{"alpha", sorted}, {"k_max", k_max}};
  r.columns = {"alpha", "first_negative_k", "b_value"};
  for (const auto& f : findings) {
    Cell k = f.first_negative_k ? Cell{*f.first_negative_k} : Cell{};
    Cell b = f.first_negative_k ? Cell{f.value} : Cell{};
    r.rows.push_back({f.alpha, k, b});
  }
  r.verdict = Verdict::exploratory;
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete weighted Hardy inequality toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  std::optional<double> tol;
  int jobs = 0;
  std::uint64_t seed = 42;
  bool timing = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Write the report to this path instead of stdout");
  app.add_option("--tol", tol, "Override the command's tolerance");
  app.add_option("--jobs", jobs, "Worker threads for grid evaluations (0 = all cores)");
  app.add_option("--seed", seed, "Random seed (verify)");
  app.add_flag("--timing", timing, "Record wall-clock runtime_ms (makes reports non-reproducible)");

  double alpha = 0.0;
  double beta = 0.5;
  std::int64_t n_max = 1000;
  auto* weight = app.add_subcommand("weight", "Tabulate w_{alpha,beta}(n) against (alpha-1)^2/4 n^(alpha-2)");
  weight->add_option("--alpha", alpha)->required();
  weight->add_option("--beta", beta)->required();
  weight->add_option("--n-max", n_max);

  std::int64_t trials = 10000;
  std::int64_t support_max = 100;
  bool verify_beta_given = false;
  auto* verify = app.add_subcommand("verify", "Random finitely supported u against the two-parameter inequality");
  verify->add_option("--alpha", alpha)->required();
  auto* verify_beta = verify->add_option("--beta", beta, "Defaults to (1-alpha)/2");
  verify->add_option("--trials", trials);
  verify->add_option("--support-max", support_max);

  std::vector<std::int64_t> schedule = default_section_schedule();
  auto* sharp = app.add_subcommand("sharp", "Finite-section estimates of the sharp constant");
  sharp->add_option("--alpha", alpha)->required();
  sharp->add_option("--N", schedule, "Section sizes")->delimiter(',');

  std::int64_t k_max = 60;
  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients b_k(alpha) and their signs");
  coeffs->add_option("--alpha", alpha)->required();
  coeffs->add_option("--k-max", k_max);

  std::vector<double> alphas;
  double x_max = 0.5;
  std::int64_t points = 10000;
  auto* scan = app.add_subcommand("scan", "Sign scan of g(x) - ((alpha-1)^2/4) x^2");
  scan->add_option("--alpha", alphas)->required()->delimiter(',');
  scan->add_option("--x-max", x_max);
  scan->add_option("--points", points);

  std::vector<double> betas;
  std::vector<std::int64_t> sizes = {1000, 10000, 100000};
  auto* family = app.add_subcommand("family", "Rayleigh quotients of the sharpness test family");
  family->add_option("--alpha", alpha)->required();
  family->add_option("--beta", betas, "Defaults to (1-alpha)/2 - {0.1,0.03,0.01,0.003}")->delimiter(',');
  family->add_option("--N", sizes)->delimiter(',');

  std::int64_t conj_k_max = 200;
  auto* conjecture = app.add_subcommand("conjecture", "First negative b_k(alpha) per alpha");
  conjecture->add_option("--alpha", alphas)->required()->delimiter(',');
  conjecture->add_option("--k-max", conj_k_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
  verify_beta_given = verify_beta->count() > 0;

  kernels::set_threads(jobs);
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  try {
    if (weight->parsed()) {
      report = cmd_weight(alpha, beta, n_max, tol.value_or(kWeightTol));
    } else if (verify->parsed()) {
      const double b = verify_beta_given ? beta : WeightParams::hardy_optimal(alpha).beta;
      report = cmd_verify(alpha, b, trials, support_max, seed);
    } else if (sharp->parsed()) {
      report = cmd_sharp(alpha, schedule, tol.value_or(kDefaultSpectralTol));
    } else if (coeffs->parsed()) {
      report = cmd_coeffs(alpha, k_max);
    } else if (scan->parsed()) {
      report = cmd_scan(alphas, x_max, points, tol.value_or(kScanTol));
    } else if (family->parsed()) {
      if (betas.empty()) betas = default_beta_grid(alpha);
      report = cmd_family(alpha, betas, sizes, tol.value_or(kFamilyTol));
    } else if (conjecture->parsed()) {
      report = cmd_conjecture(alphas, conj_k_max);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (timing) {
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
                            .count();
  }

  const std::string text = format == "csv" ? to_csv(report) : to_json(report);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << out_path << "\n";
      return 2;
    }
    f << text;
  }
  return exit_code(report.verdict);
}

}  // namespace hardy::cli
