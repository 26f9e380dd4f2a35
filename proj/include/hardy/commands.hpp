#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hardy/report.hpp"

namespace hardy::cli {

/// Bad flags or arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kWeightTol = 1e-12;
inline constexpr double kScanTol = 1e-12;
inline constexpr double kFamilyTol = 1e-10;

/// alpha in [0,1) or alpha >= 5: where (alpha-1)^2/4 is the proven sharp constant.
bool in_proven_range(double alpha);

VerificationReport cmd_weight(double alpha, double beta, std::int64_t n_max, double tol = kWeightTol);
VerificationReport cmd_verify(double alpha, double beta, std::int64_t trials, std::int64_t support_max,
                              std::uint64_t seed);
VerificationReport cmd_sharp(double alpha, const std::vector<std::int64_t>& schedule, double tol);
VerificationReport cmd_coeffs(double alpha, std::int64_t k_max);
VerificationReport cmd_scan(const std::vector<double>& alphas, double x_max, std::int64_t points,
                            double tol = kScanTol);
VerificationReport cmd_family(double alpha, const std::vector<double>& betas,
                              const std::vector<std::int64_t>& sizes, double tol = kFamilyTol);
VerificationReport cmd_conjecture(const std::vector<double>& alphas, std::int64_t k_max);

/// Full command line: parses, runs, writes the report to `out` (or --out),
/// diagnostics to `err`. Returns the process exit code (0 pass/exploratory,
/// 1 fail, 2 usage or runtime error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
