#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cricnet/design.hpp"

namespace cricnet {

struct Coefficient {
    double estimate = 0.0;
    double std_error = 0.0;
};

struct FitResult {
    std::vector<std::pair<std::string, Coefficient>> coefficients;  // design order
    std::optional<double> log_likelihood;  // logistic fits
    std::optional<double> r_squared;       // least-squares fits
    std::size_t n_obs = 0;
    bool converged = false;
    int iterations = 0;

    const Coefficient& coef(const std::string& name) const;
    bool has_coef(const std::string& name) const;
};

// Maximum likelihood by iteratively reweighted least squares with
// step-halving; converged when max |delta beta| < 1e-10, capped at 50
// iterations. Standard errors from the inverse observed information.
// Throws DegenerateError (constant y), SeparationError (|beta| > 30),
// NonConvergenceError, RankError (n <= columns).
FitResult fit_logistic(const DesignMatrix& design, const std::vector<double>& y);

// Least squares via Householder QR (never the normal equations); R^2 against
// the centered total sum of squares.
FitResult fit_ols(const DesignMatrix& design, const std::vector<double>& y);

// std_beta_j = beta_j * sd(x_j) / sd(y) with sample (n-1) deviations, for
// every retained non-intercept column. Throws ZeroVarianceError naming the
// offending column (or "y").
std::map<std::string, double> standardized_coefficients(const FitResult& fit,
                                                        const DesignMatrix& design,
                                                        const std::vector<double>& y);

// Upper tail of the chi-square distribution (regularized incomplete gamma).
double chi_square_upper_tail(double statistic, int df);

// p-value of 2 (llf_full - llf_null) against chi-square(df). Throws
// NestingError when the full model fits worse than the null beyond 1e-8.
double likelihood_ratio_test(const FitResult& full, const FitResult& null_fit, int df);

double odds_ratio(double beta);

}  // namespace cricnet
