#pragma once

#include <string>

#include "ordclust/rng.hpp"

namespace ordclust {

double normal_pdf(double x);
double normal_cdf(double x);
/// Inverse of the standard normal CDF, accurate to ~1e-15.
double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

enum class DistKind { Normal, Beta, Uniform01 };

/// A continuous scalar distribution: Normal(mean, stddev), Beta(alpha, beta)
/// or Uniform01. Continuity (no point masses) is required by the comparison
/// model, and all three families satisfy it.
struct DistributionSpec {
    DistKind kind = DistKind::Uniform01;
    double a = 0.0;  // mean (Normal) or alpha (Beta)
    double b = 0.0;  // stddev (Normal) or beta (Beta)

    static DistributionSpec normal(double mean, double stddev);
    static DistributionSpec beta(double alpha, double beta);
    static DistributionSpec uniform01();

    double pdf(double x) const;
    double cdf(double x) const;
    /// Draws one value; deterministic given the generator state.
    double sample(Rng& rng) const;

    bool operator==(const DistributionSpec& o) const = default;
    std::string describe() const;
};

/// Separation level delta = 2 P_{w~f_in, w'~f_out}(w > w') - 1. Closed forms
/// are used for Normal/Normal, Beta/Uniform01 and Normal/Uniform01 (and their
/// swaps); any other pair falls back to adaptive quadrature of
/// integral f_in(x) F_out(x) dx with absolute tolerance 1e-9 on delta.
double delta_of_distributions(const DistributionSpec& f_in,
                              const DistributionSpec& f_out);

enum class DeltaFamily { NormalNormal, BetaUniform, NormalUniform };

struct DistributionPair {
    DistributionSpec f_in;
    DistributionSpec f_out;
};

/// Builds (f_in, f_out) in the requested family achieving the given delta:
///   NormalNormal: f_in = N(sqrt(2) sigma Phi^{-1}((1+delta)/2), sigma), f_out = N(0, sigma)
///   BetaUniform:  f_in = Beta(beta (1+delta)/(1-delta), beta), f_out = Uniform01
///   NormalUniform: f_in = N(mu, 1) with mu solved by bisection, f_out = Uniform01
/// `param` is sigma for NormalNormal, beta for BetaUniform, ignored otherwise.
DistributionPair params_for_delta(DeltaFamily family, double param, double delta);

/// P(w > w') for w ~ N(mu, sigma), w' ~ Uniform01, in closed form.
double normal_vs_uniform_win_probability(double mu, double sigma);

}  // namespace ordclust
