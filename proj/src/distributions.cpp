#include "ordclust/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ordclust {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kSqrt2 = 1.4142135623730950488;

double betacf(double a, double b, double x) {
    // Continued fraction for the incomplete beta function (modified Lentz).
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h;
}

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.0, 0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993944, 0.8648644233597691, 0.9491079123427585,
    0.9914553711208126};
constexpr double kKronrodWeights[8] = {
    0.2094821410847278, 0.2044329400752989, 0.1903505780647854,
    0.1690047266392679, 0.1406532597155259, 0.1047900103222502,
    0.0630920926299786, 0.0229353220105292};
constexpr double kGaussWeights[4] = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
    0.1294849661688697};

template <typename F>
void gauss_kronrod(const F& f, double lo, double hi, double& k15, double& err) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const double f0 = f(c);
    double g7 = kGaussWeights[0] * f0;
    k15 = kKronrodWeights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double fp = f(c + h * kKronrodNodes[i]);
        const double fm = f(c - h * kKronrodNodes[i]);
        k15 += kKronrodWeights[i] * (fp + fm);
        if (i % 2 == 0) g7 += kGaussWeights[i / 2] * (fp + fm);
    }
    k15 *= h;
    g7 *= h;
    err = std::fabs(k15 - g7);
}

template <typename F>
double integrate_adaptive(const F& f, double lo, double hi, double tol) {
    struct Segment { double lo, hi, value, err; };
    double value, err;
    gauss_kronrod(f, lo, hi, value, err);
    std::vector<Segment> stack{{lo, hi, value, err}};
    double total = value, total_err = err;
    int splits = 0;
    while (total_err > tol && !stack.empty() && splits < 2000) {
        // Split the segment with the largest error estimate.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < stack.size(); ++i)
            if (stack[i].err > stack[worst].err) worst = i;
        const Segment seg = stack[worst];
        stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(worst));
        const double mid = 0.5 * (seg.lo + seg.hi);
        Segment left{seg.lo, mid, 0, 0}, right{mid, seg.hi, 0, 0};
        gauss_kronrod(f, left.lo, left.hi, left.value, left.err);
        gauss_kronrod(f, right.lo, right.hi, right.value, right.err);
        total += left.value + right.value - seg.value;
        total_err += left.err + right.err - seg.err;
        stack.push_back(left);
        stack.push_back(right);
        ++splits;
    }
    if (total_err > tol)
        throw std::runtime_error("quadrature did not converge for this distribution pair");
    return total;
}

double support_lo(const DistributionSpec& d) {
    switch (d.kind) {
        case DistKind::Normal: return d.a - 12.0 * d.b;
        default: return 0.0;
    }
}

double support_hi(const DistributionSpec& d) {
    switch (d.kind) {
        case DistKind::Normal: return d.a + 12.0 * d.b;
        default: return 1.0;
    }
}

}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
    // Acklam's rational approximation followed by one Halley refinement.
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = normal_cdf(x) - p;
    const double u = e / normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                               a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

DistributionSpec DistributionSpec::normal(double mean, double stddev) {
    if (!(stddev > 0.0)) throw std::invalid_argument("Normal: stddev must be > 0");
    return {DistKind::Normal, mean, stddev};
}

DistributionSpec DistributionSpec::beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("Beta: alpha and beta must be > 0");
    return {DistKind::Beta, alpha, beta};
}

DistributionSpec DistributionSpec::uniform01() { return {DistKind::Uniform01, 0.0, 0.0}; }

double DistributionSpec::pdf(double x) const {
    switch (kind) {
        case DistKind::Normal:
            return normal_pdf((x - a) / b) / b;
        case DistKind::Beta: {
            if (x <= 0.0 || x >= 1.0) return 0.0;
            const double lg = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
            return std::exp(lg + (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x));
        }
        case DistKind::Uniform01:
            return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
    }
    return 0.0;
}

double DistributionSpec::cdf(double x) const {
    switch (kind) {
        case DistKind::Normal: return normal_cdf((x - a) / b);
        case DistKind::Beta: return incomplete_beta(a, b, x);
        case DistKind::Uniform01: return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x);
    }
    return 0.0;
}

double DistributionSpec::sample(Rng& rng) const {
    switch (kind) {
        case DistKind::Normal:
            return a + b * normal_quantile(rng.next_open());
        case DistKind::Beta: {
            // Inverse CDF by bisection; deterministic and platform-stable.
            const double p = rng.next_open();
            double lo = 0.0, hi = 1.0;
            for (int i = 0; i < 120; ++i) {
                const double mid = 0.5 * (lo + hi);
                (incomplete_beta(a, b, mid) < p ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        case DistKind::Uniform01:
            return rng.next_open();
    }
    return 0.0;
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case DistKind::Normal: os << "Normal(" << a << ", " << b << ")"; break;
        case DistKind::Beta: os << "Beta(" << a << ", " << b << ")"; break;
        case DistKind::Uniform01: os << "Uniform01"; break;
    }
    return os.str();
}

double normal_vs_uniform_win_probability(double mu, double sigma) {
    // P(w > w') = E[clamp(w, 0, 1)] for w ~ N(mu, sigma), w' ~ Uniform01.
    const double lo = -mu / sigma, hi = (1.0 - mu) / sigma;
    return 1.0 + sigma * (normal_pdf(lo) - normal_pdf(hi)) +
           (mu - 1.0) * normal_cdf(hi) - mu * normal_cdf(lo);
}

double delta_of_distributions(const DistributionSpec& f_in,
                              const DistributionSpec& f_out) {
    if (f_in == f_out) return 0.0;

    const auto win_to_delta = [](double p) { return 2.0 * p - 1.0; };

    if (f_in.kind == DistKind::Normal && f_out.kind == DistKind::Normal) {
        const double scale = std::sqrt(f_in.b * f_in.b + f_out.b * f_out.b);
        return win_to_delta(normal_cdf((f_in.a - f_out.a) / scale));
    }
    if (f_in.kind == DistKind::Beta && f_out.kind == DistKind::Uniform01)
        return win_to_delta(f_in.a / (f_in.a + f_in.b));
    if (f_in.kind == DistKind::Uniform01 && f_out.kind == DistKind::Beta)
        return win_to_delta(f_out.b / (f_out.a + f_out.b));
    if (f_in.kind == DistKind::Normal && f_out.kind == DistKind::Uniform01)
        return win_to_delta(normal_vs_uniform_win_probability(f_in.a, f_in.b));
    if (f_in.kind == DistKind::Uniform01 && f_out.kind == DistKind::Normal)
        return win_to_delta(1.0 - normal_vs_uniform_win_probability(f_out.a, f_out.b));

    // Generic pair: P(w > w') = integral f_in(x) F_out(x) dx over f_in's support.
    const double lo = support_lo(f_in), hi = support_hi(f_in);
    const auto integrand = [&](double x) { return f_in.pdf(x) * f_out.cdf(x); };
    const double p = integrate_adaptive(integrand, lo, hi, 5e-10);
    return win_to_delta(p);
}

DistributionPair params_for_delta(DeltaFamily family, double param, double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("params_for_delta: delta must lie in (0,1]");
    switch (family) {
        case DeltaFamily::NormalNormal: {
            const double sigma = param;
            if (!(sigma > 0.0)) throw std::invalid_argument("NormalNormal: sigma must be > 0");
            const double mu = kSqrt2 * sigma * normal_quantile(0.5 * (1.0 + delta));
            return {DistributionSpec::normal(mu, sigma), DistributionSpec::normal(0.0, sigma)};
        }
        case DeltaFamily::BetaUniform: {
            const double beta = param;
            if (!(beta > 0.0)) throw std::invalid_argument("BetaUniform: beta must be > 0");
            if (delta >= 1.0)
                throw std::invalid_argument("BetaUniform: alpha is unbounded at delta = 1");
            const double alpha = beta * (1.0 + delta) / (1.0 - delta);
            return {DistributionSpec::beta(alpha, beta), DistributionSpec::uniform01()};
        }
        case DeltaFamily::NormalUniform: {
            const double target = 0.5 * (1.0 + delta);
            double lo = -20.0, hi = 20.0;
            if (normal_vs_uniform_win_probability(lo, 1.0) > target ||
                normal_vs_uniform_win_probability(hi, 1.0) < target)
                throw std::runtime_error("NormalUniform: bisection bracket failed");
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (normal_vs_uniform_win_probability(mid, 1.0) < target ? lo : hi) = mid;
            }
            return {DistributionSpec::normal(0.5 * (lo + hi), 1.0), DistributionSpec::uniform01()};
        }
    }
    throw std::invalid_argument("params_for_delta: unknown family");
}

}  // namespace ordclust
