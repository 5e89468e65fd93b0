#include "spindec/params.hpp"

#include <cmath>

namespace spindec {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw NonFiniteParameter(name);
}

void require_positive(double v, const char* name) {
    require_finite(v, name);
    if (v <= 0.0) throw NonPositiveParameter(name);
}

void require_nonnegative(double v, const char* name) {
    require_finite(v, name);
    if (v < 0.0) throw NonPositiveParameter(name);
}

}  // namespace

SpinState::SpinState(complex a, complex b) : a(a), b(b) {
    const double n2 = std::norm(a) + std::norm(b);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-9) throw UnnormalizedSpinState();
    const double n = std::sqrt(n2);
    this->a /= n;
    this->b /= n;
}

PhysicalParams make_params(double m, double gamma, double D, double epsilon,
                           double lambda, double hbar, double sigma, double pbar) {
    require_positive(m, "m");
    require_positive(gamma, "gamma");
    require_nonnegative(D, "D");
    require_finite(epsilon, "epsilon");
    require_finite(lambda, "lambda");
    require_positive(hbar, "hbar");
    require_positive(sigma, "sigma");
    require_finite(pbar, "pbar");
    return PhysicalParams{m, gamma, D, epsilon, lambda, hbar, sigma, pbar};
}

PhysicalParams params_from_temperature(double m, double gamma, double kT,
                                       double epsilon, double lambda, double hbar,
                                       double sigma, double pbar) {
    require_nonnegative(kT, "kT");
    require_positive(m, "m");
    require_positive(gamma, "gamma");
    return make_params(m, gamma, 2.0 * gamma * m * kT, epsilon, lambda, hbar, sigma,
                       pbar);
}

DimensionlessGroups to_dimensionless(const PhysicalParams& p) {
    DimensionlessGroups g;
    g.eps_t = p.epsilon / (p.m * p.gamma * p.gamma * p.sigma);
    g.d_t = p.D / (p.m * p.m * p.gamma * p.gamma * p.gamma * p.sigma * p.sigma);
    g.h_t = p.hbar / (p.m * p.gamma * p.sigma * p.sigma);
    g.p_t = p.pbar * p.sigma;
    g.lam_t = p.lambda / (p.hbar * p.gamma);
    return g;
}

PhysicalParams from_dimensionless(const DimensionlessGroups& g, double sigma,
                                  double gamma, double m) {
    validate_groups(g);
    require_positive(sigma, "sigma");
    require_positive(gamma, "gamma");
    require_positive(m, "m");
    PhysicalParams p;
    p.m = m;
    p.gamma = gamma;
    p.sigma = sigma;
    p.epsilon = g.eps_t * m * gamma * gamma * sigma;
    p.D = g.d_t * m * m * gamma * gamma * gamma * sigma * sigma;
    p.hbar = g.h_t * m * gamma * sigma * sigma;
    p.pbar = g.p_t / sigma;
    p.lambda = g.lam_t * p.hbar * gamma;
    return p;
}

void validate_groups(const DimensionlessGroups& g) {
    require_finite(g.eps_t, "eps_t");
    require_nonnegative(g.d_t, "d_t");
    require_positive(g.h_t, "h_t");
    require_finite(g.p_t, "p_t");
    require_finite(g.lam_t, "lam_t");
}

}  // namespace spindec
