#include <algorithm>
#include <cmath>
#include <vector>

#include "spindec/analytic.hpp"
#include "spindec/oracles.hpp"

// Method-of-lines first-order upwind solver in transport form
//   d rho/d tau + c_r d rho/d r (+ c_q d rho/d Q) = -S rho,
// advanced with the explicit two-stage Heun stepper. Deliberately first
// order: accuracy comes from grid refinement, certified by the Richardson
// study in the validation suite.

namespace spindec {

namespace {

constexpr double kBoundaryInitialTol = 1e-12;
constexpr double kBoundaryRunTol = 1e-9;
constexpr double kCflLimit = 0.9;
constexpr double kInflowEdgeTol = 1e-6;

void require_time(double tau) {
    if (!(tau >= 0.0)) throw NonNegativeTimeRequired();
}

double resolve_dtau(const UpwindConfig& cfg, double max_courant_per_dtau,
                    double tau_end) {
    // max_courant_per_dtau = sum over axes of max|velocity| / cell.
    double dt;
    if (cfg.dtau > 0.0) {
        dt = cfg.dtau;
    } else {
        const double cfl = cfg.cfl > 0.0 ? cfg.cfl : 0.5;
        dt = cfl / max_courant_per_dtau;
    }
    const double courant = dt * max_courant_per_dtau;
    if (courant > kCflLimit) throw CflViolation(courant);
    return std::min(dt, tau_end);
}

// True upwind first-order derivative; where the upwind neighbor lies outside
// the domain a zero ghost value is used (vacuum padding). Differencing toward
// the interior instead would be a downwind difference, which explodes.
inline complex upwind_diff(const complex* u, std::size_t i, std::size_t n,
                           double inv_h, double vel) {
    if (vel > 0.0) {
        if (i == 0) return u[0] * inv_h;
        return (u[i] - u[i - 1]) * inv_h;
    }
    if (i + 1 == n) return -u[n - 1] * inv_h;
    return (u[i + 1] - u[i]) * inv_h;
}

}  // namespace

DensitySlice upwind_solve_d(double Q, const Axis& r_grid, double tau_end,
                            const UpwindConfig& config, Spin s,
                            const DimensionlessGroups& g) {
    require_time(tau_end);
    if (r_grid.count < 3) throw InvalidValue("r grid too coarse");
    validate_groups(g);

    const auto r = r_grid.points();
    const std::size_t n = r_grid.count;
    const double hr = r_grid.step();
    const double inv_hr = 1.0 / hr;
    const double zeta = spin_sign(s);
    const double rq = g.h_t * Q;

    std::vector<complex> rho(n), stage(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) rho[i] = initial_state_qr(Q, r[i], g);

    const double edge0 = std::abs(rho.front());
    const double edge1 = std::abs(rho.back());
    if (edge0 > kBoundaryInitialTol || edge1 > kBoundaryInitialTol)
        throw DomainTooSmall(std::max(edge0, edge1));

    std::vector<double> vel(n);
    std::vector<complex> source(n);
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        vel[i] = r[i] - rq;
        vmax = std::max(vmax, std::abs(vel[i]));
        source[i] = complex{(g.d_t / (4.0 * g.h_t * g.h_t)) * r[i] * r[i],
                            -zeta * (g.eps_t / g.h_t) * r[i]};
    }

    const double dt0 = resolve_dtau(config, vmax * inv_hr, tau_end);

    auto eval_rhs = [&](const std::vector<complex>& u, std::vector<complex>& out) {
        const complex* up = u.data();
#pragma omp parallel for schedule(static)
        for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            out[i] = -vel[i] * upwind_diff(up, i, n, inv_hr, vel[i]) -
                     source[i] * up[i];
        }
    };

    double t = 0.0;
    while (t < tau_end) {
        const double dt = std::min(dt0, tau_end - t);
        eval_rhs(rho, rhs);
        for (std::size_t i = 0; i < n; ++i) stage[i] = rho[i] + dt * rhs[i];
        eval_rhs(stage, rhs);
        for (std::size_t i = 0; i < n; ++i)
            rho[i] = 0.5 * rho[i] + 0.5 * (stage[i] + dt * rhs[i]);
        t += dt;
    }

    const double b = std::max(std::abs(rho.front()), std::abs(rho.back()));
    if (b > kBoundaryRunTol) throw DomainTooSmall(b);

    DensitySlice out;
    out.rep = Representation::QR;
    out.block = s == Spin::Up ? BlockLabel::UpUp : BlockLabel::DownDown;
    out.tau = tau_end;
    out.grid = GridSpec{Axis{Q, Q, 1}, r_grid};
    out.groups = g;
    out.provenance = Provenance::PdeOracle;
    out.values = std::move(rho);
    return out;
}

DensitySlice upwind_solve_od(const Axis& Q_grid, const Axis& r_grid, double tau_end,
                             const UpwindConfig& config, SpinPair pair,
                             const DimensionlessGroups& g) {
    require_time(tau_end);
    if (is_diagonal(pair)) throw DiagonalPairRejected();
    if (Q_grid.count < 3 || r_grid.count < 3) throw InvalidValue("grid too coarse");
    validate_groups(g);

    const auto Qs = Q_grid.points();
    const auto rs = r_grid.points();
    const std::size_t nq = Q_grid.count, nr = r_grid.count;
    const double hq = Q_grid.step(), hr = r_grid.step();
    const double inv_hq = 1.0 / hq, inv_hr = 1.0 / hr;
    const int eta = pair_eta(pair);
    const double cq = -eta * 2.0 * g.eps_t / g.h_t;  // constant Q-velocity

    std::vector<complex> rho(nq * nr);
    for (std::size_t iq = 0; iq < nq; ++iq)
        for (std::size_t ir = 0; ir < nr; ++ir)
            rho[iq * nr + ir] = initial_state_qr(Qs[iq], rs[ir], g);

    // r-boundaries carry the transport the scheme must resolve.
    double redge = 0.0;
    for (std::size_t iq = 0; iq < nq; ++iq)
        redge = std::max(redge, std::max(std::abs(rho[iq * nr]),
                                         std::abs(rho[iq * nr + nr - 1])));
    if (redge > kBoundaryInitialTol) throw DomainTooSmall(redge);

    // Q-domain adequacy: the inflow edge (where exterior data would enter)
    // must start negligible; the advection only carries it further inward.
    if (cq != 0.0) {
        const std::size_t edge_row = cq < 0.0 ? nq - 1 : 0;
        double qedge = 0.0;
        for (std::size_t ir = 0; ir < nr; ++ir)
            qedge = std::max(qedge, std::abs(rho[edge_row * nr + ir]));
        if (qedge > kInflowEdgeTol) throw DomainTooSmall(qedge);
    }

    double vr_max = 0.0;
    for (std::size_t iq = 0; iq < nq; ++iq) {
        const double a = std::abs(rs.front() - g.h_t * Qs[iq]);
        const double b = std::abs(rs.back() - g.h_t * Qs[iq]);
        vr_max = std::max(vr_max, std::max(a, b));
    }
    const double dt0 =
        resolve_dtau(config, vr_max * inv_hr + std::abs(cq) * inv_hq, tau_end);

    // Source depends on r only (plus the constant internal phase).
    std::vector<complex> source(nr);
    for (std::size_t ir = 0; ir < nr; ++ir)
        source[ir] = complex{(g.d_t / (4.0 * g.h_t * g.h_t)) * rs[ir] * rs[ir],
                             -2.0 * eta * g.lam_t};

    std::vector<complex> stage(nq * nr), rhs(nq * nr);
    auto eval_rhs = [&](const std::vector<complex>& u, std::vector<complex>& out) {
        const complex* up = u.data();
#pragma omp parallel for schedule(static)
        for (long long qi = 0; qi < static_cast<long long>(nq); ++qi) {
            const std::size_t iq = static_cast<std::size_t>(qi);
            const complex* row = up + iq * nr;
            complex* orow = out.data() + iq * nr;
            const double rqv = g.h_t * Qs[iq];
            // Upwind neighbor row in Q for the constant advection velocity;
            // nullptr marks the zero ghost row outside the domain.
            const complex* qup = nullptr;
            double qsign = 0.0;
            if (cq > 0.0) {
                qup = iq > 0 ? up + (iq - 1) * nr : nullptr;
                qsign = 1.0;  // d/dQ ~ (row - qup) / hq
            } else if (cq < 0.0) {
                qup = iq + 1 < nq ? up + (iq + 1) * nr : nullptr;
                qsign = -1.0;  // d/dQ ~ (qup - row) / hq
            }
            for (std::size_t ir = 0; ir < nr; ++ir) {
                const double vr = rs[ir] - rqv;
                const complex dr = upwind_diff(row, ir, nr, inv_hr, vr);
                complex dq{0.0, 0.0};
                if (qsign != 0.0) {
                    const complex nb = qup ? qup[ir] : complex{0.0, 0.0};
                    dq = qsign * (row[ir] - nb) * inv_hq;
                }
                orow[ir] = -vr * dr - cq * dq - source[ir] * row[ir];
            }
        }
    };

    double t = 0.0;
    while (t < tau_end) {
        const double dt = std::min(dt0, tau_end - t);
        eval_rhs(rho, rhs);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(nq * nr); ++i)
            stage[i] = rho[i] + dt * rhs[i];
        eval_rhs(stage, rhs);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(nq * nr); ++i)
            rho[i] = 0.5 * rho[i] + 0.5 * (stage[i] + dt * rhs[i]);
        t += dt;
    }

    redge = 0.0;
    for (std::size_t iq = 0; iq < nq; ++iq)
        redge = std::max(redge, std::max(std::abs(rho[iq * nr]),
                                         std::abs(rho[iq * nr + nr - 1])));
    if (redge > kBoundaryRunTol) throw DomainTooSmall(redge);

    DensitySlice out;
    out.rep = Representation::QR;
    out.block = to_block(pair);
    out.tau = tau_end;
    out.grid = GridSpec{Q_grid, r_grid};
    out.groups = g;
    out.provenance = Provenance::PdeOracle;
    out.values = std::move(rho);
    return out;
}

}  // namespace spindec
