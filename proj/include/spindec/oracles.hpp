#pragma once

#include <vector>

#include "spindec/grid.hpp"
#include "spindec/params.hpp"
#include "spindec/rk45.hpp"

// Two independent numerical solution paths for the transformed transport
// equations, used to certify the closed forms (and each other):
//   - pointwise quadrature along characteristics (backward trace, forward
//     source accumulation), adaptive RK, rtol 1e-10 / atol 1e-14;
//   - a deliberately first-order upwind method-of-lines grid solver whose
//     accuracy is certified by Richardson refinement.
// Neither path evaluates the assembled closed forms; the only shared
// expression is initial_state_qr.

namespace spindec {

struct CharacteristicPath {
    double Q = 0.0, r = 0.0, tau = 0.0;  // terminal (query) point
    // Accepted integration nodes (s, Q(s), r(s)), s increasing from 0 to tau.
    std::vector<std::array<double, 3>> samples;
    double I1 = 0.0, I2 = 0.0;        // invariants evaluated at the terminal point
    double I1_drift = 0.0, I2_drift = 0.0;  // max relative drift along the path
};

// Diagonal-block characteristic through (Q, r, tau): Q constant,
// dr/ds = r - h_t Q. Invariants: I1 = Q, I2 = e^{-s}(r(s) - h_t Q).
CharacteristicPath trace_characteristic_d(double Q, double r, double tau,
                                          const DimensionlessGroups& g);

// Off-diagonal characteristic: dQ/ds = -eta 2 eps_t/h_t, dr/ds = r - h_t Q(s).
// Invariants: I1 = h_t Q(s) + eta 2 eps_t s, I2 = e^{-s}(r(s) - h_t Q(s) + eta 2 eps_t).
CharacteristicPath trace_characteristic_od(double Q, double r, double tau,
                                           SpinPair pair,
                                           const DimensionlessGroups& g);

// Pointwise values by characteristic quadrature.
complex oracle_rho_d(double Q, double r, double tau, Spin s,
                     const DimensionlessGroups& g, const RkOptions& opt = {});
complex oracle_rho_od(double Q, double r, double tau, SpinPair pair,
                      const DimensionlessGroups& g, const RkOptions& opt = {});

// Negative log-modulus accumulated in log domain (usable where the value
// itself underflows).
double oracle_neg_log_abs_rho_od(double Q, double r, double tau, SpinPair pair,
                                 const DimensionlessGroups& g,
                                 const RkOptions& opt = {});

struct UpwindConfig {
    double dtau = 0.0;  // explicit time step; 0 selects cfl * cell / max-speed
    double cfl = 0.5;   // target Courant number for the automatic step
};

// First-order upwind solve of the diagonal equation at fixed Q over r_grid.
// Both r-boundaries are outflow for the default domains; boundary cells use
// one-sided differences toward the interior. Throws CflViolation if the
// effective Courant number exceeds 0.9 and DomainTooSmall if the initial data
// on the r-boundary exceeds 1e-12 or the evolved boundary density exceeds 1e-9.
DensitySlice upwind_solve_d(double Q, const Axis& r_grid, double tau_end,
                            const UpwindConfig& config, Spin s,
                            const DimensionlessGroups& g);

// 2D upwind solve of the off-diagonal equation over (Q_grid, r_grid).
// The Q-advection has constant velocity -eta 2 eps_t / h_t; Q_grid must pad
// the advected support (initial data at the inflow Q-edge below 1e-6).
DensitySlice upwind_solve_od(const Axis& Q_grid, const Axis& r_grid, double tau_end,
                             const UpwindConfig& config, SpinPair pair,
                             const DimensionlessGroups& g);

// Documented r-grid refinement ladder for the 1D diagonal solver. The default
// (finest) member meets the 1e-3 sup-norm target; the coarser members back
// the Richardson convergence study.
inline constexpr std::size_t kUpwindLadder[] = {1537, 3073, 6145, 12289, 24577};
inline constexpr double kUpwindRmax = 12.0;  // default r in [-12, 12]
inline constexpr std::size_t kDefaultRCount = 24577;
// Default 2D off-diagonal grid (Q in [-8, 8] x r in [-12, 12]) and its 2x
// coarsening, used for the grid-converged (Richardson-extrapolated) value.
inline constexpr double kUpwindQmax = 8.0;
inline constexpr std::size_t kOdQCount = 1025, kOdRCount = 1537;

}  // namespace spindec
