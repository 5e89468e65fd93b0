#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spindec/analytic.hpp"
#include "spindec/grid.hpp"

namespace spindec {

struct PeakReport {
    double tau = 0.0;
    double up_center = 0.0;
    double down_center = 0.0;
    double separation = 0.0;  // |up_center - down_center|
    double width = 0.0;       // common standard deviation in this representation
};

struct WidthsReport {
    double tau = 0.0;
    double w1 = 0.0;  // coherence width in r (position representation)
    double w2 = 0.0;  // packet spread in R
    double ratio = 0.0;
};

struct EnvelopeFit {
    std::vector<double> tau_samples;
    std::vector<double> neg_log_samples;  // -ln|rho_od(0,0,tau)|
    double c3_hat = 0.0;
    double residual = 0.0;  // rms misfit of the cubic model
};

// Literal coarse-graining bounds in canonical units:
// l_min = max(1/eps_t, 1/d_t), l_max = d_t h_t^2 tau. The printed bounds'
// dimensions are doubtful; they are reported as-is with the emptiness flag.
struct CoarseGrainWindow {
    double l_min = 0.0;
    double l_max = 0.0;
    bool empty = true;
};

struct ValidationCheck {
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool pass = false;  // conjunction of entries
};

enum class ValidationLevel { Fast, Full };

// Composite spin-traced slice |a|^2 rho_uu + |b|^2 rho_dd sampled over the
// grid. Deterministic: cell (i1, i2) is a pure function of its coordinates,
// so the output is bit-identical under any parallel schedule.
DensitySlice scan_density(Representation rep, const GridSpec& grid, double tau,
                          const SpinState& state, const DimensionlessGroups& g);

// Closed-form distribution centers (momentum or position representation).
PeakReport peak_centers(Representation rep, double tau, const DimensionlessGroups& g);

// Diagnostic cross-check: argmax of a sampled slice row, tolerance one cell.
std::pair<double, double> grid_argmax(const DensitySlice& slice);

WidthsReport widths(double tau, const DimensionlessGroups& g);

CoarseGrainWindow coarse_grain_window(double tau, const DimensionlessGroups& g);

// Default fit sample policy: 48 uniform samples on [tau_s, max(4 tau_s, 30)].
// The span satisfies fit_envelope's precondition; the long tail keeps the
// e^{-tau} transients from biasing the cubic coefficient.
std::vector<double> default_envelope_samples(const DimensionlessGroups& g);

// Least-squares cubic fit of -ln|rho_od(0,0,tau)| (evaluated in log domain).
// Requires >= 6 samples spanning at least [tau_s, 4 tau_s].
EnvelopeFit fit_envelope(const std::vector<double>& tau_samples,
                         const DimensionlessGroups& g);

// Integrates a composite momentum slice on each side of the midpoint between
// the closed-form peak centers; returns (P_up, P_down), normalized so the two
// sum to one. Requires tau >= 3 max(tau_spin, 1) and separation >= 4 widths.
std::pair<double, double> probability_split(const DensitySlice& slice);

// Test seam: run_validation evaluates the closed forms through these hooks so
// a deliberately perturbed fixture can demonstrate check sensitivity. Default
// hooks call the analytic module.
struct ValidationHooks {
    std::function<complex(double, double, double, Spin, const DimensionlessGroups&)>
        rho_d;
    std::function<double(double, double, double, SpinPair, const DimensionlessGroups&)>
        neg_log_od;
};

ValidationReport run_validation(ValidationLevel level, const DimensionlessGroups& g);
ValidationReport run_validation(ValidationLevel level, const DimensionlessGroups& g,
                                const ValidationHooks& hooks);

}  // namespace spindec
