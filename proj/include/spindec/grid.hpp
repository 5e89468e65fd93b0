#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spindec/params.hpp"

namespace spindec {

// One sampled axis. count == 1 denotes a degenerate axis (a line slice held at
// a fixed coordinate, min == max); count >= 2 requires min < max.
struct Axis {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;

    std::vector<double> points() const;
    double step() const;  // 0 for a degenerate axis
};

enum class Representation { QR, MOMENTUM, POSITION };

// Axis labels per representation: QR -> (Q, r); MOMENTUM -> (Q, q);
// POSITION -> (R, r).
struct GridSpec {
    Axis axis1;
    Axis axis2;
};

void validate_grid(const GridSpec& g);

enum class Provenance { Analytic, CharOracle, PdeOracle };

enum class BlockLabel { UpUp, DownDown, UpDown, DownUp, Composite };

BlockLabel to_block(SpinPair p);

// A complex-valued sampled density-matrix block. values are stored row-major:
// values[i1 * axis2.count + i2]. Carries its dimensionless groups so slices
// are self-contained (serialization round-trips them; split/peak analysis
// reads them back).
struct DensitySlice {
    Representation rep = Representation::QR;
    BlockLabel block = BlockLabel::Composite;
    double tau = 0.0;
    GridSpec grid;
    DimensionlessGroups groups;
    Provenance provenance = Provenance::Analytic;
    std::vector<complex> values;

    complex at(std::size_t i1, std::size_t i2) const {
        return values[i1 * grid.axis2.count + i2];
    }
};

std::string to_string(Representation r);
std::string to_string(Provenance p);
std::string to_string(BlockLabel b);
Representation representation_from_string(const std::string& s);
Provenance provenance_from_string(const std::string& s);
BlockLabel block_from_string(const std::string& s);

}  // namespace spindec
