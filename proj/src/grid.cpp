#include "spindec/grid.hpp"

#include <cmath>

namespace spindec {

std::vector<double> Axis::points() const {
    std::vector<double> p(count);
    if (count == 1) {
        p[0] = min;
        return p;
    }
    const double h = (max - min) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) p[i] = min + h * static_cast<double>(i);
    return p;
}

double Axis::step() const {
    if (count < 2) return 0.0;
    return (max - min) / static_cast<double>(count - 1);
}

namespace {

void validate_axis(const Axis& a) {
    if (a.count == 0) throw InvalidValue("grid axis count");
    if (!std::isfinite(a.min) || !std::isfinite(a.max))
        throw NonFiniteParameter("grid axis bound");
    if (a.count == 1) {
        // Degenerate axis: a line slice held at one fixed coordinate.
        if (a.min != a.max) throw InvalidValue("degenerate axis needs min == max");
    } else if (!(a.min < a.max)) {
        throw InvalidValue("grid axis needs min < max");
    }
}

}  // namespace

void validate_grid(const GridSpec& g) {
    validate_axis(g.axis1);
    validate_axis(g.axis2);
}

BlockLabel to_block(SpinPair p) {
    switch (p) {
        case SpinPair::UpUp: return BlockLabel::UpUp;
        case SpinPair::DownDown: return BlockLabel::DownDown;
        case SpinPair::UpDown: return BlockLabel::UpDown;
        case SpinPair::DownUp: return BlockLabel::DownUp;
    }
    throw InvalidValue("spin pair");
}

std::string to_string(Representation r) {
    switch (r) {
        case Representation::QR: return "qr";
        case Representation::MOMENTUM: return "momentum";
        case Representation::POSITION: return "position";
    }
    throw InvalidValue("representation");
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Analytic: return "analytic";
        case Provenance::CharOracle: return "char-oracle";
        case Provenance::PdeOracle: return "pde-oracle";
    }
    throw InvalidValue("provenance");
}

std::string to_string(BlockLabel b) {
    switch (b) {
        case BlockLabel::UpUp: return "up-up";
        case BlockLabel::DownDown: return "down-down";
        case BlockLabel::UpDown: return "up-down";
        case BlockLabel::DownUp: return "down-up";
        case BlockLabel::Composite: return "composite";
    }
    throw InvalidValue("block label");
}

Representation representation_from_string(const std::string& s) {
    if (s == "qr") return Representation::QR;
    if (s == "momentum") return Representation::MOMENTUM;
    if (s == "position") return Representation::POSITION;
    throw InvalidValue("rep");
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "analytic") return Provenance::Analytic;
    if (s == "char-oracle") return Provenance::CharOracle;
    if (s == "pde-oracle") return Provenance::PdeOracle;
    throw InvalidValue("provenance");
}

BlockLabel block_from_string(const std::string& s) {
    if (s == "up-up") return BlockLabel::UpUp;
    if (s == "down-down") return BlockLabel::DownDown;
    if (s == "up-down") return BlockLabel::UpDown;
    if (s == "down-up") return BlockLabel::DownUp;
    if (s == "composite") return BlockLabel::Composite;
    throw InvalidValue("block");
}

}  // namespace spindec
