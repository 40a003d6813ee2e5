// types.hpp — shared aliases and small value types

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace nmg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr Complex imag_unit{0.0, 1.0};

enum class Statistics { Bosonic, Fermionic };

// Half-open about nothing: [lo, hi], hi may be +infinity.
struct Interval {
    double lo{0.0};
    double hi{0.0};

    bool unbounded_above() const { return !std::isfinite(hi); }
    bool contains(double omega) const { return omega > lo && omega < hi; }
    double length() const { return hi - lo; }
};

using IntervalList = std::vector<Interval>;

}  // namespace nmg
