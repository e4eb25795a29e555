#pragma once

namespace fuzzyhvac {

/// Trapezoidal membership function with breakpoints a <= b <= c <= d:
/// zero outside [a,d], linear rise on [a,b], one on [b,c], linear fall on
/// [c,d]. Degenerate segments (a == b or c == d) evaluate to the plateau
/// value at the breakpoint, which is how shoulder sets at the universe
/// edges keep membership 1 all the way to the bound. Triangles are the
/// b == c case.
struct PiecewiseLinearMF {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    bool operator==(const PiecewiseLinearMF&) const = default;
};

/// Total in x; result always in [0,1].
double membership(const PiecewiseLinearMF& mf, double x);

} // namespace fuzzyhvac
