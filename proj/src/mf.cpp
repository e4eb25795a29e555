#include "fuzzyhvac/mf.hpp"

namespace fuzzyhvac {

double membership(const PiecewiseLinearMF& mf, double x) {
    if (x < mf.a || x > mf.d) {
        return 0.0;
    }
    if (x < mf.b) {
        return (x - mf.a) / (mf.b - mf.a);
    }
    if (x <= mf.c) {
        return 1.0;
    }
    if (x < mf.d) {
        return (mf.d - x) / (mf.d - mf.c);
    }
    // x == d: zero for a genuine fall segment, plateau value for c == d.
    return mf.c == mf.d ? 1.0 : 0.0;
}

} // namespace fuzzyhvac
