#pragma once

#include "ramlift/ff_poly.hpp"
#include "ramlift/local.hpp"

namespace ramlift {

// Gauss valuation v_r on Laurent polynomials over a local field:
// v_r(sum c_j T^j) = min_j (v(c_j) + j r). Exact for polynomials; throws
// precision_error when a below-precision coefficient could decide the min.
Rat gauss_valuation(const LPoly& F, const Rat& r);

// [F]_r: image of p^{-v_r(F)} F in the residue field, t = reduction of
// p^{-r} T. Requires e * r and e * v_r(F) integral (caller extends first).
FFPoly residue(const LPoly& F, const Rat& r);

struct NewtonPolygon {
    // points in "pole order" coordinates: term c T^{-k} contributes (k, v(c));
    // zero-to-precision coefficients are recorded as lower bounds only.
    std::vector<std::pair<Int, Rat>> points;      // exact points, sorted by k
    std::vector<std::pair<Int, Rat>> hull;        // lower convex hull vertices
    std::vector<std::pair<Rat, Int>> segments;    // (slope, horizontal length)
};

// polygon of sum c_k T^{-k} over terms with k >= kmin (default: all terms).
// A segment of slope s and length l certifies l zeroes of T-valuation s.
NewtonPolygon newton_polygon(const LPoly& F);

// lower convex hull of explicit points
std::vector<std::pair<Int, Rat>> lower_hull(std::vector<std::pair<Int, Rat>> pts);

// Continuous piecewise-linear function on an interval (values/kinks rational).
struct PiecewiseLinear {
    // sorted breakpoints r_0 < ... < r_k spanning the domain; value at each
    std::vector<Rat> breakpoints;
    std::vector<Rat> values;

    Rat eval(const Rat& r) const;
    // slopes between consecutive breakpoints
    std::vector<Rat> slopes() const;
    // interior kinks (strict slope changes)
    std::vector<Rat> kinks() const;
    bool convex() const;
};

// delta(r) = p/(p-1) - min_k (v(c_k) - k r) on (lo, hi] from a table of
// (pole order k, valuation v_k): max of affine functions, hence convex.
PiecewiseLinear delta_from_table(const std::vector<std::pair<Int, Rat>>& table, long p,
                                 const Rat& lo, const Rat& hi);

}  // namespace ramlift
