#pragma once

#include <vector>

#include "ramlift/finite_field.hpp"
#include "ramlift/laurent.hpp"

namespace ramlift {

using FFPoly = Laurent<FFElem>;

// Differential form over F_{p^d}((t)): mantissa * dt, finite support.
struct DiffForm {
    FFPoly mantissa;  // in variable t
    bool is_zero() const { return mantissa.is_zero(); }
    DiffForm operator+(const DiffForm& o) const { return {mantissa + o.mantissa}; }
    DiffForm operator-(const DiffForm& o) const { return {mantissa - o.mantissa}; }
    DiffForm operator-() const { return {-mantissa}; }
    bool operator==(const DiffForm& o) const { return mantissa == o.mantissa; }
};

FFPoly ff_poly(const FieldPtr& F, Var v, const std::vector<std::pair<long, long>>& terms);

// formal derivative: sum a_k t^k  ->  (sum k a_k t^{k-1}) dt
DiffForm derivative(const FFPoly& g);

// Laurent expansion of dg/g at t = infinity, exact through exponent
// -truncation of t (coefficients of t^{-k} dt for k <= truncation).
// g must be a unit at infinity after factoring its leading power.
DiffForm log_derivative(const FFPoly& g, long truncation);

// Cartier operator: t^{pk-1} dt -> t^{k-1} dt with p-th root of coefficient;
// kills exponents with p not dividing exp+1.
DiffForm cartier(const DiffForm& w);

// ord at infinity of a differential with Laurent-polynomial mantissa:
// ord_inf(t^k dt) = -k - 2.
std::optional<Int> ord_inf(const DiffForm& w);

// true iff gcd(cleared polynomial, derivative) is constant
bool squarefree_check(const FFPoly& g);

// all roots (with multiplicity) of the cleared polynomial of g, searching in
// growing extensions of the parent field until the squarefree part splits.
// Returns roots in the (possibly enlarged) field.
struct RootList {
    FieldPtr field;                                // possibly enlarged
    std::vector<std::pair<FFElem, long>> roots;    // (root, multiplicity)
};
RootList roots_in_extension(const FFPoly& g);

// dense helpers on F_q[x] used by roots/gcd code (index = degree)
std::vector<FFElem> ff_gcd(std::vector<FFElem> a, std::vector<FFElem> b);
std::vector<FFElem> clear_poles(const FFPoly& g);  // g * t^{deg_inv}, as dense poly

}  // namespace ramlift
