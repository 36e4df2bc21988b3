#pragma once

#include "ramlift/ff_poly.hpp"

namespace ramlift {

// The branch-locus differential equation in characteristic p, in the
// normalization that reproduces the worked examples:
//     dg + rho * m * g * (sum_{j=0}^{nu} t^{-m p^j - 1}) dt
//         = -c * t^{-N - m p^nu - 1} dt,
// solved by an ascending coefficient recursion from the leading term -c t^{-N}.
// rho is the residue constant of the tower normalization (+1 by default; the
// n=2 assembly computes it from the actual lift of the first tower level).
struct GProblem {
    long p;
    long m;     // prime to p
    long nu;    // >= 0
    Int N;      // m | N required for the solvable (simple-type) case
    FFElem c;   // nonzero; default m mod p
    int rho = 1;

    FieldPtr field;  // coefficient field of c
};

GProblem make_gproblem(long p, long m, long nu, const Int& N, int rho = 1);

struct GSolution {
    FFPoly g;  // in t, polynomial in t^{-1}
    Int N1, N2;
    FieldPtr root_field;                         // extension containing the roots
    std::vector<std::pair<FFElem, long>> roots;  // x_i bar with multiplicities
};

// unique simple-type solution; throws when m does not divide N or the
// eventually-zero tail check fails. Root extraction (possibly in a large
// extension) is skipped when want_roots is false; sweeps only need the
// identity and the counts.
GSolution solve_g(const GProblem& prob, bool want_roots = true);

// checks the cleared Laurent identity
//   t^{N + m p^nu + 1} (g' + rho m g sum_j t^{-m p^j - 1}) + c = 0
// exactly; also checks ord_inf(omega) = N1 + m p^nu - 1 for the attached form
bool verify_g(const GSolution& sol, const GProblem& prob);

// coefficient table cbar_i of t^{-i} in g; optionally rescaled so cbar_0 = 1
std::map<Int, FFElem> recursion_coeffs(const GProblem& prob, const Int& upto,
                                       bool normalize_c0);

// omega = dg/g - eta for the problem's eta; exposed for the invariants
DiffForm eta_form(const GProblem& prob);
DiffForm omega_form(const GSolution& sol, const GProblem& prob);

// A = (xbar_i^l), rows l in {0..N1+m_{n-1}-2} with l != -1 mod p, columns the
// roots; squareness and exact invertibility over the splitting field
struct Ass2Matrix {
    std::vector<std::vector<FFElem>> A;
    bool square = false;
    bool invertible = false;
};
Ass2Matrix assumption2_matrix(const GSolution& sol, const Int& m_prev, long p);

// exact determinant over F_{p^d}
FFElem ff_det(std::vector<std::vector<FFElem>> A);

}  // namespace ramlift
