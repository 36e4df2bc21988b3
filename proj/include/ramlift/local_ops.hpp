#pragma once

#include "ramlift/local.hpp"

namespace ramlift {

// dense polynomial over a local field, index = degree
using LDense = std::vector<LocalElement>;

LocalElement ldense_eval(const LDense& f, const LocalElement& x);
LDense ldense_derivative(const LDense& f);

// classical Hensel: requires v(f(x0)) > 2 v(f'(x0)); quadratic refinement
LocalElement hensel_root(const LDense& f, const LocalElement& x0);

// greedy digit refinement: improves x by brute-force digit search on the
// pi-power ladder until the classical Hensel criterion holds, then Newton.
// Deterministic (smallest improving digit in enumeration order).
LocalElement refine_root_digits(const LDense& f, LocalElement x, long max_steps = 256);

// lambda = zeta_p - 1 in the (p, d, p-1, prec, -) field, via the cyclotomic
// polynomial at 1+x starting from x0 = pi
LocalElement zeta_p_minus_one(const LFPtr& F);

// deterministic p-th root: the branch whose unit residue is the Frobenius
// inverse of the input's. Throws needs_extension when v(x) is not divisible
// by p in the pi-lattice or the 1-unit part lies outside the convergence
// region p/(p-1); caller may embed into e*p and retry.
LocalElement pth_root(const LocalElement& x);

// exact binomial coefficient C(q, j) as a rational
Rat binom_rat(const Rat& q, long j);

// truncated series for G^{1/p^k} where G = 1 + (positive Gauss valuation at
// radius r); convergence requires v_r(G - 1) > 1/(p-1)
LPoly binomial_pth_root_series(const LPoly& G, long k, const Rat& r, long trunc);

}  // namespace ramlift
