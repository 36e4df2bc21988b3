#include "ramlift/gsolve.hpp"

namespace ramlift {

GProblem make_gproblem(long p, long m, long nu, const Int& N, int rho) {
    if (!is_prime(p)) throw bad_input("gsolve: p not prime");
    if (m < 1 || m % p == 0) throw bad_input("gsolve: m must be positive and prime to p");
    if (nu < 0 || N < 1) throw bad_input("gsolve: need nu >= 0, N >= 1");
    if (rho != 1 && rho != -1) throw bad_input("gsolve: rho must be +1/-1");
    auto F = FiniteField::make(p, 1);
    return GProblem{p, m, nu, N, F->from_int(m), rho, F};
}

namespace {

// ascending recursion for the m=1 problem over the prime field:
//   alpha_k = rho * ( -c [k=-N] - (k - p^nu) alpha_{k-p^nu} )
//             - sum_{j<nu} alpha_{k-p^nu+p^j}
// computed through k = p^{nu+1} + N + extra*p^nu, with an all-zero final
// window of length p^nu certifying the polynomial tail.
std::map<long, long> solve_m1(long p, long nu, long N, long c, int rho, long extra = 1) {
    long pnu = 1;
    for (long j = 0; j < nu; ++j) pnu *= p;
    long horizon = pnu * p + N + extra * pnu;
    std::vector<long> alpha(size_t(horizon + N + 1), 0);
    auto at = [&](long k) -> long& { return alpha[size_t(k + N)]; };
    for (long k = -N; k <= horizon; ++k) {
        long val = 0;
        if (k == -N) val -= c;
        if (k - pnu >= -N) val -= ((k - pnu) % p) * at(k - pnu);
        val = (rho * val) % p;
        for (long j = 0, pj = 1; j < nu; ++j, pj *= p)
            if (k - pnu + pj >= -N) val -= at(k - pnu + pj);
        at(k) = ((val % p) + p) % p;
    }
    for (long k = horizon - pnu + 1; k <= horizon; ++k)
        if (at(k) != 0)
            throw bad_input("solve_g: recursion tail not eventually zero (parameter error)");
    std::map<long, long> out;
    for (long k = -N; k <= horizon; ++k)
        if (at(k) != 0) out[-k] = at(k);  // key = degree in t^{-1}
    return out;
}

}  // namespace

GSolution solve_g(const GProblem& prob, bool want_roots) {
    if (prob.N % prob.m != 0)
        throw bad_input("solve_g: m does not divide N (no simple-type solution)");
    if (prob.c.is_zero()) throw bad_input("solve_g: c must be nonzero");
    if (prob.N > 100000) throw bad_input("solve_g: N too large for desk scale");
    long N = long(prob.N);
    long Np = N / prob.m;
    // m=1 problem with c' = c/m, then substitute t -> t^m
    long p = prob.p;
    long c_int = prob.c.coeffs()[0];
    long minv = pow_mod(prob.m % p, p - 2, p);
    long cp = (c_int * minv) % p;
    auto h = solve_m1(p, prob.nu, Np, cp, prob.rho);
    GSolution sol;
    sol.g = FFPoly(Var::t);
    for (auto& [i, v] : h) sol.g.add_term(-Int(i) * prob.m, prob.field->from_int(v));
    // N2 = ord_inf(g) = lowest t^{-1}-degree present
    Int N2 = -(*sol.g.deg());
    sol.N2 = N2;
    sol.N1 = prob.N - N2;
    if (sol.N2 % p != 0)
        throw bad_input("solve_g: N2 not divisible by p (not simple type)");
    // simple type requires squarefree cleared polynomial
    if (!squarefree_check(sol.g)) throw bad_input("solve_g: roots not simple");
    if (want_roots) {
        auto rl = roots_in_extension(sol.g);
        sol.root_field = rl.field;
        sol.roots = rl.roots;
        for (auto& [x, mult] : sol.roots) {
            if (mult != 1) throw bad_input("solve_g: multiple root");
            if (x.is_zero()) throw std::logic_error("solve_g: zero root");
        }
        if (Int(sol.roots.size()) != sol.N1)
            throw std::logic_error("solve_g: root count mismatch");
    }
    return sol;
}

DiffForm eta_form(const GProblem& prob) {
    // rho * m * sum_j t^{-m p^j - 1} dt, the form subtracted from dg/g
    FFPoly m(Var::t);
    Int pj = 1;
    for (long j = 0; j <= prob.nu; ++j, pj *= prob.p)
        m.add_term(-Int(prob.m) * pj - 1, prob.field->from_int(prob.m * prob.rho));
    return {m};
}

bool verify_g(const GSolution& sol, const GProblem& prob) {
    // cleared identity: t^{N + m p^nu + 1} (g' + rho m g sum_j t^{-m p^j-1}) + c = 0
    DiffForm dg = derivative(sol.g);
    FFPoly lhs = dg.mantissa + sol.g * eta_form(prob).mantissa;
    Int shift = prob.N + Int(prob.m) * ipow(Int(prob.p), prob.nu) + 1;
    FFPoly cleared = lhs.shift(shift);
    cleared.add_term(0, prob.c);
    if (!cleared.is_zero()) return false;
    // ord_inf(omega) = N1 + m p^nu - 1
    DiffForm omega = omega_form(sol, prob);
    auto oi = ord_inf(omega);
    if (!oi) return false;
    return *oi == sol.N1 + Int(prob.m) * ipow(Int(prob.p), prob.nu) - 1;
}

DiffForm omega_form(const GSolution& sol, const GProblem& prob) {
    // omega = dg/g - (-eta) ... by construction dg/g + rho m sum = c t^{...}/g;
    // return the closed rational form via the cleared identity: omega has
    // Laurent mantissa (g' + rho m g sum)/g = -c t^{-N-m p^nu-1}/g. To avoid
    // rational functions we return the series of dg/g + eta to a fixed depth.
    long depth = long(prob.N + Int(prob.m) * ipow(Int(prob.p), prob.nu)) + 2;
    DiffForm ld = log_derivative(sol.g, depth);
    DiffForm eta = eta_form(prob);
    FFPoly m = (ld.mantissa + eta.mantissa).truncate_below(-Int(depth));
    return {m};
}

std::map<Int, FFElem> recursion_coeffs(const GProblem& prob, const Int& upto,
                                       bool normalize_c0) {
    GSolution sol = solve_g(prob, false);
    FFElem c0 = sol.g.get(0, prob.field->zero());
    FFElem scale = prob.field->one();
    if (normalize_c0) {
        if (c0.is_zero())
            throw bad_input("recursion_coeffs: c0 = 0 (N2 > 0), c0-normalization impossible");
        scale = c0.inverse();
    }
    std::map<Int, FFElem> out;
    for (const auto& [e, coef] : sol.g.terms()) {
        Int i = -e;
        if (i < 0 || i > upto) continue;
        out[i] = coef * scale;
    }
    return out;
}

FFElem ff_det(std::vector<std::vector<FFElem>> A) {
    if (A.empty()) throw bad_input("determinant of empty matrix");
    size_t n = A.size();
    for (auto& row : A)
        if (row.size() != n) throw bad_input("determinant of non-square matrix");
    FieldPtr F = A[0][0].parent();
    FFElem det = F->one();
    for (size_t j = 0; j < n; ++j) {
        size_t piv = j;
        while (piv < n && A[piv][j].is_zero()) ++piv;
        if (piv == n) return F->zero();
        if (piv != j) {
            std::swap(A[piv], A[j]);
            det = -det;
        }
        det = det * A[j][j];
        FFElem inv = A[j][j].inverse();
        for (size_t i = j + 1; i < n; ++i) {
            if (A[i][j].is_zero()) continue;
            FFElem f = A[i][j] * inv;
            for (size_t k = j; k < n; ++k) A[i][k] = A[i][k] - f * A[j][k];
        }
    }
    return det;
}

Ass2Matrix assumption2_matrix(const GSolution& sol, const Int& m_prev, long p) {
    Ass2Matrix out;
    Int rows_upper = sol.N1 + m_prev - 2;  // l = 0..N1+m_{n-1}-2, l != -1 mod p
    std::vector<Int> ls;
    for (Int l = 0; l <= rows_upper; ++l)
        if ((l + 1) % p != 0) ls.push_back(l);
    for (const Int& l : ls) {
        std::vector<FFElem> row;
        row.reserve(sol.roots.size());
        for (const auto& [x, mult] : sol.roots) row.push_back(x.pow(l));
        out.A.push_back(std::move(row));
    }
    out.square = (Int(out.A.size()) == sol.N1) && !out.A.empty();
    if (out.square) out.invertible = !ff_det(out.A).is_zero();
    return out;
}

}  // namespace ramlift
