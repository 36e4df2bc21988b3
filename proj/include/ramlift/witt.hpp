#pragma once

#include "ramlift/ff_poly.hpp"
#include "ramlift/galois_ring.hpp"

namespace ramlift {

// Truncated Witt vector of length n over F_{p^d}[t, t^{-1}].
struct WittVector {
    FieldPtr field;
    std::vector<FFPoly> coords;  // length n, variable t

    long n() const { return long(coords.size()); }
};

WittVector witt_make(const FieldPtr& F, std::vector<FFPoly> coords);
WittVector witt_zero(const FieldPtr& F, long n);

// ring addition via ghost components over GR(p^{n}, d) lifts
WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector frobenius(const WittVector& a);  // coordinatewise f -> f^p
WittVector wp(const WittVector& a);         // F(a) - a

// Ghost components of a lift of `a` over GR(p^M, d); test oracle and
// internal engine of witt_add.
std::vector<Laurent<GRElem>> ghost_components(const WittVector& a, long M);

// Adds wp(y) for constructively chosen y until every coordinate is a
// polynomial in t^{-1} with no constant term and no p-divisible degree.
// May enlarge the coefficient field (Artin-Schreier roots of constants).
WittVector normalize(const WittVector& w);

struct BreakSequence {
    long p = 0;
    std::vector<Int> m;  // m_1..m_n

    long n() const { return long(m.size()); }
    Rat r(long i) const { return Rat(1, m.at(i - 1) * (p - 1)); }  // r_i, 1-based
    Int N() const { return m.back() - (n() >= 2 ? m[n() - 2] : Int(-1)); }
    // minimal break m_i with m_{n-1} = m_i p^nu (n >= 2); returns (m, nu)
    std::pair<Int, long> base_and_nu() const;
    void validate() const;  // p !| m_1; m_i >= p m_{i-1}; p | m_i => equality
};

// upper ramification breaks from a normalized representative
BreakSequence breaks(const WittVector& w);

// Condition of the main lifting theorem: for 3 <= i <= n-1 the interval
// (m_i/p - m_{i-1}, (m_i/(m_i - m_{i-1}))(m_i/p - m_{i-1})] contains no integer.
struct TmainResult {
    bool holds = true;
    std::optional<std::pair<long, Int>> witness;  // (i, a_i) on failure
};
TmainResult tmain_condition(const BreakSequence& b);

// smallest integer a with m_next/p - m_prev < a <= (m_next/(m_next-m_prev))(m_next/p - m_prev)
std::optional<Int> tsetup_interval_a(const Int& m_prev, const Int& m_next, long p);

struct RoortForm {
    Int r, eta;
    bool holds;  // 0 <= r <= eta
};
RoortForm roort_equiv_form(const Int& m_prev, const Int& m_next, long p);

// no essential ramification: m_i < p m_{i-1} + p for 2 <= i <= n
bool no_essential_ramification(const BreakSequence& b);

// branch points per ramification index p^{n-i+1}: count m_i - m_{i-1}, m_0 = -1
std::vector<std::pair<Int, Int>> branch_multiset(const BreakSequence& b);

}  // namespace ramlift
