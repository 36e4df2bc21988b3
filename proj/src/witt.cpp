#include "ramlift/witt.hpp"

#include <array>
#include <cstdint>

namespace ramlift {

WittVector witt_make(const FieldPtr& F, std::vector<FFPoly> coords) {
    return WittVector{F, std::move(coords)};
}

WittVector witt_zero(const FieldPtr& F, long n) {
    return WittVector{F, std::vector<FFPoly>(size_t(n), FFPoly(Var::t))};
}

namespace {

// Dense Laurent polynomials over GR(p^M, d) with int64 coefficients; the ghost
// engine only ever needs p^M <= p^4 and small d, so int64 never overflows
// (products < p^{2M} * d, accumulated with periodic reduction).
struct Dense {
    long lo = 0;          // exponent of coeff block 0
    long d = 1;
    std::vector<int64_t> c;  // size = nterms * d

    long nterms() const { return long(c.size()) / d; }
};

struct GREngine {
    long p, d, M;
    int64_t pM;
    std::vector<long> modulus;  // monic degree-d modulus over F_p (lifted)

    GREngine(long p_, long d_, long M_, std::vector<long> mod)
        : p(p_), d(d_), M(M_), modulus(std::move(mod)) {
        pM = 1;
        for (long i = 0; i < M; ++i) pM *= p;
    }

    void reduce_block(int64_t* out, const int64_t* prod) const {
        // prod has length 2d-1; fold modulo the modulus, then mod p^M
        std::vector<int64_t> t(prod, prod + 2 * d - 1);
        for (long k = 2 * d - 2; k >= d; --k) {
            int64_t lead = t[k] % pM;
            if (!lead) continue;
            for (long i = 0; i < d; ++i) t[k - d + i] = (t[k - d + i] - lead * modulus[i]) % pM;
            t[k] = 0;
        }
        for (long i = 0; i < d; ++i) out[i] = ((t[i] % pM) + pM) % pM;
    }

    Dense mul(const Dense& a, const Dense& b) const {
        Dense r;
        r.d = d;
        r.lo = a.lo + b.lo;
        long na = a.nterms(), nb = b.nterms();
        if (na == 0 || nb == 0) return r;
        std::vector<int64_t> acc(size_t(na + nb - 1) * (2 * d - 1), 0);
        // bound on inner accumulation before overflow: p^{2M} * min(na, nb) * d
        // keep safe by reducing periodically
        long budget = std::max<long>(1, long((int64_t(1) << 62) / (pM * pM * d)));
        long since = 0;
        for (long i = 0; i < na; ++i) {
            bool any = false;
            for (long x = 0; x < d; ++x) any |= (a.c[i * d + x] != 0);
            if (!any) continue;
            for (long j = 0; j < nb; ++j) {
                int64_t* dst = &acc[size_t(i + j) * (2 * d - 1)];
                for (long x = 0; x < d; ++x) {
                    int64_t ax = a.c[i * d + x];
                    if (!ax) continue;
                    for (long y = 0; y < d; ++y) dst[x + y] += ax * b.c[j * d + y];
                }
            }
            if (++since >= budget) {
                for (auto& v : acc) v %= pM;
                since = 0;
            }
        }
        r.c.assign(size_t(na + nb - 1) * d, 0);
        for (long k = 0; k < na + nb - 1; ++k)
            reduce_block(&r.c[size_t(k) * d], &acc[size_t(k) * (2 * d - 1)]);
        return r;
    }

    Dense pow(const Dense& a, long e) const {
        Dense acc;
        acc.d = d;
        acc.lo = 0;
        acc.c.assign(d, 0);
        acc.c[0] = 1;
        Dense base = a;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    Dense add(const Dense& a, const Dense& b, int64_t bscale) const {
        if (b.c.empty()) return a;
        if (a.c.empty()) {
            Dense r = b;
            for (auto& x : r.c) x = (((x * (bscale % pM)) % pM) + pM) % pM;
            return r;
        }
        Dense r;
        r.d = d;
        r.lo = std::min(a.lo, b.lo);
        long hi = std::max(a.lo + a.nterms(), b.lo + b.nterms());
        r.c.assign(size_t(hi - r.lo) * d, 0);
        for (long i = 0; i < a.nterms(); ++i)
            for (long x = 0; x < d; ++x) r.c[size_t(a.lo - r.lo + i) * d + x] += a.c[i * d + x];
        int64_t s = ((bscale % pM) + pM) % pM;
        for (long i = 0; i < b.nterms(); ++i)
            for (long x = 0; x < d; ++x)
                r.c[size_t(b.lo - r.lo + i) * d + x] =
                    (r.c[size_t(b.lo - r.lo + i) * d + x] + s * b.c[i * d + x]) % pM;
        for (auto& v : r.c) v = ((v % pM) + pM) % pM;
        return r;
    }

    Dense divide_p_exact(const Dense& a, long k) const {
        int64_t pk = 1;
        for (long i = 0; i < k; ++i) pk *= p;
        Dense r = a;
        for (auto& x : r.c) {
            if (x % pk != 0) throw std::logic_error("witt ghost: inexact division by p^k");
            x /= pk;
        }
        return r;
    }
};

long to_long(const Int& e) {
    if (e > Int(1000000000L) || e < Int(-1000000000L))
        throw bad_input("witt: exponent out of supported range");
    return long(e);
}

Dense lift_dense(const FFPoly& f, const GREngine& E) {
    Dense r;
    r.d = E.d;
    if (f.is_zero()) return r;
    long lo = to_long(f.terms().begin()->first);
    long hi = to_long(f.terms().rbegin()->first);
    r.lo = lo;
    r.c.assign(size_t(hi - lo + 1) * E.d, 0);
    for (const auto& [e, c] : f.terms())
        for (long x = 0; x < E.d && x < long(c.coeffs().size()); ++x)
            r.c[size_t(to_long(e) - lo) * E.d + x] = c.coeffs()[x];
    return r;
}

FFPoly reduce_dense(const Dense& a, const FieldPtr& F) {
    FFPoly g(Var::t);
    for (long i = 0; i < a.nterms(); ++i) {
        std::vector<long> cc(F->d(), 0);
        bool any = false;
        for (long x = 0; x < F->d(); ++x) {
            cc[x] = long(a.c[size_t(i) * a.d + x] % F->p());
            any |= (cc[x] != 0);
        }
        if (any) g.set(Int(a.lo + i), F->element(std::move(cc)));
    }
    return g;
}

std::vector<Dense> ghost_of(const std::vector<Dense>& x, const GREngine& E) {
    long n = long(x.size());
    std::vector<Dense> g;
    g.reserve(n);
    for (long k = 0; k < n; ++k) {
        Dense acc;
        acc.d = E.d;
        int64_t pi = 1;
        for (long i = 0; i <= k; ++i) {
            long pk = 1;
            for (long j = 0; j < k - i; ++j) pk *= E.p;
            acc = E.add(acc, E.pow(x[i], pk), pi);
            pi *= E.p;
        }
        g.push_back(std::move(acc));
    }
    return g;
}

std::vector<Dense> unghost(const std::vector<Dense>& g, const GREngine& E) {
    long n = long(g.size());
    std::vector<Dense> x;
    x.reserve(n);
    for (long k = 0; k < n; ++k) {
        Dense acc = g[k];
        int64_t pi = 1;
        for (long i = 0; i < k; ++i) {
            long pk = 1;
            for (long j = 0; j < k - i; ++j) pk *= E.p;
            acc = E.add(acc, E.pow(x[i], pk), -pi);
            pi *= E.p;
        }
        x.push_back(E.divide_p_exact(acc, k));
    }
    return x;
}

void check_compatible(const WittVector& a, const WittVector& b) {
    if (a.n() != b.n()) throw bad_input("Witt vector length mismatch");
    if (!a.field->same(*b.field)) throw bad_input("Witt vector field mismatch");
}

GREngine engine_for(const FieldPtr& F, long n) {
    auto lifted = F->modulus();
    return GREngine(F->p(), F->d(), n, lifted);
}

// core: componentwise ghost-sum of a and scale*b, reduced back mod p
WittVector witt_combine(const WittVector& a, const WittVector& b, long bsign) {
    long n = a.n();
    GREngine E = engine_for(a.field, n);
    std::vector<Dense> la, lb;
    for (const auto& f : a.coords) la.push_back(lift_dense(f, E));
    for (const auto& f : b.coords) lb.push_back(lift_dense(f, E));
    auto ga = ghost_of(la, E);
    auto gb = ghost_of(lb, E);
    std::vector<Dense> gs;
    for (long k = 0; k < n; ++k) gs.push_back(E.add(ga[k], gb[k], bsign));
    auto x = unghost(gs, E);
    std::vector<FFPoly> coords;
    for (const auto& f : x) coords.push_back(reduce_dense(f, a.field));
    return WittVector{a.field, std::move(coords)};
}

}  // namespace

std::vector<Laurent<GRElem>> ghost_components(const WittVector& a, long M) {
    auto R = GaloisRing::make(a.field->p(), a.field->d(), M);
    GREngine E(a.field->p(), a.field->d(), M, a.field->modulus());
    std::vector<Dense> lift;
    for (const auto& f : a.coords) lift.push_back(lift_dense(f, E));
    auto g = ghost_of(lift, E);
    std::vector<Laurent<GRElem>> out;
    for (const auto& f : g) {
        Laurent<GRElem> poly(Var::t);
        for (long i = 0; i < f.nterms(); ++i) {
            std::vector<Int> cc(E.d);
            bool any = false;
            for (long x = 0; x < E.d; ++x) {
                cc[x] = f.c[size_t(i) * E.d + x];
                any |= (cc[x] != 0);
            }
            if (any) poly.set(Int(f.lo + i), R->element(std::move(cc)));
        }
        out.push_back(std::move(poly));
    }
    return out;
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
    check_compatible(a, b);
    return witt_combine(a, b, 1);
}

WittVector witt_sub(const WittVector& a, const WittVector& b) {
    check_compatible(a, b);
    return witt_combine(a, b, -1);
}

WittVector witt_neg(const WittVector& a) {
    return witt_combine(witt_zero(a.field, a.n()), a, -1);
}

WittVector frobenius(const WittVector& a) {
    long p = a.field->p();
    std::vector<FFPoly> coords;
    coords.reserve(a.coords.size());
    for (const auto& f : a.coords) {
        FFPoly g(f.var());
        for (const auto& [e, c] : f.terms()) g.add_term(e * p, c.pow(p));
        coords.push_back(std::move(g));
    }
    return WittVector{a.field, std::move(coords)};
}

WittVector wp(const WittVector& a) { return witt_sub(frobenius(a), a); }

namespace {

// solve x^p - x = c over F via the F_p-linear system for x -> x^p - x,
// extending the field when the trace obstruction is nonzero
std::pair<FieldPtr, FFElem> artin_schreier_root(FieldPtr F, FFElem c) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        long p = F->p(), d = F->d();
        // columns: images of basis vectors under x -> x^p - x
        std::vector<std::vector<long>> mat(d, std::vector<long>(d + 1, 0));
        for (long j = 0; j < d; ++j) {
            std::vector<long> e(d, 0);
            e[j] = 1;
            FFElem x = F->element(e);
            FFElem y = x.frobenius() - x;
            for (long i = 0; i < d; ++i) mat[i][j] = y.coeffs()[i];
        }
        for (long i = 0; i < d; ++i) mat[i][d] = c.coeffs()[i];
        // gaussian elimination for one solution
        long rank = 0;
        std::vector<long> pivot_col(d, -1);
        for (long j = 0; j < d && rank < d; ++j) {
            long piv = -1;
            for (long i = rank; i < d; ++i)
                if (mat[i][j] % p != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(mat[rank], mat[piv]);
            long inv = pow_mod(mat[rank][j], p - 2, p);
            for (long k = 0; k <= d; ++k) mat[rank][k] = (mat[rank][k] * inv) % p;
            for (long i = 0; i < d; ++i) {
                if (i == rank) continue;
                long f = mat[i][j] % p;
                if (!f) continue;
                for (long k = 0; k <= d; ++k)
                    mat[i][k] = ((mat[i][k] - f * mat[rank][k]) % p + p) % p;
            }
            pivot_col[rank++] = j;
        }
        bool consistent = true;
        for (long i = rank; i < d; ++i)
            if (mat[i][d] % p != 0) consistent = false;
        if (consistent) {
            std::vector<long> sol(d, 0);
            for (long r = 0; r < rank; ++r) sol[pivot_col[r]] = mat[r][d];
            return {F, F->element(sol)};
        }
        FieldPtr E = FiniteField::make(p, d * p);
        FieldEmbedding emb(F, E);
        c = emb(c);
        F = E;
    }
    throw std::logic_error("artin_schreier_root: no root after extension");
}

WittVector embed_witt(const WittVector& w, const FieldPtr& E) {
    FieldEmbedding emb(w.field, E);
    std::vector<FFPoly> coords;
    for (const auto& f : w.coords) {
        FFPoly g(f.var());
        for (const auto& [e, c] : f.terms()) g.set(e, emb(c));
        coords.push_back(std::move(g));
    }
    return WittVector{E, std::move(coords)};
}

// w - V^i(u): slots < i unchanged, tail = W_{n-i} subtraction of tails.
// V^i W is an ideal for the group law, so only the short tail arithmetic runs.
WittVector witt_sub_shifted(const WittVector& w, long i, const WittVector& u_tail) {
    WittVector head = w;
    WittVector wtail{w.field,
                     std::vector<FFPoly>(w.coords.begin() + i, w.coords.end())};
    WittVector diff = witt_sub(wtail, u_tail);
    for (long k = i; k < w.n(); ++k) head.coords[k] = diff.coords[k - i];
    return head;
}

}  // namespace

WittVector normalize(const WittVector& w0) {
    WittVector w = w0;
    long p = w.field->p();
    for (const auto& f : w.coords)
        if (auto top = f.deg(); top && *top > 0)
            throw bad_input("normalize: coordinate has positive t-exponents");
    long n = w.n();
    for (long i = 0; i < n; ++i) {
        // accumulate the slot-i correction at the coordinate level; the slot-i
        // effect of subtracting wp(y), y in slot i, is exact (same-prefix).
        FFPoly f = w.coords[i];
        FFPoly yi(Var::t);
        for (;;) {
            FFPoly bad(Var::t);
            for (const auto& [e, c] : f.terms())
                if (e < 0 && (-e) % p == 0) bad.set(e, c);
            if (bad.is_zero()) break;
            FFPoly root(Var::t);
            for (const auto& [e, c] : bad.terms()) root.add_term(e / p, c.pth_root());
            f = f - bad + root;
            yi = yi + root;
        }
        if (f.has(0)) {
            FFElem a = f.get(0, w.field->zero());
            auto [E, b] = artin_schreier_root(w.field, a);
            if (!E->same(*w.field)) {
                FieldEmbedding emb(w.field, E);
                w = embed_witt(w, E);
                FFPoly ye(Var::t);
                for (const auto& [e, c] : yi.terms()) ye.set(e, emb(c));
                yi = ye;
            }
            yi.add_term(0, b);
        }
        if (!yi.is_zero()) {
            // wp(y) with y in slot i is V^i of wp of the tail vector (y_i,0,..)
            WittVector ytail = witt_zero(w.field, n - i);
            ytail.coords[0] = yi;
            w = witt_sub_shifted(w, i, wp(ytail));
            for (const auto& [e, c] : w.coords[i].terms())
                if (e == 0 || (-e) % p == 0)
                    throw std::logic_error("normalize: coordinate correction incomplete");
        }
    }
    return w;
}

std::pair<Int, long> BreakSequence::base_and_nu() const {
    if (n() < 2) throw bad_input("base_and_nu needs n >= 2");
    Int mn1 = m[n() - 2];
    for (long i = 0; i < n() - 1; ++i) {
        const Int& mi = m[i];
        if (mn1 % mi == 0) {
            Int ratio = mn1 / mi;
            long k = 0;
            while (ratio % p == 0) {
                ratio /= p;
                ++k;
            }
            if (ratio == 1) return {mi, k};
        }
    }
    throw std::logic_error("break sequence has no p-power base");
}

void BreakSequence::validate() const {
    if (m.empty()) throw bad_input("empty break sequence");
    if (m[0] % p == 0) throw bad_input("p divides m_1");
    if (m[0] < 1) throw bad_input("m_1 < 1");
    for (long i = 1; i < n(); ++i) {
        if (m[i] < p * m[i - 1]) throw bad_input("m_i < p*m_{i-1}");
        if (m[i] % p == 0 && m[i] != p * m[i - 1])
            throw bad_input("p | m_i but m_i != p*m_{i-1}");
    }
}

BreakSequence breaks(const WittVector& w0) {
    WittVector w = normalize(w0);
    if (w.coords.empty() || w.coords[0].is_zero())
        throw bad_input("breaks: zero first coordinate (order < p^n)");
    long p = w.field->p();
    BreakSequence b;
    b.p = p;
    Int prev = 0;
    for (long i = 0; i < w.n(); ++i) {
        Int mi = p * prev;
        auto d = w.coords[i].deg_inv();
        if (d && *d > mi) mi = *d;
        if (i == 0) {
            if (!d) throw bad_input("breaks: zero first coordinate");
            mi = *d;
        }
        b.m.push_back(mi);
        prev = mi;
    }
    b.validate();
    return b;
}

TmainResult tmain_condition(const BreakSequence& b) {
    for (long i = 3; i <= b.n() - 1; ++i) {
        const Int& mi = b.m[i - 1];
        const Int& mi1 = b.m[i - 2];
        auto a = tsetup_interval_a(mi1, mi, b.p);
        if (a) return {false, std::make_pair(i, *a)};
    }
    return {true, std::nullopt};
}

std::optional<Int> tsetup_interval_a(const Int& m_prev, const Int& m_next, long p) {
    if (m_next < p * m_prev) throw bad_input("tsetup_interval_a: m_next < p*m_prev");
    Rat lo = Rat(m_next, p) - Rat(m_prev);
    Rat hi = Rat(m_next, m_next - m_prev) * lo;
    Int a = rat_floor(lo) + 1;
    if (Rat(a) <= hi) return a;
    return std::nullopt;
}

RoortForm roort_equiv_form(const Int& m_prev, const Int& m_next, long p) {
    Int D = m_next - p * m_prev;
    if (D < 0) throw bad_input("roort_equiv_form: m_next < p*m_prev");
    Int eta = ((-D) % p + p) % p;
    Int r = (D + eta) / p;
    return {r, eta, r >= 0 && r <= eta};
}

bool no_essential_ramification(const BreakSequence& b) {
    for (long i = 1; i < b.n(); ++i)
        if (b.m[i] >= b.p * b.m[i - 1] + b.p) return false;
    return true;
}

std::vector<std::pair<Int, Int>> branch_multiset(const BreakSequence& b) {
    std::vector<std::pair<Int, Int>> out;
    Int prev = -1;
    for (long i = 1; i <= b.n(); ++i) {
        Int idx = ipow(Int(b.p), b.n() - i + 1);
        out.emplace_back(idx, b.m[i - 1] - prev);
        prev = b.m[i - 1];
    }
    return out;
}

}  // namespace ramlift
