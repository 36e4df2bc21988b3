#include "ramlift/ff_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ramlift {

FFPoly ff_poly(const FieldPtr& F, Var v, const std::vector<std::pair<long, long>>& terms) {
    FFPoly g(v);
    for (auto [e, c] : terms) g.add_term(e, F->from_int(c));
    return g;
}

DiffForm derivative(const FFPoly& g) {
    FFPoly m(g.var());
    for (const auto& [e, c] : g.terms()) {
        long p = c.parent()->p();
        Int k = e % p;
        long kl = long(((k % p) + p) % p);
        FFElem kc = c.parent()->from_int(kl) * c;
        if (!kc.is_zero()) m.add_term(e - 1, kc);
    }
    return {m};
}

DiffForm log_derivative(const FFPoly& g, long truncation) {
    if (g.is_zero()) throw bad_input("log_derivative of zero");
    // factor g = lead * t^{e0} * (1 + u), u supported in t^{-1}..; then
    // dg/g = e0 dt/t + d(1+u)/(1+u), expanded geometrically.
    const Int e0 = *g.deg();  // top exponent
    FFElem lead = g.get(e0, g.terms().begin()->second.parent()->zero());
    FieldPtr F = lead.parent();
    FFElem lead_inv = lead.inverse();
    FFPoly u(g.var());
    for (const auto& [e, c] : g.terms())
        if (e != e0) u.add_term(e - e0, c * lead_inv);
    // dg/g = e0/t dt + (du) * (1 - u + u^2 - ...) ; du has exponents <= -2
    DiffForm du = derivative(u);
    FFPoly series(g.var());  // 1 - u + u^2 - ...
    FFPoly one(g.var());
    one.add_term(0, F->one());
    FFPoly acc = one, upow = one;
    long needed = truncation + 1;
    for (long k = 1; k <= needed; ++k) {
        upow = (upow * u).truncate_below(-Int(needed));
        if (upow.is_zero()) break;
        acc = (k % 2) ? acc - upow : acc + upow;
    }
    FFPoly m = (du.mantissa * acc).truncate_below(-Int(truncation + 1));
    Int e0m = e0 % F->p();
    long e0l = long(((e0m % F->p()) + F->p()) % F->p());
    m.add_term(-1, F->from_int(e0l));
    return {m};
}

DiffForm cartier(const DiffForm& w) {
    FFPoly m(w.mantissa.var());
    for (const auto& [e, c] : w.mantissa.terms()) {
        long p = c.parent()->p();
        Int k = e + 1;
        if (k % p != 0) continue;
        m.add_term(k / p - 1, c.pth_root());
    }
    return {m};
}

std::optional<Int> ord_inf(const DiffForm& w) {
    auto top = w.mantissa.deg();
    if (!top) return std::nullopt;
    return -*top - 2;
}

std::vector<FFElem> clear_poles(const FFPoly& g) {
    if (g.is_zero()) return {};
    Int low = g.terms().begin()->first;
    FieldPtr F = g.terms().begin()->second.parent();
    Int span = *g.deg() - low;
    if (span > 100000) throw bad_input("polynomial degree span too large");
    std::vector<FFElem> dense(long(span) + 1, F->zero());
    for (const auto& [e, c] : g.terms()) dense[long(e - low)] = c;
    return dense;
}

static void trim(std::vector<FFElem>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

static std::vector<FFElem> dense_mod(std::vector<FFElem> a, const std::vector<FFElem>& b) {
    // b monic
    while (a.size() >= b.size()) {
        FFElem lead = a.back();
        size_t shift = a.size() - b.size();
        if (!lead.is_zero())
            for (size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] = a[shift + i] - lead * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

std::vector<FFElem> ff_gcd(std::vector<FFElem> a, std::vector<FFElem> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FFElem inv = b.back().inverse();
        std::vector<FFElem> bm = b;
        for (auto& c : bm) c = c * inv;
        a = dense_mod(std::move(a), bm);
        std::swap(a, b);
    }
    return a;
}

static std::vector<FFElem> dense_derivative(const std::vector<FFElem>& a) {
    std::vector<FFElem> d;
    if (a.size() <= 1) return d;
    d.reserve(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) {
        long p = a[k].parent()->p();
        d.push_back(a[k].parent()->from_int(long(k % p)) * a[k]);
    }
    trim(d);
    return d;
}

bool squarefree_check(const FFPoly& g) {
    auto dense = clear_poles(g);
    trim(dense);
    if (dense.size() <= 1) return true;
    auto der = dense_derivative(dense);
    if (der.empty()) return false;  // p-th power
    auto gcd = ff_gcd(dense, der);
    return gcd.size() <= 1;
}

static FFElem dense_eval(const std::vector<FFElem>& a, const FFElem& x) {
    FFElem acc = x.parent()->zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// synthetic division by (X - x); returns multiplicity removed
static long deflate_root(std::vector<FFElem>& poly, const FFElem& x) {
    long mult = 0;
    while (poly.size() > 1) {
        std::vector<FFElem> quot(poly.size() - 1, x.parent()->zero());
        FFElem carry = x.parent()->zero();
        for (long k = long(poly.size()) - 1; k >= 1; --k) {
            carry = poly[k] + carry;
            quot[k - 1] = carry;
            carry = carry * x;
        }
        if (!(poly[0] + carry).is_zero()) break;
        poly = std::move(quot);
        ++mult;
    }
    return mult;
}

static std::vector<FFElem> make_monic(std::vector<FFElem> a) {
    trim(a);
    if (a.empty()) return a;
    FFElem inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
    return a;
}

// x^q mod m (dense monic m over F_{p^d})
static std::vector<FFElem> xq_mod(const std::vector<FFElem>& m, Int q) {
    FieldPtr F = m[0].parent();
    std::vector<FFElem> base{F->zero(), F->one()};
    base = dense_mod(std::move(base), m);
    std::vector<FFElem> acc{F->one()};
    while (q > 0) {
        if ((q & 1) != 0) {
            // acc * base mod m
            std::vector<FFElem> prod(acc.size() + base.size() - 1, F->zero());
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t j = 0; j < base.size(); ++j)
                    prod[i + j] = prod[i + j] + acc[i] * base[j];
            acc = dense_mod(std::move(prod), m);
        }
        {
            std::vector<FFElem> prod(2 * base.size() - 1, F->zero());
            for (size_t i = 0; i < base.size(); ++i)
                for (size_t j = 0; j < base.size(); ++j)
                    prod[i + j] = prod[i + j] + base[i] * base[j];
            base = dense_mod(std::move(prod), m);
        }
        q >>= 1;
    }
    return acc;
}

// distinct-degree split: list of (degree k, product-of-degree-k-factors)
static std::vector<std::pair<long, std::vector<FFElem>>> ddf(std::vector<FFElem> f) {
    FieldPtr F = f[0].parent();
    Int q = F->order();
    std::vector<std::pair<long, std::vector<FFElem>>> out;
    f = make_monic(std::move(f));
    Int qk = 1;
    long k = 0;
    while (f.size() > 1) {
        ++k;
        qk *= q;
        if (k > long(f.size()) - 1) break;
        std::vector<FFElem> t = xq_mod(f, qk);
        if (t.size() < 2) t.resize(2, F->zero());
        t[1] = t[1] - F->one();
        trim(t);
        auto g = make_monic(ff_gcd(f, t));
        if (g.size() > 1) {
            out.emplace_back(k, g);
            // f /= g
            std::vector<FFElem> quot;
            {
                std::vector<FFElem> a = f;
                quot.assign(a.size() - g.size() + 1, F->zero());
                while (a.size() >= g.size()) {
                    FFElem lead = a.back();
                    size_t sh = a.size() - g.size();
                    quot[sh] = lead;
                    for (size_t i = 0; i < g.size(); ++i) a[sh + i] = a[sh + i] - lead * g[i];
                    trim(a);
                    if (a.size() < g.size()) break;
                }
            }
            f = make_monic(std::move(quot));
        }
    }
    if (f.size() > 1) out.emplace_back(long(f.size()) - 1, f);
    return out;
}

RootList roots_in_extension(const FFPoly& g) {
    auto dense = clear_poles(g);
    trim(dense);
    if (dense.size() <= 1) throw bad_input("roots_in_extension: degree 0 input");
    FieldPtr F = dense[0].parent();
    long p = F->p();
    long d = F->d();

    // squarefree part (same root set) for the distinct-degree ladder;
    // multiplicities come from deflation against the original at the end.
    std::vector<FFElem> squarefree = make_monic(dense);
    for (;;) {
        auto der = dense_derivative(squarefree);
        if (der.empty()) {
            if (squarefree.size() <= 1) break;
            // p-th power: take the p-th root
            std::vector<FFElem> rt((squarefree.size() - 1) / p + 1, F->zero());
            for (size_t i = 0; i < squarefree.size(); ++i)
                if (!squarefree[i].is_zero()) rt[i / p] = squarefree[i].pth_root();
            squarefree = std::move(rt);
            continue;
        }
        auto gcd = make_monic(ff_gcd(squarefree, der));
        if (gcd.size() <= 1) break;
        std::vector<FFElem> a = squarefree, quot(squarefree.size() - gcd.size() + 1, F->zero());
        while (a.size() >= gcd.size()) {
            FFElem lead = a.back();
            size_t sh = a.size() - gcd.size();
            quot[sh] = lead;
            for (size_t i = 0; i < gcd.size(); ++i) a[sh + i] = a[sh + i] - lead * gcd[i];
            trim(a);
        }
        squarefree = std::move(quot);
    }
    auto factors = ddf(squarefree);
    long split = 1;
    for (auto& [k, f] : factors) split = (split / std::gcd(split, k)) * k;
    long dd = d * split;

    // enumeration budget: |F_{p^dd}| <= 2^21
    const double kLogCap = 21.0 * 0.6931471805599453;
    bool enumerable = dd * std::log(double(p)) <= kLogCap;

    FieldPtr E;
    std::optional<FieldEmbedding> emb;
    std::vector<std::pair<FFElem, long>> roots;
    if (enumerable) {
        E = FiniteField::make(p, dd);
        emb.emplace(F, E);
    } else {
        // single large factor fallback: representable when d = 1 and exactly one
        // factor degree exceeds the cap with all other factors of degree 1.
        if (d != 1) throw bad_input("roots_in_extension: splitting field too large");
        long big = 0;
        for (auto& [k, f] : factors)
            if (k > 1) {
                if (big) throw bad_input("roots_in_extension: splitting field too large");
                big = k;
            }
        // field defined by the big factor itself (deterministic given input)
        std::vector<FFElem>* bigf = nullptr;
        for (auto& [k, f] : factors)
            if (k == big) bigf = &f;
        std::vector<long> mod(bigf->size() - 1);
        for (size_t i = 0; i + 1 < bigf->size(); ++i) mod[i] = (*bigf)[i].coeffs()[0];
        E = FiniteField::make_with_modulus(p, mod);
        emb.emplace(F, E);
        // roots of the big factor: Frobenius orbit of the class of x
        FFElem x = E->gen();
        FFElem r = x;
        for (long i = 0; i < big; ++i) {
            roots.emplace_back(r, 1);
            r = r.frobenius();
        }
        // rational roots of the remaining degree-1 factors by search over F_p
        for (auto& [k, f] : factors) {
            if (k != 1) continue;
            std::vector<FFElem> rem = f;
            for (long v = 0; v < p && rem.size() > 1; ++v) {
                FFElem cand = F->from_int(v);
                if (dense_eval(rem, cand).is_zero()) {
                    long mult = deflate_root(rem, cand);
                    for (long i = 0; i < mult; ++i) roots.emplace_back((*emb)(cand), 1);
                }
            }
        }
        // attach multiplicities from the original polynomial
        RootList out{E, {}};
        for (auto& [x0, m0] : roots) {
            std::vector<FFElem> lifted;
            lifted.reserve(dense.size());
            for (const auto& c : dense) lifted.push_back((*emb)(c));
            long mult = deflate_root(lifted, x0);
            out.roots.emplace_back(x0, mult);
        }
        return out;
    }

    std::vector<FFElem> poly;
    poly.reserve(dense.size());
    for (const auto& c : dense) poly.push_back((*emb)(c));
    RootList out{E, {}};
    std::vector<FFElem> remaining = poly;
    Int q = E->order();
    for (Int idx = 0; idx < q && remaining.size() > 1; ++idx) {
        FFElem x = E->element_by_index(idx);
        if (!dense_eval(remaining, x).is_zero()) continue;
        long mult = deflate_root(remaining, x);
        if (mult > 0) out.roots.emplace_back(x, mult);
    }
    long total = 0;
    for (auto& [x, m] : out.roots) total += m;
    if (total != long(poly.size()) - 1)
        throw std::logic_error("roots_in_extension: split detection inconsistent");
    return out;
}

}  // namespace ramlift
