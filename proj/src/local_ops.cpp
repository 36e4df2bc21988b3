#include "ramlift/local_ops.hpp"

#include "ramlift/gauss.hpp"

namespace ramlift {

LocalElement ldense_eval(const LDense& f, const LocalElement& x) {
    LocalElement acc = le_zero(x.field(), x.prec() + x.field()->e() * 4);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

LDense ldense_derivative(const LDense& f) {
    LDense d;
    for (size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * le_int(f[k].field(), Int(k)));
    return d;
}

LocalElement hensel_root(const LDense& f, const LocalElement& x0) {
    LDense fp = ldense_derivative(f);
    LocalElement x = x0;
    auto fx = ldense_eval(f, x);
    auto fpx = ldense_eval(fp, x);
    auto vf = fx.val_pi();
    auto vfp = fpx.val_pi();
    if (!vf) return x0;  // already a root to tracked precision
    if (!vfp || !(*vf > 2 * *vfp))
        throw bad_input("hensel_root: criterion v(f(x0)) > 2 v(f'(x0)) fails");
    long prec = x.prec();
    // quadratic convergence: error doubles in pi-precision modulo the fixed
    // derivative valuation; claim the standard Hensel precision each step
    for (long it = 0; it < 128; ++it) {
        x = LocalElement(x.field(), x.digits(), prec);
        fx = ldense_eval(f, x);
        if (fx.is_zero()) break;
        fpx = ldense_eval(fp, x);
        LocalElement step = fx * fpx.inverse();
        x = LocalElement(x.field(), (x - step).digits(), prec);
        if (step.is_zero()) break;
    }
    return x;
}

LocalElement refine_root_digits(const LDense& f, LocalElement x, long max_steps) {
    const LFPtr& F = x.field();
    LDense fp = ldense_derivative(f);
    Int q = F->residue_field()->order();
    for (long step = 0; step < max_steps; ++step) {
        auto fx = ldense_eval(f, x);
        auto vf = fx.val_pi();
        if (!vf) return x;  // root to precision
        auto fpx = ldense_eval(fp, x);
        auto vfp = fpx.val_pi();
        if (vfp && *vf > 2 * *vfp) return hensel_root(f, x);
        // try all digits at the first level that improves v(f)
        bool improved = false;
        for (long lvl = 0; lvl < x.prec() && !improved; ++lvl) {
            for (Int idx = 1; idx < q; ++idx) {
                FFElem dig = F->residue_field()->element_by_index(idx);
                LocalElement cand = x + le_lift(F, dig, x.prec()).shift_pi(lvl);
                auto vc = ldense_eval(f, cand).val_pi();
                if (!vc || *vc > *vf) {
                    x = cand;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) throw bad_input("refine_root_digits: no improving digit (no root in field?)");
    }
    throw precision_error("refine_root_digits: step budget exhausted");
}

LocalElement zeta_p_minus_one(const LFPtr& F) {
    long p = F->p();
    if (F->e() != p - 1 || F->sign() != -1)
        throw bad_input("zeta_p_minus_one: field must be (p, d, p-1, prec, -)");
    // Phi_p(1+x) = sum_{j=0}^{p-1} C(p, j+1) x^j, monic of degree p-1
    LDense f;
    for (long j = 0; j <= p - 1; ++j) {
        Rat c = binom_rat(Rat(p), j + 1);
        f.push_back(le_rat(F, c));
    }
    LocalElement x0 = le_pi_pow(F, 1);
    LocalElement lam = refine_root_digits(f, x0);
    return lam;
}

LocalElement pth_root(const LocalElement& x) {
    const LFPtr& F = x.field();
    long p = F->p();
    if (x.is_zero()) return x;
    long v = *x.val_pi();
    if (v % p != 0)
        throw needs_extension("pth_root: valuation not divisible by p at current e");
    LocalElement u = x.shift_pi(-v);
    FFElem r = u.residue_unit();
    FFElem rroot = r.pth_root();
    LocalElement t = le_teichmuller(F, rroot, u.prec());
    LocalElement tp = t.pow(p);
    LocalElement w = u * tp.inverse() - le_one(F, u.prec());  // 1-unit part - 1
    if (!w.is_zero()) {
        // convergence of (1+w)^{1/p} needs v(w) > p/(p-1)
        Rat vw = Rat(*w.val_pi(), F->e());
        if (!(vw > Rat(p, p - 1)))
            throw needs_extension("pth_root: unit part outside the binomial convergence region");
    }
    // Newton on y^p = 1 + w from y0 = 1: y <- y - (y^p - (1+w)) / (p y^{p-1})
    LocalElement target = le_one(F, u.prec()) + w;
    LocalElement y = le_one(F, u.prec());
    for (long it = 0; it < 128; ++it) {
        y = LocalElement(F, y.digits(), u.prec());
        LocalElement yp1 = y.pow(p - 1);
        LocalElement fy = yp1 * y - target;
        if (fy.is_zero()) break;
        LocalElement step = fy * (le_int(F, p, u.prec()) * yp1).inverse();
        y = LocalElement(F, (y - step).digits(), u.prec());
    }
    return (t * y).shift_pi(v / p);
}

Rat binom_rat(const Rat& q, long j) {
    Rat acc = 1;
    for (long i = 0; i < j; ++i) acc *= (q - i) / Rat(i + 1);
    return acc;
}

LPoly binomial_pth_root_series(const LPoly& G, long k, const Rat& r, long trunc) {
    if (G.is_zero()) throw bad_input("binomial series of zero");
    const LFPtr& F = G.terms().begin()->second.field();
    long p = F->p();
    LPoly w = G;  // G - 1
    w.add_term(0, -le_one(F));
    // convergence precondition at radius r
    for (const auto& [e, c] : w.terms()) {
        auto vc = c.valuation_opt();
        if (!vc) continue;
        Rat vr = *vc + Rat(e) * r;  // v_r of c T^e (e negative for T^-i terms)
        if (!(vr > Rat(1, p - 1)))
            throw bad_input("binomial_pth_root_series: v_r(G-1) <= 1/(p-1), series diverges");
    }
    Rat q(1, ipow(Int(p), k));
    LPoly acc = lpoly_one(F, G.var());
    LPoly wpow = lpoly_one(F, G.var());
    // w has only negative exponents; truncate at T^{-trunc}
    for (long j = 1;; ++j) {
        wpow = (wpow * w).truncate_below(-Int(trunc));
        if (wpow.is_zero()) break;
        Rat c = binom_rat(q, j);
        LPoly term(G.var());
        LocalElement ce = le_rat(F, c);
        for (const auto& [e, x] : wpow.terms()) {
            LocalElement y = x * ce;
            if (!y.is_zero()) term.add_term(e, y);
        }
        acc = acc + term;
        if (j > trunc + 4) break;  // w has no constant term; degree grows each step
    }
    return acc.truncate_below(-Int(trunc));
}

}  // namespace ramlift
