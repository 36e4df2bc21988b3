#include "ramlift/local.hpp"

#include <sstream>

namespace ramlift {

LFPtr LocalField::make(long p, long d, long e, long prec_pi, int sign) {
    if (!is_prime(p)) throw bad_input("local field: p not prime");
    if (d < 1 || e < 1 || prec_pi < 1) throw bad_input("local field: bad parameters");
    if (sign != 1 && sign != -1) throw bad_input("local field: sign must be +1/-1");
    auto k = FiniteField::make(p, d);
    return LFPtr(new LocalField(p, d, e, prec_pi, sign, std::move(k)));
}

namespace {

// digits needed at exponent ex for absolute precision prec
long digits_needed(long ex, long prec, long e) {
    if (ex >= prec) return 0;
    return (prec - ex + e - 1) / e;
}

void reduce_digit(std::vector<Int>& c, const Int& pM) {
    for (auto& x : c) {
        x %= pM;
        if (x < 0) x += pM;
    }
}

bool digit_zero(const std::vector<Int>& c) {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

// multiply two coefficient vectors modulo the (lifted) residue modulus
std::vector<Int> digit_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                           const std::vector<long>& mod) {
    long d = long(mod.size());
    if (d == 1) return {a[0] * b[0]};
    std::vector<Int> prod(2 * d - 1, 0);
    for (long i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    for (long k = 2 * d - 2; k >= d; --k) {
        Int lead = prod[k];
        if (lead == 0) continue;
        for (long i = 0; i < d; ++i) prod[k - d + i] -= lead * mod[i];
        prod[k] = 0;
    }
    prod.resize(d);
    return prod;
}

long vp_digit(const std::vector<Int>& c, long p, long cap) {
    long best = cap;
    for (const auto& x : c) {
        if (x == 0) continue;
        Int y = x;
        long v = 0;
        while (v < best && y % p == 0) {
            y /= p;
            ++v;
        }
        best = std::min(best, v);
        if (best == 0) break;
    }
    return best;
}

}  // namespace

LocalElement::LocalElement(LFPtr F, std::map<long, std::vector<Int>> digits, long prec)
    : F_(std::move(F)), d_(std::move(digits)), prec_(prec) {
    normalize();
}

void LocalElement::normalize() {
    long e = F_->e(), p = F_->p();
    // fold p-powers of digits into the exponent: p = sign * pi^e
    for (bool changed = true; changed;) {
        changed = false;
        std::map<long, std::vector<Int>> nd;
        for (auto& [ex, c] : d_) {
            if (ex >= prec_) continue;
            long M = digits_needed(ex, prec_, e);
            reduce_digit(c, ipow(Int(p), M));
            if (digit_zero(c)) continue;
            long w = vp_digit(c, p, M);
            long nex = ex;
            std::vector<Int> nc = c;
            if (w > 0) {
                Int pw = ipow(Int(p), w);
                for (auto& x : nc) x /= pw;
                if (F_->sign() < 0 && (w % 2)) {
                    for (auto& x : nc) x = -x;
                }
                nex = ex + e * w;
                changed = true;
                if (nex >= prec_) continue;
            }
            auto it = nd.find(nex);
            if (it == nd.end()) {
                nd.emplace(nex, std::move(nc));
            } else {
                for (long i = 0; i < long(nc.size()); ++i) it->second[i] += nc[i];
                changed = true;
            }
        }
        d_ = std::move(nd);
    }
    // final reduction pass
    std::map<long, std::vector<Int>> nd;
    for (auto& [ex, c] : d_) {
        long M = digits_needed(ex, prec_, e);
        std::vector<Int> cc = c;
        reduce_digit(cc, ipow(Int(p), M));
        if (!digit_zero(cc)) nd.emplace(ex, std::move(cc));
    }
    d_ = std::move(nd);
}

std::optional<long> LocalElement::val_pi() const {
    if (d_.empty()) return std::nullopt;
    return d_.begin()->first;
}

Rat LocalElement::valuation() const {
    auto v = val_pi();
    if (!v)
        throw precision_error("valuation of element that is zero to tracked precision (>= " +
                              rat_str(Rat(prec_, F_->e())) + ")");
    return Rat(*v, F_->e());
}

std::optional<Rat> LocalElement::valuation_opt() const {
    auto v = val_pi();
    if (!v) return std::nullopt;
    return Rat(*v, F_->e());
}

static void check_same_field(const LocalElement& a, const LocalElement& b) {
    if (!a.field()->same(*b.field())) throw bad_input("local field mismatch");
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
    check_same_field(*this, o);
    long prec = std::min(prec_, o.prec_);
    std::map<long, std::vector<Int>> nd = d_;
    for (const auto& [ex, c] : o.d_) {
        auto it = nd.find(ex);
        if (it == nd.end()) {
            nd.emplace(ex, c);
        } else {
            for (long i = 0; i < long(c.size()); ++i) it->second[i] += c[i];
        }
    }
    return LocalElement(F_, std::move(nd), prec);
}

LocalElement LocalElement::operator-() const {
    std::map<long, std::vector<Int>> nd = d_;
    for (auto& [ex, c] : nd)
        for (auto& x : c) x = -x;
    return LocalElement(F_, std::move(nd), prec_);
}

LocalElement LocalElement::operator-(const LocalElement& o) const { return *this + (-o); }

LocalElement LocalElement::operator*(const LocalElement& o) const {
    check_same_field(*this, o);
    long va = d_.empty() ? prec_ : d_.begin()->first;
    long vb = o.d_.empty() ? o.prec_ : o.d_.begin()->first;
    long prec = std::min(prec_ + vb, o.prec_ + va);
    // cap: products beyond prec are dropped anyway
    std::map<long, std::vector<Int>> nd;
    const auto& mod = F_->modulus();
    for (const auto& [e1, c1] : d_) {
        for (const auto& [e2, c2] : o.d_) {
            long ex = e1 + e2;
            if (ex >= prec) continue;
            auto prod = digit_mul(c1, c2, mod);
            auto it = nd.find(ex);
            if (it == nd.end()) {
                nd.emplace(ex, std::move(prod));
            } else {
                for (long i = 0; i < long(prod.size()); ++i) it->second[i] += prod[i];
            }
        }
    }
    return LocalElement(F_, std::move(nd), prec);
}

LocalElement LocalElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    LocalElement acc = le_one(F_, prec_ + (F_->e()) * 4);
    LocalElement base = *this;
    if (n == 0) return acc;
    for (;;) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (!n) break;
        base = base * base;
    }
    return acc;
}

LocalElement LocalElement::shift_pi(long k) const {
    std::map<long, std::vector<Int>> nd;
    for (const auto& [ex, c] : d_) nd.emplace(ex + k, c);
    return LocalElement(F_, std::move(nd), prec_ + k);
}

LocalElement LocalElement::cap_prec(long prec) const {
    if (prec >= prec_) return *this;
    return LocalElement(F_, d_, prec);
}

FFElem LocalElement::residue_unit() const {
    const auto& k = F_->residue_field();
    if (d_.empty()) return k->zero();
    long v = d_.begin()->first;
    const auto& c = d_.begin()->second;
    std::vector<long> cc(F_->d());
    for (long i = 0; i < F_->d(); ++i) cc[i] = long(c[i] % F_->p());
    (void)v;
    return k->element(std::move(cc));
}

LocalElement LocalElement::inverse() const {
    if (d_.empty()) throw precision_error("inverse of element that is zero to precision");
    long v = d_.begin()->first;
    LocalElement u = shift_pi(-v);  // unit
    // Newton x -> x(2 - u x) from the residue inverse
    FFElem r0 = u.residue_unit().inverse();
    long target = u.prec();
    LocalElement x = le_lift(F_, r0, 1);
    long cur = 1;
    while (cur < target) {
        cur = std::min(2 * cur, target);
        // lift the iterate so products are computed through pi^cur, then the
        // quadratic-convergence guarantee makes the claimed precision true
        x = LocalElement(F_, x.digits(), cur);
        LocalElement two = le_int(F_, 2, cur);
        x = LocalElement(F_, (x * (two - u.cap_prec(cur) * x)).digits(), cur);
    }
    return x.shift_pi(-v);
}

std::string LocalElement::str() const {
    std::ostringstream os;
    if (d_.empty()) {
        os << "O(pi^" << prec_ << ")";
        return os.str();
    }
    bool first = true;
    for (const auto& [ex, c] : d_) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ",";
            os << c[i].str();
        }
        os << ")pi^" << ex;
    }
    os << " + O(pi^" << prec_ << ")";
    return os.str();
}

LocalElement le_zero(const LFPtr& F, long prec) {
    if (prec < 0) prec = F->prec_pi();
    return LocalElement(F, {}, prec);
}

LocalElement le_one(const LFPtr& F, long prec) { return le_int(F, 1, prec); }

LocalElement le_int(const LFPtr& F, const Int& n, long prec) {
    if (prec < 0) prec = F->prec_pi();
    std::vector<Int> c(F->d(), 0);
    c[0] = n;
    return LocalElement(F, {{0, std::move(c)}}, prec);
}

LocalElement le_rat(const LFPtr& F, const Rat& q, long prec) {
    if (prec < 0) prec = F->prec_pi();
    Int num = rat_num(q), den = rat_den(q);
    if (num == 0) return le_zero(F, prec);
    long p = F->p();
    long vnum = 0, vden = 0;
    while (num % p == 0) {
        num /= p;
        ++vnum;
    }
    while (den % p == 0) {
        den /= p;
        ++vden;
    }
    long shift = (vnum - vden) * F->e();
    // sign of pi^e = sign*p: p^k = sign^k pi^{ek}
    Int snum = num;
    if (F->sign() < 0 && ((vnum - vden) % 2 != 0)) snum = -snum;
    LocalElement q0 = le_int(F, snum, prec);
    LocalElement dinv = le_int(F, den, prec).inverse();
    return (q0 * dinv).shift_pi(shift);
}

LocalElement le_pi_pow(const LFPtr& F, long k, long prec) {
    if (prec < 0) prec = F->prec_pi();
    return le_one(F, prec).shift_pi(k);
}

LocalElement le_p_pow(const LFPtr& F, const Rat& q, long prec) {
    Rat k = q * F->e();
    if (rat_den(k) != 1) throw bad_input("le_p_pow: denominator of q does not divide e");
    Int ki = rat_num(k);
    if (ki > 100000000 || ki < -100000000) throw bad_input("le_p_pow: exponent too large");
    long ex = long(ki);
    // p^q := pi^{e q}; for sign -1 this is the fixed compatible branch of (-p)^q
    return le_pi_pow(F, ex, prec);
}

LocalElement le_lift(const LFPtr& F, const FFElem& x, long prec) {
    if (prec < 0) prec = F->prec_pi();
    if (!x.parent()->same(*F->residue_field())) throw bad_input("le_lift: residue field mismatch");
    std::vector<Int> c(F->d());
    for (long i = 0; i < F->d(); ++i) c[i] = x.coeffs()[i];
    return LocalElement(F, {{0, std::move(c)}}, prec);
}

LocalElement le_teichmuller(const LFPtr& F, const FFElem& x, long prec) {
    if (prec < 0) prec = F->prec_pi();
    if (x.is_zero()) return le_zero(F, prec);
    LocalElement t = le_lift(F, x, prec);
    Int q = ipow(Int(F->p()), F->d());
    long steps = prec / F->e() + 2;
    for (long i = 0; i < steps; ++i) {
        LocalElement next = t;
        // t^(p^d) via repeated p-th powers
        for (long j = 0; j < F->d(); ++j) next = next.pow(F->p());
        if (next == t) break;
        t = next;
    }
    return t;
}

LocalElement embed(const LocalElement& x, const LFPtr& to) {
    const auto& from = x.field();
    if (from->p() != to->p() || to->e() % from->e() != 0 || to->d() % from->d() != 0 ||
        from->sign() != to->sign())
        throw bad_input("local embed: incompatible fields");
    long k = to->e() / from->e();
    std::map<long, std::vector<Int>> nd;
    long prec = x.prec() * k;
    if (from->d() == to->d()) {
        for (const auto& [ex, c] : x.digits()) nd.emplace(ex * k, c);
        return LocalElement(to, std::move(nd), prec);
    }
    // residue-field embedding lifted to the unramified part by Hensel: image
    // of the small generator is the lift of its residue image refined until
    // modulus_small(gamma) = 0 to working precision.
    FieldEmbedding emb(from->residue_field(), to->residue_field());
    FFElem gbar = emb(from->residue_field()->gen());
    long low = x.digits().empty() ? 0 : x.digits().begin()->first;
    long prec_work = prec + std::max(0L, -low * k) + to->e();
    LocalElement gamma = le_lift(to, gbar, prec_work);
    const auto& msmall = from->modulus();
    long dS = from->d();
    auto eval_m = [&](const LocalElement& g) {
        LocalElement acc = le_zero(to, prec_work);
        LocalElement pw = le_one(to, prec_work);
        for (long i = 0; i < dS; ++i) {
            acc = acc + pw * le_int(to, msmall[i], prec_work);
            pw = pw * g;
        }
        return acc + pw;
    };
    auto eval_mp = [&](const LocalElement& g) {
        // derivative of the monic modulus
        LocalElement acc = le_zero(to, prec_work);
        LocalElement pw = le_one(to, prec_work);
        for (long i = 1; i < dS; ++i) {
            acc = acc + pw * le_int(to, msmall[i] * i, prec_work);
            pw = pw * g;
        }
        return acc + pw * le_int(to, dS, prec_work);
    };
    for (long it = 0; it < 64; ++it) {
        gamma = LocalElement(to, gamma.digits(), prec_work);
        LocalElement f = eval_m(gamma);
        if (f.is_zero()) break;
        // Newton with the standard quadratic-convergence precision claim
        gamma = LocalElement(to, (gamma - f * eval_mp(gamma).inverse()).digits(), prec_work);
    }
    // map digits: coefficient vectors are polynomials in the small generator
    std::vector<LocalElement> gpow(dS, le_one(to, prec_work));
    for (long i = 1; i < dS; ++i) gpow[i] = gpow[i - 1] * gamma;
    LocalElement out = le_zero(to, prec);
    for (const auto& [ex, c] : x.digits()) {
        LocalElement digit = le_zero(to, prec_work);
        for (long i = 0; i < dS; ++i)
            if (c[i] != 0) digit = digit + gpow[i] * le_int(to, c[i], prec_work);
        out = out + digit.shift_pi(ex * k).cap_prec(prec);
    }
    return LocalElement(to, out.digits(), prec);
}

LPoly lpoly_one(const LFPtr& F, Var v) {
    LPoly f(v);
    f.set(0, le_one(F));
    return f;
}

LPoly embed_poly(const LPoly& f, const LFPtr& to) {
    LPoly g(f.var());
    for (const auto& [e, c] : f.terms()) g.set(e, embed(c, to));
    return g;
}

}  // namespace ramlift
