#include "ramlift/galois_ring.hpp"

namespace ramlift {

GRPtr GaloisRing::make(long p, long d, long M) {
    auto F = FiniteField::make(p, d);  // canonical modulus, cached
    return GRPtr(new GaloisRing(p, d, M, F->modulus()));
}

GRElem GaloisRing::zero() const { return GRElem(shared_from_this(), std::vector<Int>(d_, 0)); }
GRElem GaloisRing::one() const { return from_int(1); }

GRElem GaloisRing::from_int(const Int& n) const {
    std::vector<Int> c(d_, 0);
    c[0] = ((n % pM_) + pM_) % pM_;
    return GRElem(shared_from_this(), std::move(c));
}

GRElem GaloisRing::lift(const FFElem& x) const {
    std::vector<Int> c(d_, 0);
    for (long i = 0; i < d_ && i < long(x.coeffs().size()); ++i) c[i] = x.coeffs()[i];
    return GRElem(shared_from_this(), std::move(c));
}

GRElem GaloisRing::element(std::vector<Int> coeffs) const {
    coeffs.resize(d_, 0);
    for (auto& c : coeffs) c = ((c % pM_) + pM_) % pM_;
    return GRElem(shared_from_this(), std::move(coeffs));
}

GRElem GaloisRing::teichmuller(const FFElem& x) const {
    GRElem t = lift(x);
    Int q = ipow(Int(p_), d_);
    // iterate x -> x^{p^d}; converges quadratically in p-adic precision
    for (long it = 0; it < M_ + 2; ++it) {
        GRElem next = t.pow(q);
        if (next == t) break;
        t = next;
    }
    return t;
}

GRElem::GRElem(GRPtr parent, std::vector<Int> coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(parent_->d(), 0);
    const Int& m = parent_->pM();
    for (auto& c : coeffs_) c = ((c % m) + m) % m;
}

bool GRElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

static void check_same(const GRElem& a, const GRElem& b) {
    if (!a.parent()->same(*b.parent())) throw bad_input("Galois ring mismatch");
}

GRElem GRElem::operator+(const GRElem& o) const {
    check_same(*this, o);
    std::vector<Int> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return GRElem(parent_, std::move(c));
}

GRElem GRElem::operator-() const {
    std::vector<Int> c(coeffs_);
    for (auto& x : c) x = -x;
    return GRElem(parent_, std::move(c));
}

GRElem GRElem::operator-(const GRElem& o) const { return *this + (-o); }

GRElem GRElem::operator*(const GRElem& o) const {
    check_same(*this, o);
    long d = parent_->d();
    long p = parent_->p();
    if (d == 1) {
        std::vector<Int> c{coeffs_[0] * o.coeffs_[0]};
        return GRElem(parent_, std::move(c));
    }
    std::vector<Int> prod(2 * d - 1, 0);
    for (long i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    const auto& m = parent_->modulus();
    for (long k = 2 * d - 2; k >= d; --k) {
        Int lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (long i = 0; i < d; ++i) prod[k - d + i] -= lead * m[i];
    }
    (void)p;
    prod.resize(d);
    return GRElem(parent_, std::move(prod));
}

GRElem GRElem::pow(Int e) const {
    if (e < 0) throw bad_input("GRElem::pow negative");
    GRElem acc = parent_->one();
    GRElem base = *this;
    while (e > 0) {
        if ((e & 1) != 0) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

long GRElem::vp() const {
    long p = parent_->p(), M = parent_->M();
    long best = M;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        Int x = c;
        long v = 0;
        while (x % p == 0 && v < best) {
            x /= p;
            ++v;
        }
        if (v < best) best = v;
        if (best == 0) break;
    }
    return best;
}

GRElem GRElem::divide_p(long k) const {
    Int pk = ipow(Int(parent_->p()), k);
    std::vector<Int> c(coeffs_);
    for (auto& x : c) {
        if (x % pk != 0) throw std::logic_error("GRElem::divide_p not exact");
        x /= pk;
    }
    return GRElem(parent_, std::move(c));
}

FFElem GRElem::residue(const FieldPtr& F) const {
    if (F->p() != parent_->p() || F->d() != parent_->d())
        throw bad_input("GRElem::residue field mismatch");
    std::vector<long> c(parent_->d());
    for (long i = 0; i < parent_->d(); ++i) c[i] = long(coeffs_[i] % parent_->p());
    return F->element(std::move(c));
}

GRElem GRElem::inverse() const {
    auto F = FiniteField::make(parent_->p(), parent_->d());
    FFElem r = residue(F);
    if (r.is_zero()) throw bad_input("GRElem::inverse of non-unit");
    GRElem x = parent_->lift(r.inverse());
    GRElem two = parent_->from_int(2);
    for (long it = 0; it < parent_->M() + 2; ++it) {
        GRElem nx = x * (two - *this * x);
        if (nx == x) break;
        x = nx;
    }
    return x;
}

}  // namespace ramlift
