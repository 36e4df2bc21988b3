#include "ramlift/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ramlift {

namespace {

// dense F_p[x] arithmetic on coefficient vectors (index = degree)
using Poly = std::vector<long>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

Poly poly_mod(Poly a, const Poly& m, long p) {
    // m monic
    while (a.size() >= m.size()) {
        long lead = a.back() % p;
        size_t shift = a.size() - m.size();
        if (lead) {
            for (size_t i = 0; i < m.size(); ++i) {
                auto& c = a[shift + i];
                c = ((c - lead * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < m.size()) break;
    }
    return a;
}

// is `mod` (monic, given without leading coeff) irreducible over F_p?
// brute-force: no root of any monic divisor found via gcd with x^{p^k} - x.
// At desk scale a direct check is enough: test divisibility by every monic
// irreducible of degree <= d/2, built recursively... simpler: check that
// x^{p^d} = x mod m and x^{p^{d/q}} != x for prime divisors q of d, plus
// gcd(m, x^{p^k}-x) trivial for k < d.
Poly x_pow_q_mod(const Poly& m, long p, Int q) {
    // compute x^q mod m by square and multiply
    Poly result{0, 1};  // x
    result = poly_mod(result, m, p);
    Poly base = result;
    Poly acc{1};
    Int e = q;
    while (e > 0) {
        if ((e & 1) != 0) acc = poly_mod(poly_mul(acc, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic
        long inv = pow_mod(b.back(), p - 2, p);
        Poly bm = b;
        for (auto& c : bm) c = (c * inv) % p;
        a = poly_mod(a, bm, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& m, long p, long d) {
    // m: full monic poly of degree d (coeff vector length d+1, m[d] = 1)
    // x^{p^d} == x mod m
    Poly xp = x_pow_q_mod(m, p, ipow(Int(p), d));
    Poly x{0, 1};
    if (poly_mod(xp, m, p) != poly_mod(x, m, p)) return false;
    // gcd(x^{p^k} - x, m) = 1 for 1 <= k <= d/2
    for (long k = 1; k <= d / 2; ++k) {
        Poly t = x_pow_q_mod(m, p, ipow(Int(p), k));
        // t - x
        if (t.size() < 2) t.resize(2, 0);
        t[1] = ((t[1] - 1) % p + p) % p;
        trim(t);
        Poly g = poly_gcd(m, t, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::mutex cache_mutex;
std::map<std::pair<long, long>, FieldPtr> field_cache;

}  // namespace

FieldPtr FiniteField::make(long p, long d) {
    if (!is_prime(p)) throw bad_input("make_field: p = " + std::to_string(p) + " is not prime");
    if (d < 1) throw bad_input("make_field: degree must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = field_cache.find({p, d});
        if (it != field_cache.end()) return it->second;
    }
    std::vector<long> modulus;
    if (d == 1) {
        modulus = {0};  // modulus x
    } else {
        // lexicographically smallest monic irreducible of degree d:
        // order by (c_0, c_1, ..., c_{d-1})
        std::vector<long> c(d, 0);
        c[0] = 1;  // constant 0 means a root at 0; skip that whole block
        bool found = false;
        while (!found) {
            // cheap pre-check: no roots in F_p
            bool rooted = false;
            for (long a = 0; a < p && !rooted; ++a) {
                long acc = 1;  // leading coefficient at x^d
                for (long i = d - 1; i >= 0; --i) acc = (acc * a + c[i]) % p;
                rooted = (acc == 0);
            }
            if (!rooted) {
                Poly full(c.begin(), c.end());
                full.push_back(1);
                if (is_irreducible(full, p, d)) {
                    modulus = c;
                    found = true;
                    break;
                }
            }
            long i = d - 1;
            while (i >= 0) {
                if (++c[i] < p) break;
                c[i--] = 0;
            }
            if (i < 0) throw std::logic_error("no irreducible modulus found");
        }
    }
    auto f = FieldPtr(new FiniteField(p, d, std::move(modulus)));
    std::lock_guard<std::mutex> lock(cache_mutex);
    field_cache[{p, d}] = f;
    return f;
}

FieldPtr FiniteField::make_with_modulus(long p, std::vector<long> modulus) {
    if (!is_prime(p)) throw bad_input("make_field: p not prime");
    long d = long(modulus.size());
    for (auto& c : modulus) c = ((c % p) + p) % p;
    return FieldPtr(new FiniteField(p, d, std::move(modulus)));
}

FFElem FiniteField::zero() const { return FFElem(shared_from_this(), std::vector<long>(d_, 0)); }
FFElem FiniteField::one() const { return from_int(1); }

FFElem FiniteField::from_int(long n) const {
    std::vector<long> c(d_, 0);
    c[0] = ((n % p_) + p_) % p_;
    return FFElem(shared_from_this(), c);
}

FFElem FiniteField::gen() const {
    std::vector<long> c(d_, 0);
    if (d_ == 1) {
        // class of x is 0 mod the modulus x; use 1 as a harmless stand-in? No:
        // gen() of a prime field is not meaningful; return 1.
        c[0] = 1;
    } else {
        c[1] = 1;
    }
    return FFElem(shared_from_this(), c);
}

FFElem FiniteField::element(std::vector<long> coeffs) const {
    coeffs.resize(d_, 0);
    for (auto& c : coeffs) c = ((c % p_) + p_) % p_;
    return FFElem(shared_from_this(), std::move(coeffs));
}

FFElem FiniteField::element_by_index(Int idx) const {
    std::vector<long> c(d_);
    for (long i = 0; i < d_; ++i) {
        c[i] = long(idx % p_);
        idx /= p_;
    }
    return FFElem(shared_from_this(), c);
}

FFElem::FFElem(FieldPtr parent, std::vector<long> coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(parent_->d(), 0);
    long p = parent_->p();
    for (auto& c : coeffs_) c = ((c % p) + p) % p;
}

bool FFElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
}

bool FFElem::operator==(const FFElem& o) const {
    return parent_->same(*o.parent_) && coeffs_ == o.coeffs_;
}

static void check_same(const FFElem& a, const FFElem& b) {
    if (!a.parent()->same(*b.parent()))
        throw bad_input("finite field arithmetic on elements of different fields");
}

FFElem FFElem::operator+(const FFElem& o) const {
    check_same(*this, o);
    std::vector<long> c(coeffs_);
    long p = parent_->p();
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + o.coeffs_[i]) % p;
    return FFElem(parent_, std::move(c));
}

FFElem FFElem::operator-() const {
    std::vector<long> c(coeffs_);
    long p = parent_->p();
    for (auto& x : c) x = (p - x) % p;
    return FFElem(parent_, std::move(c));
}

FFElem FFElem::operator-(const FFElem& o) const { return *this + (-o); }

FFElem FFElem::operator*(const FFElem& o) const {
    check_same(*this, o);
    long p = parent_->p(), d = parent_->d();
    if (d == 1) return FFElem(parent_, {(coeffs_[0] * o.coeffs_[0]) % p});
    std::vector<long> prod(2 * d - 1, 0);
    for (long i = 0; i < d; ++i) {
        if (!coeffs_[i]) continue;
        for (long j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + coeffs_[i] * o.coeffs_[j]) % p;
    }
    const auto& m = parent_->modulus();
    for (long k = 2 * d - 2; k >= d; --k) {
        long lead = prod[k];
        if (!lead) continue;
        prod[k] = 0;
        for (long i = 0; i < d; ++i)
            prod[k - d + i] = ((prod[k - d + i] - lead * m[i]) % p + p) % p;
    }
    prod.resize(d);
    return FFElem(parent_, std::move(prod));
}

FFElem FFElem::pow(Int e) const {
    if (is_zero()) {
        if (e == 0) return parent_->one();
        if (e < 0) throw bad_input("inverse of zero");
        return parent_->zero();
    }
    Int q = parent_->order() - 1;
    Int r = e % q;
    if (r < 0) r += q;
    FFElem acc = parent_->one();
    FFElem base = *this;
    while (r > 0) {
        if ((r & 1) != 0) acc = acc * base;
        base = base * base;
        r >>= 1;
    }
    return acc;
}

FFElem FFElem::inverse() const {
    if (is_zero()) throw bad_input("inverse of zero in finite field");
    return pow(parent_->order() - 2);
}

FFElem FFElem::frobenius() const { return pow(parent_->p()); }

FFElem FFElem::pth_root() const {
    return pow(ipow(Int(parent_->p()), parent_->d() - 1));
}

std::string FFElem::str() const {
    std::ostringstream os;
    if (parent_->d() == 1) {
        os << coeffs_[0];
    } else {
        os << "[";
        for (long i = 0; i < parent_->d(); ++i) {
            if (i) os << ",";
            os << coeffs_[i];
        }
        os << "]";
    }
    return os.str();
}

namespace {

// kernel basis of an F_p-linear map given by columns (images of basis vectors)
std::vector<std::vector<long>> fp_kernel(std::vector<std::vector<long>> cols, long p, long n) {
    // build matrix rows x cols, eliminate; cols.size() = n, each col length n
    std::vector<std::vector<long>> mat(n, std::vector<long>(n));
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < n; ++i) mat[i][j] = cols[j][i];
    std::vector<long> pivot_col(n, -1);
    long rank = 0;
    for (long j = 0; j < n && rank < n; ++j) {
        long piv = -1;
        for (long i = rank; i < n; ++i)
            if (mat[i][j] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        long inv = pow_mod(mat[rank][j], p - 2, p);
        for (long k = 0; k < n; ++k) mat[rank][k] = (mat[rank][k] * inv) % p;
        for (long i = 0; i < n; ++i) {
            if (i == rank) continue;
            long f = mat[i][j] % p;
            if (!f) continue;
            for (long k = 0; k < n; ++k)
                mat[i][k] = ((mat[i][k] - f * mat[rank][k]) % p + p) % p;
        }
        pivot_col[rank++] = j;
    }
    std::vector<bool> is_pivot(n, false);
    for (long r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    std::vector<std::vector<long>> kernel;
    for (long j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<long> v(n, 0);
        v[j] = 1;
        for (long r = 0; r < rank; ++r) v[pivot_col[r]] = ((-mat[r][j]) % p + p) % p;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to) : from_(from), to_(to) {
    if (from->p() != to->p() || to->d() % from->d() != 0)
        throw bad_input("embedding requires same p and d | d'");
    long d = from->d(), dp = to->d(), p = to->p();
    if (d == 1) {
        gen_powers_ = {to->one()};
        return;
    }
    // subfield F_{p^d} inside `to` = kernel of (phi^d - id) as F_p-linear map;
    // only p^d candidates to scan for the lexicographically smallest root.
    std::vector<std::vector<long>> cols;
    for (long j = 0; j < dp; ++j) {
        std::vector<long> e(dp, 0);
        e[j] = 1;
        FFElem x = to->element(e);
        FFElem y = x.pow(ipow(Int(p), d)) - x;
        cols.push_back(y.coeffs());
    }
    auto kernel = fp_kernel(std::move(cols), p, dp);
    if (long(kernel.size()) != d) throw std::logic_error("subfield dimension mismatch");
    const auto& m = from->modulus();
    std::optional<FFElem> root;
    Int total = ipow(Int(p), d);
    for (Int idx = 0; idx < total; ++idx) {
        std::vector<long> comb(dp, 0);
        Int rem = idx;
        for (long b = 0; b < d; ++b) {
            long coef = long(rem % p);
            rem /= p;
            if (coef)
                for (long k = 0; k < dp; ++k)
                    comb[k] = (comb[k] + coef * kernel[b][k]) % p;
        }
        FFElem x = to->element(comb);
        FFElem acc = to->zero();
        FFElem pw = to->one();
        for (long i = 0; i < d; ++i) {
            acc = acc + pw * to->from_int(m[i]);
            pw = pw * x;
        }
        acc = acc + pw;
        if (acc.is_zero() && (!root || x.coeffs() < root->coeffs())) root = x;
    }
    if (!root) throw std::logic_error("no root of subfield modulus found in big field");
    gen_powers_.resize(d, to->one());
    for (long i = 1; i < d; ++i) gen_powers_[i] = gen_powers_[i - 1] * *root;
}

FFElem FieldEmbedding::operator()(const FFElem& x) const {
    if (!x.parent()->same(*from_)) throw bad_input("embedding applied to wrong field");
    FFElem acc = to_->zero();
    for (long i = 0; i < from_->d(); ++i)
        acc = acc + gen_powers_[i] * to_->from_int(x.coeffs()[i]);
    return acc;
}

}  // namespace ramlift
