#pragma once

#include <map>

#include "ramlift/finite_field.hpp"
#include "ramlift/laurent.hpp"

namespace ramlift {

class LocalField;
using LFPtr = std::shared_ptr<const LocalField>;

// Ramified extension Q_{p^d}(pi), pi^e = sign * p, elements tracked to an
// absolute pi-adic precision. Valuations are rationals with denominator e,
// normalized so v(p) = 1 (i.e. v(pi) = 1/e).
class LocalField : public std::enable_shared_from_this<LocalField> {
  public:
    static LFPtr make(long p, long d, long e, long prec_pi, int sign);

    long p() const { return p_; }
    long d() const { return d_; }
    long e() const { return e_; }
    long prec_pi() const { return prec_pi_; }  // default absolute precision
    int sign() const { return sign_; }
    const FieldPtr& residue_field() const { return k_; }
    const std::vector<long>& modulus() const { return k_->modulus(); }

    bool same(const LocalField& o) const {
        return p_ == o.p_ && d_ == o.d_ && e_ == o.e_ && sign_ == o.sign_;
    }

  private:
    LocalField(long p, long d, long e, long prec_pi, int sign, FieldPtr k)
        : p_(p), d_(d), e_(e), prec_pi_(prec_pi), sign_(sign), k_(std::move(k)) {}
    long p_, d_, e_, prec_pi_;
    int sign_;
    FieldPtr k_;
};

// Element: sparse digits pi^ex -> coefficient in the unramified part, each
// coefficient a length-d vector over Z reduced mod p^{ceil((prec-ex)/e)}.
// Exact semantics: value ∈ represented + pi^prec * O_Kbar.
class LocalElement {
  public:
    LocalElement() = default;
    LocalElement(LFPtr F, std::map<long, std::vector<Int>> digits, long prec);

    const LFPtr& field() const { return F_; }
    long prec() const { return prec_; }
    const std::map<long, std::vector<Int>>& digits() const { return d_; }

    bool is_zero() const { return d_.empty(); }  // zero to tracked precision

    // pi-valuation: nullopt when zero to precision (v >= prec)
    std::optional<long> val_pi() const;
    Rat valuation() const;                    // throws precision_error if unknown
    std::optional<Rat> valuation_opt() const;

    LocalElement operator+(const LocalElement& o) const;
    LocalElement operator-(const LocalElement& o) const;
    LocalElement operator-() const;
    LocalElement operator*(const LocalElement& o) const;
    LocalElement inverse() const;  // nonzero-to-precision required
    LocalElement pow(long n) const;

    LocalElement shift_pi(long k) const;  // multiply by pi^k (exact)
    LocalElement cap_prec(long prec) const;
    // residue of x * pi^{-val} in F_{p^d}; zero element maps to 0
    FFElem residue_unit() const;

    bool operator==(const LocalElement& o) const {
        return d_ == o.d_ && prec_ == o.prec_;
    }

    std::string str() const;

  private:
    void normalize();
    LFPtr F_;
    std::map<long, std::vector<Int>> d_;
    long prec_ = 0;
};

// constructors
LocalElement le_zero(const LFPtr& F, long prec = -1);
LocalElement le_one(const LFPtr& F, long prec = -1);
LocalElement le_int(const LFPtr& F, const Int& n, long prec = -1);
LocalElement le_rat(const LFPtr& F, const Rat& q, long prec = -1);  // exact embed
LocalElement le_pi_pow(const LFPtr& F, long k, long prec = -1);
// canonical p^q = pi^{e q} for rational q with e*q integral
LocalElement le_p_pow(const LFPtr& F, const Rat& q, long prec = -1);
// plain lift of a residue element (coefficients in [0,p))
LocalElement le_lift(const LFPtr& F, const FFElem& x, long prec = -1);
// Teichmuller representative
LocalElement le_teichmuller(const LFPtr& F, const FFElem& x, long prec = -1);

// embedding into a coarser lattice / bigger residue field:
// target must have e' = k*e, d' = l*d, same sign; pi_e = pi_{e'}^k.
LocalElement embed(const LocalElement& x, const LFPtr& to);

using LPoly = Laurent<LocalElement>;

LPoly lpoly_one(const LFPtr& F, Var v);
LPoly embed_poly(const LPoly& f, const LFPtr& to);

}  // namespace ramlift
