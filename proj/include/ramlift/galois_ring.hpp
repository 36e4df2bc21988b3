#pragma once

#include <memory>
#include <vector>

#include "ramlift/finite_field.hpp"

namespace ramlift {

// GR(p^M, d) = Z[y]/(p^M, modulus), the unramified extension of Z/p^M with
// residue field F_{p^d}. The modulus is the canonical one from FiniteField.
class GaloisRing;
using GRPtr = std::shared_ptr<const GaloisRing>;

class GRElem {
  public:
    GRElem() = default;
    GRElem(GRPtr parent, std::vector<Int> coeffs);

    const GRPtr& parent() const { return parent_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const GRElem& o) const { return coeffs_ == o.coeffs_; }

    GRElem operator+(const GRElem& o) const;
    GRElem operator-(const GRElem& o) const;
    GRElem operator-() const;
    GRElem operator*(const GRElem& o) const;
    GRElem pow(Int e) const;

    long vp() const;               // min p-valuation of coefficients (>= M if zero)
    GRElem divide_p(long k) const;  // exact division by p^k (checked)
    FFElem residue(const FieldPtr& F) const;
    GRElem inverse() const;        // unit inverse (residue nonzero)

  private:
    GRPtr parent_;
    std::vector<Int> coeffs_;  // length d, reduced mod p^M
};

class GaloisRing : public std::enable_shared_from_this<GaloisRing> {
  public:
    static GRPtr make(long p, long d, long M);

    long p() const { return p_; }
    long d() const { return d_; }
    long M() const { return M_; }
    const Int& pM() const { return pM_; }
    const std::vector<long>& modulus() const { return modulus_; }

    GRElem zero() const;
    GRElem one() const;
    GRElem from_int(const Int& n) const;
    GRElem lift(const FFElem& x) const;  // plain coefficientwise lift
    GRElem element(std::vector<Int> coeffs) const;
    // Teichmuller representative of a residue (fixpoint of x -> x^{p^d})
    GRElem teichmuller(const FFElem& x) const;

    bool same(const GaloisRing& o) const {
        return p_ == o.p_ && d_ == o.d_ && M_ == o.M_;
    }

  private:
    GaloisRing(long p, long d, long M, std::vector<long> modulus)
        : p_(p), d_(d), M_(M), pM_(ipow(Int(p), M)), modulus_(std::move(modulus)) {}
    long p_, d_, M_;
    Int pM_;
    std::vector<long> modulus_;
};

}  // namespace ramlift
