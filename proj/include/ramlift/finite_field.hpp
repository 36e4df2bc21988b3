#pragma once

#include <memory>
#include <vector>

#include "ramlift/common.hpp"

namespace ramlift {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// Element of F_{p^d}, coefficient vector over F_p of length d against the
// parent's modulus.
class FFElem {
  public:
    FFElem() = default;
    FFElem(FieldPtr parent, std::vector<long> coeffs);

    const FieldPtr& parent() const { return parent_; }
    const std::vector<long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const FFElem& o) const;
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    FFElem operator+(const FFElem& o) const;
    FFElem operator-(const FFElem& o) const;
    FFElem operator-() const;
    FFElem operator*(const FFElem& o) const;
    FFElem inverse() const;
    FFElem pow(Int e) const;
    FFElem frobenius() const;      // x -> x^p
    FFElem pth_root() const;       // Frobenius inverse: x -> x^{p^{d-1}}

    std::string str() const;

  private:
    FieldPtr parent_;
    std::vector<long> coeffs_;
};

// F_{p^d} with the deterministically chosen (lexicographically smallest)
// monic irreducible modulus, so results are reproducible across runs.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
  public:
    static FieldPtr make(long p, long d);
    // field with a caller-supplied monic irreducible modulus (coefficients of
    // 1..x^{d-1}; trusted irreducible). Used when the canonical field of the
    // same degree is too large to search.
    static FieldPtr make_with_modulus(long p, std::vector<long> modulus);

    long p() const { return p_; }
    long d() const { return d_; }
    Int order() const { return ipow(Int(p_), d_); }
    // monic modulus, coefficients of 1, x, ..., x^{d-1} (leading 1 implicit)
    const std::vector<long>& modulus() const { return modulus_; }

    FFElem zero() const;
    FFElem one() const;
    FFElem from_int(long n) const;
    FFElem gen() const;  // class of x
    FFElem element(std::vector<long> coeffs) const;
    // elements in a fixed enumeration order (coefficient-lexicographic)
    FFElem element_by_index(Int idx) const;

    bool same(const FiniteField& o) const {
        return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_;
    }

  private:
    FiniteField(long p, long d, std::vector<long> modulus)
        : p_(p), d_(d), modulus_(std::move(modulus)) {}
    long p_, d_;
    std::vector<long> modulus_;
};

// Embedding F_{p^d} -> F_{p^{d'}} with d | d'; sends the generator to the
// lexicographically smallest root of the small modulus in the big field.
class FieldEmbedding {
  public:
    FieldEmbedding(FieldPtr from, FieldPtr to);
    FFElem operator()(const FFElem& x) const;
    const FieldPtr& from() const { return from_; }
    const FieldPtr& to() const { return to_; }

  private:
    FieldPtr from_, to_;
    std::vector<FFElem> gen_powers_;  // images of x^0..x^{d-1}
};

}  // namespace ramlift
