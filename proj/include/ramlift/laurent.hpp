#pragma once

#include <functional>
#include <map>
#include <sstream>

#include "ramlift/common.hpp"

namespace ramlift {

// Variable tags for Laurent polynomials. `t` lives in residue fields,
// the capital tags in local fields (T, Ttil = p^{-r}T, Tpr = p^{-r'}T).
enum class Var { t, T, Ttil, Tpr };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::T: return "T";
        case Var::Ttil: return "T~";
        case Var::Tpr: return "T'";
    }
    return "?";
}

// Sparse Laurent polynomial: finite map exponent -> nonzero coefficient.
// Exponents are arbitrary-size integers.
template <class K>
class Laurent {
  public:
    using Terms = std::map<Int, K>;

    Laurent() : var_(Var::t) {}
    explicit Laurent(Var v) : var_(v) {}

    Var var() const { return var_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set(const Int& exp, K coeff) {
        if (coeff.is_zero())
            terms_.erase(exp);
        else
            terms_.insert_or_assign(exp, std::move(coeff));
    }
    void add_term(const Int& exp, const K& coeff) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (!coeff.is_zero()) terms_.emplace(exp, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    K get(const Int& exp, const K& zero) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? zero : it->second;
    }
    bool has(const Int& exp) const { return terms_.count(exp) > 0; }

    // degree in the INVERSE variable: max of -exp over terms
    std::optional<Int> deg_inv() const {
        if (terms_.empty()) return std::nullopt;
        return -terms_.begin()->first;
    }
    // max exponent (in the direct variable)
    std::optional<Int> deg() const {
        if (terms_.empty()) return std::nullopt;
        return -(-terms_.rbegin()->first);
    }

    Laurent operator+(const Laurent& o) const {
        require_same_var(o);
        Laurent r(var_);
        r.terms_ = terms_;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Laurent operator-() const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }
    Laurent operator*(const Laurent& o) const {
        require_same_var(o);
        Laurent r(var_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    Laurent scale(const K& c) const {
        Laurent r(var_);
        for (const auto& [e, x] : terms_) {
            K y = x * c;
            if (!y.is_zero()) r.terms_.emplace(e, y);
        }
        return r;
    }
    Laurent shift(const Int& k) const {  // multiply by var^k
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }
    Laurent pow(long n) const {
        Laurent r(var_);
        // empty product is 1: caller supplies one() via scale; keep it simple:
        if (n == 0) throw bad_input("Laurent::pow(0) needs a unit; use explicit one");
        Laurent acc = *this;
        for (long i = 1; i < n; ++i) acc = acc * *this;
        return acc;
    }
    // substitute var -> var^m
    Laurent stretch(long m) const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e * m, c);
        return r;
    }
    Laurent with_var(Var v) const {
        Laurent r(v);
        r.terms_ = terms_;
        return r;
    }
    // drop all terms with exponent < cut (for series truncation in 1/var, use
    // on polynomials in var^{-1}: exponents <= -cut dropped)
    Laurent truncate_below(const Int& cut) const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_)
            if (e >= cut) r.terms_.emplace(e, c);
        return r;
    }

    bool operator==(const Laurent& o) const {
        if (var_ != o.var_ || terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [e, c] : terms_) {
            if (it->first != e || !(it->second == c)) return false;
            ++it;
        }
        return true;
    }

    std::string str(const std::function<std::string(const K&)>& coeff_str) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << coeff_str(it->second);
            if (it->first != 0) os << "*" << var_name(var_) << "^" << it->first.str();
        }
        return os.str();
    }

  private:
    void require_same_var(const Laurent& o) const {
        if (var_ != o.var_) throw bad_input("Laurent arithmetic between different variables");
    }
    Var var_;
    Terms terms_;
};

}  // namespace ramlift
