#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "gainv/field.hpp"

namespace gainv {

struct PolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense univariate polynomial over F_q, little-endian coefficients.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(Field k) : k_(std::move(k)) {}
    UPoly(Field k, std::vector<Fq> c) : k_(std::move(k)), c_(std::move(c)) { prune(); }

    static UPoly from_ints(const Field& k, const std::vector<int64_t>& c);

    const Field& field() const { return k_; }
    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero poly
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Fq coeff(size_t i) const { return i < c_.size() ? c_[i] : k_.zero(); }
    const std::vector<Fq>& coeffs() const { return c_; }
    Fq lead() const;
    Fq constant_term() const { return coeff(0); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator*(const Fq& s) const;
    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    Fq eval(const Fq& x) const;
    UPoly monic() const;
    UPoly shifted(size_t k) const;  // * t^k

    // (quotient, remainder); divisor must be nonzero
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

    std::string str(const std::string& var = "t") const;

  private:
    void prune();
    Field k_;
    std::vector<Fq> c_;
};

struct BAdicExpansion {
    bool member = false;
    std::vector<Fq> digits;      // q = sum digits[l] * b^l when member
    UPoly offending_remainder;   // first non-constant remainder otherwise
};

// Expand q in powers of b with remainders forced to be constants; member iff
// q lies in k[b].  Throws PolyError when b is constant.
BAdicExpansion b_adic_membership(const UPoly& q, const UPoly& b);

// Coefficient-wise embedding into an extension of the same characteristic.
UPoly embed(const UPoly& f, const Field& target);

}  // namespace gainv
