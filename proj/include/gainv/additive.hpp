#pragma once

#include <utility>
#include <vector>

#include "gainv/upoly.hpp"

namespace gainv {

struct OreError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAdditiveError : OreError {
    using OreError::OreError;
};

// Additive polynomial sum a_i t^(p^i), stored in skew form as the coefficient
// vector of F^i (F = p-power Frobenius).  Composition realizes the skew
// multiplication (a F^j)(b F^i) = a b^(p^j) F^(i+j), so the type doubles as an
// element of the Ore ring k[F].
class AdditivePoly {
  public:
    AdditivePoly() = default;
    explicit AdditivePoly(Field k) : k_(std::move(k)) {}
    AdditivePoly(Field k, std::vector<Fq> skew) : k_(std::move(k)), a_(std::move(skew)) { prune(); }

    static AdditivePoly from_skew_ints(const Field& k, const std::vector<int64_t>& a);

    const Field& field() const { return k_; }
    int deg_f() const { return (int)a_.size() - 1; }  // Frobenius degree, -1 for zero
    bool is_zero() const { return a_.empty(); }
    Fq coeff(size_t i) const { return i < a_.size() ? a_[i] : k_.zero(); }
    const std::vector<Fq>& skew_coeffs() const { return a_; }
    Fq lead() const;
    bool is_monic() const { return !a_.empty() && a_.back().is_one(); }

    UPoly to_upoly() const;  // expand to t-form (degree p^deg_f)
    Fq eval(const Fq& x) const;

    AdditivePoly operator-() const;
    friend AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b);
    friend AdditivePoly operator-(const AdditivePoly& a, const AdditivePoly& b);
    AdditivePoly operator*(const Fq& s) const;  // left scale: (s t) o this
    friend bool operator==(const AdditivePoly& a, const AdditivePoly& b);
    friend bool operator!=(const AdditivePoly& a, const AdditivePoly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

  private:
    void prune();
    Field k_;
    std::vector<Fq> a_;
};

// Reinterpret a t-form polynomial as additive; throws NotAdditiveError when a
// nonzero coefficient sits at an exponent that is not a power of p.
AdditivePoly to_additive(const UPoly& f);

// f o g in the Ore ring.
AdditivePoly compose(const AdditivePoly& f, const AdditivePoly& g);

// f = q o g + r with deg_f r < deg_f g.  Always possible; g nonzero.
std::pair<AdditivePoly, AdditivePoly> right_divide(const AdditivePoly& f,
                                                   const AdditivePoly& g);

// f = g o q + r with deg_f r < deg_f g; needs p-th roots, exact over F_{p^m}.
std::pair<AdditivePoly, AdditivePoly> left_divide(const AdditivePoly& f,
                                                  const AdditivePoly& g);

struct OreGcd {
    AdditivePoly b;   // monic right gcd
    AdditivePoly b1;  // b = b1 o c1 + b2 o c2
    AdditivePoly b2;
    AdditivePoly d1;  // c1 = d1 o b
    AdditivePoly d2;  // c2 = d2 o b
};

// Extended Euclid in the Ore ring; both inputs zero is an error.  All five
// identities are re-verified by recomposition before returning.
OreGcd right_gcd_ext(const AdditivePoly& c1, const AdditivePoly& c2);

// b = F^w o c with c separable (nonzero t-coefficient); b nonzero.
std::pair<uint32_t, AdditivePoly> separable_split(const AdditivePoly& b);

// All roots of b in ext (an extension of b's coefficient field), sorted by the
// deterministic element enumeration.  The set is an F_p-subspace.
std::vector<Fq> kernel_points(const AdditivePoly& b, const Field& ext);

// Coefficient-wise embedding into an extension of the same characteristic.
AdditivePoly embed(const AdditivePoly& f, const Field& target);

}  // namespace gainv
