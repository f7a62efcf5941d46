#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gainv {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPrimeError : FieldError {
    using FieldError::FieldError;
};
struct ReducibleModulusError : FieldError {
    using FieldError::FieldError;
};

// Immutable description of F_{p^m}.  For m == 1 the modulus is the single
// variable itself and is stored empty; for m > 1 it is a monic irreducible of
// degree m over F_p, little-endian, length m+1.
struct FieldData {
    uint32_t p = 0;
    uint32_t m = 0;
    std::vector<uint32_t> modulus;  // empty iff m == 1
};

class Field;

// Value-semantic element of F_{p^m}: coefficient vector of length m over F_p,
// little-endian in the residue class of the generator.
class Fq {
  public:
    Fq() = default;  // "null" element; arithmetic on it throws
    Fq(std::shared_ptr<const FieldData> fd, std::vector<uint32_t> c);

    bool null() const { return !fd_; }
    bool is_zero() const;
    bool is_one() const;
    const std::vector<uint32_t>& coeffs() const { return c_; }
    Field field() const;
    const std::shared_ptr<const FieldData>& data() const { return fd_; }

    Fq operator-() const;
    Fq inverse() const;  // throws FieldError on zero
    Fq pow(uint64_t e) const;

    friend Fq operator+(const Fq& a, const Fq& b);
    friend Fq operator-(const Fq& a, const Fq& b);
    friend Fq operator*(const Fq& a, const Fq& b);
    friend Fq operator/(const Fq& a, const Fq& b);
    friend bool operator==(const Fq& a, const Fq& b);
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
    friend bool operator<(const Fq& a, const Fq& b);  // container order only

    // Index of this element in the deterministic enumeration (base-p digits).
    uint64_t index() const;
    std::string str() const;

  private:
    std::shared_ptr<const FieldData> fd_;
    std::vector<uint32_t> c_;
};

// x^(p^j); j may be negative (inverse Frobenius via x^(p^(m-1)) iterated).
Fq frobenius_power(const Fq& x, int64_t j);

class Field {
  public:
    Field() = default;
    explicit Field(std::shared_ptr<const FieldData> fd) : fd_(std::move(fd)) {}

    bool null() const { return !fd_; }
    uint32_t p() const { return fd_->p; }
    uint32_t m() const { return fd_->m; }
    const std::vector<uint32_t>& modulus() const { return fd_->modulus; }
    uint64_t size() const;  // p^m
    const std::shared_ptr<const FieldData>& data() const { return fd_; }

    Fq zero() const;
    Fq one() const;
    Fq from_int(int64_t v) const;  // image of the integer (prime subfield)
    Fq from_coeffs(std::vector<uint32_t> c) const;
    Fq element_at(uint64_t idx) const;  // deterministic enumeration
    Fq generator() const;               // residue of the variable (m > 1)

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  private:
    std::shared_ptr<const FieldData> fd_;
};

// Construct F_{p^m}.  Without an explicit modulus the first monic irreducible
// of degree m in the deterministic coefficient enumeration is used, so equal
// (p, m) always yield identical fields.
Field build_field(uint32_t p, uint32_t m,
                  std::optional<std::vector<uint32_t>> modulus = std::nullopt);

// Map x into `target`, which must contain the field of x as a subfield (same p,
// source degree dividing target degree).  The source generator goes to the
// first root of the source modulus in the deterministic target enumeration.
Fq embed(const Fq& x, const Field& target);

bool same_field(const Fq& a, const Fq& b);

}  // namespace gainv
