#pragma once

#include <map>

#include "gainv/mpoly.hpp"

namespace gainv {

// Element of k[x_1..x_n][t], stored as t-degree -> coefficient polynomial.
// This is the value type of a co-action: finitely many nonzero t-layers.
class TPoly {
  public:
    TPoly() = default;
    TPoly(Field k, uint32_t nvars) : k_(std::move(k)), n_(nvars) {}

    const Field& field() const { return k_; }
    uint32_t nvars() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    int t_degree() const { return c_.empty() ? -1 : (int)c_.rbegin()->first; }
    const std::map<uint32_t, MPoly>& layers() const { return c_; }
    MPoly coeff(uint32_t e) const;
    void set_coeff(uint32_t e, const MPoly& f);

    static TPoly from_constant(const MPoly& f);  // f * t^0

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly operator*(const MPoly& s) const;
    friend bool operator==(const TPoly& a, const TPoly& b);
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    TPoly pow(uint32_t e) const;

  private:
    Field k_;
    uint32_t n_ = 0;
    std::map<uint32_t, MPoly> c_;  // only nonzero layers
};

}  // namespace gainv
