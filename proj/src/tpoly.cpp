#include "gainv/tpoly.hpp"

namespace gainv {

MPoly TPoly::coeff(uint32_t e) const {
    auto it = c_.find(e);
    return it == c_.end() ? MPoly::zero(k_, n_) : it->second;
}

void TPoly::set_coeff(uint32_t e, const MPoly& f) {
    if (f.is_zero())
        c_.erase(e);
    else
        c_[e] = f;
}

TPoly TPoly::from_constant(const MPoly& f) {
    TPoly r(f.field(), f.nvars());
    r.set_coeff(0, f);
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r(k_, n_);
    for (const auto& [e, f] : c_) r.c_[e] = -f;
    return r;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    if (r.k_.null()) {
        r.k_ = b.k_;
        r.n_ = b.n_;
    }
    for (const auto& [e, f] : b.c_) {
        auto it = r.c_.find(e);
        if (it == r.c_.end()) {
            r.c_[e] = f;
        } else {
            MPoly s = it->second + f;
            if (s.is_zero())
                r.c_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r(a.k_.null() ? b.k_ : a.k_, a.k_.null() ? b.n_ : a.n_);
    for (const auto& [ea, fa] : a.c_)
        for (const auto& [eb, fb] : b.c_) {
            MPoly prod = fa * fb;
            if (prod.is_zero()) continue;
            auto it = r.c_.find(ea + eb);
            if (it == r.c_.end()) {
                r.c_[ea + eb] = prod;
            } else {
                MPoly s = it->second + prod;
                if (s.is_zero())
                    r.c_.erase(it);
                else
                    it->second = s;
            }
        }
    return r;
}

TPoly TPoly::operator*(const MPoly& s) const {
    TPoly r(k_, n_);
    for (const auto& [e, f] : c_) {
        MPoly prod = f * s;
        if (!prod.is_zero()) r.c_[e] = prod;
    }
    return r;
}

bool operator==(const TPoly& a, const TPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    auto ia = a.c_.begin();
    auto ib = b.c_.begin();
    for (; ia != a.c_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

TPoly TPoly::pow(uint32_t e) const {
    TPoly r = TPoly::from_constant(MPoly::constant(k_, n_, k_.one()));
    TPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

}  // namespace gainv
