#include "gainv/upoly.hpp"

namespace gainv {

void UPoly::prune() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_ints(const Field& k, const std::vector<int64_t>& c) {
    std::vector<Fq> v;
    v.reserve(c.size());
    for (auto x : c) v.push_back(k.from_int(x));
    return UPoly(k, std::move(v));
}

Fq UPoly::lead() const {
    if (c_.empty()) throw PolyError("UPoly: leading coefficient of zero");
    return c_.back();
}

UPoly UPoly::operator-() const {
    std::vector<Fq> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return UPoly(k_, std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    const Field& k = a.k_.null() ? b.k_ : a.k_;
    std::vector<Fq> c(std::max(a.c_.size(), b.c_.size()), k.zero());
    for (size_t i = 0; i < c.size(); ++i) {
        Fq v = k.zero();
        if (i < a.c_.size()) v = v + a.c_[i];
        if (i < b.c_.size()) v = v + b.c_[i];
        c[i] = v;
    }
    return UPoly(k, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    const Field& k = a.k_.null() ? b.k_ : a.k_;
    if (a.is_zero() || b.is_zero()) return UPoly(k);
    std::vector<Fq> c(a.c_.size() + b.c_.size() - 1, k.zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(k, std::move(c));
}

UPoly UPoly::operator*(const Fq& s) const {
    std::vector<Fq> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * s);
    return UPoly(k_, std::move(c));
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Fq UPoly::eval(const Fq& x) const {
    Fq r = x.field().zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) throw PolyError("UPoly: cannot normalize zero");
    return *this * lead().inverse();
}

UPoly UPoly::shifted(size_t k) const {
    if (is_zero()) return *this;
    std::vector<Fq> c(k, k_.zero());
    c.insert(c.end(), c_.begin(), c_.end());
    return UPoly(k_, std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw PolyError("UPoly: division by zero");
    const Field& k = b.k_;
    if (a.degree() < b.degree()) return {UPoly(k), a};
    std::vector<Fq> rem = a.c_;
    std::vector<Fq> quo(a.degree() - b.degree() + 1, k.zero());
    Fq li = b.lead().inverse();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Fq c = rem[i];
        if (c.is_zero()) continue;
        Fq f = c * li;
        quo[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] = rem[i - b.degree() + j] - f * b.c_[j];
    }
    return {UPoly(k, std::move(quo)), UPoly(k, std::move(rem))};
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !c_[i].is_one()) s += c_[i].str();
        if (i > 0) {
            if (!c_[i].is_one()) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

BAdicExpansion b_adic_membership(const UPoly& q, const UPoly& b) {
    if (b.degree() < 1) throw PolyError("b_adic_membership: base is constant");
    BAdicExpansion out;
    UPoly cur = q;
    while (!cur.is_zero()) {
        auto [quo, rem] = UPoly::divmod(cur, b);
        if (rem.degree() > 0) {
            out.member = false;
            out.offending_remainder = rem;
            return out;
        }
        out.digits.push_back(rem.constant_term());
        cur = quo;
    }
    out.member = true;
    return out;
}


UPoly embed(const UPoly& f, const Field& target) {
    std::vector<Fq> c;
    c.reserve(f.coeffs().size());
    for (const Fq& a : f.coeffs()) c.push_back(embed(a, target));
    return UPoly(target, std::move(c));
}

}  // namespace gainv
