#include "gainv/additive.hpp"

namespace gainv {

void AdditivePoly::prune() {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
}

AdditivePoly AdditivePoly::from_skew_ints(const Field& k, const std::vector<int64_t>& a) {
    std::vector<Fq> v;
    v.reserve(a.size());
    for (auto x : a) v.push_back(k.from_int(x));
    return AdditivePoly(k, std::move(v));
}

Fq AdditivePoly::lead() const {
    if (a_.empty()) throw OreError("AdditivePoly: leading coefficient of zero");
    return a_.back();
}

UPoly AdditivePoly::to_upoly() const {
    if (is_zero()) return UPoly(k_);
    uint64_t top = 1;
    for (int i = 0; i < deg_f(); ++i) top *= k_.p();
    std::vector<Fq> c(top + 1, k_.zero());
    uint64_t e = 1;
    for (size_t i = 0; i < a_.size(); ++i) {
        c[e] = a_[i];
        e *= k_.p();
    }
    return UPoly(k_, std::move(c));
}

Fq AdditivePoly::eval(const Fq& x) const {
    Fq r = x.field().zero();
    Fq xp = x;  // x^(p^i)
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) xp = xp.pow(k_.p());
        if (!a_[i].is_zero()) {
            // coefficients may live in a subfield of x's field
            Fq c = same_field(a_[i], xp) ? a_[i] : embed(a_[i], x.field());
            r = r + c * xp;
        }
    }
    return r;
}

AdditivePoly AdditivePoly::operator-() const {
    std::vector<Fq> a;
    a.reserve(a_.size());
    for (const auto& x : a_) a.push_back(-x);
    return AdditivePoly(k_, std::move(a));
}

AdditivePoly operator+(const AdditivePoly& a, const AdditivePoly& b) {
    const Field& k = a.k_.null() ? b.k_ : a.k_;
    std::vector<Fq> c(std::max(a.a_.size(), b.a_.size()), k.zero());
    for (size_t i = 0; i < c.size(); ++i) {
        Fq v = k.zero();
        if (i < a.a_.size()) v = v + a.a_[i];
        if (i < b.a_.size()) v = v + b.a_[i];
        c[i] = v;
    }
    return AdditivePoly(k, std::move(c));
}

AdditivePoly operator-(const AdditivePoly& a, const AdditivePoly& b) { return a + (-b); }

AdditivePoly AdditivePoly::operator*(const Fq& s) const {
    std::vector<Fq> a;
    a.reserve(a_.size());
    for (const auto& x : a_) a.push_back(s * x);
    return AdditivePoly(k_, std::move(a));
}

bool operator==(const AdditivePoly& a, const AdditivePoly& b) {
    if (a.a_.size() != b.a_.size()) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

std::string AdditivePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    uint64_t e = 1;
    for (size_t i = 0; i < a_.size(); ++i, e *= k_.p()) {
        if (a_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (!a_[i].is_one()) s += a_[i].str() + "*";
        s += e > 1 ? var + "^" + std::to_string(e) : var;
    }
    return s;
}

AdditivePoly to_additive(const UPoly& f) {
    const Field& k = f.field();
    AdditivePoly out(k);
    if (f.is_zero()) return out;
    std::vector<Fq> skew;
    uint64_t e = 1;
    uint32_t idx = 0;
    std::vector<Fq> tmp;
    for (size_t d = 0; d <= (size_t)f.degree(); ++d) {
        Fq c = f.coeff(d);
        if (c.is_zero()) continue;
        while (e < d) {
            e *= k.p();
            ++idx;
        }
        if (e != d)
            throw NotAdditiveError("to_additive: exponent " + std::to_string(d) +
                                   " is not a power of " + std::to_string(k.p()));
        if (skew.size() < idx + 1) skew.resize(idx + 1, k.zero());
        skew[idx] = c;
    }
    return AdditivePoly(k, std::move(skew));
}

AdditivePoly compose(const AdditivePoly& f, const AdditivePoly& g) {
    const Field& k = f.field().null() ? g.field() : f.field();
    if (f.is_zero() || g.is_zero()) return AdditivePoly(k);
    std::vector<Fq> c(f.deg_f() + g.deg_f() + 1, k.zero());
    for (int j = 0; j <= f.deg_f(); ++j) {
        Fq a = f.coeff(j);
        if (a.is_zero()) continue;
        for (int i = 0; i <= g.deg_f(); ++i) {
            Fq b = g.coeff(i);
            if (b.is_zero()) continue;
            c[i + j] = c[i + j] + a * frobenius_power(b, j);
        }
    }
    return AdditivePoly(k, std::move(c));
}

std::pair<AdditivePoly, AdditivePoly> right_divide(const AdditivePoly& f,
                                                   const AdditivePoly& g) {
    if (g.is_zero()) throw OreError("right_divide: division by zero");
    const Field& k = g.field();
    AdditivePoly r = f;
    std::vector<Fq> quo;
    if (f.deg_f() >= g.deg_f()) quo.resize(f.deg_f() - g.deg_f() + 1, k.zero());
    while (!r.is_zero() && r.deg_f() >= g.deg_f()) {
        int d = r.deg_f() - g.deg_f();
        // (c F^d) o g has leading coefficient c * lead(g)^(p^d)
        Fq c = r.lead() / frobenius_power(g.lead(), d);
        std::vector<Fq> term(d + 1, k.zero());
        term[d] = c;
        AdditivePoly q1(k, std::move(term));
        r = r - compose(q1, g);
        quo[d] = quo[d] + c;
    }
    return {AdditivePoly(k, std::move(quo)), r};
}

std::pair<AdditivePoly, AdditivePoly> left_divide(const AdditivePoly& f,
                                                  const AdditivePoly& g) {
    if (g.is_zero()) throw OreError("left_divide: division by zero");
    const Field& k = g.field();
    AdditivePoly r = f;
    std::vector<Fq> quo;
    if (f.deg_f() >= g.deg_f()) quo.resize(f.deg_f() - g.deg_f() + 1, k.zero());
    while (!r.is_zero() && r.deg_f() >= g.deg_f()) {
        int d = r.deg_f() - g.deg_f();
        int m = g.deg_f();
        // g o (c F^d) has leading coefficient lead(g) * c^(p^m)
        Fq c = frobenius_power(r.lead() / g.lead(), -m);
        std::vector<Fq> term(d + 1, k.zero());
        term[d] = c;
        AdditivePoly q1(k, std::move(term));
        r = r - compose(g, q1);
        quo[d] = quo[d] + c;
    }
    return {AdditivePoly(k, std::move(quo)), r};
}

OreGcd right_gcd_ext(const AdditivePoly& c1, const AdditivePoly& c2) {
    if (c1.is_zero() && c2.is_zero()) throw OreError("right_gcd_ext: both inputs zero");
    const Field& k = c1.field().null() ? c2.field() : c1.field();
    AdditivePoly one = AdditivePoly::from_skew_ints(k, {1});
    AdditivePoly zero(k);
    // invariant: r_prev = u_prev o c1 + v_prev o c2, same for r_cur
    AdditivePoly r_prev = c1, r_cur = c2;
    AdditivePoly u_prev = one, v_prev = zero;
    AdditivePoly u_cur = zero, v_cur = one;
    while (!r_cur.is_zero()) {
        auto [q, r] = right_divide(r_prev, r_cur);
        AdditivePoly u_next = u_prev - compose(q, u_cur);
        AdditivePoly v_next = v_prev - compose(q, v_cur);
        r_prev = r_cur;
        u_prev = u_cur;
        v_prev = v_cur;
        r_cur = r;
        u_cur = u_next;
        v_cur = v_next;
    }
    // monic normalization: left-compose with lead^{-1} t
    Fq li = r_prev.lead().inverse();
    OreGcd out;
    out.b = r_prev * li;
    out.b1 = u_prev * li;
    out.b2 = v_prev * li;
    auto [d1, rem1] = right_divide(c1, out.b);
    auto [d2, rem2] = right_divide(c2, out.b);
    out.d1 = d1;
    out.d2 = d2;
    // re-verify every identity by recomposition
    if (!(compose(out.b1, c1) + compose(out.b2, c2) == out.b))
        throw OreError("right_gcd_ext: Bezout identity failed recomposition");
    if (!rem1.is_zero() || !(compose(out.d1, out.b) == c1))
        throw OreError("right_gcd_ext: quotient witness for c1 failed");
    if (!rem2.is_zero() || !(compose(out.d2, out.b) == c2))
        throw OreError("right_gcd_ext: quotient witness for c2 failed");
    return out;
}

std::pair<uint32_t, AdditivePoly> separable_split(const AdditivePoly& b) {
    if (b.is_zero()) throw OreError("separable_split: zero polynomial");
    const Field& k = b.field();
    uint32_t w = 0;
    while (b.coeff(w).is_zero()) ++w;
    std::vector<Fq> c(b.deg_f() - w + 1, k.zero());
    for (size_t i = 0; i + w <= (size_t)b.deg_f(); ++i)
        c[i] = frobenius_power(b.coeff(i + w), -(int64_t)w);
    AdditivePoly sep(k, std::move(c));
    // F^w o sep == b by construction; assert it anyway
    std::vector<Fq> fw(w + 1, k.zero());
    fw[w] = k.one();
    if (!(compose(AdditivePoly(k, std::move(fw)), sep) == b))
        throw OreError("separable_split: recomposition failed");
    return {w, sep};
}

std::vector<Fq> kernel_points(const AdditivePoly& b, const Field& ext) {
    if (b.is_zero()) throw OreError("kernel_points: zero polynomial");
    if (ext.p() != b.field().p()) throw OreError("kernel_points: characteristic mismatch");
    // embed the coefficients once so the scan stays cheap
    std::vector<Fq> lifted;
    lifted.reserve(b.deg_f() + 1);
    for (int i = 0; i <= b.deg_f(); ++i) lifted.push_back(embed(b.coeff(i), ext));
    AdditivePoly bl(ext, std::move(lifted));
    std::vector<Fq> out;
    for (uint64_t i = 0; i < ext.size(); ++i) {
        Fq x = ext.element_at(i);
        if (bl.eval(x).is_zero()) out.push_back(x);
    }
    return out;
}


AdditivePoly embed(const AdditivePoly& f, const Field& target) {
    std::vector<Fq> c;
    c.reserve(f.skew_coeffs().size());
    for (const Fq& a : f.skew_coeffs()) c.push_back(embed(a, target));
    return AdditivePoly(target, std::move(c));
}

}  // namespace gainv
