#include "gainv/field.hpp"

#include <algorithm>

namespace gainv {

namespace {

bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Dense little-endian polynomial arithmetic over F_p, used only to build and
// check moduli.
using PP = std::vector<uint32_t>;

int pdeg(const PP& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

PP pmulmod(const PP& a, const PP& b, const PP& mod, uint32_t p) {
    PP r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    int dm = pdeg(mod);
    uint32_t lead_inv = 1;
    // moduli are monic in every caller
    for (int i = pdeg(r); i >= dm; --i) {
        uint32_t c = r[i];
        if (!c) continue;
        uint32_t f = (c * lead_inv) % p;
        for (int j = 0; j <= dm; ++j) {
            uint32_t sub = (f * mod[j]) % p;
            int k = i - dm + j;
            r[k] = (r[k] + p - sub) % p;
        }
    }
    r.resize(std::max(dm, 1));
    return r;
}

PP ppowmod(PP base, uint64_t e, const PP& mod, uint32_t p) {
    PP r(std::max(pdeg(mod), 1), 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PP pgcd(PP a, PP b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t v) {
        uint32_t r = 1;
        for (uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = (r * v) % p;
            v = (v * v) % p;
        }
        return r;
    };
    while (pdeg(b) >= 0) {
        // a mod b
        int db = pdeg(b);
        uint32_t li = inv_mod_p(b[db]);
        for (int i = pdeg(a); i >= db; --i) {
            uint32_t c = a[i];
            if (!c) continue;
            uint32_t f = (c * li) % p;
            for (int j = 0; j <= db; ++j) {
                uint32_t sub = (f * b[j]) % p;
                a[i - db + j] = (a[i - db + j] + p - sub) % p;
            }
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin test: x^(p^m) == x mod f, and gcd(x^(p^(m/r)) - x, f) == 1 for every
// prime r | m.  Deterministic and exact.
bool is_irreducible(const PP& f, uint32_t p, uint32_t m) {
    PP x(m + 1, 0);
    x[1] = 1;
    auto ppow = [&](uint32_t e) {  // x^(p^e) mod f
        PP r = x;
        for (uint32_t i = 0; i < e; ++i) r = ppowmod(r, p, f, p);
        return r;
    };
    PP top = ppow(m);
    if (pdeg(top) != 1 || top[1] != 1 || top[0] != 0) return false;
    for (uint32_t r = 2; r <= m; ++r) {
        if (m % r) continue;
        bool rp = is_prime_u32(r);
        if (!rp) continue;
        PP g = ppow(m / r);
        // g - x
        PP diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        PP d = pgcd(f, diff, p);
        if (pdeg(d) != 0) return false;
    }
    return true;
}

}  // namespace

Fq::Fq(std::shared_ptr<const FieldData> fd, std::vector<uint32_t> c)
    : fd_(std::move(fd)), c_(std::move(c)) {
    if (!fd_) throw FieldError("Fq: null field");
    if (c_.size() != fd_->m) throw FieldError("Fq: wrong coefficient length");
    for (auto& v : c_) v %= fd_->p;
}

bool Fq::is_zero() const {
    if (!fd_) throw FieldError("Fq: null element");
    return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

bool Fq::is_one() const {
    if (!fd_) throw FieldError("Fq: null element");
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

Field Fq::field() const { return Field(fd_); }

bool same_field(const Fq& a, const Fq& b) {
    if (!a.data() || !b.data()) return false;
    if (a.data() == b.data()) return true;
    return a.data()->p == b.data()->p && a.data()->m == b.data()->m &&
           a.data()->modulus == b.data()->modulus;
}

static void check_same(const Fq& a, const Fq& b) {
    if (!same_field(a, b)) throw FieldError("Fq: mixed fields");
}

Fq operator+(const Fq& a, const Fq& b) {
    check_same(a, b);
    std::vector<uint32_t> c(a.c_.size());
    uint32_t p = a.fd_->p;
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + b.c_[i]) % p;
    return Fq(a.fd_, std::move(c));
}

Fq operator-(const Fq& a, const Fq& b) {
    check_same(a, b);
    std::vector<uint32_t> c(a.c_.size());
    uint32_t p = a.fd_->p;
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + p - b.c_[i]) % p;
    return Fq(a.fd_, std::move(c));
}

Fq Fq::operator-() const {
    if (!fd_) throw FieldError("Fq: null element");
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (fd_->p - c_[i]) % fd_->p;
    return Fq(fd_, std::move(c));
}

Fq operator*(const Fq& a, const Fq& b) {
    check_same(a, b);
    uint32_t p = a.fd_->p, m = a.fd_->m;
    if (m == 1) {
        return Fq(a.fd_, {(a.c_[0] * b.c_[0]) % p});
    }
    std::vector<uint32_t> r(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i) {
        if (!a.c_[i]) continue;
        for (uint32_t j = 0; j < m; ++j)
            r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % p;
    }
    const auto& mod = a.fd_->modulus;  // monic, degree m
    for (int i = (int)r.size() - 1; i >= (int)m; --i) {
        uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (uint32_t j = 0; j < m; ++j) {
            uint32_t sub = (c * mod[j]) % p;
            r[i - m + j] = (r[i - m + j] + p - sub) % p;
        }
    }
    r.resize(m);
    return Fq(a.fd_, std::move(r));
}

Fq Fq::pow(uint64_t e) const {
    if (!fd_) throw FieldError("Fq: null element");
    Fq r = Field(fd_).one();
    Fq base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Fq Fq::inverse() const {
    if (is_zero()) throw FieldError("Fq: inverse of zero");
    uint64_t q = Field(fd_).size();
    return pow(q - 2);
}

Fq operator/(const Fq& a, const Fq& b) { return a * b.inverse(); }

bool operator==(const Fq& a, const Fq& b) {
    if (!a.fd_ && !b.fd_) return true;
    if (!a.fd_ || !b.fd_) return false;
    return same_field(a, b) && a.c_ == b.c_;
}

bool operator<(const Fq& a, const Fq& b) { return a.c_ < b.c_; }

uint64_t Fq::index() const {
    uint64_t idx = 0;
    for (size_t i = c_.size(); i-- > 0;) idx = idx * fd_->p + c_[i];
    return idx;
}

std::string Fq::str() const {
    if (!fd_) return "null";
    if (fd_->m == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

Fq frobenius_power(const Fq& x, int64_t j) {
    if (x.null()) throw FieldError("frobenius_power: null element");
    uint32_t m = x.data()->m;
    uint32_t p = x.data()->p;
    int64_t jm = ((j % (int64_t)m) + (int64_t)m) % (int64_t)m;
    Fq r = x;
    for (int64_t i = 0; i < jm; ++i) r = r.pow(p);
    return r;
}

uint64_t Field::size() const {
    uint64_t s = 1;
    for (uint32_t i = 0; i < fd_->m; ++i) s *= fd_->p;
    return s;
}

Fq Field::zero() const { return Fq(fd_, std::vector<uint32_t>(fd_->m, 0)); }

Fq Field::one() const {
    std::vector<uint32_t> c(fd_->m, 0);
    c[0] = 1;
    return Fq(fd_, std::move(c));
}

Fq Field::from_int(int64_t v) const {
    int64_t r = v % (int64_t)fd_->p;
    if (r < 0) r += fd_->p;
    std::vector<uint32_t> c(fd_->m, 0);
    c[0] = (uint32_t)r;
    return Fq(fd_, std::move(c));
}

Fq Field::from_coeffs(std::vector<uint32_t> c) const {
    c.resize(fd_->m, 0);
    return Fq(fd_, std::move(c));
}

Fq Field::element_at(uint64_t idx) const {
    std::vector<uint32_t> c(fd_->m, 0);
    for (uint32_t i = 0; i < fd_->m; ++i) {
        c[i] = (uint32_t)(idx % fd_->p);
        idx /= fd_->p;
    }
    return Fq(fd_, std::move(c));
}

Fq Field::generator() const {
    if (fd_->m == 1) return from_int(1);
    std::vector<uint32_t> c(fd_->m, 0);
    c[1] = 1;
    return Fq(fd_, std::move(c));
}

bool operator==(const Field& a, const Field& b) {
    if (!a.fd_ && !b.fd_) return true;
    if (!a.fd_ || !b.fd_) return false;
    return a.fd_->p == b.fd_->p && a.fd_->m == b.fd_->m &&
           a.fd_->modulus == b.fd_->modulus;
}

Field build_field(uint32_t p, uint32_t m,
                  std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime_u32(p)) throw NotPrimeError("build_field: p = " + std::to_string(p) + " is not prime");
    if (m == 0) throw FieldError("build_field: m must be positive");
    auto fd = std::make_shared<FieldData>();
    fd->p = p;
    fd->m = m;
    if (m == 1) {
        if (modulus && !modulus->empty())
            throw FieldError("build_field: modulus not accepted for m = 1");
        return Field(fd);
    }
    if (modulus) {
        PP f = *modulus;
        for (auto& v : f) v %= p;
        if (f.size() != m + 1 || f[m] != 1)
            throw ReducibleModulusError("build_field: modulus must be monic of degree m");
        if (!is_irreducible(f, p, m))
            throw ReducibleModulusError("build_field: modulus is reducible");
        fd->modulus = f;
        return Field(fd);
    }
    // Deterministic search: enumerate lower coefficients base-p, lowest index
    // first, monic leading coefficient fixed.
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
        PP f(m + 1, 0);
        uint64_t v = idx;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = (uint32_t)(v % p);
            v /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p, m)) {
            fd->modulus = f;
            return Field(fd);
        }
    }
    throw FieldError("build_field: no irreducible modulus found");  // unreachable
}

Fq embed(const Fq& x, const Field& target) {
    if (x.null() || target.null()) throw FieldError("embed: null argument");
    const auto& src = *x.data();
    if (src.p != target.p()) throw FieldError("embed: characteristic mismatch");
    if (target.m() % src.m != 0)
        throw FieldError("embed: source degree does not divide target degree");
    if (Field(x.data()) == target) return x;
    if (src.m == 1) return target.from_int((int64_t)x.coeffs()[0]);
    // image of the source generator = first root of the source modulus
    for (uint64_t i = 0; i < target.size(); ++i) {
        Fq cand = target.element_at(i);
        // evaluate source modulus at cand
        Fq acc = target.zero();
        for (size_t d = src.modulus.size(); d-- > 0;) {
            acc = acc * cand + target.from_int((int64_t)src.modulus[d]);
        }
        if (acc.is_zero()) {
            Fq r = target.zero();
            for (size_t d = x.coeffs().size(); d-- > 0;)
                r = r * cand + target.from_int((int64_t)x.coeffs()[d]);
            return r;
        }
    }
    throw FieldError("embed: no root of source modulus in target");
}

}  // namespace gainv
