#include "gainv/mpoly.hpp"

#include <algorithm>

#include "gainv/upoly.hpp"

namespace gainv {

uint32_t total_degree(const Exps& e) {
    uint32_t d = 0;
    for (auto v : e) d += v;
    return d;
}

bool divides(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exps exps_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exps exps_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

int MonomialOrder::cmp(const Exps& a, const Exps& b) const {
    for (const auto& blk : blocks_) {
        switch (blk.mode) {
            case BlockMode::Lex:
                for (auto v : blk.vars)
                    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
                break;
            case BlockMode::DegOnly: {
                uint32_t da = 0, db = 0;
                for (auto v : blk.vars) {
                    da += a[v];
                    db += b[v];
                }
                if (da != db) return da < db ? -1 : 1;
                break;
            }
            case BlockMode::GrevLex: {
                uint32_t da = 0, db = 0;
                for (auto v : blk.vars) {
                    da += a[v];
                    db += b[v];
                }
                if (da != db) return da < db ? -1 : 1;
                // tie-break: last listed variable with a different exponent,
                // the smaller exponent there wins
                for (size_t i = blk.vars.size(); i-- > 0;) {
                    uint32_t v = blk.vars[i];
                    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
                }
                break;
            }
        }
    }
    return 0;
}

static std::vector<uint32_t> iota_vars(uint32_t nvars) {
    std::vector<uint32_t> v(nvars);
    for (uint32_t i = 0; i < nvars; ++i) v[i] = i;
    return v;
}

MonomialOrder MonomialOrder::grevlex(uint32_t nvars) {
    Block b;
    b.mode = BlockMode::GrevLex;
    b.vars = iota_vars(nvars);
    return MonomialOrder(nvars, {std::move(b)});
}

MonomialOrder MonomialOrder::graded_lex(uint32_t nvars) {
    // total degree first; ties by lex with x_n most significant, realizing
    // graded lex for the chain x1 < x2 < ... < xn
    Block deg;
    deg.mode = BlockMode::DegOnly;
    deg.vars = iota_vars(nvars);
    Block lexb;
    lexb.mode = BlockMode::Lex;
    for (uint32_t i = nvars; i-- > 0;) lexb.vars.push_back(i);
    return MonomialOrder(nvars, {std::move(deg), std::move(lexb)});
}

MonomialOrder MonomialOrder::lex(const std::vector<uint32_t>& priority, uint32_t nvars) {
    Block b;
    b.mode = BlockMode::Lex;
    b.vars = priority;
    return MonomialOrder(nvars, {std::move(b)});
}

MonomialOrder MonomialOrder::elimination(const std::vector<uint32_t>& drop, uint32_t nvars) {
    std::vector<bool> dropped(nvars, false);
    for (auto v : drop) dropped[v] = true;
    Block hi, lo;
    for (uint32_t i = 0; i < nvars; ++i) (dropped[i] ? hi : lo).vars.push_back(i);
    std::vector<Block> blocks;
    if (!hi.vars.empty()) blocks.push_back(std::move(hi));
    if (!lo.vars.empty()) blocks.push_back(std::move(lo));
    return MonomialOrder(nvars, std::move(blocks));
}

MPoly MPoly::constant(const Field& k, uint32_t nvars, const Fq& c) {
    MPoly r(k, nvars);
    if (!c.is_zero()) r.terms_[Exps(nvars, 0)] = c;
    return r;
}

MPoly MPoly::variable(const Field& k, uint32_t nvars, uint32_t i) {
    MPoly r(k, nvars);
    Exps e(nvars, 0);
    e[i] = 1;
    r.terms_[std::move(e)] = k.one();
    return r;
}

MPoly MPoly::monomial(const Field& k, Exps e, const Fq& c) {
    MPoly r(k, (uint32_t)e.size());
    if (!c.is_zero()) r.terms_[std::move(e)] = c;
    return r;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Fq MPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? k_.zero() : it->second;
}

Fq MPoly::constant_term() const { return coeff(Exps(n_, 0)); }

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, (int)total_degree(e));
    return d;
}

bool MPoly::uses_var(uint32_t i) const {
    for (const auto& [e, c] : terms_)
        if (e[i]) return true;
    return false;
}

void MPoly::set_coeff(const Exps& e, const Fq& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

MPoly MPoly::operator-() const {
    MPoly r(k_, n_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    if (r.k_.null()) r.k_ = b.k_;
    for (const auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            Fq s = it->second + c;
            if (s.is_zero())
                r.terms_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.k_.null() ? b.k_ : a.k_, a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exps e = exps_add(ea, eb);
            Fq v = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                if (!v.is_zero()) r.terms_[std::move(e)] = v;
            } else {
                Fq s = it->second + v;
                if (s.is_zero())
                    r.terms_.erase(it);
                else
                    it->second = s;
            }
        }
    }
    return r;
}

MPoly MPoly::operator*(const Fq& s) const {
    MPoly r(k_, n_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

bool MPoly::operator<(const MPoly& o) const {
    auto ia = terms_.begin(), ib = o.terms_.begin();
    for (; ia != terms_.end() && ib != o.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (!(ia->second == ib->second)) return ia->second < ib->second;
    }
    return terms_.size() < o.terms_.size();
}

MPoly MPoly::pow(uint32_t e) const {
    MPoly r = MPoly::constant(k_, n_, k_.one());
    MPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

const Exps& MPoly::lead_exps(const MonomialOrder& ord) const {
    if (terms_.empty()) throw PolyError("MPoly: leading term of zero");
    const Exps* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (ord.cmp(e, *best) > 0) best = &e;
    return *best;
}

Fq MPoly::lead_coeff(const MonomialOrder& ord) const { return terms_.at(lead_exps(ord)); }

MPoly MPoly::monic(const MonomialOrder& ord) const {
    return *this * lead_coeff(ord).inverse();
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != n_) throw PolyError("MPoly::substitute: arity mismatch");
    if (terms_.empty()) return *this;
    uint32_t tn = images.empty() ? n_ : images[0].nvars();
    const Field& tk = images.empty() ? k_ : images[0].field();
    MPoly out(tk, tn);
    // cache powers of each image
    std::vector<std::vector<MPoly>> pw(n_);
    for (uint32_t i = 0; i < n_; ++i) pw[i].push_back(MPoly::constant(tk, tn, tk.one()));
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(tk, tn, c);
        for (uint32_t i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            while (pw[i].size() <= e[i]) pw[i].push_back(pw[i].back() * images[i]);
            term = term * pw[i][e[i]];
        }
        out = out + term;
    }
    return out;
}

Fq MPoly::eval(const std::vector<Fq>& point) const {
    if (point.size() != n_) throw PolyError("MPoly::eval: arity mismatch");
    const Field& k = point.empty() ? k_ : point[0].field();
    Fq r = k.zero();
    for (const auto& [e, c] : terms_) {
        Fq t = same_field(c, r) ? c : embed(c, k);
        for (uint32_t i = 0; i < n_; ++i)
            if (e[i]) t = t * point[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

MPoly MPoly::relabel(uint32_t new_nvars, const std::vector<uint32_t>& map) const {
    MPoly r(k_, new_nvars);
    for (const auto& [e, c] : terms_) {
        Exps ne(new_nvars, 0);
        for (uint32_t i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            ne[map[i]] = e[i];
        }
        r.terms_[std::move(ne)] = c;
    }
    return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    // print highest container-order terms first for stability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += " + ";
        bool allz = total_degree(e) == 0;
        std::string mono;
        for (uint32_t i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (allz || !c.is_one()) {
            s += c.str();
            if (!allz) s += "*";
        }
        s += mono;
    }
    return s;
}

uint32_t binom_mod_p(uint64_t n, uint64_t k, uint32_t p) {
    if (k > n) return 0;
    uint64_t r = 1;
    while (n || k) {
        uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // small Pascal for one digit
        uint64_t c = 1;
        for (uint64_t i = 0; i < kd; ++i) c = c * (nd - i) / (i + 1);
        r = (r * (c % p)) % p;
        n /= p;
        k /= p;
    }
    return (uint32_t)r;
}

std::optional<MPoly> try_divide_exact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("try_divide_exact: zero divisor");
    MonomialOrder ord = MonomialOrder::graded_lex(f.nvars());
    MPoly r = f, q(f.field(), f.nvars());
    // f = q g exactly forces lead(g) | lead(r) at every step
    while (!r.is_zero()) {
        const Exps& lr = r.lead_exps(ord);
        const Exps& lg = g.lead_exps(ord);
        if (!divides(lg, lr)) return std::nullopt;
        MPoly t = MPoly::monomial(f.field(), exps_sub(lr, lg),
                                  r.lead_coeff(ord) * g.lead_coeff(ord).inverse());
        q = q + t;
        r = r - t * g;
    }
    return q;
}


MPoly embed(const MPoly& f, const Field& target) {
    MPoly out(target, f.nvars());
    for (const auto& [e, c] : f.terms()) out.set_coeff(e, embed(c, target));
    return out;
}

}  // namespace gainv
