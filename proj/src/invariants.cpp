#include "gainv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "gainv/linalg.hpp"

namespace gainv {

namespace {

uint64_t p_to(uint32_t p, uint32_t w) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < w; ++i) r *= p;
    return r;
}

// Minimal h-power form: divide num by h while the exponent lasts.
void strip_h(MPoly& num, uint32_t& e, const MPoly& h) {
    if (num.is_zero()) {
        e = 0;
        return;
    }
    while (e > 0) {
        auto q = try_divide_exact(num, h);
        if (!q) break;
        num = std::move(*q);
        --e;
    }
}

// Substitute t = -g/h into a co-action row; numerator over h^{t_degree}.
std::pair<MPoly, uint32_t> slice_substitute(const TPoly& row, const MPoly& g,
                                            const MPoly& h) {
    const Field& k = row.field();
    uint32_t n = row.nvars();
    uint32_t top = row.t_degree() < 0 ? 0 : (uint32_t)row.t_degree();
    MPoly num(k, n);
    MPoly neg = -g;
    std::vector<MPoly> gp{MPoly::constant(k, n, k.one())};
    std::vector<MPoly> hp{MPoly::constant(k, n, k.one())};
    for (uint32_t e = 1; e <= top; ++e) {
        gp.push_back(gp.back() * neg);
        hp.push_back(hp.back() * h);
    }
    for (const auto& [e, c] : row.layers()) num = num + c * gp[e] * hp[top - e];
    uint32_t ex = top;
    strip_h(num, ex, h);
    return {num, ex};
}

std::vector<MembershipVerdict> measure_membership(const Representation& rep,
                                                  const std::vector<MPoly>& gens_in,
                                                  const MPoly& h, uint32_t bound) {
    std::vector<MPoly> gens;
    for (const MPoly& g : gens_in)
        if (!g.is_zero() && !g.is_constant()) gens.push_back(g);
    std::vector<MembershipVerdict> out;
    for (uint32_t d = 1; d <= bound; ++d) {
        MembershipVerdict v;
        v.degree = d;
        for (const MPoly& f : invariant_space_oracle(rep, d)) {
            ++v.checked;
            if (f.is_constant() ||
                subalgebra_member_localized(f, gens, h, std::max(1u, d)).member)
                ++v.members;
        }
        out.push_back(v);
    }
    return out;
}

bool require_principle(const Pair& pair) {
    return pair.c.deg_f() == 0 && pair.c.coeff(0).is_one();
}

void sort_unique(std::vector<MPoly>& v) {
    std::sort(v.begin(), v.end(), [](const MPoly& a, const MPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
        return a.str() < b.str();
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ReducedAction reduce_by_kernel(const Representation& rep, const AdditivePoly& b) {
    if (b.is_zero()) throw InvariantsError("reduce_by_kernel: b = 0");
    UPoly bu = b.to_upoly();
    ReducedAction out{Representation{rep.k, rep.n, {}}, b};
    for (const auto& [key, q] : rep.q) {
        if (q.is_zero()) continue;
        BAdicExpansion ex = b_adic_membership(q, bu);
        if (!ex.member) throw KernelNotTrivial(key.first, key.second);
        out.rep.q[key] = UPoly(rep.k, ex.digits);
    }
    ValidationResult vr = validate(out.rep);
    if (!vr.ok)
        throw InvariantsError("reduced action failed validation at q[" +
                              std::to_string(vr.i) + "," + std::to_string(vr.j) +
                              "]: " + vr.reason);
    return out;
}

bool verify_invariant(const Representation& rep, const MPoly& f) {
    return delta(rep, f).is_zero();
}

bool verify_invariant(const Representation& rep, const MPoly& num, const MPoly& h,
                      uint32_t) {
    // h invariant makes num / h^e invariant exactly when num is.
    return delta(rep, h).is_zero() && delta(rep, num).is_zero();
}

LocalizedInvariantRing vde_generators(const Representation& rep, const Pair& pair,
                                      uint32_t certify_up_to) {
    if (!is_pair(rep, pair.g, pair.h, pair.c))
        throw InvariantsError("vde_generators: input fails the pair identity");
    if (!require_principle(pair))
        throw NotPrinciple("vde_generators requires a principle pair (c = t)");
    LocalizedInvariantRing ring;
    ring.h = pair.h;
    for (uint32_t i = 1; i <= rep.n; ++i) {
        auto [num, ex] = slice_substitute(coact_var(rep, i), pair.g, pair.h);
        if (!verify_invariant(rep, num, pair.h, ex))
            throw InvariantsError("slice generator " + std::to_string(i) +
                                  " is not invariant");
        ring.numerators.push_back(std::move(num));
        ring.hexp.push_back(ex);
    }
    if (certify_up_to > 0) {
        ring.verdicts = measure_membership(rep, ring.numerators, ring.h, certify_up_to);
        for (const MembershipVerdict& v : ring.verdicts) {
            if (v.members != v.checked) break;
            ring.certified_degree = v.degree;
        }
    }
    return ring;
}

LocElem rewrite_invariant(const Representation& rep, const Pair& pair,
                          const MPoly& r) {
    if (!verify_invariant(rep, r))
        throw NotInvariant("rewrite_invariant: input is not invariant");
    LocalizedInvariantRing ring = vde_generators(rep, pair);
    const Field& k = rep.k;
    uint32_t T = 0;
    for (const auto& [m, c] : r.terms()) {
        uint32_t w = 0;
        for (uint32_t i = 0; i < rep.n; ++i) w += ring.hexp[i] * m[i];
        T = std::max(T, w);
    }
    MPoly num(k, rep.n);
    for (const auto& [m, c] : r.terms()) {
        MPoly term = MPoly::constant(k, rep.n, c);
        uint32_t w = 0;
        for (uint32_t i = 0; i < rep.n; ++i) {
            if (m[i] == 0) continue;
            term = term * ring.numerators[i].pow(m[i]);
            w += ring.hexp[i] * m[i];
        }
        num = num + term * ring.h.pow(T - w);
    }
    LocElem out{std::move(num), T};
    strip_h(out.num, out.e, ring.h);
    if (out.num != r * ring.h.pow(out.e))
        throw InvariantsError("rewrite_invariant: slice identity failed");
    return out;
}

GraphSepResult graph_separators(const Representation& rep, uint64_t budget) {
    const Field& k = rep.k;
    uint32_t n = rep.n;
    uint32_t N = 2 * n + 4;  // w_0..w_n, y_0..y_n, t_0, t_1
    uint32_t t0 = 2 * n + 2, t1 = 2 * n + 3;
    GraphSepResult res;

    std::vector<TPoly> rows;
    rows.reserve(n);
    int d = 0;
    for (uint32_t i = 1; i <= n; ++i) {
        rows.push_back(coact_var(rep, i));
        d = std::max(d, rows.back().t_degree());
    }
    res.d = (uint32_t)d;

    for (uint32_t i = 1; i <= n; ++i)
        if (rows[i - 1].t_degree() == d && d > 0)
            res.u_description.push_back(
                rows[i - 1].coeff((uint32_t)d).monic(MonomialOrder::graded_lex(n)));
    sort_unique(res.u_description);

    std::vector<uint32_t> to_w(n);
    for (uint32_t j = 0; j < n; ++j) to_w[j] = j + 1;

    std::vector<MPoly> gens;
    {
        MPoly g0(k, N);
        Exps y0(N, 0);
        y0[n + 1] = 1;
        g0.set_coeff(y0, k.one());
        Exps w0t(N, 0);
        w0t[0] = 1;
        w0t[t1] = (uint32_t)d;
        g0.set_coeff(w0t, -k.one());
        gens.push_back(g0);
    }
    for (uint32_t i = 1; i <= n; ++i) {
        MPoly gi(k, N);
        Exps yi(N, 0);
        yi[n + 1 + i] = 1;
        gi.set_coeff(yi, k.one());
        for (const auto& [e, c] : rows[i - 1].layers()) {
            Exps te(N, 0);
            te[t0] = e;
            te[t1] = (uint32_t)d - e;
            gi = gi - c.relabel(N, to_w) * MPoly::monomial(k, te, k.one());
        }
        gens.push_back(gi);
    }

    std::vector<MPoly> elim;
    try {
        elim = eliminate(gens, {t0, t1}, budget);
        // colex with the w-block below the y-block: the most significant
        // comparison runs y_n, ..., y_0, then w_n, ..., w_0.
        std::vector<uint32_t> pri;
        for (uint32_t i = 2 * n + 1; i >= n + 1; --i) pri.push_back(i);
        for (int i = (int)n; i >= 0; --i) pri.push_back((uint32_t)i);
        pri.push_back(t1);
        pri.push_back(t0);
        res.gb = buchberger(elim, MonomialOrder::lex(pri, N), budget);
    } catch (const GroebnerError& e) {
        throw EliminationBudgetExceeded(e.what());
    }

    for (uint32_t j = 0; j <= n; ++j) res.gb_names.push_back("w" + std::to_string(j));
    for (uint32_t j = 0; j <= n; ++j) res.gb_names.push_back("y" + std::to_string(j));
    res.gb_names.push_back("t0");
    res.gb_names.push_back("t1");

    // y-exponent slices of an (N-variable, t-free) element, each dehomogenized
    // by dropping the w_0 exponent.
    auto slices = [&](const MPoly& f) {
        std::map<Exps, MPoly> groups;
        for (const auto& [e, c] : f.terms()) {
            Exps ye(e.begin() + n + 1, e.begin() + 2 * n + 2);
            Exps xe(e.begin() + 1, e.begin() + n + 1);  // w_0 -> 1
            auto [it, fresh] = groups.try_emplace(ye, MPoly(k, n));
            MPoly add = MPoly::monomial(k, xe, c);
            it->second = fresh ? add : it->second + add;
        }
        return groups;
    };

    for (const MPoly& f : res.gb)
        for (auto& [ye, part] : slices(f)) {
            if (part.is_zero() || part.is_constant()) continue;
            MPoly m = part.monic(MonomialOrder::graded_lex(n));
            (verify_invariant(rep, m) ? res.invariants : res.rejected)
                .push_back(m);
        }
    sort_unique(res.invariants);
    sort_unique(res.rejected);

    if (!res.rejected.empty()) {
        // A reduced basis row can carry non-invariant coefficients even though
        // the ideal itself is stable under the action: invariance can fail
        // slice by slice while the cross-slice combination still vanishes on
        // the graph.  The separating data is recovered from combinations of
        // low-degree w-multiples of the basis rows whose slices are all
        // invariant; that is a linear condition over k with a canonical
        // kernel basis.
        for (uint32_t aug = 1; aug <= 2; ++aug) {
            std::vector<Exps> wmons;
            {
                Exps cur(N, 0);
                std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t v,
                                                                  uint32_t left) {
                    if (v == n) {
                        cur[v] = left;
                        wmons.push_back(cur);
                        cur[v] = 0;
                        return;
                    }
                    for (uint32_t e = 0; e <= left; ++e) {
                        cur[v] = e;
                        rec(v + 1, left - e);
                    }
                    cur[v] = 0;
                };
                rec(0, aug);
            }
            std::vector<MPoly> cands;
            for (const MPoly& g : res.gb)
                for (const Exps& mw : wmons)
                    cands.push_back(g * MPoly::monomial(k, mw, k.one()));

            // Row space: one condition per (y-slice, t-layer, x-monomial)
            // appearing in delta of any candidate's slice.
            using Key = std::tuple<Exps, uint32_t, Exps>;
            std::map<Key, size_t> rows_ix;
            std::vector<std::map<size_t, Fq>> colvals(cands.size());
            for (size_t ci = 0; ci < cands.size(); ++ci)
                for (auto& [ye, part] : slices(cands[ci])) {
                    TPoly dp = delta(rep, part);
                    for (const auto& [tl, cf] : dp.layers())
                        for (const auto& [xe, c] : cf.terms()) {
                            auto [it, _] = rows_ix.try_emplace(
                                Key{ye, tl, xe}, rows_ix.size());
                            colvals[ci][it->second] = c;
                        }
                }
            FqMatrix M(rows_ix.size(), FqRow(cands.size(), k.zero()));
            for (size_t ci = 0; ci < cands.size(); ++ci)
                for (const auto& [ri, c] : colvals[ci]) M[ri][ci] = c;
            bool added = false;
            for (const FqRow& v : kernel_basis(M, cands.size(), k)) {
                MPoly P(k, N);
                for (size_t ci = 0; ci < cands.size(); ++ci)
                    if (!v[ci].is_zero()) P = P + cands[ci] * v[ci];
                for (auto& [ye, part] : slices(P)) {
                    if (part.is_zero() || part.is_constant()) continue;
                    MPoly m = part.monic(MonomialOrder::graded_lex(n));
                    if (!verify_invariant(rep, m))
                        throw InvariantsError(
                            "augmented graph extraction produced a "
                            "non-invariant: " +
                            m.str());
                    if (!std::count(res.invariants.begin(),
                                    res.invariants.end(), m)) {
                        res.invariants.push_back(m);
                        added = true;
                    }
                }
            }
            if (added) break;
        }
        sort_unique(res.invariants);
    }
    return res;
}

namespace {

// Element of (k[X]_h)[s]: s-power coefficients as numerators over a shared
// h-power.  Reduction modulo b(s) + g/h happens explicitly; everything else
// is plain polynomial arithmetic, kept unreduced for the H-invariance check.
struct EPoly {
    std::vector<MPoly> num;
    uint32_t e = 0;
};

struct ECtx {
    Field k;
    uint32_t n = 0;
    MPoly h;
    MPoly g;             // defining relation b(s) = -g/h
    AdditivePoly bskew;  // monic
};

void ep_trim(EPoly& f) {
    while (!f.num.empty() && f.num.back().is_zero()) f.num.pop_back();
}

void ep_strip(EPoly& f, const ECtx& cx) {
    ep_trim(f);
    if (f.num.empty()) {
        f.e = 0;
        return;
    }
    while (f.e > 0) {
        std::vector<MPoly> q;
        q.reserve(f.num.size());
        bool ok = true;
        for (const MPoly& c : f.num) {
            auto d = try_divide_exact(c, cx.h);
            if (!d) {
                ok = false;
                break;
            }
            q.push_back(std::move(*d));
        }
        if (!ok) break;
        f.num = std::move(q);
        --f.e;
    }
}

EPoly ep_zero(const ECtx& cx) { return EPoly{{}, 0}; }

EPoly ep_add(const EPoly& a, const EPoly& b, const ECtx& cx) {
    EPoly lo = a.e <= b.e ? a : b;
    const EPoly& hi = a.e <= b.e ? b : a;
    MPoly scale = cx.h.pow(hi.e - lo.e);
    EPoly out;
    out.e = hi.e;
    out.num.resize(std::max(lo.num.size(), hi.num.size()), MPoly(cx.k, cx.n));
    for (size_t i = 0; i < out.num.size(); ++i) {
        MPoly v(cx.k, cx.n);
        if (i < lo.num.size()) v = v + lo.num[i] * scale;
        if (i < hi.num.size()) v = v + hi.num[i];
        out.num[i] = std::move(v);
    }
    ep_strip(out, cx);
    return out;
}

EPoly ep_mul(const EPoly& a, const EPoly& b, const ECtx& cx) {
    EPoly out;
    if (a.num.empty() || b.num.empty()) return out;
    out.e = a.e + b.e;
    out.num.assign(a.num.size() + b.num.size() - 1, MPoly(cx.k, cx.n));
    for (size_t i = 0; i < a.num.size(); ++i) {
        if (a.num[i].is_zero()) continue;
        for (size_t j = 0; j < b.num.size(); ++j)
            out.num[i + j] = out.num[i + j] + a.num[i] * b.num[j];
    }
    ep_strip(out, cx);
    return out;
}

EPoly ep_shift_s(const EPoly& f, const Fq& kappa, const ECtx& cx) {
    EPoly out;
    out.e = f.e;
    out.num.assign(f.num.size(), MPoly(cx.k, cx.n));
    uint32_t p = cx.k.p();
    for (size_t i = 0; i < f.num.size(); ++i) {
        if (f.num[i].is_zero()) continue;
        for (size_t j = 0; j <= i; ++j) {
            uint32_t bc = binom_mod_p(i, j, p);
            if (bc == 0) continue;
            out.num[j] = out.num[j] + f.num[i] * (cx.k.from_int(bc) * kappa.pow(i - j));
        }
    }
    ep_strip(out, cx);
    return out;
}

// Canonical representative modulo s^{p^v} = -(lower part of b)(s) - g/h.
void ep_reduce(EPoly& f, const ECtx& cx) {
    size_t sdeg = (size_t)cx.bskew.to_upoly().degree();
    uint32_t p = cx.k.p();
    int v = cx.bskew.deg_f();
    ep_trim(f);
    while (f.num.size() > sdeg) {
        size_t D = f.num.size() - 1;
        MPoly top = std::move(f.num.back());
        f.num.pop_back();
        if (top.is_zero()) continue;
        for (MPoly& c : f.num) c = c * cx.h;
        f.e += 1;
        MPoly toph = top * cx.h;
        for (int w = 0; w < v; ++w) {
            Fq bw = cx.bskew.coeff((size_t)w);
            if (bw.is_zero()) continue;
            size_t idx = (size_t)p_to(p, (uint32_t)w) + D - sdeg;
            if (f.num.size() <= idx) f.num.resize(idx + 1, MPoly(cx.k, cx.n));
            f.num[idx] = f.num[idx] - toph * bw;
        }
        f.num[D - sdeg] = f.num[D - sdeg] - top * cx.g;
        ep_trim(f);
    }
    ep_strip(f, cx);
}

bool ep_eq(const EPoly& a, const EPoly& b) {
    return a.e == b.e && a.num == b.num;
}

}  // namespace

CasebData caseb_local_invariants(const Representation& rep0, const Pair& pair0,
                                 uint32_t degree_bound) {
    if (!is_pair(rep0, pair0.g, pair0.h, pair0.c))
        throw InvariantsError("caseb_local_invariants: input fails the pair identity");
    if (pair0.c.is_zero()) throw InvariantsError("caseb_local_invariants: c = 0");

    // Left-normalize to a monic b; scaling c and g together keeps the pair.
    Fq lam = pair0.c.lead();
    AdditivePoly b0 = pair0.c * lam.inverse();
    MPoly g0 = pair0.g * lam.inverse();

    if (separable_split(b0).first > 0)
        throw InseparableB("caseb_local_invariants: b is inseparable");
    if (kernel_acts_trivially(rep0, b0))
        throw NotCaseB("the kernel of b acts trivially: not Case B");

    uint32_t p = rep0.k.p();
    uint32_t v = (uint32_t)b0.deg_f();
    uint64_t full = p_to(p, v);

    CasebData data;
    Representation rep = rep0;
    MPoly g = g0, h = pair0.h;
    data.b = b0;
    data.ext = rep0.k;
    bool split = false;
    for (uint32_t mm = 1; mm <= 12 && !split; ++mm) {
        Field ext = mm == 1 ? rep0.k : build_field(p, rep0.k.m() * mm);
        std::vector<Fq> ker = kernel_points(b0, ext);
        if (ker.size() == full) {
            data.ext = ext;
            data.kernel = std::move(ker);
            split = true;
            if (mm > 1) {
                rep = embed(rep0, ext);
                g = embed(g0, ext);
                h = embed(pair0.h, ext);
                data.b = embed(b0, ext);
            }
        }
    }
    if (!split)
        throw DegreeBudgetExceeded(
            "kernel of b does not split within the extension cap");

    const Field& k = data.ext;
    uint32_t n = rep.n;
    data.h = h;

    auto cert = normal_form_certificate(rep, data.b, "given");
    if (!cert)
        throw NotCaseB("normal form not established in the given coordinates");

    UPoly bu = data.b.to_upoly();
    std::vector<bool> inv(n + 1, true);
    for (const auto& [key, q] : rep.q)
        if (!q.is_zero()) inv[key.first] = false;

    // Digit polynomials for every k[b]-entry.
    std::map<std::pair<uint32_t, uint32_t>, UPoly> digits;
    for (const auto& [key, q] : rep.q) {
        if (q.is_zero()) continue;
        if (key.first == n && inv[key.second]) continue;  // certificate rows
        digits[key] = UPoly(k, b_adic_membership(q, bu).digits);
    }

    // Slice value S = -g/h for the s-slot: powers of numerator and h.
    auto eval_digit_row = [&](uint32_t i, const std::map<uint32_t, UPoly>& srow) {
        int top = 0;
        for (const auto& [j, s] : srow) top = std::max(top, s.degree());
        MPoly neg = -g;
        std::vector<MPoly> gp{MPoly::constant(k, n, k.one())};
        std::vector<MPoly> hp{MPoly::constant(k, n, k.one())};
        for (int e = 1; e <= top; ++e) {
            gp.push_back(gp.back() * neg);
            hp.push_back(hp.back() * h);
        }
        MPoly num = MPoly::variable(k, n, i - 1) * hp[(size_t)top];
        for (const auto& [j, s] : srow) {
            MPoly xj = MPoly::variable(k, n, j - 1);
            for (int l = 0; l <= s.degree(); ++l) {
                Fq c = s.coeff((size_t)l);
                if (c.is_zero()) continue;
                num = num + xj * gp[(size_t)l] * hp[(size_t)(top - l)] * c;
            }
        }
        uint32_t ex = (uint32_t)top;
        strip_h(num, ex, h);
        return std::pair<MPoly, uint32_t>{num, ex};
    };

    for (uint32_t i = 1; i < n; ++i) {
        std::map<uint32_t, UPoly> srow;
        for (uint32_t j = 1; j < i; ++j) {
            auto it = digits.find({i, j});
            if (it != digits.end()) srow[j] = it->second;
        }
        auto [num, ex] = eval_digit_row(i, srow);
        if (!verify_invariant(rep, num, h, ex))
            throw InvariantsError("slice generator " + std::to_string(i) +
                                  " is not invariant");
        data.f_numerators.push_back(std::move(num));
        data.f_hexp.push_back(ex);
    }

    // v_n-part: digit rows plus the s-parts of the certificate rows.
    std::map<uint32_t, UPoly> lastrow;
    for (uint32_t j = 1; j < n; ++j) {
        auto it = digits.find({n, j});
        if (it != digits.end()) lastrow[j] = it->second;
    }
    for (const NormalFormEntry& row : cert->rows)
        if (!row.s.is_zero()) lastrow[row.j] = row.s;
    auto [fnum, fex] = eval_digit_row(n, lastrow);

    ECtx cx{k, n, h, g, data.b};
    EPoly fpart;
    fpart.e = fex;
    fpart.num = {fnum};
    ep_strip(fpart, cx);

    // Orbit r_kappa = f_n-part + sum_j d_j(s + kappa) x_j; the constant layer
    // carries d_j(kappa), the s^{p^w} layers the skew coefficients of d_j.
    std::vector<EPoly> orbit;
    for (const Fq& kappa : data.kernel) {
        EPoly u;
        u.e = 0;
        u.num.assign(1, MPoly(k, n));
        for (const NormalFormEntry& row : cert->rows) {
            if (row.d.is_zero()) continue;
            AdditivePoly da = to_additive(row.d);
            MPoly xj = MPoly::variable(k, n, row.j - 1);
            u.num[0] = u.num[0] + xj * da.eval(kappa);
            for (int w = 0; w <= da.deg_f(); ++w) {
                Fq dw = da.coeff((size_t)w);
                if (dw.is_zero()) continue;
                size_t idx = (size_t)p_to(p, (uint32_t)w);
                if (u.num.size() <= idx) u.num.resize(idx + 1, MPoly(k, n));
                u.num[idx] = u.num[idx] + xj * dw;
            }
        }
        orbit.push_back(ep_add(fpart, u, cx));
    }

    // Elementary symmetric functions, kept unreduced for the H-check.
    std::vector<EPoly> E((size_t)full + 1, ep_zero(cx));
    E[0].num = {MPoly::constant(k, n, k.one())};
    for (const EPoly& r : orbit)
        for (size_t j = E.size() - 1; j >= 1; --j)
            E[j] = ep_add(E[j], ep_mul(E[j - 1], r, cx), cx);

    for (size_t j = 1; j < E.size(); ++j) {
        for (const Fq& kappa : data.kernel)
            if (!ep_eq(ep_shift_s(E[j], kappa, cx), E[j]))
                throw InvariantsError("symmetric function " + std::to_string(j) +
                                      " is not H-invariant");
        ep_reduce(E[j], cx);
        if (E[j].num.size() > 1)
            throw InvariantsError("symmetric function " + std::to_string(j) +
                                  " is not s-free after reduction");
        LocElem e;
        e.num = E[j].num.empty() ? MPoly(k, n) : E[j].num[0];
        e.e = E[j].num.empty() ? 0 : E[j].e;
        if (!verify_invariant(rep, e.num, h, e.e))
            throw InvariantsError("symmetric function " + std::to_string(j) +
                                  " is not invariant");
        data.sym.push_back(std::move(e));
    }

    // Defining polynomial h b(s) + g with cleared denominators.
    data.defining.assign((size_t)full + 1, MPoly(k, n));
    data.defining[0] = g;
    for (int w = 0; w <= data.b.deg_f(); ++w) {
        Fq bw = data.b.coeff((size_t)w);
        if (!bw.is_zero())
            data.defining[(size_t)p_to(p, (uint32_t)w)] = h * bw;
    }

    std::vector<MPoly> gens = data.f_numerators;
    for (const LocElem& e : data.sym) gens.push_back(e.num);
    data.completeness = measure_membership(rep, gens, h, degree_bound);
    return data;
}

}  // namespace gainv
