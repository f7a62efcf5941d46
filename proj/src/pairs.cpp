#include "gainv/pairs.hpp"

#include <algorithm>
#include <set>

#include "gainv/groebner.hpp"

namespace gainv {

namespace {

std::optional<uint32_t> p_power_log(uint64_t e, uint32_t p) {
    if (e == 0) return std::nullopt;
    uint32_t w = 0;
    while (e % p == 0) {
        e /= p;
        ++w;
    }
    if (e != 1) return std::nullopt;
    return w;
}

uint64_t p_to(uint32_t p, int w) {
    uint64_t r = 1;
    while (w-- > 0) r *= p;
    return r;
}

AdditivePoly identity_map(const Field& k) { return AdditivePoly(k, {k.one()}); }

PairKind kind_for(const Representation& rep, const AdditivePoly& c) {
    if (c == identity_map(rep.k)) return PairKind::Principle;
    if (kernel_acts_trivially(rep, c)) return PairKind::QuasiPrinciple;
    return PairKind::General;
}

// search state for pairs with g supported on a fixed monomial list
struct SearchContext {
    const Representation* rep = nullptr;
    std::vector<Exps> monos;     // degree >= 1 monomials, oracle enumeration order
    std::vector<TPoly> deltas;   // delta of each monomial
    FqMatrix inv_rref;           // rref basis of invariant combinations
    std::vector<size_t> inv_pivots;
    FqMatrix complement;         // enumeration basis of V0 modulo the invariants
};

FqRow reduce_by(FqRow v, const FqMatrix& rows, const std::vector<size_t>& pivots) {
    for (size_t r = 0; r < rows.size(); ++r) {
        Fq f = v[pivots[r]];
        if (f.is_zero()) continue;
        for (size_t c = 0; c < v.size(); ++c) v[c] = v[c] - f * rows[r][c];
    }
    return v;
}

SearchContext make_context(const Representation& rep, uint32_t d, const SearchCaps& caps) {
    SearchContext ctx;
    ctx.rep = &rep;
    for (const Exps& e : monomials_up_to(rep.n, d))
        if (total_degree(e) > 0) ctx.monos.push_back(e);
    if (ctx.monos.size() > caps.monomials)
        throw SearchSpaceTooLarge("pair search: " + std::to_string(ctx.monos.size()) +
                                  " unknown coefficients exceed the cap of " +
                                  std::to_string(caps.monomials));
    const Field& k = rep.k;
    size_t m = ctx.monos.size();
    for (const Exps& e : ctx.monos)
        ctx.deltas.push_back(delta(rep, MPoly::monomial(k, e, k.one())));

    // linear constraints on the unknown coefficients, keyed by (t-exp, monomial)
    std::map<std::pair<uint32_t, Exps>, FqRow> rows;
    for (size_t i = 0; i < m; ++i)
        for (const auto& [e, f] : ctx.deltas[i].layers())
            for (const auto& [xe, cf] : f.terms()) {
                auto [it, fresh] = rows.try_emplace({e, xe}, FqRow(m, k.zero()));
                it->second[i] = it->second[i] + cf;
            }
    FqMatrix non_p_rows, all_rows;
    uint32_t p = k.p();
    for (const auto& [key, row] : rows) {
        all_rows.push_back(row);
        if (!p_power_log(key.first, p)) non_p_rows.push_back(row);
    }
    std::vector<FqRow> v0 = kernel_basis(non_p_rows, m, k);
    std::vector<FqRow> inv = kernel_basis(all_rows, m, k);

    ctx.inv_rref = FqMatrix(inv.begin(), inv.end());
    ctx.inv_pivots = rref(ctx.inv_rref, k);
    std::set<size_t> wpiv(ctx.inv_pivots.begin(), ctx.inv_pivots.end());

    // complement of the invariant space inside V0: rref rows with a new pivot
    FqMatrix stack = ctx.inv_rref;
    for (auto& v : v0) stack.push_back(v);
    std::vector<size_t> allpiv = rref(stack, k);
    for (size_t r = 0; r < allpiv.size(); ++r)
        if (!wpiv.count(allpiv[r])) ctx.complement.push_back(stack[r]);
    return ctx;
}

uint64_t projective_count(uint64_t q, size_t dim, uint64_t cap) {
    uint64_t total = 0, layer = 1;
    for (size_t i = 0; i < dim; ++i) {
        total += layer;
        if (total > cap) return cap + 1;
        if (layer > cap) return cap + 1;
        layer *= q;
    }
    return total;
}

// delta(g) = c(t) h with p-power layers only and all layers parallel
struct RawSplit {
    MPoly h;
    AdditivePoly c;
};

std::optional<RawSplit> split_rank_one(const Representation& rep, const TPoly& dg) {
    if (dg.is_zero()) return std::nullopt;
    const Field& k = rep.k;
    std::map<uint32_t, const MPoly*> rows;  // Frobenius exponent -> layer
    for (const auto& [e, f] : dg.layers()) {
        auto w = p_power_log(e, k.p());
        if (!w) return std::nullopt;
        rows[*w] = &f;
    }
    const MPoly& h0 = *rows.begin()->second;
    const Exps& pivot = rows.begin()->second->terms().begin()->first;
    Fq ph_inv = h0.coeff(pivot).inverse();
    std::vector<Fq> skew(rows.rbegin()->first + 1, k.zero());
    for (const auto& [w, f] : rows) {
        Fq gamma = f->coeff(pivot) * ph_inv;
        if (gamma.is_zero() || !(*f == h0 * gamma)) return std::nullopt;
        skew[w] = gamma;
    }
    return RawSplit{h0, AdditivePoly(k, skew)};
}

// canonical pair from a coefficient vector over ctx.monos, or nullopt when the
// vector does not define a non-trivial pair
std::optional<Pair> build_pair(const SearchContext& ctx, const FqRow& a_in) {
    const Representation& rep = *ctx.rep;
    const Field& k = rep.k;
    FqRow a = reduce_by(a_in, ctx.inv_rref, ctx.inv_pivots);
    bool zero = true;
    for (const Fq& v : a) zero = zero && v.is_zero();
    if (zero) return std::nullopt;

    TPoly dg(k, rep.n);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) dg = dg + ctx.deltas[i] * MPoly::constant(k, rep.n, a[i]);
    auto split = split_rank_one(rep, dg);
    if (!split) return std::nullopt;

    MonomialOrder ord = MonomialOrder::graded_lex(rep.n);
    Fq lam = split->h.lead_coeff(ord);
    MPoly h = split->h.monic(ord);
    AdditivePoly c = split->c * lam;  // delta(g) = (lam c)(t) h
    Fq mu_inv = c.lead().inverse();
    c = c * mu_inv;
    MPoly g(k, rep.n);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) g = g + MPoly::monomial(k, ctx.monos[i], a[i] * mu_inv);

    if (!is_pair(rep, g, h, c)) return std::nullopt;
    return Pair{g, h, c, kind_for(rep, c)};
}

void collect_sorted(std::vector<Pair>& out) {
    auto key = [](const Pair& p) {
        return std::tuple<int, size_t, std::string, std::string, std::string>(
            p.g.degree(), p.g.term_count(), p.g.str(), p.h.str(), p.c.str());
    };
    std::sort(out.begin(), out.end(),
              [&](const Pair& a, const Pair& b) { return key(a) < key(b); });
    out.erase(std::unique(out.begin(), out.end(),
                          [&](const Pair& a, const Pair& b) { return key(a) == key(b); }),
              out.end());
}

// enumerate projective representatives over the complement basis and collect
// every canonical pair
std::vector<Pair> enumerate_pairs(const SearchContext& ctx, const SearchCaps& caps,
                                  const std::vector<MPoly>* gb_filter) {
    const Field& k = ctx.rep->k;
    size_t dim = ctx.complement.size();
    size_t m = ctx.monos.size();
    if (projective_count(k.size(), dim, caps.candidates) > caps.candidates)
        throw SearchSpaceTooLarge("pair search: projective candidate count exceeds the cap of " +
                                  std::to_string(caps.candidates));
    std::vector<Pair> out;
    for (size_t pos = 0; pos < dim; ++pos) {
        size_t tail = dim - pos - 1;
        std::vector<uint64_t> idx(tail, 0);
        while (true) {
            FqRow a(m, k.zero());
            for (size_t c = 0; c < m; ++c) a[c] = a[c] + ctx.complement[pos][c];
            for (size_t t = 0; t < tail; ++t) {
                Fq lam = k.element_at(idx[t]);
                if (lam.is_zero()) continue;
                for (size_t c = 0; c < m; ++c)
                    a[c] = a[c] + lam * ctx.complement[pos + 1 + t][c];
            }
            if (auto pr = build_pair(ctx, a)) {
                if (gb_filter) {
                    // the returned g must satisfy the prescribed GB system
                    FqRow coeffs(m, k.zero());
                    for (size_t c = 0; c < m; ++c) coeffs[c] = pr->g.coeff(ctx.monos[c]);
                    for (const MPoly& f : *gb_filter)
                        if (!f.eval(coeffs).is_zero())
                            throw PairsError("linear pair search: GB system rejects a verified pair");
                }
                out.push_back(*pr);
            }
            // odometer over the tail
            size_t t = 0;
            for (; t < tail; ++t) {
                if (++idx[t] < k.size()) break;
                idx[t] = 0;
            }
            if (t == tail) break;
        }
    }
    collect_sorted(out);
    return out;
}

}  // namespace

const char* pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::Principle: return "principle";
        case PairKind::QuasiPrinciple: return "quasi-principle";
        default: return "general";
    }
}

const char* case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::A: return "A";
        case CaseLabel::B: return "B";
        case CaseLabel::C: return "C";
        default: return "Inconclusive";
    }
}

bool is_pair(const Representation& rep, const MPoly& g, const MPoly& h,
             const AdditivePoly& c) {
    if (!delta(rep, h).is_zero()) return false;
    TPoly expect(rep.k, rep.n);
    for (int w = 0; w <= c.deg_f(); ++w) {
        Fq cw = c.coeff((size_t)w);
        if (cw.is_zero()) continue;
        expect.set_coeff((uint32_t)p_to(rep.k.p(), w), h * cw);
    }
    return delta(rep, g) == expect;
}

uint32_t variance(const Representation& rep, const MPoly& g) {
    TPoly cg = coact(rep, g);
    std::map<Exps, size_t> cols;
    for (const auto& [e, f] : cg.layers())
        for (const auto& [xe, cf] : f.terms()) cols.try_emplace(xe, cols.size());
    bool with_const = !g.constant_term().is_zero();
    if (with_const) cols.try_emplace(Exps(rep.n, 0), cols.size());
    FqMatrix rows;
    for (const auto& [e, f] : cg.layers()) {
        FqRow r(cols.size(), rep.k.zero());
        for (const auto& [xe, cf] : f.terms()) r[cols.at(xe)] = cf;
        rows.push_back(r);
    }
    if (with_const) {
        FqRow r(cols.size(), rep.k.zero());
        r[cols.at(Exps(rep.n, 0))] = rep.k.one();
        rows.push_back(r);
    }
    return (uint32_t)rank(rows, rep.k);
}

std::vector<Pair> find_pairs_bounded(const Representation& rep, uint32_t d,
                                     const SearchCaps& caps) {
    SearchContext ctx = make_context(rep, d, caps);
    return enumerate_pairs(ctx, caps, nullptr);
}

std::vector<Pair> find_linear_pairs(const Representation& rep) {
    const Field& k = rep.k;
    uint32_t n = rep.n, p = k.p();
    // the prescribed linear-plus-determinantal system over the unknown a_i:
    // rows are the t^e coefficient forms of delta(sum a_i x_i)
    std::map<uint32_t, std::vector<MPoly>> sym_rows;  // t-exp -> row of linear forms
    for (const auto& [key, q] : rep.q) {
        auto [i, j] = key;
        for (int e = 1; e <= q.degree(); ++e) {
            Fq cf = q.coeff((size_t)e);
            if (cf.is_zero()) continue;
            auto [it, fresh] = sym_rows.try_emplace(
                (uint32_t)e, std::vector<MPoly>(n, MPoly::zero(k, n)));
            it->second[j - 1] =
                it->second[j - 1] + MPoly::variable(k, n, i - 1) * cf;
        }
    }
    std::vector<MPoly> gens;
    std::vector<std::vector<MPoly>> ppower_rows;
    for (const auto& [e, row] : sym_rows) {
        if (p_power_log(e, p)) {
            ppower_rows.push_back(row);
        } else {
            for (const MPoly& f : row)
                if (!f.is_zero()) gens.push_back(f);
        }
    }
    for (size_t r1 = 0; r1 < ppower_rows.size(); ++r1)
        for (size_t r2 = r1 + 1; r2 < ppower_rows.size(); ++r2)
            for (uint32_t c1 = 0; c1 < n; ++c1)
                for (uint32_t c2 = c1 + 1; c2 < n; ++c2) {
                    MPoly minor = ppower_rows[r1][c1] * ppower_rows[r2][c2] -
                                  ppower_rows[r1][c2] * ppower_rows[r2][c1];
                    if (!minor.is_zero()) gens.push_back(minor);
                }
    std::vector<MPoly> gb =
        gens.empty() ? gens : buchberger(gens, MonomialOrder::graded_lex(n));

    SearchCaps caps;
    SearchContext ctx = make_context(rep, 1, caps);
    return enumerate_pairs(ctx, caps, &gb);
}

Pair combine(const Representation& rep, const Pair& p1, const Pair& p2) {
    if (p1.h.is_zero() || p1.c.is_zero() || p2.h.is_zero() || p2.c.is_zero())
        throw TrivialInput("combine: inputs must be non-trivial pairs");
    const Field& k = rep.k;
    uint32_t p = k.p();
    OreGcd gcd = right_gcd_ext(p1.c, p2.c);
    uint64_t e1 = gcd.b1.is_zero() ? 0 : p_to(p, gcd.b1.deg_f());
    uint64_t e2 = gcd.b2.is_zero() ? 0 : p_to(p, gcd.b2.deg_f());
    MPoly h1p = p1.h.pow((uint32_t)e1);
    MPoly h2p = p2.h.pow((uint32_t)e2);
    MPoly num(k, rep.n);
    for (int w = 0; w <= gcd.b1.deg_f(); ++w) {
        Fq cw = gcd.b1.coeff((size_t)w);
        if (cw.is_zero()) continue;
        uint64_t pw = p_to(p, w);
        num = num + p1.g.pow((uint32_t)pw) * p1.h.pow((uint32_t)(e1 - pw)) * h2p * cw;
    }
    for (int w = 0; w <= gcd.b2.deg_f(); ++w) {
        Fq cw = gcd.b2.coeff((size_t)w);
        if (cw.is_zero()) continue;
        uint64_t pw = p_to(p, w);
        num = num + p2.g.pow((uint32_t)pw) * p2.h.pow((uint32_t)(e2 - pw)) * h1p * cw;
    }
    // lowest terms: strip whole h1 / h2 factors from the numerator
    while (e1 > 0) {
        auto q = try_divide_exact(num, p1.h);
        if (!q) break;
        num = *q;
        --e1;
    }
    while (e2 > 0) {
        auto q = try_divide_exact(num, p2.h);
        if (!q) break;
        num = *q;
        --e2;
    }
    Pair out{num, p1.h.pow((uint32_t)e1) * p2.h.pow((uint32_t)e2), gcd.b,
             kind_for(rep, gcd.b)};
    if (!is_pair(rep, out.g, out.h, out.c))
        throw PairsError("combine: result failed pair verification");
    return out;
}

Fundamental fundamental_generator(const Representation& rep,
                                  const std::vector<Pair>& pairs) {
    std::vector<Pair> live;
    for (const Pair& p : pairs)
        if (!p.h.is_zero() && !p.c.is_zero()) live.push_back(p);
    if (live.empty()) throw EmptyInput("fundamental_generator: no non-trivial pairs");
    Pair w = live[0];
    if (!w.c.is_monic()) {
        Fq inv = w.c.lead().inverse();
        w.c = w.c * inv;
        w.g = w.g * inv;
    }
    for (size_t i = 1; i < live.size(); ++i) w = combine(rep, w, live[i]);
    return Fundamental{w.c, w};
}

std::optional<std::pair<uint32_t, uint32_t>> kernel_nontrivial_witness(
    const Representation& rep, const AdditivePoly& b) {
    if (b.is_zero()) throw PairsError("kernel test: b must be nonzero");
    UPoly bu = b.to_upoly();
    for (const auto& [key, q] : rep.q) {
        if (q.is_zero()) continue;
        if (!b_adic_membership(q, bu).member) return key;
    }
    return std::nullopt;
}

bool kernel_acts_trivially(const Representation& rep, const AdditivePoly& b) {
    return !kernel_nontrivial_witness(rep, b).has_value();
}

namespace {

// q = s(b(t)) + d(t) with s a constant-digit polynomial in b and d additive;
// greedy split first (d = the p-power monomials of q), linear solve fallback
// preferring b-powers.  The greedy split is what keeps distinct d's distinct:
// reducing d modulo O<b> would collapse separated tails.
std::optional<std::pair<UPoly, UPoly>> decompose_s_plus_d(const UPoly& q, const UPoly& bu) {
    const Field& k = q.field();
    uint32_t p = k.p();
    std::vector<Fq> dc((size_t)q.degree() + 1, k.zero());
    for (int e = 1; e <= q.degree(); ++e)
        if (p_power_log((uint64_t)e, p)) dc[(size_t)e] = q.coeff((size_t)e);
    UPoly d(k, dc);
    BAdicExpansion ex = b_adic_membership(q - d, bu);
    if (ex.member) return {{UPoly(k, ex.digits), d}};

    int kk = q.degree() / bu.degree();
    std::vector<UPoly> cols;
    size_t nb = 0;
    UPoly bp = bu;
    for (int i = 1; i <= kk; ++i, ++nb) {
        cols.push_back(bp);
        bp = bp * bu;
    }
    for (uint64_t e = 1; e <= (uint64_t)q.degree(); e *= p)
        cols.push_back(UPoly(k, {k.one()}).shifted((size_t)e));
    FqMatrix m((size_t)q.degree(), FqRow(cols.size(), k.zero()));
    FqRow target((size_t)q.degree(), k.zero());
    for (int r = 1; r <= q.degree(); ++r) {
        for (size_t c = 0; c < cols.size(); ++c) m[(size_t)r - 1][c] = cols[c].coeff((size_t)r);
        target[(size_t)r - 1] = q.coeff((size_t)r);
    }
    auto sol = solve(m, target, k);
    if (!sol) return std::nullopt;
    std::vector<Fq> sd((size_t)kk + 1, k.zero());
    for (int i = 1; i <= kk; ++i) sd[(size_t)i] = (*sol)[(size_t)i - 1];
    UPoly dd(k);
    size_t c = nb;
    for (uint64_t e = 1; e <= (uint64_t)q.degree(); e *= p, ++c)
        dd = dd + UPoly(k, {(*sol)[c]}).shifted((size_t)e);
    return {{UPoly(k, sd), dd}};
}

}  // namespace

std::optional<CasebCertificate> normal_form_certificate(const Representation& rep,
                                                        const AdditivePoly& b,
                                                        const std::string& basis_name) {
    UPoly bu = b.to_upoly();
    uint32_t n = rep.n;
    std::vector<bool> inv(n + 1, true);  // x_j invariant iff row j empty
    for (const auto& [key, q] : rep.q)
        if (!q.is_zero()) inv[key.first] = false;
    for (const auto& [key, q] : rep.q) {
        if (q.is_zero()) continue;
        bool last_row_invariant_col = key.first == n && inv[key.second];
        if (!last_row_invariant_col && !b_adic_membership(q, bu).member) return std::nullopt;
    }
    CasebCertificate cert;
    cert.basis = basis_name;
    std::vector<UPoly> ds;
    for (uint32_t j = 1; j < n; ++j) {
        if (!inv[j]) continue;
        UPoly q = rep.entry(n, j);
        if (q.is_zero()) continue;
        auto dec = decompose_s_plus_d(q, bu);
        if (!dec) return std::nullopt;
        auto [s, d] = *dec;
        if (!d.is_zero()) {
            auto [quo, rem] = right_divide(to_additive(d), b);
            if (rem.is_zero()) return std::nullopt;  // d in O<b>: not the normal form
            ds.push_back(d);
        }
        cert.rows.push_back(NormalFormEntry{j, s, d});
    }
    if (ds.empty()) return std::nullopt;
    int maxd = 0;
    for (const UPoly& d : ds) maxd = std::max(maxd, d.degree());
    FqMatrix span;
    for (const UPoly& d : ds) {
        FqRow r((size_t)maxd + 1, rep.k.zero());
        for (int e = 0; e <= d.degree(); ++e) r[(size_t)e] = d.coeff((size_t)e);
        span.push_back(r);
    }
    cert.d_span_dim = (uint32_t)rank(span, rep.k);
    if (cert.d_span_dim < 2) return std::nullopt;
    return cert;
}

namespace {

std::string dims_str(const std::vector<uint32_t>& dims) {
    std::string s = "[";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(dims[i]);
    }
    return s + "]";
}

}  // namespace

ClassificationReport classify(const Representation& rep, uint32_t d,
                              const SearchCaps& caps) {
    ClassificationReport rpt;
    rpt.search_bound = d;
    SocleSeries soc = socle_series(rep);
    rpt.socle_dims = soc.dims;

    try {
        rpt.pairs = find_pairs_bounded(rep, d, caps);
    } catch (const SearchSpaceTooLarge& e) {
        rpt.checks.push_back(std::string("bounded search unavailable (") + e.what() +
                             "); linear pairs only");
        rpt.pairs = find_linear_pairs(rep);
    }
    rpt.checks.push_back("pairs found: " + std::to_string(rpt.pairs.size()) +
                         " (degree bound " + std::to_string(d) + ")");

    if (!rpt.pairs.empty()) {
        Fundamental f = fundamental_generator(rep, rpt.pairs);
        rpt.fundamental = f.b;
        rpt.checks.push_back("fundamental generator: " + f.b.str());
        auto bad = kernel_nontrivial_witness(rep, f.b);
        if (!bad) {
            rpt.label = CaseLabel::C;
            rpt.checks.push_back("kernel of the fundamental generator acts trivially");
            rpt.witness = f.witness;
            for (const Pair& p : rpt.pairs)
                if (p.c == f.b) {
                    rpt.witness = p;
                    break;
                }
            rpt.checks.push_back(std::string("witness pair kind: ") +
                                 pair_kind_name(rpt.witness->kind));
        } else {
            rpt.label = CaseLabel::B;
            rpt.checks.push_back("kernel action is nontrivial: q[" +
                                 std::to_string(bad->first) + "," +
                                 std::to_string(bad->second) + "] is not in k[b]");
            auto cert = normal_form_certificate(rep, f.b, "given");
            if (!cert) {
                Representation moved = change_basis(rep, soc.adapted);
                cert = normal_form_certificate(moved, f.b, "socle-adapted");
            }
            if (cert) {
                rpt.checks.push_back("normal form certified in the " + cert->basis +
                                     " basis: d-span dimension " +
                                     std::to_string(cert->d_span_dim));
                rpt.certificate = std::move(cert);
            } else {
                rpt.checks.push_back(
                    "normal form not certified in the given or socle-adapted basis");
            }
        }
        return rpt;
    }

    rpt.checks.push_back("socle dimensions: " + dims_str(soc.dims));
    bool len2 = soc.dims.size() == 2;
    bool codim1 = len2 && soc.dims[1] - soc.dims[0] == 1;
    rpt.checks.push_back(std::string("socle length 2: ") + (len2 ? "yes" : "no"));
    if (len2)
        rpt.checks.push_back(std::string("dim(soc_2/soc_1) = 1: ") +
                             (codim1 ? "yes" : "no"));
    if (codim1) {
        MPoly g(rep.k, rep.n);
        const FqRow& last = soc.adapted[rep.n - 1];
        for (uint32_t j = 0; j < rep.n; ++j)
            if (!last[j].is_zero())
                g = g + MPoly::variable(rep.k, rep.n, j) * last[j];
        uint32_t var = variance(rep, g);
        rpt.checks.push_back("variance of the adapted last coordinate: " +
                             std::to_string(var) + " (must exceed 2)");
        if (var > 2) {
            rpt.label = CaseLabel::A;
            return rpt;
        }
    }
    rpt.checks.push_back("no certificate established up to degree " + std::to_string(d));
    rpt.label = CaseLabel::Inconclusive;
    return rpt;
}

}  // namespace gainv
