#include "gainv/groebner.hpp"

#include <algorithm>
#include <set>

namespace gainv {

namespace {

// Work meter shared across one Buchberger run: a tick per queue pair and per
// normal-form reduction step, so the budget bounds total effort even when a
// single reduction blows up before many pairs have been processed.
struct StepGuard {
    uint64_t budget = 0;  // 0 = unlimited
    uint64_t used = 0;
    void tick() {
        if (budget && ++used > budget)
            throw GroebnerError("buchberger: step budget exhausted");
    }
};

MPoly normal_form_guarded(const MPoly& f, const std::vector<MPoly>& basis,
                          const MonomialOrder& ord, StepGuard* guard) {
    if (f.is_zero() || basis.empty()) return f;
    const Field& k = f.field();
    MPoly rem(k, f.nvars());
    MPoly work = f;
    while (!work.is_zero()) {
        if (guard) guard->tick();
        const Exps& le = work.lead_exps(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Exps& lg = g.lead_exps(ord);
            if (!divides(lg, le)) continue;
            Fq factor = work.coeff(le) / g.lead_coeff(ord);
            MPoly scaled = g * factor;
            work = work - MPoly::monomial(k, exps_sub(le, lg), k.one()) * scaled;
            reduced = true;
            break;
        }
        if (!reduced) {
            Fq c = work.coeff(le);
            rem.set_coeff(le, c);
            work.set_coeff(le, k.zero());
        }
    }
    return rem;
}

MPoly s_poly(const MPoly& f, const MPoly& g, const MonomialOrder& ord) {
    const Field& k = f.field();
    const Exps& lf = f.lead_exps(ord);
    const Exps& lg = g.lead_exps(ord);
    Exps l = exps_lcm(lf, lg);
    MPoly mf = MPoly::monomial(k, exps_sub(l, lf), f.lead_coeff(ord).inverse());
    MPoly mg = MPoly::monomial(k, exps_sub(l, lg), g.lead_coeff(ord).inverse());
    return mf * f - mg * g;
}

bool coprime_leads(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis,
                  const MonomialOrder& ord) {
    return normal_form_guarded(f, basis, ord, nullptr);
}

std::vector<MPoly> buchberger(std::vector<MPoly> gens, const MonomialOrder& ord,
                              uint64_t pair_budget) {
    std::vector<MPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(ord));
    if (basis.empty()) return basis;
    const Field& k = basis[0].field();

    // queue keyed by (lcm total degree, pair index); pair index enumerates
    // (j, i) creation order so the whole run is reproducible
    struct QEntry {
        uint32_t deg;
        uint64_t idx;
        size_t i, j;
        bool operator<(const QEntry& o) const {
            return deg != o.deg ? deg < o.deg : idx < o.idx;
        }
    };
    std::set<QEntry> queue;
    uint64_t next_idx = 0;
    auto push_pairs_for = [&](size_t jnew) {
        for (size_t i = 0; i < jnew; ++i) {
            Exps l = exps_lcm(basis[i].lead_exps(ord), basis[jnew].lead_exps(ord));
            queue.insert({total_degree(l), next_idx++, i, jnew});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    StepGuard guard{pair_budget, 0};
    while (!queue.empty()) {
        guard.tick();
        QEntry e = *queue.begin();
        queue.erase(queue.begin());
        const MPoly& f = basis[e.i];
        const MPoly& g = basis[e.j];
        if (coprime_leads(f.lead_exps(ord), g.lead_exps(ord))) continue;
        MPoly s = normal_form_guarded(s_poly(f, g, ord), basis, ord, &guard);
        if (s.is_zero()) continue;
        basis.push_back(s.monic(ord));
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop any element whose lead is divisible by another lead
    std::vector<MPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Exps& li = basis[i].lead_exps(ord);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Exps& lj = basis[j].lead_exps(ord);
            if (divides(lj, li) && (lj != li || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // interreduce tails
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly r = normal_form_guarded(minimal[i], others, ord, &guard);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.cmp(a.lead_exps(ord), b.lead_exps(ord)) < 0;
    });
    return reduced;
}

std::vector<MPoly> eliminate(const std::vector<MPoly>& gens,
                             const std::vector<uint32_t>& drop,
                             uint64_t pair_budget) {
    if (gens.empty()) return {};
    uint32_t n = gens[0].nvars();
    MonomialOrder ord = MonomialOrder::elimination(drop, n);
    auto gb = buchberger(gens, ord, pair_budget);
    std::vector<bool> dropped(n, false);
    for (auto v : drop) dropped[v] = true;
    std::vector<MPoly> out;
    for (const auto& g : gb) {
        bool clean = true;
        for (uint32_t v = 0; v < n && clean; ++v)
            if (dropped[v] && g.uses_var(v)) clean = false;
        if (clean) out.push_back(g);
    }
    return out;
}

bool ideal_member(const MPoly& f, const std::vector<MPoly>& gb,
                  const MonomialOrder& ord) {
    return normal_form(f, gb, ord).is_zero();
}

SubalgebraResult subalgebra_member_localized(const MPoly& f,
                                             const std::vector<MPoly>& gens,
                                             const MPoly& h, uint32_t e_bound) {
    if (f.is_zero()) return {true, 0};
    const Field& k = f.field();
    uint32_t n = f.nvars();
    std::vector<MPoly> clean;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_constant())
            throw GroebnerError("subalgebra_member_localized: constant generator");
        clean.push_back(g);
    }
    uint32_t total = n + (uint32_t)clean.size();
    // identity relabeling of the x-block into the larger ring
    std::vector<uint32_t> id(n);
    for (uint32_t i = 0; i < n; ++i) id[i] = i;
    std::vector<MPoly> ideal;
    for (size_t s = 0; s < clean.size(); ++s) {
        MPoly tag = MPoly::variable(k, total, n + (uint32_t)s);
        ideal.push_back(tag - clean[s].relabel(total, id));
    }
    std::vector<uint32_t> xblock(n);
    for (uint32_t i = 0; i < n; ++i) xblock[i] = i;
    MonomialOrder ord = MonomialOrder::elimination(xblock, total);
    auto gb = buchberger(ideal, ord);
    MPoly hf = f.relabel(total, id);
    MPoly hl = h.relabel(total, id);
    for (uint32_t e = 0; e <= e_bound; ++e) {
        MPoly nf = normal_form(hf, gb, ord);
        bool tags_only = true;
        for (uint32_t v = 0; v < n && tags_only; ++v)
            if (nf.uses_var(v)) tags_only = false;
        if (tags_only) return {true, e};
        if (e < e_bound) hf = hf * hl;
    }
    return {false, 0};
}

}  // namespace gainv
