#include "gainv/rep.hpp"

#include <algorithm>

#include "gainv/additive.hpp"

namespace gainv {

UPoly Representation::entry(uint32_t i, uint32_t j) const {
    auto it = q.find({i, j});
    return it == q.end() ? UPoly(k) : it->second;
}

void Representation::set_entry(uint32_t i, uint32_t j, UPoly v) {
    if (i <= j || i > n || j < 1)
        throw RepError("Representation: entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ") outside the strict lower triangle");
    if (v.is_zero())
        q.erase({i, j});
    else
        q[{i, j}] = std::move(v);
}

MPoly upoly_at_t1_plus_t2(const UPoly& q) {
    const Field& k = q.field();
    MPoly out(k, 2);
    for (int d = 0; d <= q.degree(); ++d) {
        Fq c = q.coeff(d);
        if (c.is_zero()) continue;
        for (int i = 0; i <= d; ++i) {
            uint32_t bc = binom_mod_p((uint64_t)d, (uint64_t)i, k.p());
            if (!bc) continue;
            Exps e{(uint32_t)i, (uint32_t)(d - i)};
            out.set_coeff(e, out.coeff(e) + c * k.from_int(bc));
        }
    }
    return out;
}

namespace {

MPoly upoly_in_var(const UPoly& q, uint32_t var) {  // into k[t1,t2]
    const Field& k = q.field();
    MPoly out(k, 2);
    for (int d = 0; d <= q.degree(); ++d) {
        Fq c = q.coeff(d);
        if (c.is_zero()) continue;
        Exps e{0, 0};
        e[var] = (uint32_t)d;
        out.set_coeff(e, c);
    }
    return out;
}

}  // namespace

ValidationResult validate(const Representation& rep) {
    ValidationResult res;
    for (uint32_t i = 2; i <= rep.n; ++i) {
        for (uint32_t j = 1; j < i; ++j) {
            UPoly qij = rep.entry(i, j);
            if (!qij.constant_term().is_zero()) {
                return {false, i, j, "constant-term",
                        "q(0) = " + qij.constant_term().str()};
            }
            if (j == i - 1 && !qij.is_zero()) {
                try {
                    to_additive(qij);
                } catch (const NotAdditiveError&) {
                    return {false, i, j, "not-additive", qij.str()};
                }
            }
            MPoly lhs = upoly_at_t1_plus_t2(qij) - upoly_in_var(qij, 0) -
                        upoly_in_var(qij, 1);
            MPoly rhs(rep.k, 2);
            for (uint32_t s = j + 1; s < i; ++s) {
                UPoly qis = rep.entry(i, s);
                UPoly qsj = rep.entry(s, j);
                if (qis.is_zero() || qsj.is_zero()) continue;
                rhs = rhs + upoly_in_var(qis, 0) * upoly_in_var(qsj, 1);
            }
            MPoly residual = lhs - rhs;
            if (!residual.is_zero()) {
                return {false, i, j, "cocycle", residual.str({"t1", "t2"})};
            }
        }
    }
    return res;
}

TPoly coact_var(const Representation& rep, uint32_t i) {
    if (i < 1 || i > rep.n) throw RepError("coact_var: index out of range");
    TPoly out(rep.k, rep.n);
    out.set_coeff(0, MPoly::variable(rep.k, rep.n, i - 1));
    for (uint32_t j = 1; j < i; ++j) {
        UPoly qij = rep.entry(i, j);
        for (int d = 1; d <= qij.degree(); ++d) {
            Fq c = qij.coeff(d);
            if (c.is_zero()) continue;
            MPoly layer = out.coeff((uint32_t)d) +
                          MPoly::variable(rep.k, rep.n, j - 1) * c;
            out.set_coeff((uint32_t)d, layer);
        }
    }
    return out;
}

TPoly coact(const Representation& rep, const MPoly& f) {
    if (f.nvars() != rep.n) throw RepError("coact: arity mismatch");
    TPoly out(rep.k, rep.n);
    std::vector<TPoly> images(rep.n);
    std::vector<bool> have(rep.n, false);
    std::vector<std::vector<TPoly>> pw(rep.n);
    for (const auto& [e, c] : f.terms()) {
        TPoly term = TPoly::from_constant(MPoly::constant(rep.k, rep.n, c));
        for (uint32_t v = 0; v < rep.n; ++v) {
            if (!e[v]) continue;
            if (!have[v]) {
                images[v] = coact_var(rep, v + 1);
                pw[v].push_back(TPoly::from_constant(
                    MPoly::constant(rep.k, rep.n, rep.k.one())));
                have[v] = true;
            }
            while (pw[v].size() <= e[v]) pw[v].push_back(pw[v].back() * images[v]);
            term = term * pw[v][e[v]];
        }
        out = out + term;
    }
    return out;
}

TPoly delta(const Representation& rep, const MPoly& f) {
    TPoly d = coact(rep, f);
    d.set_coeff(0, d.coeff(0) - f);
    return d;
}

std::vector<Exps> monomials_up_to(uint32_t nvars, uint32_t d) {
    std::vector<Exps> all;
    Exps cur(nvars, 0);
    // enumerate everything of total degree <= d, then sort by graded lex
    auto rec = [&](auto&& self, uint32_t var, uint32_t left) -> void {
        if (var == nvars) {
            all.push_back(cur);
            return;
        }
        for (uint32_t e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, d);
    MonomialOrder ord = MonomialOrder::graded_lex(nvars);
    std::sort(all.begin(), all.end(),
              [&](const Exps& a, const Exps& b) { return ord.cmp(a, b) < 0; });
    return all;
}

namespace {

// matrix Q_e with (Q_e)_{j,i} = coeff of t^e in q_{i,j}; columns act on the
// covector coefficient vector a (so row j of Q_e * a is the x_j coefficient
// of the t^e layer of delta(sum a_i x_i))
std::vector<FqMatrix> layer_matrices(const Representation& rep) {
    int maxd = 0;
    for (const auto& [key, q] : rep.q) maxd = std::max(maxd, q.degree());
    std::vector<FqMatrix> out;
    for (int e = 1; e <= maxd; ++e) {
        FqMatrix m(rep.n, FqRow(rep.n, rep.k.zero()));
        bool nz = false;
        for (const auto& [key, q] : rep.q) {
            Fq c = q.coeff((size_t)e);
            if (c.is_zero()) continue;
            m[key.second - 1][key.first - 1] = c;
            nz = true;
        }
        out.push_back(std::move(m));
        (void)nz;
    }
    return out;
}

MPoly covector_to_poly(const Representation& rep, const FqRow& a) {
    MPoly f(rep.k, rep.n);
    for (uint32_t i = 0; i < rep.n; ++i)
        if (!a[i].is_zero()) f = f + MPoly::variable(rep.k, rep.n, i) * a[i];
    return f;
}

}  // namespace

std::vector<MPoly> invariant_covectors(const Representation& rep) {
    auto mats = layer_matrices(rep);
    FqMatrix stacked;
    for (const auto& m : mats)
        for (const auto& row : m) stacked.push_back(row);
    auto ker = kernel_basis(stacked, rep.n, rep.k);
    std::vector<MPoly> out;
    for (const auto& v : ker) out.push_back(covector_to_poly(rep, v));
    return out;
}

SocleSeries socle_series(const Representation& rep) {
    auto mats = layer_matrices(rep);
    const Field& k = rep.k;
    SocleSeries out;
    // S_cur: RREF rows spanning the current socle stage (in covector coords)
    FqMatrix s_cur;
    uint32_t prev_dim = 0;
    while (true) {
        // reduction of an arbitrary vector against s_cur (already RREF)
        FqMatrix s_copy = s_cur;
        std::vector<size_t> pivots;
        if (!s_copy.empty()) pivots = rref(s_copy, k);
        auto reduce = [&](FqRow v) {
            for (size_t r = 0; r < pivots.size(); ++r) {
                Fq f = v[pivots[r]];
                if (f.is_zero()) continue;
                for (uint32_t c = 0; c < rep.n; ++c)
                    v[c] = v[c] - f * s_copy[r][c];
            }
            return v;
        };
        // constraints: reduce(Q_e * a) = 0 for all layers e
        FqMatrix constraints;
        for (const auto& m : mats) {
            // column i of (reduce o Q_e): image of basis vector e_i
            FqMatrix cols(rep.n, FqRow(rep.n, k.zero()));
            for (uint32_t i = 0; i < rep.n; ++i) {
                FqRow img(rep.n, k.zero());
                for (uint32_t j = 0; j < rep.n; ++j) img[j] = m[j][i];
                img = reduce(img);
                for (uint32_t j = 0; j < rep.n; ++j) cols[j][i] = img[j];
            }
            for (auto& row : cols) constraints.push_back(row);
        }
        auto ker = kernel_basis(constraints, rep.n, k);
        uint32_t dim = (uint32_t)ker.size();
        if (dim == prev_dim)
            throw RepError("socle_series: series stalled; action not unipotent");
        // extend adapted basis deterministically
        for (const auto& v : ker) {
            FqRow red = v;
            // reduce against everything adopted so far
            FqMatrix ad = out.adapted;
            auto piv2 = rref(ad, k);
            for (size_t r = 0; r < piv2.size(); ++r) {
                Fq f = red[piv2[r]];
                if (f.is_zero()) continue;
                for (uint32_t c = 0; c < rep.n; ++c)
                    red[c] = red[c] - f * ad[r][c];
            }
            bool zero = std::all_of(red.begin(), red.end(),
                                    [](const Fq& x) { return x.is_zero(); });
            if (!zero) {
                out.adapted.push_back(red);
                out.level_of.push_back((uint32_t)out.dims.size() + 1);
            }
        }
        out.dims.push_back(dim);
        prev_dim = dim;
        s_cur.clear();
        for (const auto& v : ker) s_cur.push_back(v);
        if (dim == rep.n) break;
    }
    return out;
}

std::vector<FqRow> dual_fixed_vectors(const Representation& rep) {
    auto mats = layer_matrices(rep);
    FqMatrix stacked;
    // fixed v: sum_j q_{i,j}[e] v_j = 0 for all i, e
    for (const auto& m : mats) {
        for (uint32_t i = 0; i < rep.n; ++i) {
            FqRow row(rep.n, rep.k.zero());
            for (uint32_t j = 0; j < rep.n; ++j) row[j] = m[j][i];
            stacked.push_back(std::move(row));
        }
    }
    return kernel_basis(stacked, rep.n, rep.k);
}

std::vector<MPoly> invariant_space_oracle(const Representation& rep, uint32_t d) {
    const Field& k = rep.k;
    auto monos = monomials_up_to(rep.n, d);
    // collect constraint row keys deterministically: (t-layer, target monomial)
    std::map<std::pair<uint32_t, Exps>, size_t> row_of;
    std::vector<TPoly> deltas;
    deltas.reserve(monos.size());
    for (const auto& e : monos) {
        MPoly m = MPoly::monomial(k, e, k.one());
        TPoly dm = delta(rep, m);
        for (const auto& [te, layer] : dm.layers()) {
            if (te == 0 && layer.is_zero()) continue;
            for (const auto& [xe, c] : layer.terms())
                row_of.emplace(std::make_pair(te, xe), row_of.size());
        }
        deltas.push_back(std::move(dm));
    }
    // re-number rows in key order for canonical layout
    size_t idx = 0;
    for (auto& [key, v] : row_of) v = idx++;
    FqMatrix mat(row_of.size(), FqRow(monos.size(), k.zero()));
    for (size_t c = 0; c < monos.size(); ++c) {
        for (const auto& [te, layer] : deltas[c].layers()) {
            for (const auto& [xe, coeff] : layer.terms())
                mat[row_of.at({te, xe})][c] = coeff;
        }
    }
    auto ker = kernel_basis(mat, monos.size(), k);
    std::vector<MPoly> out;
    for (const auto& v : ker) {
        MPoly f(k, rep.n);
        for (size_t c = 0; c < monos.size(); ++c)
            if (!v[c].is_zero()) f = f + MPoly::monomial(k, monos[c], v[c]);
        out.push_back(std::move(f));
    }
    return out;
}

Representation change_basis(const Representation& rep, const FqMatrix& a) {
    const Field& k = rep.k;
    uint32_t n = rep.n;
    if (a.size() != n) throw RepError("change_basis: matrix size mismatch");
    // invert A by solving A^T? we need covector rewrite: w (x-coords) -> c = w A^{-1}
    // build A^{-1} via RREF on [A | I]
    FqMatrix aug(n, FqRow(2 * n, k.zero()));
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = k.one();
    }
    auto piv = rref(aug, k);
    if (piv.size() != n || piv.back() != n - 1)
        throw RepError("change_basis: matrix is singular");
    FqMatrix ainv(n, FqRow(n, k.zero()));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) ainv[i][j] = aug[i][n + j];

    auto mats = layer_matrices(rep);
    Representation out;
    out.k = k;
    out.n = n;
    for (uint32_t r = 1; r <= n; ++r) {
        // layer e coefficient vector of coact(y_r) in x-coords: w = A[r] * Q_e
        for (size_t e = 0; e < mats.size(); ++e) {
            FqRow w(n, k.zero());
            for (uint32_t j = 0; j < n; ++j) {
                Fq acc = k.zero();
                for (uint32_t i = 0; i < n; ++i)
                    acc = acc + a[r - 1][i] * mats[e][j][i];
                w[j] = acc;
            }
            // rewrite in y-coords: c = w * A^{-1}
            for (uint32_t s = 1; s <= n; ++s) {
                Fq c = k.zero();
                for (uint32_t j = 0; j < n; ++j) c = c + w[j] * ainv[j][s - 1];
                if (c.is_zero()) continue;
                if (s >= r)
                    throw RepError("change_basis: result is not upper-triangular "
                                   "unipotent at (" + std::to_string(r) + "," +
                                   std::to_string(s) + ")");
                UPoly cur = out.entry(r, s);
                std::vector<Fq> cc(cur.coeffs());
                cc.resize(std::max<size_t>(cc.size(), e + 2), k.zero());
                cc[e + 1] = cc[e + 1] + c;
                out.set_entry(r, s, UPoly(k, std::move(cc)));
            }
        }
    }
    return out;
}


Representation embed(const Representation& rep, const Field& target) {
    Representation out;
    out.k = target;
    out.n = rep.n;
    for (const auto& [key, q] : rep.q) out.q[key] = embed(q, target);
    return out;
}
}  // namespace gainv
