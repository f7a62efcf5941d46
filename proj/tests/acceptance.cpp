// Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.  Time limits are pinned
// where the criterion carries one (1: 10 s, 5: 60 s, 7: 300 s) and the
// measured runtime is printed alongside the verdict.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gainv/invariants.hpp"
#include "gainv/io.hpp"

using namespace gainv;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

std::string fixture_path(const std::string& name) {
    return std::string(GAINV_FIXTURE_DIR) + "/" + name + ".json";
}

Representation fixture(const std::string& name) {
    return load_rep_file(fixture_path(name));
}

MPoly var(const Representation& rep, uint32_t i) {  // 1-based
    return MPoly::variable(rep.k, rep.n, i - 1);
}

AdditivePoly rand_add(const Field& k, std::mt19937_64& rng, int maxdeg) {
    int d = (int)(rng() % (uint64_t)(maxdeg + 1));
    std::vector<Fq> c;
    for (int i = 0; i <= d; ++i) c.push_back(k.element_at(rng() % k.size()));
    return AdditivePoly(k, std::move(c));
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string outfile =
        "acceptance_capture_" + std::to_string(counter++) + ".txt";
    std::string cmd =
        std::string(GAINV_CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(outfile.c_str());
    return r;
}

// Criterion 1: Ore-ring law suite.  1000 seeded (f, g) per p in {2, 3, 5},
// skew degree <= 6: exact recomposition for right and left division and the
// five right_gcd_ext identities, all rechecked here by recomposition.
std::string criterion1() {
    auto t0 = Clock::now();
    int samples = 0;
    for (uint32_t p : {2u, 3u, 5u}) {
        Field k = build_field(p, 2);
        std::mt19937_64 rng(1000 + p);
        for (int iter = 0; iter < 1000; ++iter) {
            AdditivePoly f = rand_add(k, rng, 6);
            AdditivePoly g = rand_add(k, rng, 6);
            while (g.is_zero()) g = rand_add(k, rng, 6);
            auto [qr, rr] = right_divide(f, g);
            require(compose(qr, g) + rr == f, "right division recomposition");
            require(rr.deg_f() < g.deg_f(), "right remainder degree");
            auto [ql, rl] = left_divide(f, g);
            require(compose(g, ql) + rl == f, "left division recomposition");
            require(rl.deg_f() < g.deg_f(), "left remainder degree");
            OreGcd gg = right_gcd_ext(f, g);
            require(gg.b.is_monic(), "gcd is monic");
            require(compose(gg.b1, f) + compose(gg.b2, g) == gg.b,
                    "Bezout identity");
            require(compose(gg.d1, gg.b) == f, "first quotient identity");
            require(compose(gg.d2, gg.b) == g, "second quotient identity");
            ++samples;
        }
    }
    double s = seconds_since(t0);
    require(s < 10.0, "runtime " + fmt_secs(s) + " exceeds 10s");
    return std::to_string(samples) +
           " seeded division/gcd samples over F_4, F_9, F_25 exact, " +
           fmt_secs(s) + " < 10s";
}

// Criterion 2: all five shipped fixtures validate, and 20 seeded
// single-coefficient mutations per fixture are each rejected with a witness
// entry whose identity genuinely involves the mutated coefficient: the
// validator scans i ascending then j ascending, and a mutation of q[i,j] can
// only surface at (i, j' <= j) or at (i'' > i, j).
std::string criterion2() {
    const std::vector<std::string> names = {"eg1", "e89", "det4",
                                            "casec_single", "unipotent3"};
    int rejected = 0;
    for (const auto& name : names) {
        Representation rep = fixture(name);
        require(validate(rep).ok, name + " must validate");
        std::mt19937_64 rng(77);
        std::vector<std::pair<uint32_t, uint32_t>> keys;
        for (const auto& [key, q] : rep.q) keys.push_back(key);
        for (int m = 0; m < 20; ++m) {
            auto [i, j] = keys[rng() % keys.size()];
            UPoly q = rep.entry(i, j);
            // even mutations add a constant term; odd ones disturb the t^2
            // coefficient (2 is not a p-power for p in {3, 5}), so every
            // mutation is detectable by construction
            size_t e = (m % 2 == 0) ? 0 : 2;
            size_t len = std::max<size_t>((size_t)q.degree() + 1, e + 1);
            std::vector<Fq> c;
            for (size_t s = 0; s < len; ++s) c.push_back(q.coeff(s));
            Fq bump = rep.k.from_int(1 + (int64_t)(rng() % (rep.k.p() - 1)));
            c[e] = c[e] + bump;
            Representation mut = rep;
            mut.set_entry(i, j, UPoly(rep.k, c));
            ValidationResult v = validate(mut);
            require(!v.ok, name + " mutation " + std::to_string(m) +
                               " at (" + std::to_string(i) + "," +
                               std::to_string(j) + ") was not rejected");
            bool involved = (v.i == i && v.j <= j) || (v.j == j && v.i > i);
            require(involved, name + " mutation at (" + std::to_string(i) +
                                  "," + std::to_string(j) +
                                  ") reported unrelated witness (" +
                                  std::to_string(v.i) + "," +
                                  std::to_string(v.j) + ")");
            ++rejected;
        }
    }
    return "5 fixtures validate; " + std::to_string(rejected) +
           " seeded single-coefficient mutations all rejected with an "
           "involved (i,j) witness";
}

// Criterion 3: the 3-dimensional p = 3 example with q31 = c2, q32 = c1.
std::string criterion3() {
    Representation eg1 = fixture("eg1");
    ClassificationReport rpt = classify(eg1, 3);
    require(rpt.label == CaseLabel::A, "classify(eg1) is not Case A");
    require(find_pairs_bounded(eg1, 3).empty(),
            "find_pairs_bounded(eg1, 3) is not empty");
    std::vector<MPoly> basis = invariant_space_oracle(eg1, 4);
    require(basis.size() == 15, "degree-4 invariant space has dimension " +
                                    std::to_string(basis.size()) + ", not 15");
    for (const MPoly& f : basis)
        require(!f.uses_var(2), "oracle invariant uses x3: " + f.str());
    return "classify = A, no pairs to degree 3, degree-4 invariants = the 15 "
           "monomial span of k[x1,x2]";
}

// Criterion 4: the 5-dimensional p = 3 example with fundamental b = t^3 - t.
std::string criterion4() {
    Representation e89 = fixture("e89");
    require(validate(e89).ok, "e89 must validate");
    AdditivePoly c1 = AdditivePoly::from_skew_ints(e89.k, {2, 1});  // t^3 - t
    std::vector<Pair> lin = find_linear_pairs(e89);
    bool p31 = false, p42 = false;
    for (const Pair& pr : lin) {
        if (pr.g == var(e89, 3) && pr.h == var(e89, 1) && pr.c == c1) p31 = true;
        if (pr.g == var(e89, 4) && pr.h == var(e89, 2) && pr.c == c1) p42 = true;
    }
    require(p31, "linear pair (x3, x1, t^3 - t) not found");
    require(p42, "linear pair (x4, x2, t^3 - t) not found");
    Fundamental fund = fundamental_generator(e89, lin);
    require(fund.b.is_monic(), "fundamental generator is not monic");
    require(fund.b == c1, "fundamental generator is not t^3 - t");
    require(!kernel_acts_trivially(e89, c1), "kernel action reported trivial");
    auto w = kernel_nontrivial_witness(e89, c1);
    require(w.has_value() && w->first == 5 && w->second == 1,
            "kernel witness is not (5,1)");
    ClassificationReport rpt = classify(e89, 1);
    require(rpt.label == CaseLabel::B, "classify(e89) is not Case B");
    require(rpt.certificate.has_value(), "Case B certificate missing");
    require(rpt.certificate->d_span_dim == 2,
            "d-span dimension is " +
                std::to_string(rpt.certificate->d_span_dim) + ", not 2");
    return "pairs (x3,x1) and (x4,x2) with c1 = t^3 - t, monic fundamental "
           "c1, kernel witness (5,1), Case B with d-span dimension 2";
}

// Criterion 5: localized slice ring for det4 directly and for casec_single
// through the kernel reduction s = t^3; generators verified invariant
// identically in t against the original action, then every oracle invariant
// of degree <= 3 passes localized membership with e-bound 3.
std::string criterion5() {
    auto t0 = Clock::now();

    Representation det4 = fixture("det4");
    Pair pd;
    pd.g = var(det4, 3);
    pd.h = var(det4, 1);
    pd.c = AdditivePoly::from_skew_ints(det4.k, {1});
    pd.kind = PairKind::Principle;
    LocalizedInvariantRing ring = vde_generators(det4, pd);
    std::vector<MPoly> gens;
    for (size_t i = 0; i < ring.numerators.size(); ++i) {
        if (ring.numerators[i].is_zero()) continue;
        require(verify_invariant(det4, ring.numerators[i], ring.h, ring.hexp[i]),
                "det4 slice generator not invariant: " +
                    ring.numerators[i].str());
        gens.push_back(ring.numerators[i]);
    }
    MPoly det = var(det4, 1) * var(det4, 4) +
                var(det4, 2) * var(det4, 3) * det4.k.from_int(4);
    auto has = [](const std::vector<MPoly>& v, const MPoly& f) {
        for (const MPoly& g : v)
            if (g == f) return true;
        return false;
    };
    require(has(gens, var(det4, 1)), "det4 generators missing x1");
    require(has(gens, var(det4, 2)), "det4 generators missing x2");
    require(has(gens, det), "det4 generators missing x1*x4 - x2*x3");
    int checked = 0;
    for (const MPoly& f : invariant_space_oracle(det4, 3)) {
        SubalgebraResult r = subalgebra_member_localized(f, gens, ring.h, 3);
        require(r.member, "det4 oracle invariant outside the localized ring: " +
                              f.str());
        ++checked;
    }

    Representation cs = fixture("casec_single");
    ReducedAction red =
        reduce_by_kernel(cs, AdditivePoly::from_skew_ints(cs.k, {0, 1}));
    Pair pc;
    pc.g = var(cs, 3);
    pc.h = var(cs, 1);
    pc.c = AdditivePoly::from_skew_ints(cs.k, {1});
    pc.kind = PairKind::Principle;
    LocalizedInvariantRing ring2 = vde_generators(red.rep, pc);
    std::vector<MPoly> gens2;
    for (size_t i = 0; i < ring2.numerators.size(); ++i) {
        if (ring2.numerators[i].is_zero()) continue;
        require(verify_invariant(cs, ring2.numerators[i], ring2.h,
                                 ring2.hexp[i]),
                "casec_single slice generator not invariant under the "
                "original action: " +
                    ring2.numerators[i].str());
        gens2.push_back(ring2.numerators[i]);
    }
    for (const MPoly& f : invariant_space_oracle(cs, 3)) {
        SubalgebraResult r = subalgebra_member_localized(f, gens2, ring2.h, 3);
        require(r.member,
                "casec_single oracle invariant outside the localized ring: " +
                    f.str());
        ++checked;
    }

    double s = seconds_since(t0);
    require(s < 60.0, "runtime " + fmt_secs(s) + " exceeds 60s");
    return "slice generators invariant identically in t, " +
           std::to_string(checked) +
           " oracle invariants of degree <= 3 pass localized membership "
           "(e-bound 3), generators contain x1, x2, x1*x4 - x2*x3, " +
           fmt_secs(s) + " < 60s";
}

// Brute-force orbit decision over the quadratic extension: same orbit iff
// some group element maps a to b; the invariant vector must agree exactly
// with that relation on sampled pairs.
int separation_counterexamples(const Representation& rep,
                               const GraphSepResult& sep, uint64_t seed,
                               int npairs) {
    Field ext = build_field(rep.k.p(), rep.k.m() * 2);
    Representation repE = embed(rep, ext);
    std::vector<MPoly> invE, uE;
    for (const MPoly& f : sep.invariants) invE.push_back(embed(f, ext));
    for (const MPoly& f : sep.u_description) uE.push_back(embed(f, ext));
    std::vector<TPoly> rows;
    for (uint32_t i = 1; i <= rep.n; ++i) rows.push_back(coact_var(repE, i));

    auto act = [&](const std::vector<Fq>& a, const Fq& t0) {
        std::vector<Fq> b;
        b.reserve(rep.n);
        for (const TPoly& row : rows) {
            Fq v = ext.zero();
            for (const auto& [e, c] : row.layers()) v = v + c.eval(a) * t0.pow(e);
            b.push_back(v);
        }
        return b;
    };
    auto same_orbit = [&](const std::vector<Fq>& a, const std::vector<Fq>& b) {
        for (uint64_t i = 0; i < ext.size(); ++i)
            if (act(a, ext.element_at(i)) == b) return true;
        return false;
    };
    auto invariant_vector = [&](const std::vector<Fq>& a) {
        std::vector<Fq> v;
        for (const MPoly& f : invE) v.push_back(f.eval(a));
        return v;
    };

    std::mt19937_64 rng(seed);
    auto draw = [&]() {
        for (;;) {
            std::vector<Fq> a;
            for (uint32_t i = 0; i < rep.n; ++i)
                a.push_back(ext.element_at(rng() % ext.size()));
            bool in_u = true;
            for (const MPoly& u : uE)
                if (u.eval(a).is_zero()) in_u = false;
            if (in_u) return a;
        }
    };

    int bad = 0;
    for (int it = 0; it < npairs; ++it) {
        std::vector<Fq> a = draw();
        std::vector<Fq> b;
        if (it % 2 == 0)
            b = act(a, ext.element_at(rng() % ext.size()));
        else
            b = draw();
        if (same_orbit(a, b) != (invariant_vector(a) == invariant_vector(b)))
            ++bad;
    }
    return bad;
}

// Criterion 6: graph separators on the 2-dimensional fixture and det4; every
// returned coefficient is verified invariant (raw coefficients that fail the
// check are rejected and reported, never emitted), and 100 seeded pairs over
// F_{p^2} with brute-force orbit decision show zero separation
// counterexamples on each fixture.
std::string criterion6() {
    int verified = 0, reported = 0;
    for (const char* name : {"dim2", "det4"}) {
        Representation rep = fixture(name);
        GraphSepResult sep = graph_separators(rep);
        require(!sep.invariants.empty(),
                std::string(name) + " returned no separators");
        for (const MPoly& f : sep.invariants) {
            require(verify_invariant(rep, f),
                    std::string(name) + " separator not invariant: " + f.str());
            ++verified;
        }
        for (const MPoly& f : sep.rejected) {
            require(!verify_invariant(rep, f),
                    std::string(name) +
                        " rejected coefficient is actually invariant: " +
                        f.str());
            ++reported;
        }
        int bad = separation_counterexamples(rep, sep, 2026, 100);
        require(bad == 0, std::string(name) + " sampling found " +
                              std::to_string(bad) + " counterexample(s)");
    }
    return std::to_string(verified) +
           " returned coefficients verified invariant (" +
           std::to_string(reported) +
           " non-invariant raw coefficients rejected and reported), 0 "
           "counterexamples in 2 x 100 seeded orbit-decision pairs over "
           "F_{p^2}";
}

// Criterion 7: case-(b) local invariants on e89 with the pair (x3, x1).
std::string criterion7() {
    auto t0 = Clock::now();
    Representation e89 = fixture("e89");
    Pair p;
    p.g = var(e89, 3);
    p.h = var(e89, 1);
    p.c = AdditivePoly::from_skew_ints(e89.k, {2, 1});  // t^3 - t
    p.kind = PairKind::General;
    CasebData cd = caseb_local_invariants(e89, p, 2);

    require(cd.h == var(e89, 1), "localization is not at x1");
    require(cd.sym.size() == 3, "expected e_1, e_2, e_3");
    require(cd.sym[0].num.is_zero(), "e_1 is not zero");
    require(!cd.sym[1].num.is_zero(), "e_2 is zero");
    require(!cd.sym[2].num.is_zero(), "e_3 is zero");
    for (size_t j = 1; j < 3; ++j) {
        // numerators live in k[x1..x5]: s-free by construction
        require(cd.sym[j].num.nvars() == e89.n, "e_j is not s-free");
        require(verify_invariant(e89, cd.sym[j].num, cd.h, cd.sym[j].e),
                "e_" + std::to_string(j + 1) + " fails the invariance check");
    }

    // independent membership sweep against {x1, x2, f-parts, e2, e3}
    std::vector<MPoly> gens;
    for (size_t i = 0; i < cd.f_numerators.size(); ++i)
        if (!cd.f_numerators[i].is_zero()) gens.push_back(cd.f_numerators[i]);
    gens.push_back(cd.sym[1].num);
    gens.push_back(cd.sym[2].num);
    int members = 0, swept = 0;
    for (const MPoly& f : invariant_space_oracle(e89, 2)) {
        SubalgebraResult r = subalgebra_member_localized(f, gens, cd.h, 9);
        if (r.member) ++members;
        ++swept;
    }
    // gaps would be reported here as a count, not raised as an error; the
    // criterion requires there to be none at degree <= 2
    require(members == swept, "completeness gap: " + std::to_string(members) +
                                  "/" + std::to_string(swept) +
                                  " oracle invariants are members");
    require(cd.completeness.size() == 2, "expected verdicts for degrees 1, 2");
    for (const MembershipVerdict& v : cd.completeness)
        require(v.members == v.checked,
                "internal verdict reports a gap at degree " +
                    std::to_string(v.degree));

    double s = seconds_since(t0);
    require(s < 300.0, "runtime " + fmt_secs(s) + " exceeds 300s");
    return "e_1 = 0, e_2 and e_3 nonzero s-free invariants, " +
           std::to_string(swept) +
           "/" + std::to_string(swept) +
           " degree-<=2 oracle invariants pass localized membership at x1 "
           "(gaps would be reported, not raised), " +
           fmt_secs(s) + " < 300s";
}

// Criterion 8: two runs of every CLI command on every fixture (including the
// corrupted one) are byte-identical, with fixed flags chosen so every
// invocation terminates promptly (the budget bound makes the one
// elimination blow-up exit 3 deterministically).
std::string criterion8() {
    const std::vector<std::string> fixtures = {
        "eg1", "e89", "det4", "casec_single", "unipotent3", "dim2",
        "corrupted"};
    const std::vector<std::string> commands = {
        "validate",
        "classify",
        "pairs",
        "invariants --max-degree 2 --oracle-degree 2",
        "separators --budget 20000",
        "oracle --oracle-degree 2",
    };
    int runs = 0;
    for (const auto& cmd : commands) {
        size_t space = cmd.find(' ');
        std::string verb = cmd.substr(0, space);
        std::string flags = space == std::string::npos ? "" : cmd.substr(space);
        for (const auto& name : fixtures) {
            std::string args = verb + " " + fixture_path(name) + flags;
            RunResult a = run_cli(args);
            RunResult b = run_cli(args);
            require(!a.out.empty(), args + " produced no report");
            require(a.code == b.code,
                    args + " exit codes differ between runs");
            require(a.out == b.out, args + " reports are not byte-identical");
            runs += 2;
        }
    }
    return std::to_string(runs) + " runs (6 commands x 7 fixtures x 2), every "
                                  "repeated report byte-identical";
}

}  // namespace

int main() {
    struct Criterion {
        int num;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> table = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
    };
    bool all_ok = true;
    for (const auto& c : table) {
        try {
            std::string detail = c.run();
            std::cout << "PASS criterion " << c.num << ": " << detail
                      << std::endl;
        } catch (const std::exception& e) {
            all_ok = false;
            std::cout << "FAIL criterion " << c.num << ": " << e.what()
                      << std::endl;
        }
    }
    return all_ok ? 0 : 1;
}
