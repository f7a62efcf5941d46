// Command-line front end: load a representation file, run one of
// validate / classify / pairs / invariants / separators / oracle, and emit a
// deterministic report (text by default, JSON with --json).
//
// Exit codes: 0 success, 2 validation or precondition failure, 3 step-budget
// exhaustion, 4 schema error.
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gainv/invariants.hpp"
#include "gainv/io.hpp"

using namespace gainv;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string command;
    std::string input;
    uint32_t max_degree = 1;
    uint32_t oracle_degree = 2;
    uint64_t seed = 0;
    uint32_t ext = 0;
    bool json = false;
    uint64_t budget = 200000;
};

struct Report {
    ordered_json j;

    explicit Report(const Options& opt) {
        j["command"] = opt.command;
        j["input"] = opt.input;
        j["case"] = nullptr;
        j["fundamental"] = nullptr;
        j["pairs"] = ordered_json::array();
        j["generators"] = ordered_json::array();
        j["checks"] = ordered_json::array();
    }

    void check(const std::string& name, bool ok, const std::string& detail) {
        j["checks"].push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    }
    void pair(const Pair& p) {
        j["pairs"].push_back({{"g", p.g.str()},
                              {"h", p.h.str()},
                              {"c", p.c.str()},
                              {"kind", pair_kind_name(p.kind)}});
    }
    void generator(const std::string& s) { j["generators"].push_back(s); }

    void print(bool as_json) const {
        if (as_json) {
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "command: " << j["command"].get<std::string>() << "\n";
        std::cout << "input: " << j["input"].get<std::string>() << "\n";
        if (!j["case"].is_null())
            std::cout << "case: " << j["case"].get<std::string>() << "\n";
        if (!j["fundamental"].is_null())
            std::cout << "fundamental: " << j["fundamental"].get<std::string>()
                      << "\n";
        for (const auto& p : j["pairs"])
            std::cout << "pair: g = " << p["g"].get<std::string>()
                      << " | h = " << p["h"].get<std::string>()
                      << " | c = " << p["c"].get<std::string>() << " ["
                      << p["kind"].get<std::string>() << "]\n";
        for (const auto& g : j["generators"])
            std::cout << "generator: " << g.get<std::string>() << "\n";
        for (const auto& c : j["checks"])
            std::cout << "check " << (c["ok"].get<bool>() ? "ok" : "FAIL") << " "
                      << c["name"].get<std::string>() << ": "
                      << c["detail"].get<std::string>() << "\n";
    }
};

std::string loc_str(const MPoly& num, const MPoly& h, uint32_t e) {
    if (e == 0) return num.str();
    std::string s = "(" + num.str() + ") / (" + h.str() + ")";
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

std::string poly_list(const std::vector<MPoly>& fs) {
    std::string s;
    for (size_t i = 0; i < fs.size(); ++i)
        s += (i ? ", " : "") + fs[i].str();
    return s.empty() ? "(none)" : s;
}

std::string validation_diagnostic(const ValidationResult& v) {
    std::string name = v.reason == "cocycle"        ? "CocycleViolation"
                       : v.reason == "not-additive" ? "NotAdditive"
                                                    : "ConstantTermViolation";
    std::string d = name + " at (" + std::to_string(v.i) + "," +
                    std::to_string(v.j) + ")";
    if (!v.residual.empty()) d += ": " + v.residual;
    return d;
}

// Brute-force orbit sampling over an extension: same orbit must give equal
// invariant vectors, distinct sampled orbits distinct vectors.
int separation_counterexamples(const Representation& rep, const GraphSepResult& sep,
                               uint32_t ext_deg, uint64_t seed, int npairs) {
    Field ext = build_field(rep.k.p(), rep.k.m() * ext_deg);
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
    auto vec = [&](const std::vector<Fq>& a) {
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
        std::vector<Fq> b =
            it % 2 == 0 ? act(a, ext.element_at(rng() % ext.size())) : draw();
        if (same_orbit(a, b) != (vec(a) == vec(b))) ++bad;
    }
    return bad;
}

void run_classify(const Options& opt, const Representation& rep, Report& out) {
    SearchCaps caps;
    caps.candidates = opt.budget;
    ClassificationReport rpt = classify(rep, opt.max_degree, caps);
    out.j["case"] = case_label_name(rpt.label);
    if (rpt.fundamental) out.j["fundamental"] = rpt.fundamental->str();
    for (const Pair& p : rpt.pairs) out.pair(p);
    for (const std::string& c : rpt.checks) out.check("classification", true, c);
    if (rpt.certificate) {
        std::string rows;
        for (const NormalFormEntry& e : rpt.certificate->rows)
            rows += " (j=" + std::to_string(e.j) + ", s=" + e.s.str("s") +
                    ", d=" + e.d.str() + ")";
        out.check("normal-form",
                  true,
                  "basis=" + rpt.certificate->basis +
                      " d-span=" + std::to_string(rpt.certificate->d_span_dim) +
                      rows);
    }
    std::string socle;
    for (uint32_t d : rpt.socle_dims) socle += (socle.empty() ? "" : " < ") + std::to_string(d);
    out.check("socle-dimensions", true, socle);
}

void run_pairs(const Options& opt, const Representation& rep, Report& out) {
    SearchCaps caps;
    caps.candidates = opt.budget;
    std::vector<Pair> ps = find_pairs_bounded(rep, opt.max_degree, caps);
    for (const Pair& p : ps) out.pair(p);
    out.check("pair-search", true,
              std::to_string(ps.size()) + " pair(s) with deg g <= " +
                  std::to_string(opt.max_degree));
    if (!ps.empty()) {
        Fundamental f = fundamental_generator(rep, ps);
        out.j["fundamental"] = f.b.str();
    }
}

void run_invariants(const Options& opt, const Representation& rep, Report& out) {
    SearchCaps caps;
    caps.candidates = opt.budget;
    // classification ladder: the cheapest conclusive search bound wins;
    // --max-degree bounds the certification work below, not this search
    ClassificationReport rpt = classify(rep, 1, caps);
    for (uint32_t d = 2; rpt.label == CaseLabel::Inconclusive && d <= opt.max_degree;
         ++d)
        rpt = classify(rep, d, caps);
    out.j["case"] = case_label_name(rpt.label);
    if (rpt.fundamental) out.j["fundamental"] = rpt.fundamental->str();

    switch (rpt.label) {
        case CaseLabel::C: {
            ReducedAction red = reduce_by_kernel(rep, *rpt.fundamental);
            Pair p;
            p.g = rpt.witness->g;
            p.h = rpt.witness->h;
            p.c = AdditivePoly::from_skew_ints(red.rep.k, {1});
            p.kind = PairKind::Principle;
            out.pair(*rpt.witness);
            LocalizedInvariantRing ring =
                vde_generators(red.rep, p, opt.max_degree);
            for (size_t i = 0; i < ring.numerators.size(); ++i)
                if (!ring.numerators[i].is_zero())
                    out.generator(loc_str(ring.numerators[i], ring.h, ring.hexp[i]));
            out.check("generators-invariant", true,
                      "all slice generators pass the delta check");
            for (const MembershipVerdict& v : ring.verdicts)
                out.check("membership degree " + std::to_string(v.degree),
                          v.members == v.checked,
                          std::to_string(v.members) + "/" +
                              std::to_string(v.checked) +
                              " oracle invariants in the localized ring");
            break;
        }
        case CaseLabel::B: {
            Fundamental f = fundamental_generator(rep, rpt.pairs);
            out.pair(f.witness);
            CasebData cd = caseb_local_invariants(rep, f.witness, opt.max_degree);
            out.check("kernel", true,
                      std::to_string(cd.kernel.size()) +
                          " kernel point(s) over F_" +
                          std::to_string(cd.ext.p()) + "^" +
                          std::to_string(cd.ext.m()));
            std::string def;
            for (size_t i = 0; i < cd.defining.size(); ++i)
                if (!cd.defining[i].is_zero())
                    def += (def.empty() ? "" : " + ") + std::string("(") +
                           cd.defining[i].str() + ")*s^" + std::to_string(i);
            out.check("etale-defining-polynomial", true, def);
            for (size_t i = 0; i < cd.f_numerators.size(); ++i)
                if (!cd.f_numerators[i].is_zero())
                    out.generator(loc_str(cd.f_numerators[i], cd.h, cd.f_hexp[i]));
            for (size_t i = 0; i < cd.sym.size(); ++i)
                if (!cd.sym[i].num.is_zero())
                    out.generator("e" + std::to_string(i + 1) + " = " +
                                  loc_str(cd.sym[i].num, cd.h, cd.sym[i].e));
            for (const MembershipVerdict& v : cd.completeness)
                out.check("completeness degree " + std::to_string(v.degree),
                          v.members == v.checked,
                          std::to_string(v.members) + "/" +
                              std::to_string(v.checked) +
                              " oracle invariants generated (gaps are reported, "
                              "not errors)");
            break;
        }
        case CaseLabel::A:
            out.check("case A", true,
                      "plinth-trivial action: no localized slice presentation; "
                      "use the oracle command for a degree-bounded basis");
            break;
        default:
            out.check("classification", false,
                      "inconclusive at the given search bound; raise --max-degree");
            break;
    }
}

void run_separators(const Options& opt, const Representation& rep, Report& out) {
    GraphSepResult sep = graph_separators(rep, opt.budget);
    out.check("t-degree", true, "d = " + std::to_string(sep.d));
    out.check("u-description", true, poly_list(sep.u_description));
    for (const MPoly& f : sep.invariants) out.generator(f.str());
    out.check("invariance", true,
              "all returned coefficients pass the delta check");
    out.check("rejected", true,
              sep.rejected.empty()
                  ? "no non-invariant coefficients in the reduced basis"
                  : "non-invariant coefficients reported, not returned: " +
                        poly_list(sep.rejected));
    if (opt.ext > 0) {
        int bad = separation_counterexamples(rep, sep, opt.ext, opt.seed, 100);
        out.check("separation-sampling", bad == 0,
                  std::to_string(bad) + " counterexample(s) in 100 seeded pairs over F_" +
                      std::to_string(rep.k.p()) + "^" +
                      std::to_string(rep.k.m() * opt.ext));
    }
}

void run_oracle(const Options& opt, const Representation& rep, Report& out) {
    std::vector<MPoly> basis = invariant_space_oracle(rep, opt.oracle_degree);
    for (const MPoly& f : basis) out.generator(f.str());
    out.check("oracle", true,
              "invariant space of degree <= " + std::to_string(opt.oracle_degree) +
                  " has dimension " + std::to_string(basis.size()));
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"invariant theory of additive-group actions over F_{p^m}"};
    app.add_option("command", opt.command, "one of: validate, classify, pairs, invariants, separators, oracle")
        ->required()
        ->check(CLI::IsMember(
            {"validate", "classify", "pairs", "invariants", "separators", "oracle"}));
    app.add_option("input", opt.input, "representation JSON file")->required();
    app.add_option("--max-degree", opt.max_degree,
                   "degree bound for pair search and membership certification");
    app.add_option("--oracle-degree", opt.oracle_degree,
                   "total degree for the invariant-space oracle");
    app.add_option("--seed", opt.seed, "sampling seed");
    app.add_option("--ext", opt.ext,
                   "extension degree for separation sampling (0 = off)");
    app.add_flag("--json", opt.json, "emit the report as JSON");
    app.add_option("--budget", opt.budget, "step budget for searches and bases");
    CLI11_PARSE(app, argc, argv);

    Report out(opt);

    Representation rep;
    try {
        rep = load_rep_file(opt.input);
    } catch (const SchemaError& e) {
        out.check("schema", false, e.what());
        out.print(opt.json);
        return 4;
    } catch (const std::exception& e) {
        out.check("schema", false, e.what());
        out.print(opt.json);
        return 4;
    }
    out.check("schema", true,
              "n = " + std::to_string(rep.n) + " over F_" +
                  std::to_string(rep.k.p()) + "^" + std::to_string(rep.k.m()));

    ValidationResult v = validate(rep);
    out.check("validate", v.ok,
              v.ok ? "cocycle identity holds for all entries"
                   : validation_diagnostic(v));
    if (!v.ok) {
        out.print(opt.json);
        return 2;
    }
    if (opt.command == "validate") {
        out.print(opt.json);
        return 0;
    }

    int code = 0;
    try {
        if (opt.command == "classify") run_classify(opt, rep, out);
        else if (opt.command == "pairs") run_pairs(opt, rep, out);
        else if (opt.command == "invariants") run_invariants(opt, rep, out);
        else if (opt.command == "separators") run_separators(opt, rep, out);
        else run_oracle(opt, rep, out);
    } catch (const EliminationBudgetExceeded& e) {
        out.check("budget", false, e.what());
        code = 3;
    } catch (const DegreeBudgetExceeded& e) {
        out.check("budget", false, e.what());
        code = 3;
    } catch (const KernelNotTrivial& e) {
        out.check("kernel-reduction", false,
                  std::string(e.what()) + " [witness (" + std::to_string(e.i) +
                      "," + std::to_string(e.j) + ")]");
        code = 2;
    } catch (const InvariantsError& e) {
        out.check(opt.command, false, e.what());
        code = 2;
    } catch (const SearchSpaceTooLarge& e) {
        out.check("budget", false, e.what());
        code = 3;
    } catch (const PairsError& e) {
        out.check(opt.command, false, e.what());
        code = 2;
    } catch (const GroebnerError& e) {
        out.check("budget", false, e.what());
        code = 3;
    } catch (const std::exception& e) {
        out.check(opt.command, false, e.what());
        code = 2;
    }
    out.print(opt.json);
    return code;
}
