#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "gainv/io.hpp"
#include "gainv/pairs.hpp"

using namespace gainv;

static Representation fixture(const std::string& name) {
    return load_rep_file(std::string(GAINV_FIXTURE_DIR) + "/" + name + ".json");
}

static MPoly var(const Representation& rep, uint32_t i) {  // 1-based
    return MPoly::variable(rep.k, rep.n, i - 1);
}

static AdditivePoly addp(const Representation& rep, const std::vector<int64_t>& skew) {
    return AdditivePoly::from_skew_ints(rep.k, skew);
}

static bool has_pair(const std::vector<Pair>& ps, const MPoly& g, const MPoly& h,
                     const AdditivePoly& c) {
    for (const Pair& p : ps)
        if (p.g == g && p.h == h && p.c == c) return true;
    return false;
}

TEST_CASE("is_pair frozen examples") {
    Representation e89 = fixture("e89");
    AdditivePoly c1 = addp(e89, {2, 1});  // t^3 - t
    CHECK(is_pair(e89, var(e89, 3), var(e89, 1), c1));
    CHECK(!is_pair(e89, var(e89, 3), var(e89, 1), addp(e89, {1})));
    CHECK(!is_pair(e89, var(e89, 3), var(e89, 2), c1));

    Representation eg1 = fixture("eg1");
    CHECK(!is_pair(eg1, var(eg1, 3), var(eg1, 1), addp(eg1, {1})));
    // trivial pair: any invariant with h = 0 and arbitrary c
    MPoly inv = var(eg1, 1) * var(eg1, 2);
    CHECK(is_pair(eg1, inv, MPoly::zero(eg1.k, eg1.n), addp(eg1, {0, 1})));
}

TEST_CASE("variance examples") {
    Representation eg1 = fixture("eg1");
    CHECK(variance(eg1, var(eg1, 3)) == 3);
    Representation det4 = fixture("det4");
    CHECK(variance(det4, var(det4, 3)) == 2);
    CHECK(variance(det4, var(det4, 1)) == 1);
    CHECK(variance(det4, var(det4, 1) * var(det4, 4) - var(det4, 2) * var(det4, 3)) == 1);
    // a nonzero constant term contributes the constant function to the span
    Representation dim2 = fixture("dim2");
    MPoly shifted = var(dim2, 2) + MPoly::constant(dim2.k, 2, dim2.k.one());
    CHECK(variance(dim2, shifted) == 3);
    CHECK(variance(dim2, var(dim2, 2)) == 2);
}

TEST_CASE("find_linear_pairs on the fixtures") {
    Representation e89 = fixture("e89");
    auto ps = find_linear_pairs(e89);
    AdditivePoly c1 = addp(e89, {2, 1});
    CHECK(ps.size() == 4);  // projective (a3 : a4) classes
    CHECK(has_pair(ps, var(e89, 3), var(e89, 1), c1));
    CHECK(has_pair(ps, var(e89, 4), var(e89, 2), c1));
    for (const Pair& p : ps) {
        CHECK(p.c == c1);
        CHECK(is_pair(e89, p.g, p.h, p.c));
        CHECK(p.kind == PairKind::General);
    }

    CHECK(find_linear_pairs(fixture("eg1")).empty());

    Representation det4 = fixture("det4");
    auto qs = find_linear_pairs(det4);
    AdditivePoly t = addp(det4, {1});
    CHECK(qs.size() == 6);
    CHECK(has_pair(qs, var(det4, 3), var(det4, 1), t));
    CHECK(has_pair(qs, var(det4, 4), var(det4, 2), t));
    for (const Pair& p : qs) CHECK(p.kind == PairKind::Principle);

    Representation u3 = fixture("unipotent3");
    auto us = find_linear_pairs(u3);
    REQUIRE(us.size() == 1);
    CHECK(us[0].g == var(u3, 2));
    CHECK(us[0].h == var(u3, 1));
    CHECK(us[0].c == addp(u3, {1}));

    Representation cs = fixture("casec_single");
    auto cps = find_linear_pairs(cs);
    REQUIRE(cps.size() == 1);
    CHECK(cps[0].g == var(cs, 3));
    CHECK(cps[0].h == var(cs, 1));
    CHECK(cps[0].c == addp(cs, {0, 1}));  // t^3
    CHECK(cps[0].kind == PairKind::QuasiPrinciple);
}

TEST_CASE("find_pairs_bounded agrees with the linear search at degree 1") {
    for (const char* name : {"eg1", "e89", "det4", "unipotent3", "casec_single", "dim2"}) {
        Representation rep = fixture(name);
        auto lin = find_linear_pairs(rep);
        auto bnd = find_pairs_bounded(rep, 1);
        REQUIRE(lin.size() == bnd.size());
        for (size_t i = 0; i < lin.size(); ++i) {
            CHECK(lin[i].g == bnd[i].g);
            CHECK(lin[i].h == bnd[i].h);
            CHECK(lin[i].c == bnd[i].c);
        }
    }
}

TEST_CASE("find_pairs_bounded: eg1 has no pairs up to degree 3") {
    CHECK(find_pairs_bounded(fixture("eg1"), 3).empty());
}

TEST_CASE("find_pairs_bounded: det4 degree 2 brings no new c(t)") {
    Representation det4 = fixture("det4");
    auto ps = find_pairs_bounded(det4, 2);
    AdditivePoly t = addp(det4, {1});
    CHECK(ps.size() >= 6);
    for (const Pair& p : ps) {
        CHECK(p.c == t);
        CHECK(is_pair(det4, p.g, p.h, p.c));
    }
    CHECK(has_pair(ps, var(det4, 3), var(det4, 1), t));
    // a genuinely quadratic pair shows up
    CHECK(has_pair(ps, var(det4, 1) * var(det4, 3), var(det4, 1) * var(det4, 1), t));
}

TEST_CASE("find_pairs_bounded: e89 degree 2 keeps fundamental c1") {
    Representation e89 = fixture("e89");
    auto ps = find_pairs_bounded(e89, 2);
    CHECK(!ps.empty());
    AdditivePoly c1 = addp(e89, {2, 1});
    Fundamental f = fundamental_generator(e89, ps);
    CHECK(f.b == c1);
    for (const Pair& p : ps) CHECK(is_pair(e89, p.g, p.h, p.c));
}

TEST_CASE("variance of every returned pair's g is exactly 2, and conversely") {
    for (const char* name : {"e89", "det4", "unipotent3"}) {
        Representation rep = fixture(name);
        auto ps = find_linear_pairs(rep);
        for (const Pair& p : ps) CHECK(variance(rep, p.g) == 2);

        // converse: every projective linear g of variance 2 appears, up to
        // scaling and translation by the invariant covectors
        auto inv = invariant_covectors(rep);
        FqMatrix red;
        for (const MPoly& f : inv) {
            FqRow r;
            for (uint32_t j = 0; j < rep.n; ++j) {
                Exps e(rep.n, 0);
                e[j] = 1;
                r.push_back(f.coeff(e));
            }
            red.push_back(r);
        }
        auto pivots = rref(red, rep.k);
        uint64_t q = rep.k.size();
        uint64_t npts = 1;
        for (uint32_t i = 0; i < rep.n; ++i) npts *= q;
        for (uint64_t code = 1; code < npts; ++code) {
            uint64_t c = code;
            FqRow a;
            for (uint32_t i = 0; i < rep.n; ++i, c /= q) a.push_back(rep.k.element_at(c % q));
            // projective representative: first nonzero coefficient = 1
            size_t first = 0;
            while (first < a.size() && a[first].is_zero()) ++first;
            if (!(a[first].is_one())) continue;
            MPoly g(rep.k, rep.n);
            for (uint32_t i = 0; i < rep.n; ++i)
                if (!a[i].is_zero()) g = g + var(rep, i + 1) * a[i];
            if (variance(rep, g) != 2) continue;
            // reduce modulo the invariant covectors
            FqRow ared = a;
            for (size_t r = 0; r < red.size(); ++r) {
                Fq f = ared[pivots[r]];
                if (f.is_zero()) continue;
                for (size_t cc = 0; cc < ared.size(); ++cc)
                    ared[cc] = ared[cc] - f * red[r][cc];
            }
            MPoly gr(rep.k, rep.n);
            for (uint32_t i = 0; i < rep.n; ++i)
                if (!ared[i].is_zero()) gr = gr + var(rep, i + 1) * ared[i];
            bool matched = false;
            for (const Pair& p : ps)
                for (uint64_t s = 1; s < q && !matched; ++s)
                    matched = p.g * rep.k.element_at(s) == gr;
            INFO(name, ": unmatched variance-2 form ", g.str());
            CHECK(matched);
        }
    }
}

TEST_CASE("combine: frozen Bezout example over F_3") {
    // q_{2,1} = t^3 and q_{3,1} = t^3 - t give a t^3-pair and a (t^3-t)-pair;
    // the gcd is t with cofactors b1 = t, b2 = -t
    Field k = build_field(3, 1);
    Representation rep;
    rep.k = k;
    rep.n = 3;
    rep.set_entry(2, 1, UPoly::from_ints(k, {0, 0, 0, 1}));
    rep.set_entry(3, 1, UPoly::from_ints(k, {0, 2, 0, 1}));
    REQUIRE(validate(rep).ok);
    Pair p1{var(rep, 2), var(rep, 1), addp(rep, {0, 1}), PairKind::General};
    Pair p2{var(rep, 3), var(rep, 1), addp(rep, {2, 1}), PairKind::General};
    REQUIRE(is_pair(rep, p1.g, p1.h, p1.c));
    REQUIRE(is_pair(rep, p2.g, p2.h, p2.c));
    Pair out = combine(rep, p1, p2);
    CHECK(out.c == addp(rep, {1}));                      // t
    CHECK(out.g == var(rep, 2) + var(rep, 3) * k.from_int(2));  // x2 - x3
    CHECK(out.h == var(rep, 1));
    CHECK(out.kind == PairKind::Principle);
}

TEST_CASE("combine: det4 frozen example and idempotence") {
    Representation det4 = fixture("det4");
    auto ps = find_linear_pairs(det4);
    Pair p1, p2;
    for (const Pair& p : ps) {
        if (p.g == var(det4, 3)) p1 = p;
        if (p.g == var(det4, 4)) p2 = p;
    }
    Pair out = combine(det4, p1, p2);
    // gcd(t, t) has cofactors b1 = 0, b2 = t, so the fold keeps the second leg
    CHECK(out.g == var(det4, 4));
    CHECK(out.h == var(det4, 2));
    CHECK(out.c == addp(det4, {1}));

    Pair same = combine(det4, p1, p1);
    CHECK(same.g == p1.g);
    CHECK(same.h == p1.h);
    CHECK(same.c == p1.c);
}

TEST_CASE("combine rejects trivial input") {
    Representation det4 = fixture("det4");
    Pair good = find_linear_pairs(det4)[0];
    Pair trivial{var(det4, 1), MPoly::zero(det4.k, det4.n), addp(det4, {1}),
                 PairKind::General};
    CHECK_THROWS_AS(combine(det4, good, trivial), TrivialInput);
}

TEST_CASE("fundamental_generator") {
    Representation e89 = fixture("e89");
    auto ps = find_linear_pairs(e89);
    Fundamental f = fundamental_generator(e89, ps);
    CHECK(f.b == addp(e89, {2, 1}));  // c1 = t^3 - t, monic
    CHECK(f.b.is_monic());
    CHECK(f.witness.c == f.b);
    CHECK(is_pair(e89, f.witness.g, f.witness.h, f.witness.c));
    // the fundamental generator right-divides every pair's c
    for (const Pair& p : ps) {
        auto [q, r] = right_divide(p.c, f.b);
        CHECK(r.is_zero());
    }

    Representation det4 = fixture("det4");
    Fundamental fd = fundamental_generator(det4, find_linear_pairs(det4));
    CHECK(fd.b == addp(det4, {1}));

    // single pair: monic normalization of c = 2 t^9
    Representation cs;
    cs.k = build_field(3, 1);
    cs.n = 3;
    cs.set_entry(3, 1, UPoly::from_ints(cs.k, {0, 0, 0, 0, 0, 0, 0, 0, 0, 2}));
    REQUIRE(validate(cs).ok);
    Pair p{var(cs, 3), var(cs, 1), addp(cs, {0, 0, 2}), PairKind::General};
    REQUIRE(is_pair(cs, p.g, p.h, p.c));
    Fundamental fs = fundamental_generator(cs, {p});
    CHECK(fs.b == addp(cs, {0, 0, 1}));
    CHECK(fs.b.is_monic());
    CHECK(is_pair(cs, fs.witness.g, fs.witness.h, fs.witness.c));

    CHECK_THROWS_AS(fundamental_generator(det4, {}), EmptyInput);
}

TEST_CASE("kernel_acts_trivially") {
    Representation det4 = fixture("det4");
    CHECK(kernel_acts_trivially(det4, addp(det4, {1})));

    Representation e89 = fixture("e89");
    AdditivePoly c1 = addp(e89, {2, 1});
    CHECK(!kernel_acts_trivially(e89, c1));
    auto w = kernel_nontrivial_witness(e89, c1);
    REQUIRE(w.has_value());
    CHECK(w->first == 5);
    CHECK(w->second == 1);

    Representation cs = fixture("casec_single");
    CHECK(kernel_acts_trivially(cs, addp(cs, {0, 1})));
}

TEST_CASE("classify eg1: case A") {
    ClassificationReport r = classify(fixture("eg1"), 2);
    CHECK(r.label == CaseLabel::A);
    CHECK(r.pairs.empty());
    CHECK(!r.fundamental.has_value());
    CHECK(r.socle_dims == std::vector<uint32_t>{2, 3});
}

TEST_CASE("classify e89: case B with structural certificate") {
    Representation e89 = fixture("e89");
    ClassificationReport r = classify(e89, 1);
    CHECK(r.label == CaseLabel::B);
    REQUIRE(r.fundamental.has_value());
    CHECK(*r.fundamental == addp(e89, {2, 1}));
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->basis == "given");
    CHECK(r.certificate->d_span_dim == 2);
    REQUIRE(r.certificate->rows.size() == 2);
    const Field& k = e89.k;
    CHECK(r.certificate->rows[0].j == 1);
    CHECK(r.certificate->rows[0].d == UPoly::from_ints(k, {0, 1}));  // t
    CHECK(r.certificate->rows[0].s == UPoly::from_ints(k, {0, 0, 2}));  // 2s^2
    CHECK(r.certificate->rows[1].j == 2);
    CHECK(r.certificate->rows[1].d ==
          UPoly::from_ints(k, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));  // t^9
    CHECK(r.certificate->rows[1].s == UPoly::from_ints(k, {0, 0, 2}));
    CHECK(r.socle_dims == std::vector<uint32_t>{2, 4, 5});
}

TEST_CASE("classify det4: case C with principle witness") {
    Representation det4 = fixture("det4");
    ClassificationReport r = classify(det4, 1);
    CHECK(r.label == CaseLabel::C);
    REQUIRE(r.fundamental.has_value());
    CHECK(*r.fundamental == addp(det4, {1}));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->g == var(det4, 3));
    CHECK(r.witness->h == var(det4, 1));
    CHECK(r.witness->kind == PairKind::Principle);
}

TEST_CASE("classify casec_single: quasi-principle witness") {
    Representation cs = fixture("casec_single");
    ClassificationReport r = classify(cs, 1);
    CHECK(r.label == CaseLabel::C);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->g == var(cs, 3));
    CHECK(r.witness->h == var(cs, 1));
    CHECK(r.witness->c == addp(cs, {0, 1}));
    CHECK(r.witness->kind == PairKind::QuasiPrinciple);
}

TEST_CASE("classify unipotent3 and dim2: case C") {
    ClassificationReport r3 = classify(fixture("unipotent3"), 1);
    CHECK(r3.label == CaseLabel::C);
    CHECK(r3.witness->kind == PairKind::Principle);
    ClassificationReport r2 = classify(fixture("dim2"), 1);
    CHECK(r2.label == CaseLabel::C);
}

TEST_CASE("classification is stable under unipotent basis change") {
    Representation det4 = fixture("det4");
    FqMatrix a(4, FqRow(4, det4.k.zero()));
    for (int i = 0; i < 4; ++i) a[i][i] = det4.k.one();
    a[3][0] = det4.k.from_int(2);
    a[2][1] = det4.k.from_int(3);
    Representation moved = change_basis(det4, a);
    REQUIRE(validate(moved).ok);
    CHECK(classify(moved, 1).label == CaseLabel::C);

    Representation e89 = fixture("e89");
    FqMatrix b(5, FqRow(5, e89.k.zero()));
    for (int i = 0; i < 5; ++i) b[i][i] = e89.k.one();
    b[4][0] = e89.k.one();
    Representation moved89 = change_basis(e89, b);
    REQUIRE(validate(moved89).ok);
    ClassificationReport r = classify(moved89, 1);
    CHECK(r.label == CaseLabel::B);
    CHECK(*r.fundamental == addp(e89, {2, 1}));

    Representation eg1 = fixture("eg1");
    FqMatrix c(3, FqRow(3, eg1.k.zero()));
    for (int i = 0; i < 3; ++i) c[i][i] = eg1.k.one();
    c[2][0] = eg1.k.from_int(2);
    c[1][0] = eg1.k.one();
    Representation moved1 = change_basis(eg1, c);
    REQUIRE(validate(moved1).ok);
    CHECK(classify(moved1, 2).label == CaseLabel::A);
}

TEST_CASE("classify is deterministic") {
    Representation e89 = fixture("e89");
    ClassificationReport a = classify(e89, 1), b = classify(e89, 1);
    CHECK(a.checks == b.checks);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (size_t i = 0; i < a.pairs.size(); ++i) {
        CHECK(a.pairs[i].g == b.pairs[i].g);
        CHECK(a.pairs[i].h == b.pairs[i].h);
        CHECK(a.pairs[i].c == b.pairs[i].c);
    }
}

TEST_CASE("search caps trigger SearchSpaceTooLarge") {
    Representation e89 = fixture("e89");
    SearchCaps tiny;
    tiny.monomials = 3;
    CHECK_THROWS_AS(find_pairs_bounded(e89, 2, tiny), SearchSpaceTooLarge);
    SearchCaps small;
    small.candidates = 1;
    CHECK_THROWS_AS(find_pairs_bounded(e89, 1, small), SearchSpaceTooLarge);
    // classify falls back to the linear search instead of failing
    ClassificationReport r = classify(e89, 2, tiny);
    CHECK(r.label == CaseLabel::B);
}
