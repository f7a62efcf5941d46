#pragma once

#include <optional>

#include "gainv/additive.hpp"
#include "gainv/rep.hpp"

namespace gainv {

struct PairsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchSpaceTooLarge : PairsError {
    using PairsError::PairsError;
};
struct TrivialInput : PairsError {
    using PairsError::PairsError;
};
struct EmptyInput : PairsError {
    using PairsError::PairsError;
};

enum class PairKind { General, QuasiPrinciple, Principle };
const char* pair_kind_name(PairKind k);

// A c(t)-pair: delta(g) = c(t) h with h invariant.  Principle means c = t;
// quasi-principle means ker(c) acts trivially on the whole representation.
struct Pair {
    MPoly g;
    MPoly h;
    AdditivePoly c;
    PairKind kind = PairKind::General;
};

// Exact check delta(g) = c(t) h and delta(h) = 0.
bool is_pair(const Representation& rep, const MPoly& g, const MPoly& h,
             const AdditivePoly& c);

// Dimension of the span of the t-coefficients of coact(g), augmented with the
// constant function when g has a nonzero constant term.
uint32_t variance(const Representation& rep, const MPoly& g);

struct SearchCaps {
    uint64_t monomials = 2000;     // unknown-coefficient count
    uint64_t candidates = 200000;  // projective points enumerated
};

// All non-trivial pairs with g linear, up to scaling and translation by the
// invariant covectors.  Solves the linear-plus-minor system over the unknown
// coefficients with the GB engine, then filters projective points.
std::vector<Pair> find_linear_pairs(const Representation& rep);

// Pairs with deg g <= d: kernel of the non-p-power constraints, then rank<=1
// filtering over the projectivized complement of the invariant subspace.
std::vector<Pair> find_pairs_bounded(const Representation& rep, uint32_t d,
                                     const SearchCaps& caps = {});

// Bezout combination along right_gcd_ext(c1, c2): a b-pair with
// g/h = b1(g1/h1) + b2(g2/h2) brought to lowest terms.
Pair combine(const Representation& rep, const Pair& p1, const Pair& p2);

struct Fundamental {
    AdditivePoly b;  // monic iterated right gcd of the c's
    Pair witness;    // fold of combine over the input pairs; witness.c == b
};

Fundamental fundamental_generator(const Representation& rep,
                                  const std::vector<Pair>& pairs);

// First entry (i, j) with q_{i,j} not in k[b(t)], scan order i asc then j asc.
std::optional<std::pair<uint32_t, uint32_t>> kernel_nontrivial_witness(
    const Representation& rep, const AdditivePoly& b);
bool kernel_acts_trivially(const Representation& rep, const AdditivePoly& b);

enum class CaseLabel { A, B, C, Inconclusive };
const char* case_label_name(CaseLabel c);

// Last-row decomposition q_{n,j} = s(b(t)) + d(t) over an invariant column j.
struct NormalFormEntry {
    uint32_t j = 0;
    UPoly s;  // polynomial in the new variable s = b(t)
    UPoly d;  // additive part outside O<b>; zero when absent
};

struct CasebCertificate {
    std::string basis;  // "given" or "socle-adapted"
    std::vector<NormalFormEntry> rows;
    uint32_t d_span_dim = 0;
};

// Establish the normal form in the coordinates as given: every entry outside
// the last-row-over-invariant-column block lies in k[b(t)], and those entries
// split as s(b(t)) + d(t) with the d's spanning dimension >= 2 outside O<b>.
std::optional<CasebCertificate> normal_form_certificate(const Representation& rep,
                                                        const AdditivePoly& b,
                                                        const std::string& basis_name);

struct ClassificationReport {
    CaseLabel label = CaseLabel::Inconclusive;
    std::optional<AdditivePoly> fundamental;
    std::vector<Pair> pairs;
    std::optional<Pair> witness;                  // attached for case C
    std::optional<CasebCertificate> certificate;  // attached when B is structural
    std::vector<uint32_t> socle_dims;
    std::vector<std::string> checks;
    uint32_t search_bound = 0;
};

// Certificate-based classification: C on a quasi-principle fundamental pair,
// B when pairs exist but the kernel acts nontrivially (with the normal-form
// certificate when it can be established in the given or socle-adapted
// basis), A on the socle/variance criteria, else Inconclusive.
ClassificationReport classify(const Representation& rep, uint32_t d,
                              const SearchCaps& caps = {});

}  // namespace gainv
