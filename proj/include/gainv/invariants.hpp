#pragma once

#include <optional>

#include "gainv/groebner.hpp"
#include "gainv/pairs.hpp"

namespace gainv {

struct InvariantsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Thrown by reduce_by_kernel at the first entry outside k[b(t)].
struct KernelNotTrivial : InvariantsError {
    uint32_t i = 0, j = 0;
    KernelNotTrivial(uint32_t i_, uint32_t j_)
        : InvariantsError("q[" + std::to_string(i_) + "," + std::to_string(j_) +
                          "] is not a polynomial in b(t)"),
          i(i_),
          j(j_) {}
};
struct NotPrinciple : InvariantsError {
    using InvariantsError::InvariantsError;
};
struct NotInvariant : InvariantsError {
    using InvariantsError::InvariantsError;
};
struct InseparableB : InvariantsError {
    using InvariantsError::InvariantsError;
};
struct NotCaseB : InvariantsError {
    using InvariantsError::InvariantsError;
};
struct DegreeBudgetExceeded : InvariantsError {
    using InvariantsError::InvariantsError;
};
struct EliminationBudgetExceeded : InvariantsError {
    using InvariantsError::InvariantsError;
};

// num / h^e for the ambient localization; h is carried by the owner.
struct LocElem {
    MPoly num;
    uint32_t e = 0;
};

// The action rewritten through s = b(t): entries are the b-adic digit
// polynomials, so re-substituting s = b(t) reproduces the original entries.
struct ReducedAction {
    Representation rep;  // co-action in the parameter s
    AdditivePoly b;
};

ReducedAction reduce_by_kernel(const Representation& rep, const AdditivePoly& b);

// delta(f) = 0, exactly.  The localized overload checks the numerator-level
// pattern for num / h^e with h itself invariant.
bool verify_invariant(const Representation& rep, const MPoly& f);
bool verify_invariant(const Representation& rep, const MPoly& num, const MPoly& h,
                      uint32_t e);

struct MembershipVerdict {
    uint32_t degree = 0;
    uint32_t checked = 0;  // oracle basis elements at this bound
    uint32_t members = 0;  // how many passed localized membership
};

// Slice generators f_i = coact(x_i)|_{t = -g/h} for a principle pair, stored
// as numerators over the minimal h-power per generator.
struct LocalizedInvariantRing {
    std::vector<MPoly> numerators;  // aligned with x_1, ..., x_n
    std::vector<uint32_t> hexp;
    MPoly h;
    uint32_t certified_degree = 0;
    std::vector<MembershipVerdict> verdicts;
};

LocalizedInvariantRing vde_generators(const Representation& rep, const Pair& pair,
                                      uint32_t certify_up_to = 0);

// r(f_1, ..., f_n) over the common h-power, stripped; the symbolic identity
// num = r * h^e is asserted before returning.
LocElem rewrite_invariant(const Representation& rep, const Pair& pair,
                          const MPoly& r);

struct GraphSepResult {
    uint32_t d = 0;                     // max t-degree over the rows
    std::vector<MPoly> u_description;   // leading t-coefficients of the d-rows
    std::vector<MPoly> invariants;      // extracted f_{i,J}, dehomogenized
    std::vector<MPoly> rejected;        // coefficients that failed the invariance check
    std::vector<MPoly> gb;              // reduced colex basis of the graph ideal
    std::vector<std::string> gb_names;  // variable names for printing gb
};

// Separating invariants on U from the graph of the action: eliminate the
// group and homogenization parameters, re-reduce under colex with the w-block
// below the y-block, expand each basis element as sum_J f_J(W) Y^J, and return
// the dehomogenized nonconstant f_J.  Every returned invariant is verified;
// coefficients that fail the check are reported in `rejected` instead of being
// emitted, and the basis is then augmented with the canonical invariant
// combinations of low W-degree multiples of the gb rows, so the returned set
// still separates orbits on U.
GraphSepResult graph_separators(const Representation& rep, uint64_t budget = 200000);

struct CasebData {
    AdditivePoly b;
    Field ext;                      // working field; kernel of b splits here
    std::vector<Fq> kernel;         // all p^v points, enumeration order
    MPoly h;                        // over ext
    std::vector<MPoly> defining;    // s^i coefficients of h * b(s) + g
    std::vector<MPoly> f_numerators;  // slice generators for x_1 .. x_{n-1}
    std::vector<uint32_t> f_hexp;
    std::vector<LocElem> sym;       // e_1 .. e_{p^v} of the orbit elements
    std::vector<MembershipVerdict> completeness;
};

// Local invariants along the etale slice k(X)[s]/(b(s) + g/h): slice
// generators for the first n-1 coordinates plus the elementary symmetric
// functions of the kernel orbit of the last one.  Completeness against the
// oracle is measured per degree up to degree_bound and reported as-is.
CasebData caseb_local_invariants(const Representation& rep, const Pair& pair,
                                 uint32_t degree_bound);

}  // namespace gainv
