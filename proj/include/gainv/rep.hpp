#pragma once

#include <map>

#include "gainv/linalg.hpp"
#include "gainv/tpoly.hpp"
#include "gainv/upoly.hpp"

namespace gainv {

struct RepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Upper-triangular unipotent co-action on V* with basis x_1, ..., x_n:
//   x_i |-> x_i + sum_{j<i} q_{i,j}(t) x_j.
// Entries are keyed 1-based as in the serialized form; absent entries are 0.
struct Representation {
    Field k;
    uint32_t n = 0;
    std::map<std::pair<uint32_t, uint32_t>, UPoly> q;

    UPoly entry(uint32_t i, uint32_t j) const;
    void set_entry(uint32_t i, uint32_t j, UPoly v);
};

struct ValidationResult {
    bool ok = true;
    uint32_t i = 0, j = 0;     // witness entry for the first violation
    std::string reason;        // "constant-term", "not-additive", "cocycle"
    std::string residual;      // printable residual for cocycle failures
};

// Checks, in scan order i ascending then j ascending: q_{i,j}(0) = 0,
// q_{i,i-1} additive when nonzero, and the full bivariate identity
//   q_{i,j}(t1+t2) - q_{i,j}(t1) - q_{i,j}(t2)
//     = sum_{s=j+1}^{i-1} q_{i,s}(t1) q_{s,j}(t2)   in k[t1,t2].
ValidationResult validate(const Representation& rep);

// Substitution of t by t1 + t2 (exact, Lucas binomials); vars (t1, t2).
MPoly upoly_at_t1_plus_t2(const UPoly& q);

TPoly coact_var(const Representation& rep, uint32_t i);  // 1-based
TPoly coact(const Representation& rep, const MPoly& f);
TPoly delta(const Representation& rep, const MPoly& f);

// Monomial exponent vectors of total degree <= d, ascending in graded lex
// with x1 < x2 < ... < xn; the fixed enumeration used by the oracle.
std::vector<Exps> monomials_up_to(uint32_t nvars, uint32_t d);

// Entry-wise embedding of the representation into an extension field.
Representation embed(const Representation& rep, const Field& target);

// Basis of the invariant linear forms (delta = 0), canonical RREF kernel.
std::vector<MPoly> invariant_covectors(const Representation& rep);

struct SocleSeries {
    std::vector<uint32_t> dims;      // dim soc_1 < ... < dim soc_len = n
    FqMatrix adapted;                // rows: covector coefficients, socle level ascending
    std::vector<uint32_t> level_of;  // level (1-based) of each adapted row
};

SocleSeries socle_series(const Representation& rep);

// Fixed vectors of the dual action on V (coefficient vectors over u_1..u_n).
std::vector<FqRow> dual_fixed_vectors(const Representation& rep);

// Basis of the invariant polynomials of total degree <= d via exact linear
// algebra on the delta images of all monomials; deterministic RREF kernel.
std::vector<MPoly> invariant_space_oracle(const Representation& rep, uint32_t d);

// Rewrite the co-action in the covector basis y = A x (A invertible).  Throws
// RepError when the result is not upper-triangular unipotent.
Representation change_basis(const Representation& rep, const FqMatrix& a);

}  // namespace gainv
