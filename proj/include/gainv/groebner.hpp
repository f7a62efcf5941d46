#pragma once

#include <vector>

#include "gainv/mpoly.hpp"

namespace gainv {

struct GroebnerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full normal form of f modulo basis under ord.  Reducers are scanned in basis
// order and the first whose lead divides the current term is used, so the
// result is deterministic for a fixed basis sequence.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis,
                  const MonomialOrder& ord);

// Reduced Groebner basis via Buchberger with the coprime-lead criterion and a
// pair queue ordered by (lcm total degree, pair index).  Output is the unique
// reduced basis: monic, fully interreduced, sorted by lead monomial.
// pair_budget (0 = unlimited) caps total work: every queue pair and every
// normal-form reduction step counts one unit, and exhaustion throws
// GroebnerError promptly even when a single reduction would otherwise blow up.
std::vector<MPoly> buchberger(std::vector<MPoly> gens, const MonomialOrder& ord,
                              uint64_t pair_budget = 0);

// Basis of the elimination ideal <gens> intersect k[vars not in drop], as
// polynomials in the full variable set (dropped variables unused), computed
// with the block elimination order.
std::vector<MPoly> eliminate(const std::vector<MPoly>& gens,
                             const std::vector<uint32_t>& drop,
                             uint64_t pair_budget = 0);

bool ideal_member(const MPoly& f, const std::vector<MPoly>& gb,
                  const MonomialOrder& ord);

struct SubalgebraResult {
    bool member = false;
    uint32_t exponent = 0;  // least e with h^e f in k[gens]
};

// Localized subalgebra membership via tag variables: f in k[gens][1/h]
// (with h itself counted among the denominators) iff h^e f lies in k[gens]
// for some e <= e_bound.  Throws GroebnerError when a generator is constant.
SubalgebraResult subalgebra_member_localized(const MPoly& f,
                                             const std::vector<MPoly>& gens,
                                             const MPoly& h, uint32_t e_bound);

}  // namespace gainv
