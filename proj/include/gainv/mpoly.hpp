#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gainv/field.hpp"

namespace gainv {

using Exps = std::vector<uint32_t>;  // one exponent per variable

uint32_t total_degree(const Exps& e);
bool divides(const Exps& a, const Exps& b);  // a | b componentwise
Exps exps_lcm(const Exps& a, const Exps& b);
Exps exps_sub(const Exps& a, const Exps& b);  // requires b | a
Exps exps_add(const Exps& a, const Exps& b);

// Term order assembled from blocks; earlier blocks dominate, which yields the
// elimination orders directly.  Within a block: grevlex, priority-lex over the
// listed variable sequence (first listed = most significant), or a bare
// total-degree comparison used to assemble graded lex.
class MonomialOrder {
  public:
    enum class BlockMode { GrevLex, Lex, DegOnly };
    struct Block {
        BlockMode mode = BlockMode::GrevLex;
        std::vector<uint32_t> vars;
    };

    MonomialOrder() = default;
    MonomialOrder(uint32_t nvars, std::vector<Block> blocks)
        : nvars_(nvars), blocks_(std::move(blocks)) {}

    // a ? b: negative, 0, positive
    int cmp(const Exps& a, const Exps& b) const;
    bool less(const Exps& a, const Exps& b) const { return cmp(a, b) < 0; }
    uint32_t nvars() const { return nvars_; }

    static MonomialOrder grevlex(uint32_t nvars);
    static MonomialOrder graded_lex(uint32_t nvars);  // degree, tie by x1 < x2 < ...
    // plain lex with an explicit priority sequence, most significant first
    static MonomialOrder lex(const std::vector<uint32_t>& priority, uint32_t nvars);
    // block elimination: dropped variables dominate (grevlex within each block)
    static MonomialOrder elimination(const std::vector<uint32_t>& drop, uint32_t nvars);

  private:
    uint32_t nvars_ = 0;
    std::vector<Block> blocks_;
};

// Sparse multivariate polynomial; terms keyed by exponent vector with a fixed
// container order so iteration (and serialization) is deterministic and
// independent of the active term order.
class MPoly {
  public:
    MPoly() = default;
    MPoly(Field k, uint32_t nvars) : k_(std::move(k)), n_(nvars) {}

    static MPoly zero(const Field& k, uint32_t nvars) { return MPoly(k, nvars); }
    static MPoly constant(const Field& k, uint32_t nvars, const Fq& c);
    static MPoly variable(const Field& k, uint32_t nvars, uint32_t i);
    static MPoly monomial(const Field& k, Exps e, const Fq& c);

    const Field& field() const { return k_; }
    uint32_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Exps, Fq>& terms() const { return terms_; }
    Fq coeff(const Exps& e) const;
    Fq constant_term() const;
    int degree() const;  // total degree, -1 for zero
    bool uses_var(uint32_t i) const;

    void set_coeff(const Exps& e, const Fq& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator*(const Fq& s) const;
    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    bool operator<(const MPoly& o) const;  // container order only

    MPoly pow(uint32_t e) const;
    const Exps& lead_exps(const MonomialOrder& ord) const;
    Fq lead_coeff(const MonomialOrder& ord) const;
    MPoly monic(const MonomialOrder& ord) const;

    // ring map x_i -> images[i]; images live in a possibly different variable set
    MPoly substitute(const std::vector<MPoly>& images) const;
    Fq eval(const std::vector<Fq>& point) const;
    // rewrite over a larger variable set: exponent vector position i moves to map[i]
    MPoly relabel(uint32_t new_nvars, const std::vector<uint32_t>& map) const;

    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    Field k_;
    uint32_t n_ = 0;
    std::map<Exps, Fq> terms_;
};

// binomial(n, k) mod p by Lucas, exact for arbitrary n
uint32_t binom_mod_p(uint64_t n, uint64_t k, uint32_t p);

// f / g when g divides f exactly (nullopt otherwise); g nonzero
std::optional<MPoly> try_divide_exact(const MPoly& f, const MPoly& g);

// Coefficient-wise embedding into an extension of the same characteristic.
MPoly embed(const MPoly& f, const Field& target);

}  // namespace gainv
