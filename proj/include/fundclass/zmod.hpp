#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fundclass/groups.hpp"
#include "fundclass/intlin.hpp"

namespace fundclass::zmod {

using Int = intlin::Int;
using Vec = std::vector<Int>;

struct Limits {
    long max_group_order = 16;
    Int max_module_order = 65536; // finite part
};

/**
 * Finite abelian coefficient module +_j Z/d_j with commuting generator
 * actions given as integer matrices; d_j = 0 marks an exact Z factor (used
 * for the floor cocycles chi, chi_k, whose classes have |G|-torsion that a
 * finite proxy modulus could destroy).
 *
 * A module carrying `value_constraints` represents an invariant submodule
 * A^H inside A's coordinates: cochains over it must have every value fixed
 * by the listed matrices, and the generator actions are lift-dependent but
 * well defined on such values.
 */
class FiniteGModule {
public:
    FiniteGModule(groups::AbelianPresentation G, std::vector<Int> factors,
                  std::vector<intlin::Mat> gen_actions, bool validate = true);

    const groups::AbelianPresentation& group() const { return G_; }
    const std::vector<Int>& factors() const { return factors_; }
    long rank() const { return static_cast<long>(factors_.size()); }
    bool has_integer_factor() const;

    const std::vector<intlin::Mat>& value_constraints() const { return value_constraints_; }
    void set_value_constraints(std::vector<intlin::Mat> cs) { value_constraints_ = std::move(cs); }

    Vec zero() const { return Vec(factors_.size(), 0); }
    Vec reduce(Vec v) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec neg(const Vec& a) const;
    Vec scale(const Int& k, const Vec& a) const;
    bool is_zero(const Vec& a) const;
    bool satisfies_constraints(const Vec& a) const;

    Vec act(const groups::GroupElement& g, const Vec& v) const;
    const intlin::Mat& action_matrix(long gen, long power) const;
    intlin::Mat action_matrix_of(const groups::GroupElement& g) const;

private:
    groups::AbelianPresentation G_;
    std::vector<Int> factors_;
    std::vector<intlin::Mat> gen_actions_;
    std::vector<std::vector<intlin::Mat>> power_cache_; // [gen][power], power < order
    std::vector<intlin::Mat> value_constraints_;

    void validate_module() const;
};

using ModulePtr = std::shared_ptr<const FiniteGModule>;

/// Trivial-action module +_j Z/d_j over G.
ModulePtr trivial_module(const groups::AbelianPresentation& G, const std::vector<Int>& factors);

struct Cochain {
    int degree = 0;           // 0, 1 or 2
    ModulePtr mod;
    std::vector<Vec> values;  // |G|^degree entries, indexed by tuple rank

    const Vec& value() const { return values[0]; }
    const Vec& value(const groups::GroupElement& g) const;
    const Vec& value(const groups::GroupElement& g, const groups::GroupElement& h) const;
    Vec& slot(const groups::GroupElement& g);
    Vec& slot(const groups::GroupElement& g, const groups::GroupElement& h);
};

Cochain zero_cochain(ModulePtr m, int degree);
Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Cochain& a, const Cochain& b);
Cochain cochain_scale(const Int& k, const Cochain& a);

/// Bar differential: (db)(g) = g.b - b and (dc)(g,h) = g.c(h) - c(gh) + c(g).
Cochain coboundary(const Cochain& c);

struct CocycleReport {
    bool ok = true;
    std::vector<groups::GroupElement> witness; // first failing tuple when !ok
};

/// Exhaustive cocycle-identity sweep for degrees 1 and 2.
CocycleReport is_cocycle(const Cochain& c);

/**
 * Canonical primitive b with db = c (degree of c is 1 or 2), via the Smith
 * solve of the integer system with free parameters at zero; nullopt when c
 * is not a coboundary.
 */
std::optional<Cochain> solve_coboundary(const Cochain& c, const Limits& lim = {});

/// c shifted by the coboundary of the constant so that c(e,.) = c(.,e) = 0.
Cochain normalize_cocycle2(const Cochain& c);

struct CohomologyDescriptor {
    std::vector<Int> divisors;   // invariant factors > 1, divisibility chain
    std::vector<Cochain> reps;   // one representative cocycle per divisor
};

CohomologyDescriptor h1_bruteforce(ModulePtr A, const Limits& lim = {});
CohomologyDescriptor h2_bruteforce(ModulePtr A, const Limits& lim = {});

/// Subgroup H of G re-presented as its own AbelianPresentation with an
/// embedding of generators, from the Smith form of the relation lattice.
struct SubgroupPresentation {
    groups::AbelianPresentation P;
    std::vector<groups::GroupElement> embedded_gens; // in G, one per P generator
    groups::GroupElement embed(const groups::GroupElement& p,
                               const groups::AbelianPresentation& G) const;
};

SubgroupPresentation subgroup_presentation(const groups::AbelianPresentation& G,
                                           const groups::SubgroupSpec& H);

/// Restriction of a cochain (and its module) to a subgroup.
struct RestrictedCochain {
    SubgroupPresentation sub;
    Cochain cochain; // over sub.P
};
RestrictedCochain restrict_cochain(const Cochain& c, const groups::SubgroupSpec& H);

/// Module over Q = G/H sharing A's coordinates, acting through lifts, with
/// H-invariance recorded as value constraints.
ModulePtr quotient_module(ModulePtr A, const groups::QuotientPresentation& qp,
                          const groups::SubgroupSpec& H);

/// (Inf c)(g,g') = c(gH, g'H); values are already A-coordinates.
Cochain inflate(const Cochain& c_over_Q, const groups::QuotientPresentation& qp, ModulePtr A);

/// Hom_Z(Z[G], A) and Hom_Z(I_G, A) as plain modules; coordinates are blocks
/// of A-coordinates indexed by group elements (excluding e for the
/// augmentation flavor, where a block holds the value at g - 1).
struct InducedModule {
    ModulePtr base;
    ModulePtr mod;
    bool augmentation = false;
    long block(const groups::GroupElement& x) const; // block index of x (or x-1)
    Vec block_of(const Vec& v, const groups::GroupElement& x) const;
};

InducedModule induced_full(ModulePtr A);
InducedModule induced_aug(ModulePtr A);

/// The three arrows of 0 -> A -> Hom(Z[G],A) -> Hom(I_G,A) -> 0.
intlin::Mat ses_embed_matrix(const InducedModule& full);     // A -> full
intlin::Mat ses_project_matrix(const InducedModule& full, const InducedModule& aug);

/// delta: Z^1(G, Hom(I_G,A)) -> Z^2(G, A), (g,g') -> g.c1(g')(g^{-1}-1).
Cochain dim_shift_forward(const Cochain& c1, const InducedModule& aug);

/// delta^{-1}: g -> ((g'-1) -> g'.c2(g'^{-1}, g)).
Cochain dim_shift_backward(const Cochain& c2, const InducedModule& aug);

/// chi(s^i, s^j) = floor((i+j)/n) reindexed through s -> s^k; modulus 0
/// keeps exact Z coefficients.
Cochain cyclic_chi(long n, long k, const Int& modulus = 0);

/// Sum_{g in H} c(g, s), the Tate cup-product evaluation into degree 0.
Vec cup_h2_hminus2(const Cochain& c, const groups::GroupElement& s);

/// Witness b with chi - k*chi_k = db over Z; a failure is a lemma violation.
Cochain genchange_witness(long n, long k);

struct InfResData {
    std::map<groups::GroupElement, Vec> b;    // b_e = 0 included
    std::map<groups::GroupElement, Vec> eta;  // keyed by lex-least coset representative
    groups::QuotientPresentation qp;
    Cochain u;                                // over quotient_module(A, qp, H)
};

/**
 * The explicit inversion of inflation: given a 2-cocycle on G whose
 * restriction to H is a coboundary and H^1(H,A) = 0, produce b, eta and the
 * quotient cocycle u with Inf(u) cohomologous to c2. Preconditions are
 * checked and reported distinctly; an unsolvable inner system on a valid
 * instance is a proposition violation and throws.
 */
InfResData infres_invert(const groups::AbelianPresentation& G, const groups::SubgroupSpec& H,
                         ModulePtr A, const Cochain& c2, const Limits& lim = {});

/// Cross-check route for the b-family through the dimension shift: solves
/// Res(delta^{-1} c2) = d b0 over H and sets b_g = -g.b0(g^{-1}-1).
std::map<groups::GroupElement, Vec> infres_b_via_dimshift(const groups::AbelianPresentation& G,
                                                          const groups::SubgroupSpec& H,
                                                          ModulePtr A, const Cochain& c2,
                                                          const Limits& lim = {});

} // namespace fundclass::zmod
