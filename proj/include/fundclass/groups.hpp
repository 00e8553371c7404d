#pragma once

#include <map>
#include <string>
#include <vector>

#include "fundclass/errors.hpp"

namespace fundclass::groups {

struct GroupElement {
    std::vector<long> e; // componentwise reduced exponents

    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const { return e < o.e; }
};

/**
 * A finite abelian group presented as <s_0> + <s_1> + ... with fixed
 * generator orders. Elements are exponent vectors in normal form; no word
 * problem is ever solved. Trivial factors of order 1 are allowed and carried.
 */
struct AbelianPresentation {
    std::vector<long> orders;       // each >= 1
    std::vector<std::string> labels; // display names, defaulted to s0, s1, ...

    explicit AbelianPresentation(std::vector<long> ord, std::vector<std::string> lab = {});
    AbelianPresentation() = default;

    long rank() const { return static_cast<long>(orders.size()); }
    long order() const;

    GroupElement identity() const;
    GroupElement make(std::vector<long> exps) const; // reduces componentwise
    GroupElement generator(long i) const;

    GroupElement compose(const GroupElement& g, const GroupElement& h) const;
    GroupElement invert(const GroupElement& g) const;
    GroupElement power(const GroupElement& g, long k) const;
    long element_order(const GroupElement& g) const;
    bool is_identity(const GroupElement& g) const;

    /// Lexicographic rank of the exponent vector (first coordinate most
    /// significant); the inverse of enumerate_group's ordering.
    long rank_of(const GroupElement& g) const;
    GroupElement element_at(long rank) const;

    std::string format(const GroupElement& g) const; // "a0,a1"
    GroupElement parse(const std::string& s) const;

    std::string format_orders() const; // "4x2"

    bool operator==(const AbelianPresentation& o) const { return orders == o.orders; }
};

/// Deterministic lexicographic enumeration; errors if the order exceeds `bound`.
std::vector<GroupElement> enumerate_group(const AbelianPresentation& G, long bound = 1000000);

struct SubgroupSpec {
    std::vector<GroupElement> generators;
};

SubgroupSpec cyclic_subgroup(const AbelianPresentation& G, const GroupElement& g);

/// All elements of the subgroup generated by H.generators, sorted lexicographically.
std::vector<GroupElement> subgroup_elements(const AbelianPresentation& G, const SubgroupSpec& H);

struct CosetData {
    std::vector<GroupElement> representatives; // identity coset first; lex-least members
    std::map<GroupElement, long> rep_index;    // every g -> index of its representative
};

CosetData coset_data(const AbelianPresentation& G, const SubgroupSpec& H);

/**
 * Quotient Q = G/H as a new presentation, with maps both ways: proj sends a
 * G-element to its Q normal form, lift sends a Q-element to a chosen
 * G-representative. Computed by Smith reduction of the relation lattice.
 */
struct QuotientPresentation {
    AbelianPresentation Q;
    GroupElement proj(const GroupElement& g) const;
    GroupElement lift(const GroupElement& q) const;

    // internal transform data
    std::vector<std::vector<long>> proj_matrix; // Q.rank x G.rank
    std::vector<std::vector<long>> lift_matrix; // G.rank x Q.rank
    std::vector<long> g_orders;                 // for reducing lifts
};

QuotientPresentation quotient_presentation(const AbelianPresentation& G, const SubgroupSpec& H);

} // namespace fundclass::groups
