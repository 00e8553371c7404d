#pragma once

#include <cstdint>
#include <vector>

#include "fundclass/errors.hpp"

namespace fundclass::fq {

/// Element of F_{p^d}, stored as coefficients c[0..d-1] of a polynomial in
/// the field generator, c[j] in [0,p).
using FqElem = std::vector<long>;

/**
 * The residue field F_{p^d} = F_p[y]/(h), h monic irreducible of degree d.
 *
 * Sizes stay at desk scale (p^d <= 10^6 by default), so elements use plain
 * machine integers and the discrete-log table is a dense array over the
 * whole multiplicative group.
 */
class SmallFq {
public:
    SmallFq(long p, std::vector<long> modulus_poly);

    long p() const { return p_; }
    long degree() const { return d_; }
    long q() const { return q_; } // p^d
    const std::vector<long>& modulus() const { return h_; }

    FqElem zero() const { return FqElem(d_, 0); }
    FqElem one() const;
    FqElem from_int(long a) const;

    bool is_zero(const FqElem& a) const;
    bool equal(const FqElem& a, const FqElem& b) const { return a == b; }

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem pow(const FqElem& a, long long k) const; // k >= 0
    FqElem inv(const FqElem& a) const;

    /// Frobenius x -> x^p applied k times.
    FqElem frobenius(const FqElem& a, long k = 1) const;

    /// Encodes an element as sum c[j] p^j in [0, q).
    long encode(const FqElem& a) const;
    FqElem decode(long code) const;

    /// Multiplicative order; errors on zero.
    long element_order(const FqElem& a) const;

    /// The element of least encoding with multiplicative order q-1.
    FqElem canonical_generator() const;

    /// Discrete log base canonical_generator(); errors on zero. The lookup
    /// table (q entries) is built lazily on first use.
    long dlog(const FqElem& a) const;

    /// Trace down to F_{p^f} for f | d: a + a^{p^f} + ... (d/f terms).
    FqElem trace_to(const FqElem& a, long f) const;

    /// Lexicographically least monic irreducible polynomial of degree d over
    /// F_p (coefficients compared as the integer sum c_j p^j, constant term
    /// least significant). Returned as coefficient list of length d+1.
    static std::vector<long> least_irreducible(long p, long d);

private:
    long p_, d_, q_;
    std::vector<long> h_; // monic, length d_+1
    mutable std::vector<int32_t> dlog_table_; // index: encode(x), value: dlog
    mutable FqElem gen_;

    void ensure_tables() const;
    std::vector<long> reduce(std::vector<long> poly) const;
};

/// Factor n > 0 by trial division; returns prime, exponent pairs.
std::vector<std::pair<long, int>> trial_factor(long n);

bool is_prime_small(long n);

} // namespace fundclass::fq
