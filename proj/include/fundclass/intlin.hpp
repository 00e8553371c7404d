#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "fundclass/errors.hpp"

namespace fundclass::intlin {

using Int = mpz_class;

/// Dense integer matrix, row major.
struct Mat {
    long rows = 0, cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Int& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(long n);
    Mat mul(const Mat& other) const;
    std::vector<Int> apply(const std::vector<Int>& x) const; // this * x
    Mat transposed() const;
};

/**
 * Smith normal form U*A*V = D with U, V unimodular. The diagonal of D is
 * returned in `diag` (nonnegative, each dividing the next); `uinv` and
 * `vinv` are the inverses of the accumulated transforms, tracked during
 * elimination so no unimodular inversion is needed afterwards.
 */
struct SmithResult {
    std::vector<Int> diag; // length min(rows, cols)
    Mat u, uinv;           // rows x rows
    Mat v, vinv;           // cols x cols
    long rank = 0;         // number of nonzero diagonal entries
};

SmithResult smith_normal_form(Mat A);

/// Columns spanning the integer kernel of A (a lattice basis, possibly empty).
Mat integer_kernel(const Mat& A);

/**
 * Canonical solution of A x = b over the integers, if one exists: the
 * Smith-form back substitution with every free parameter set to zero.
 */
std::optional<std::vector<Int>> solve_integer(const Mat& A, const std::vector<Int>& b);

/**
 * Solve A x = b where equation i holds modulo row_moduli[i] and unknown j is
 * reduced modulo col_moduli[j]; modulus 0 means "over Z exactly". Slack
 * columns for the nonzero row moduli are appended internally, and the
 * returned x is reduced into [0, col_moduli[j]).
 */
std::optional<std::vector<Int>> solve_mod(const Mat& A, const std::vector<Int>& b,
                                          const std::vector<Int>& row_moduli,
                                          const std::vector<Int>& col_moduli);

/**
 * Invariant factors of the quotient L/B of two lattices B <= L <= Z^n, each
 * given by generator columns (the ambient relation lattice must already be
 * included in both generator sets so the quotient is finite). Also returns
 * ambient-coordinate lifts of a generating set, one per invariant factor > 1.
 */
struct QuotientResult {
    std::vector<Int> factors;             // invariant factors > 1, divisibility chain
    std::vector<std::vector<Int>> gens;   // ambient lifts, one per factor
};

QuotientResult lattice_quotient(const Mat& Lgens, const Mat& Bgens);

Int mod_reduce(const Int& a, const Int& m); // representative in [0, m); identity when m == 0

} // namespace fundclass::intlin
