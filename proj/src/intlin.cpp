#include "fundclass/intlin.hpp"

#include <algorithm>

namespace fundclass::intlin {

Mat Mat::identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::mul(const Mat& other) const {
    if (cols != other.rows) throw input_error("matrix shape mismatch in mul");
    Mat r(rows, other.cols);
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (long j = 0; j < other.cols; ++j)
                r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

std::vector<Int> Mat::apply(const std::vector<Int>& x) const {
    if (static_cast<long>(x.size()) != cols) throw input_error("vector length mismatch in apply");
    std::vector<Int> y(rows, 0);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

Mat Mat::transposed() const {
    Mat t(cols, rows);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Int mod_reduce(const Int& a, const Int& m) {
    if (m == 0) return a;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

struct Eliminator {
    Mat A, U, Uinv, V, Vinv;

    explicit Eliminator(Mat a)
        : A(std::move(a)),
          U(Mat::identity(A.rows)),
          Uinv(Mat::identity(A.rows)),
          V(Mat::identity(A.cols)),
          Vinv(Mat::identity(A.cols)) {}

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (long c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (long r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }

    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (long r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (long c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }

    // row i -= q * row k
    void row_sub(long i, long k, const Int& q) {
        if (q == 0) return;
        for (long c = 0; c < A.cols; ++c)
            if (A.at(k, c) != 0) A.at(i, c) -= q * A.at(k, c);
        for (long c = 0; c < U.cols; ++c)
            if (U.at(k, c) != 0) U.at(i, c) -= q * U.at(k, c);
        for (long r = 0; r < Uinv.rows; ++r)
            if (Uinv.at(r, i) != 0) Uinv.at(r, k) += q * Uinv.at(r, i);
    }

    // col j -= q * col k
    void col_sub(long j, long k, const Int& q) {
        if (q == 0) return;
        for (long r = 0; r < A.rows; ++r)
            if (A.at(r, k) != 0) A.at(r, j) -= q * A.at(r, k);
        for (long r = 0; r < V.rows; ++r)
            if (V.at(r, k) != 0) V.at(r, j) -= q * V.at(r, k);
        for (long c = 0; c < Vinv.cols; ++c)
            if (Vinv.at(j, c) != 0) Vinv.at(k, c) += q * Vinv.at(j, c);
    }

    void negate_row(long i) {
        for (long c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
        for (long c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
        for (long r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
};

// quotient with remainder of least absolute value
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int babs = abs(b);
    if (r * 2 > babs) q += 1;
    return q;
}

} // namespace

SmithResult smith_normal_form(Mat A0) {
    Eliminator e(std::move(A0));
    Mat& A = e.A;
    const long m = A.rows, n = A.cols;
    const long lim = std::min(m, n);

    for (long k = 0; k < lim; ++k) {
        // choose the entry of least absolute value as pivot; |x| = 1 can't be beaten
        long pi = -1, pj = -1;
        Int best = 0;
        for (long i = k; i < m && best != 1; ++i)
            for (long j = k; j < n; ++j) {
                const Int& x = A.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || abs(x) < best) {
                    best = abs(x);
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (pi < 0) break; // submatrix is zero
        e.swap_rows(k, pi);
        e.swap_cols(k, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (long i = k + 1; i < m; ++i) {
                if (A.at(i, k) == 0) continue;
                Int q = nearest_quotient(A.at(i, k), A.at(k, k));
                e.row_sub(i, k, q);
                if (A.at(i, k) != 0) {
                    e.swap_rows(i, k); // strictly smaller pivot
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (long j = k + 1; j < n; ++j) {
                if (A.at(k, j) == 0) continue;
                Int q = nearest_quotient(A.at(k, j), A.at(k, k));
                e.col_sub(j, k, q);
                if (A.at(k, j) != 0) {
                    e.swap_cols(j, k);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the rest of the submatrix for a true Smith chain
            for (long i = k + 1; i < m && !dirty; ++i)
                for (long j = k + 1; j < n && !dirty; ++j)
                    if (A.at(i, j) % A.at(k, k) != 0) {
                        e.row_sub(k, i, Int(-1)); // row k += row i, then re-clear
                        dirty = true;
                    }
        }
        if (A.at(k, k) < 0) e.negate_row(k);
    }

    SmithResult res;
    res.u = std::move(e.U);
    res.uinv = std::move(e.Uinv);
    res.v = std::move(e.V);
    res.vinv = std::move(e.Vinv);
    res.diag.resize(lim);
    for (long k = 0; k < lim; ++k) {
        res.diag[k] = A.at(k, k);
        if (res.diag[k] != 0) res.rank = k + 1;
    }
    return res;
}

Mat integer_kernel(const Mat& A) {
    SmithResult s = smith_normal_form(A);
    long free_cols = A.cols - s.rank;
    Mat K(A.cols, free_cols);
    for (long j = 0; j < free_cols; ++j)
        for (long i = 0; i < A.cols; ++i) K.at(i, j) = s.v.at(i, s.rank + j);
    return K;
}

std::optional<std::vector<Int>> solve_integer(const Mat& A, const std::vector<Int>& b) {
    if (static_cast<long>(b.size()) != A.rows) throw input_error("rhs length mismatch");
    SmithResult s = smith_normal_form(A);
    std::vector<Int> ub = s.u.apply(b);
    std::vector<Int> z(A.cols, 0);
    long lim = static_cast<long>(s.diag.size());
    for (long i = 0; i < A.rows; ++i) {
        if (i < lim && s.diag[i] != 0) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ub[i].get_mpz_t(), s.diag[i].get_mpz_t());
            if (r != 0) return std::nullopt;
            z[i] = q;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(z);
}

std::optional<std::vector<Int>> solve_mod(const Mat& A, const std::vector<Int>& b,
                                          const std::vector<Int>& row_moduli,
                                          const std::vector<Int>& col_moduli) {
    if (static_cast<long>(row_moduli.size()) != A.rows ||
        static_cast<long>(col_moduli.size()) != A.cols)
        throw input_error("moduli length mismatch");
    long slack = 0;
    for (const Int& m : row_moduli)
        if (m != 0) ++slack;
    Mat Aug(A.rows, A.cols + slack);
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.cols; ++j) Aug.at(i, j) = A.at(i, j);
    long c = A.cols;
    for (long i = 0; i < A.rows; ++i)
        if (row_moduli[i] != 0) Aug.at(i, c++) = row_moduli[i];
    auto sol = solve_integer(Aug, b);
    if (!sol) return std::nullopt;
    std::vector<Int> x(sol->begin(), sol->begin() + A.cols);
    for (long j = 0; j < A.cols; ++j) x[j] = mod_reduce(x[j], col_moduli[j]);
    return x;
}

QuotientResult lattice_quotient(const Mat& Lgens, const Mat& Bgens) {
    const long n = Lgens.rows;
    if (Bgens.rows != n) throw input_error("ambient dimension mismatch");
    SmithResult sl = smith_normal_form(Lgens);
    if (sl.rank != n) throw input_error("lattice quotient requires a full-rank lattice");
    // column lattice of Lgens = column lattice of uinv * diag(sl.diag)
    // express Bgens columns: W = diag^{-1} * U * Bgens, entrywise exact
    Mat UB = sl.u.mul(Bgens);
    Mat W(n, Bgens.cols);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < Bgens.cols; ++j) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), UB.at(i, j).get_mpz_t(),
                        sl.diag[i].get_mpz_t());
            if (r != 0) throw input_error("second lattice is not contained in the first");
            W.at(i, j) = q;
        }
    SmithResult sw = smith_normal_form(W);
    if (sw.rank != n) throw input_error("lattice quotient is infinite");
    QuotientResult out;
    for (long i = 0; i < n; ++i) {
        if (sw.diag[i] == 1) continue;
        out.factors.push_back(sw.diag[i]);
        // ambient lift: basisL * (column i of sw.uinv), basisL = uinv*diag
        std::vector<Int> zcol(n);
        for (long r = 0; r < n; ++r) zcol[r] = sw.uinv.at(r, i) * sl.diag[r];
        out.gens.push_back(sl.uinv.apply(zcol));
    }
    return out;
}

} // namespace fundclass::intlin
