#include "fwps/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace fwps {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    if (inv) {
        if (r == 0) throw non_integral_bound_error();
        r = 1 / r;
    }
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw dimension_mismatch_error();
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
    if (m.cols != v.size()) throw dimension_mismatch_error();
    IntVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
    return r;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
    return r;
}

int compare_flat(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows != y.rows) return x.rows < y.rows ? -1 : 1;
    if (x.cols != y.cols) return x.cols < y.cols ? -1 : 1;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        int c = cmp(x.a[i], y.a[i]);
        if (c != 0) return c;
    }
    return 0;
}

Int gcd_vec(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int det(const IntMatrix& m) {
    if (m.rows != m.cols) throw dimension_mismatch_error();
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
    if (m.rows != m.cols) throw dimension_mismatch_error();
    std::size_t n = m.rows;
    IntMatrix r(n, n);
    if (n == 1) {
        r(0, 0) = 1;
        return r;
    }
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mi = 0;
            for (std::size_t p = 0; p < n; ++p) {
                if (p == i) continue;
                std::size_t mj = 0;
                for (std::size_t q = 0; q < n; ++q) {
                    if (q == j) continue;
                    minor(mi, mj) = m(p, q);
                    ++mj;
                }
                ++mi;
            }
            Int c = det(minor);
            r(j, i) = ((i + j) % 2 == 0) ? c : -c; // adj = transpose of cofactors
        }
    return r;
}

namespace {

// Unimodular combination of rows i and j of w (and mirror) driving w(j,col)
// to gcd and w(i,col) to 0.
void row_gcd_op(IntMatrix& w, IntMatrix* mirror, std::size_t pivot, std::size_t other,
                std::size_t col) {
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), w(pivot, col).get_mpz_t(),
               w(other, col).get_mpz_t());
    Int alpha = w(pivot, col) / g;
    Int beta = w(other, col) / g;
    auto combine = [&](IntMatrix& m) {
        for (std::size_t k = 0; k < m.cols; ++k) {
            Int x = m(pivot, k), y = m(other, k);
            m(pivot, k) = p * x + q * y;
            m(other, k) = alpha * y - beta * x;
        }
    };
    combine(w);
    if (mirror) combine(*mirror);
}

void col_gcd_op(IntMatrix& w, IntMatrix* mirror, std::size_t pivot, std::size_t other,
                std::size_t row) {
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), w(row, pivot).get_mpz_t(),
               w(row, other).get_mpz_t());
    Int alpha = w(row, pivot) / g;
    Int beta = w(row, other) / g;
    auto combine = [&](IntMatrix& m) {
        for (std::size_t k = 0; k < m.rows; ++k) {
            Int x = m(k, pivot), y = m(k, other);
            m(k, pivot) = p * x + q * y;
            m(k, other) = alpha * y - beta * x;
        }
    };
    combine(w);
    if (mirror) combine(*mirror);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = -m(i, j);
}

// Shared elimination for hnf/hnf_basis: brings w into row HNF, mirroring row
// operations on u when given. Returns the pivot count (row rank).
std::size_t hnf_eliminate(IntMatrix& w, IntMatrix* u) {
    std::size_t pr = 0; // next pivot row
    for (std::size_t j = 0; j < w.cols && pr < w.rows; ++j) {
        for (std::size_t i = pr + 1; i < w.rows; ++i)
            if (w(i, j) != 0) row_gcd_op(w, u, pr, i, j);
        if (w(pr, j) == 0) continue;
        if (w(pr, j) < 0) {
            negate_row(w, pr);
            if (u) negate_row(*u, pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w(i, j).get_mpz_t(), w(pr, j).get_mpz_t());
            if (q != 0) {
                for (std::size_t k = 0; k < w.cols; ++k) w(i, k) -= q * w(pr, k);
                if (u)
                    for (std::size_t k = 0; k < u->cols; ++k) (*u)(i, k) -= q * (*u)(pr, k);
            }
        }
        ++pr;
    }
    return pr;
}

} // namespace

HnfResult hnf(const IntMatrix& m) {
    if (m.rows != m.cols) throw dimension_mismatch_error();
    IntMatrix w = m;
    IntMatrix u = IntMatrix::identity(m.rows);
    std::size_t rank = hnf_eliminate(w, &u);
    if (rank != m.rows) throw singular_matrix_error();
    return {std::move(w), std::move(u)};
}

IntMatrix hnf_basis(const IntMatrix& m) {
    IntMatrix w = m;
    std::size_t rank = hnf_eliminate(w, nullptr);
    if (rank != m.cols) throw not_full_rank_error();
    IntMatrix basis(m.cols, m.cols);
    for (std::size_t i = 0; i < m.cols; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) basis(i, j) = w(i, j);
    return basis;
}

SnfResult snf(const IntMatrix& m) {
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(m.rows);
    IntMatrix v = IntMatrix::identity(m.cols);
    std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t) {
        // pivot: nonzero entry of smallest absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j)
                if (s(i, j) != 0 &&
                    (!found || cmp(abs(s(i, j)), abs(s(pi, pj))) < 0)) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t)
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(s(t, k), s(pi, k));
        if (pi != t)
            for (std::size_t k = 0; k < u.cols; ++k) std::swap(u(t, k), u(pi, k));
        if (pj != t)
            for (std::size_t k = 0; k < m.rows; ++k) std::swap(s(k, t), s(k, pj));
        if (pj != t)
            for (std::size_t k = 0; k < v.rows; ++k) std::swap(v(k, t), v(k, pj));

        for (;;) {
            for (std::size_t i = t + 1; i < m.rows; ++i)
                if (s(i, t) != 0) row_gcd_op(s, &u, t, i, t);
            bool row_clear = true;
            for (std::size_t j = t + 1; j < m.cols; ++j)
                if (s(t, j) != 0) {
                    col_gcd_op(s, &v, t, j, t);
                    row_clear = false;
                }
            if (!row_clear) continue; // column ops may have dirtied column t
            bool col_clear = true;
            for (std::size_t i = t + 1; i < m.rows; ++i)
                if (s(i, t) != 0) col_clear = false;
            if (!col_clear) continue;

            // enforce divisibility of the trailing block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < m.rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < m.cols && !fixed; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        for (std::size_t k = 0; k < m.cols; ++k) s(t, k) += s(i, k);
                        for (std::size_t k = 0; k < u.cols; ++k) u(t, k) += u(i, k);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
    return {std::move(s), std::move(u), std::move(v)};
}

RatVec solve_rational(const IntMatrix& m, const IntVec& b) {
    if (m.rows != m.cols || b.size() != m.rows) throw dimension_mismatch_error();
    std::size_t n = m.rows;
    std::vector<RatVec> w(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m(i, j));
        w[i][n] = Rat(b[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w[p][k] == 0) ++p;
        if (p == n) throw singular_matrix_error();
        std::swap(w[k], w[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w[i][k] == 0) continue;
            Rat f = w[i][k] / w[k][k];
            for (std::size_t j = k; j <= n; ++j) w[i][j] -= f * w[k][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = w[i][n] / w[i][i];
    return x;
}

LatticeIndex lattice_index(const std::vector<IntVec>& vectors) {
    if (vectors.empty()) throw not_full_rank_error();
    std::size_t d = vectors[0].size();
    IntMatrix m(vectors.size(), d);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != d) throw dimension_mismatch_error();
        for (std::size_t j = 0; j < d; ++j) m(i, j) = vectors[i][j];
    }
    SnfResult r = snf(m);
    LatticeIndex out{Int(1), {}};
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(m.rows, m.cols); ++i) {
        if (r.s(i, i) == 0) break;
        ++rank;
        out.index *= r.s(i, i);
        if (r.s(i, i) > 1) out.invariant_factors.push_back(r.s(i, i));
    }
    if (rank != d) throw not_full_rank_error();
    return out;
}

} // namespace fwps
