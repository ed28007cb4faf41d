#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fwps/errors.hpp"

namespace fwps {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// b^e for integer e, with rational result (e may be negative).
Rat rat_pow(const Rat& base, long e);
Int int_pow(const Int& base, unsigned long e);

// Dense row-major matrix of arbitrary-precision integers.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static IntMatrix identity(std::size_t n);

    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntVec mat_vec(const IntMatrix& m, const IntVec& v); // column convention: m * v
IntMatrix transpose(const IntMatrix& m);

// Lexicographic comparison of the flattened entries (shape first).
int compare_flat(const IntMatrix& x, const IntMatrix& y);

// Nonnegative gcd of the entries; 0 only if all entries are 0.
Int gcd_vec(const IntVec& v);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

// Adjugate matrix: adj(A) * A = det(A) * I.
IntMatrix adjugate(const IntMatrix& m);

// Row-style Hermite normal form of a square nonsingular matrix.
// U * A = H with |det U| = 1, H upper triangular, H(i,i) > 0 and
// 0 <= H(i,j) < H(j,j) for i < j. Unique per left-unimodular class.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);

// HNF basis of the row lattice of a (possibly rectangular) matrix whose rows
// span full column rank; returns the square upper-triangular basis.
IntMatrix hnf_basis(const IntMatrix& m);

// Smith normal form: U * A * V = S with U, V unimodular, S diagonal,
// S(i,i) >= 0 and S(i,i) | S(i+1,i+1).
struct SnfResult {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};
SnfResult snf(const IntMatrix& m);

// Exact solution of A x = b; throws singular_matrix_error when det A = 0.
RatVec solve_rational(const IntMatrix& m, const IntVec& b);

// Index of the sublattice generated by the given vectors in Z^d, together
// with the invariant factors (> 1) of the quotient group.
struct LatticeIndex {
    Int index;
    std::vector<Int> invariant_factors;
};
LatticeIndex lattice_index(const std::vector<IntVec>& vectors);

} // namespace fwps
