#pragma once

// Exact integer linear algebra: Smith normal form, ranks, right inverses and
// certification of the sequence 0 -> Z^n --tV--> Z^r --W--> Z^(r-n) -> 0.
//
// Fixed-width kernels run on checked int64 and throw OverflowError when an
// intermediate leaves the representable range. The convenience entry points
// (integer_rank, invariant_factors, verify_exact_sequence, integer_right_inverse)
// catch that and rerun the same algorithm on BigInt.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qmt/matrix.hpp"

namespace qmt {

template <class T>
struct BasicSnf {
    Matrix<T> left;       // unimodular, rows x rows
    std::vector<T> diag;  // min(rows, cols) invariant factors, nonzero ones first
    Matrix<T> right;      // unimodular, cols x cols

    std::size_t rank() const
    {
        std::size_t k = 0;
        for (const auto& d : diag)
            if (d != 0)
                ++k;
        return k;
    }

    /// The rows x cols matrix with diag on its main diagonal.
    Matrix<T> diagonal_form() const
    {
        Matrix<T> d(left.rows(), right.rows());
        for (std::size_t i = 0; i < diag.size(); ++i)
            d(i, i) = diag[i];
        return d;
    }
};

using SnfDecomposition = BasicSnf<std::int64_t>;
using BigSnfDecomposition = BasicSnf<BigInt>;

/// Smith normal form on checked 64-bit integers.
///
/// Pivot rule: smallest nonzero absolute value in the active submatrix,
/// ties broken by lowest (row, col) in row-major order. The result is
/// therefore a deterministic function of the input.
///
/// Throws Error(invalid_input) for an empty matrix and OverflowError when
/// an intermediate does not fit in int64.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Same algorithm on arbitrary-precision integers.
BigSnfDecomposition smith_normal_form(const BigIntMatrix& m);

/// Invariant factors, escalating to BigInt on overflow.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

/// Rank over Q (number of nonzero invariant factors). Zero for empty input.
std::size_t integer_rank(const IntMatrix& m);

/// Rank over Q by Gaussian elimination on exact rationals.
std::size_t rational_rank(RationalMatrix m);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
BigInt determinant(const BigIntMatrix& m);

struct ExactnessReport {
    bool orthogonal = false;    // W * tV == 0
    bool v_full_rank = false;   // rank V == n
    bool w_full_rank = false;   // rank W == r - n
    bool v_saturated = false;   // all invariant factors of V equal 1
    bool w_surjective = false;  // all invariant factors of W equal 1
    std::size_t rank_v = 0;
    std::size_t rank_w = 0;

    bool exact() const
    {
        return orthogonal && v_full_rank && w_full_rank && v_saturated && w_surjective;
    }
};

/// Checks each of the five conditions independently.
/// Throws Error(dimension_mismatch) unless V is n x r and W is (r-n) x r.
ExactnessReport verify_exact_sequence(const IntMatrix& v, const IntMatrix& w);

/// Integer B (cols x rows) with W * B = I. Throws Error(not_surjective) if
/// W has an invariant factor different from 1 or more rows than columns.
IntMatrix integer_right_inverse(const IntMatrix& w);

}  // namespace qmt
