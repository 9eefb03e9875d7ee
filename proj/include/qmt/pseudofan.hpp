#pragma once

// Primitive collections of the fan and the min-value system
//
//   min_{rho in P} { -y_rho + sum_mu w_(mu,rho) x_mu } = 0   for every collection P,
//
// solved layer by layer: boundary maxes, the z/w tridiagonal min systems,
// the reduction to y', and the rectangular-sum formula for the f-rows.

#include <cstddef>
#include <vector>

#include "qmt/numeric.hpp"
#include "qmt/toricdata.hpp"

namespace qmt {

class PrimitiveCollectionSet {
public:
    explicit PrimitiveCollectionSet(const Degree& d);

    const Degree& degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return collections_.size(); }

    /// Members as column indices, ascending; collections sorted lexicographically.
    const std::vector<std::vector<std::size_t>>& indices() const noexcept { return collections_; }
    std::vector<ColLabel> labels(std::size_t k) const;

    /// Collections containing column c.
    const std::vector<std::size_t>& containing(std::size_t c) const { return by_column_[c]; }

private:
    Degree degree_;
    std::vector<std::vector<std::size_t>> collections_;
    std::vector<std::vector<std::size_t>> by_column_;
};

PrimitiveCollectionSet build_primitive_collections(const Degree& d);

/// Closed-form cardinality of the family, for cross-checking.
std::size_t expected_collection_count(const Degree& d);

struct MinValueSystem {
    Degree degree;
    std::vector<Rational> y;  // indexed by column, length r
};

struct MinValueSolution {
    std::vector<Rational> x;              // indexed by W row, length r - n
    std::vector<Rational> residuals;      // min over members, one per collection
    std::vector<Rational> member_values;  // -y_rho + (tW x)_rho, one per column

    bool satisfies_amvc() const;
};

struct BoundaryValues {
    Rational z0, zd1, w0, wd2;
};

BoundaryValues solve_boundary(const Degree& d, const std::vector<Rational>& y);

/// Interior values x_1..x_m (m = a.size()) of the chain with fixed ends
/// x_0 = left, x_(m+1) = right satisfying
///   min{ -a_i + x_i, -c_i - x_(i-1) + 2 x_i - x_(i+1) } = 0.
/// Throws Error(no_solution) or Error(multiple_solutions) if the solution is
/// not unique.
std::vector<Rational> solve_tridiagonal_min_system(const Rational& left, const Rational& right,
                                                   const std::vector<Rational>& a,
                                                   const std::vector<Rational>& c);

/// Values on the (d1+1) x (d2+1) grid; entries outside I are zero.
class IndexGrid {
public:
    explicit IndexGrid(const Degree& d);

    Rational& operator()(int i, int j) { return v_[idx(i, j)]; }
    const Rational& operator()(int i, int j) const { return v_[idx(i, j)]; }
    const Degree& degree() const noexcept { return degree_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * (degree_.d2() + 1) + j); }
    Degree degree_;
    std::vector<Rational> v_;
};

IndexGrid reduce_to_y_prime(const Degree& d, const std::vector<Rational>& y,
                            const std::vector<Rational>& xz, const std::vector<Rational>& xw);

/// x_(i,j) in f-row order. Throws Error(precondition_violated) unless every
/// interior row sum (1 <= i <= d1-1) and column sum (1 <= j <= d2-1) of y' is <= 0.
std::vector<Rational> solve_f_layer(const IndexGrid& y_prime);

/// Caches W and the collections for repeated solves at one degree.
class AmvcSolver {
public:
    explicit AmvcSolver(const Degree& d);

    const Degree& degree() const noexcept { return degree_; }
    const IntMatrix& weight() const noexcept { return w_; }
    const PrimitiveCollectionSet& collections() const noexcept { return pi_; }

    /// Throws Error(invalid_input) on a y of the wrong length and
    /// Error(residual_nonzero) if the assembled x fails the system.
    MinValueSolution solve(const std::vector<Rational>& y) const;

    /// Member values and residuals of an arbitrary x.
    MinValueSolution evaluate(const std::vector<Rational>& y, std::vector<Rational> x) const;

    /// Every x that solves the system, found by choosing one active member per
    /// collection and solving the resulting linear equations exactly.
    /// Deduplicated by x, sorted. Throws Error(guard_exceeded) when there are
    /// more than `guard` collections.
    std::vector<MinValueSolution> enumerate(const std::vector<Rational>& y, std::size_t guard = 24) const;

private:
    void check_length(const std::vector<Rational>& y) const;

    Degree degree_;
    IntMatrix w_;
    PrimitiveCollectionSet pi_;
};

MinValueSolution solve_amvc(const MinValueSystem& sys);
std::vector<MinValueSolution> enumerate_activity_patterns(const MinValueSystem& sys, std::size_t guard = 24);

}  // namespace qmt
