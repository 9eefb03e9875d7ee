#pragma once

// Cone counting, simpliciality spot checks, Betti numbers and Poincare
// polynomials for the fan whose cones are the vertex subsets containing no
// primitive collection.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmt/numeric.hpp"
#include "qmt/pseudofan.hpp"
#include "qmt/toricdata.hpp"

namespace qmt {

inline constexpr std::uint64_t default_node_budget = 200'000'000;

struct ConeCountTable {
    Degree degree;
    std::size_t kmax = 0;
    std::vector<std::uint64_t> counts;  // counts[k] = |Sigma(k)|, k = 0..kmax
    std::uint64_t nodes = 0;            // search nodes visited
};

/// Throws Error(kmax_out_of_range) if kmax > n and Error(budget_exceeded)
/// once more than `budget` cones have been visited.
ConeCountTable count_cones(const Degree& d, std::size_t kmax, std::uint64_t budget = default_node_budget);

struct SimplicialSampleReport {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<std::size_t> sizes;                       // |S| per trial
    std::optional<std::vector<ColLabel>> counterexample;  // first failing S

    bool all_passed() const { return passed == trials; }
};

/// Random maximal collection-avoiding subsets (greedy completion over a
/// shuffled vertex order); each must have n elements and V-columns of rank n.
SimplicialSampleReport verify_simplicial_sample(const Degree& d, std::size_t trials, std::uint64_t seed);

struct PoincarePolynomial {
    std::size_t n = 0;
    std::vector<BigInt> betti;  // betti[k] = b_(2k), k = 0..n; odd Betti numbers vanish

    bool symmetric() const;
    bool nonnegative() const;
    /// Equal to (1+t^2)^e?
    bool equals_binomial_power(std::size_t e) const;
    /// "(1+t^2)^n" when that is the value, else "1 + 9t^2 + 35t^4 + ...".
    std::string pretty() const;
};

/// Betti numbers from cone counts: the alternating binomial sum where the
/// needed counts are available, duality b_(2k) = b_(2(n-k)) elsewhere, and
/// a check that both agree wherever both apply.
/// Throws Error(insufficient_counts) if counts stop below floor(n/2) and
/// Error(precondition_violated) if formula and duality disagree.
PoincarePolynomial betti_numbers(const ConeCountTable& counts, std::size_t n);

struct PoincareResult {
    ConeCountTable counts;
    PoincarePolynomial polynomial;
    bool factored = false;                    // polynomial == (1+t^2)^n
    std::optional<bool> matches_d2_one_form;  // compared with (1+t^2)^(2 d1 + 3), only when d2 == 1
};

PoincareResult poincare_polynomial(const Degree& d, std::uint64_t budget = default_node_budget);

BigInt binomial(std::size_t n, std::size_t k);

}  // namespace qmt
