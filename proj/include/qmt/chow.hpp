#pragma once

// Chow group basis, Chow ring presentation Q[h_1..h_(r-n)] / (relations),
// graded dimensions of the quotient ring, and the homogeneous-coordinate
// description of the moduli space.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qmt/pseudofan.hpp"
#include "qmt/toricdata.hpp"

namespace qmt {

struct ChowGroupBasis {
    IntMatrix beta;             // r x (r-n), W * beta = I
    IntMatrix divisor_classes;  // (r-n) x r; column j holds the class of D_j in the basis E_i

    std::vector<std::int64_t> divisor_class(std::size_t j) const { return divisor_classes.column(j); }
};

/// Throws Error(not_surjective) if W has no integer right inverse.
ChowGroupBasis chow_group_basis(const LabeledIntMatrix& w);

/// Integer coefficients over h_1..h_m.
using LinearForm = std::vector<std::int64_t>;

/// "-h2-h3+h5"; "0" for the zero form.
std::string format_linear_form(const LinearForm& f);

struct Relation {
    std::vector<ColLabel> members;
    std::vector<LinearForm> factors;  // one per member, in member order

    /// Repeated adjacent factors are written as powers: "h2^2(-h1+h2+h6-h7)".
    std::string str() const;
    /// Same product with explicit '*', for computer algebra input.
    std::string cas_str() const;
};

struct ChowPresentation {
    std::size_t num_generators = 0;
    std::vector<Relation> relations;
};

ChowPresentation chow_presentation(const Degree& d);

inline constexpr std::uint64_t default_graded_budget = 2'000'000;

/// dim_Q of the degree-k piece for k = 0..kmax, by exact rank computation on
/// monomial bases. Throws Error(budget_exceeded) if the number of monomials or
/// relation multiples in some degree exceeds `budget`.
std::vector<std::size_t> graded_dimensions(const ChowPresentation& p, std::size_t kmax,
                                           std::uint64_t budget = default_graded_budget);

/// Dialects: "generic" (Macaulay2-style ring and ideal) and "plain".
/// Throws Error(unknown_dialect) otherwise.
std::string emit_cas_script(const ChowPresentation& p, std::string_view dialect);

struct ModuliPresentation {
    Degree degree;
    std::vector<ColLabel> coordinates;               // a_0, ..., a_d1, b_0, ..., b_d2, u~_0, u_1, ..., u~_d1
    std::size_t torus_rank = 0;
    LabeledIntMatrix weights;                        // columns follow `coordinates`
    std::vector<std::vector<ColLabel>> excluded_locus;  // {x_rho = 0 for rho in S}, one per collection

    /// "{a_0 = 0}" for a pair a_i^1, a_i^2 (likewise b), otherwise
    /// "{(u_(0,1), u_(1,0)) = (0,0)}".
    std::string locus_str(std::size_t k) const;
};

ModuliPresentation moduli_presentation(const Degree& d);

}  // namespace qmt
