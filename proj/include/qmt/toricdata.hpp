#pragma once

// Labeled weight matrix W and vertex matrix V of the quasimap moduli space
// for bidegree (d1, d2) into P^1 x P^1.
//
// Column order (both matrices):
//   a^1 = (a_0^1..a_d1^1), a^2, b^1 = (b_0^1..b_d2^1), b^2,
//   u~_0 = (u_(0,1)..u_(0,d2)), u_i = (u_(i,0)..u_(i,d2)) for 1 <= i <= d1-1,
//   u~_d1 = (u_(d1,0)..u_(d1,d2-1)).
// W rows: z_0..z_d1, w_0..w_d2, f_(1,1)..f_(1,d2), ..., f_(d1,d2).
// V rows: z_0..z_d1, w_0..w_d2, g^(d1)_1..g^(d1)_(d1-1), g, g^(d2)_1..g^(d2)_(d2-1).

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qmt/matrix.hpp"

namespace qmt {

/// Bidegree (d1, d2) with d1 >= d2 > 0.
class Degree {
public:
    /// Throws Error(invalid_degree) unless d1 >= d2 > 0.
    Degree(int d1, int d2);

    int d1() const noexcept { return d1_; }
    int d2() const noexcept { return d2_; }

    /// Number of rays, (d1+3)(d2+3) - 6.
    std::size_t r() const noexcept;
    /// Lattice dimension, 2 d1 + 2 d2 + 1.
    std::size_t n() const noexcept;
    /// r - n = (d1+1)(d2+1) + 1.
    std::size_t torus_rank() const noexcept { return r() - n(); }

    friend bool operator==(const Degree&, const Degree&) = default;

private:
    int d1_;
    int d2_;
};

struct RowLabel {
    enum class Kind { z, w, f, g_d1, g, g_d2 };
    Kind kind;
    int i = 0;
    int j = 0;

    static RowLabel z(int i) { return {Kind::z, i, 0}; }
    static RowLabel w(int j) { return {Kind::w, 0, j}; }
    static RowLabel f(int i, int j) { return {Kind::f, i, j}; }
    static RowLabel g_d1(int i) { return {Kind::g_d1, i, 0}; }
    static RowLabel g() { return {Kind::g, 0, 0}; }
    static RowLabel g_d2(int j) { return {Kind::g_d2, 0, j}; }

    std::string str() const;
    friend auto operator<=>(const RowLabel&, const RowLabel&) = default;
};

struct ColLabel {
    enum class Kind { a, b, u };
    Kind kind;
    int copy = 0;  // superscript 1 or 2 for a and b; 0 for u
    int i = 0;
    int j = 0;

    static ColLabel a(int copy, int i) { return {Kind::a, copy, i, 0}; }
    static ColLabel b(int copy, int j) { return {Kind::b, copy, 0, j}; }
    static ColLabel u(int i, int j) { return {Kind::u, 0, i, j}; }

    std::string str() const;
    friend auto operator<=>(const ColLabel&, const ColLabel&) = default;
};

/// Index set I = ({0..d1} x {0..d2}) minus {(0,0), (d1,d2)}, in column order.
std::vector<std::pair<int, int>> u_index_set(const Degree& d);

std::vector<ColLabel> column_labels(const Degree& d);
std::vector<RowLabel> weight_row_labels(const Degree& d);
std::vector<RowLabel> vertex_row_labels(const Degree& d);

// Positional lookups (0-based) for the fixed layouts above.
std::size_t a_col(const Degree& d, int copy, int i);
std::size_t b_col(const Degree& d, int copy, int j);
std::size_t u_col(const Degree& d, int i, int j);
bool in_u_index_set(const Degree& d, int i, int j);
std::size_t z_row(const Degree& d, int i);
std::size_t w_row(const Degree& d, int j);
std::size_t f_row(const Degree& d, int i, int j);

struct LabeledIntMatrix {
    IntMatrix matrix;
    std::vector<RowLabel> row_labels;
    std::vector<ColLabel> col_labels;

    /// Throws Error(invalid_input) if the label is absent.
    std::size_t row_of(const RowLabel& label) const;
    std::size_t col_of(const ColLabel& label) const;
};

LabeledIntMatrix build_weight_matrix(const Degree& d);
LabeledIntMatrix build_vertex_matrix(const Degree& d);

/// Bordered layout with block separators, one line per row.
std::string pretty_bordered(const LabeledIntMatrix& m);

struct IdentityCheck {
    int identity;  // 1..4 for the four column-sum identities
    int i;
    int j;         // unused (0) for identities 1 and 2
    bool passed;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
    std::size_t count(int identity) const;
};

/// Checks the column-sum identities of the u-columns of W, looking columns
/// and rows up by label:
///   (1) sum_j w_u(i,j) = -e_z(i-1) + 2 e_z(i) - e_z(i+1),      1 <= i <= d1-1
///   (2) sum_i w_u(i,j) = -e_w(j-1) + 2 e_w(j) - e_w(j+1),      1 <= j <= d2-1
///   (3) f-part of sum_{p<i, q>j} w_u(p,q) = e_f(i,j+1),        1 <= i <= d1, 0 <= j <= d2-1
///   (4) f-part of sum_{p>i, q<j} w_u(p,q) = e_f(i+1,j),        0 <= i <= d1-1, 1 <= j <= d2
/// The degree is read off the row labels.
IdentityReport verify_column_identities(const LabeledIntMatrix& w);

}  // namespace qmt
