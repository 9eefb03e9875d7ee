#include "qmt/toricdata.hpp"

#include <algorithm>
#include <sstream>

namespace qmt {

Degree::Degree(int d1, int d2) : d1_(d1), d2_(d2)
{
    if (!(d2 > 0 && d1 >= d2))
        throw Error(ErrorCode::invalid_degree,
                    "invalid degree (" + std::to_string(d1) + "," + std::to_string(d2) +
                        "): need d1 >= d2 > 0");
}

std::size_t Degree::r() const noexcept
{
    return static_cast<std::size_t>((d1_ + 3) * (d2_ + 3) - 6);
}

std::size_t Degree::n() const noexcept
{
    return static_cast<std::size_t>(2 * d1_ + 2 * d2_ + 1);
}

std::string RowLabel::str() const
{
    switch (kind) {
    case Kind::z: return "z_" + std::to_string(i);
    case Kind::w: return "w_" + std::to_string(j);
    case Kind::f: return "f_(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::g_d1: return "g^(d1)_" + std::to_string(i);
    case Kind::g: return "g";
    case Kind::g_d2: return "g^(d2)_" + std::to_string(j);
    }
    return "?";
}

std::string ColLabel::str() const
{
    switch (kind) {
    case Kind::a: return "a^" + std::to_string(copy) + "_" + std::to_string(i);
    case Kind::b: return "b^" + std::to_string(copy) + "_" + std::to_string(j);
    case Kind::u: return "u_(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Layout

bool in_u_index_set(const Degree& d, int i, int j)
{
    if (i < 0 || i > d.d1() || j < 0 || j > d.d2())
        return false;
    return !(i == 0 && j == 0) && !(i == d.d1() && j == d.d2());
}

std::vector<std::pair<int, int>> u_index_set(const Degree& d)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= d.d1(); ++i)
        for (int j = 0; j <= d.d2(); ++j)
            if (in_u_index_set(d, i, j))
                out.emplace_back(i, j);
    return out;
}

std::size_t a_col(const Degree& d, int copy, int i)
{
    return static_cast<std::size_t>((copy - 1) * (d.d1() + 1) + i);
}

std::size_t b_col(const Degree& d, int copy, int j)
{
    return static_cast<std::size_t>(2 * (d.d1() + 1) + (copy - 1) * (d.d2() + 1) + j);
}

std::size_t u_col(const Degree& d, int i, int j)
{
    if (!in_u_index_set(d, i, j))
        throw Error(ErrorCode::invalid_input,
                    "u_(" + std::to_string(i) + "," + std::to_string(j) + ") is not a column");
    const int base = 2 * (d.d1() + 1) + 2 * (d.d2() + 1);
    if (i == 0)
        return static_cast<std::size_t>(base + j - 1);
    return static_cast<std::size_t>(base + d.d2() + (i - 1) * (d.d2() + 1) + j);
}

std::size_t z_row(const Degree&, int i) { return static_cast<std::size_t>(i); }

std::size_t w_row(const Degree& d, int j) { return static_cast<std::size_t>(d.d1() + 1 + j); }

std::size_t f_row(const Degree& d, int i, int j)
{
    return static_cast<std::size_t>(d.d1() + d.d2() + 2 + (i - 1) * d.d2() + (j - 1));
}

std::vector<ColLabel> column_labels(const Degree& d)
{
    std::vector<ColLabel> out;
    out.reserve(d.r());
    for (int copy = 1; copy <= 2; ++copy)
        for (int i = 0; i <= d.d1(); ++i)
            out.push_back(ColLabel::a(copy, i));
    for (int copy = 1; copy <= 2; ++copy)
        for (int j = 0; j <= d.d2(); ++j)
            out.push_back(ColLabel::b(copy, j));
    for (auto [i, j] : u_index_set(d))
        out.push_back(ColLabel::u(i, j));
    return out;
}

std::vector<RowLabel> weight_row_labels(const Degree& d)
{
    std::vector<RowLabel> out;
    for (int i = 0; i <= d.d1(); ++i)
        out.push_back(RowLabel::z(i));
    for (int j = 0; j <= d.d2(); ++j)
        out.push_back(RowLabel::w(j));
    for (int i = 1; i <= d.d1(); ++i)
        for (int j = 1; j <= d.d2(); ++j)
            out.push_back(RowLabel::f(i, j));
    return out;
}

std::vector<RowLabel> vertex_row_labels(const Degree& d)
{
    std::vector<RowLabel> out;
    for (int i = 0; i <= d.d1(); ++i)
        out.push_back(RowLabel::z(i));
    for (int j = 0; j <= d.d2(); ++j)
        out.push_back(RowLabel::w(j));
    for (int i = 1; i <= d.d1() - 1; ++i)
        out.push_back(RowLabel::g_d1(i));
    out.push_back(RowLabel::g());
    for (int j = 1; j <= d.d2() - 1; ++j)
        out.push_back(RowLabel::g_d2(j));
    return out;
}

std::size_t LabeledIntMatrix::row_of(const RowLabel& label) const
{
    auto it = std::find(row_labels.begin(), row_labels.end(), label);
    if (it == row_labels.end())
        throw Error(ErrorCode::invalid_input, "no row labeled " + label.str());
    return static_cast<std::size_t>(it - row_labels.begin());
}

std::size_t LabeledIntMatrix::col_of(const ColLabel& label) const
{
    auto it = std::find(col_labels.begin(), col_labels.end(), label);
    if (it == col_labels.end())
        throw Error(ErrorCode::invalid_input, "no column labeled " + label.str());
    return static_cast<std::size_t>(it - col_labels.begin());
}

// ---------------------------------------------------------------------------
// Blocks of W

namespace {

using Idx = std::size_t;

IntMatrix block(int rows, int cols) { return IntMatrix(static_cast<Idx>(rows), static_cast<Idx>(cols)); }

IntMatrix scaled_identity(int n, std::int64_t s)
{
    IntMatrix m = block(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = s;
    return m;
}

// z-rows x u~_0: single -1 at (z_1, u_(0,d2)).
IntMatrix block_u0(const Degree& d)
{
    IntMatrix m = block(d.d1() + 1, d.d2());
    m(1, d.d2() - 1) = -1;
    return m;
}

// z-rows x u~_d1: single -1 at (z_(d1-1), u_(d1,0)).
IntMatrix block_ud1(const Degree& d)
{
    IntMatrix m = block(d.d1() + 1, d.d2());
    m(d.d1() - 1, 0) = -1;
    return m;
}

// z-rows x u_i: (-1, 1) on (z_(i-1), z_i) in the first column,
// (1, -1) on (z_i, z_(i+1)) in the last.
IntMatrix block_k(const Degree& d, int i)
{
    IntMatrix m = block(d.d1() + 1, d.d2() + 1);
    m(i - 1, 0) = -1;
    m(i, 0) = 1;
    m(i, d.d2()) = 1;
    m(i + 1, d.d2()) = -1;
    return m;
}

// w-rows x u~_0: bidiagonal (-1 over 1) columns, last column -1 at w_(d2-1),
// bottom row zero.
IntMatrix block_l0(const Degree& d)
{
    const int d2 = d.d2();
    IntMatrix m = block(d2 + 1, d2);
    for (int c = 0; c + 1 < d2; ++c) {
        m(c, c) = -1;
        m(c + 1, c) = 1;
    }
    m(d2 - 1, d2 - 1) = -1;
    return m;
}

// w-rows x u~_d1: first column -1 at w_1, then (1 over -1) columns, top row zero.
IntMatrix block_ld1(const Degree& d)
{
    const int d2 = d.d2();
    IntMatrix m = block(d2 + 1, d2);
    m(1, 0) = -1;
    for (int c = 1; c < d2; ++c) {
        m(c, c) = 1;
        m(c + 1, c) = -1;
    }
    return m;
}

// f_1 x u~_0: 1 on the diagonal, -1 below.
IntMatrix block_jd_tilde(const Degree& d)
{
    const int d2 = d.d2();
    IntMatrix m = block(d2, d2);
    for (int t = 0; t < d2; ++t) {
        m(t, t) = 1;
        if (t + 1 < d2)
            m(t + 1, t) = -1;
    }
    return m;
}

// f_i x u_i (1 <= i <= d1-1): row t carries (1, -1) at columns (t, t+1).
IntMatrix block_ju(const Degree& d)
{
    IntMatrix m = block(d.d2(), d.d2() + 1);
    for (int t = 0; t < d.d2(); ++t) {
        m(t, t) = 1;
        m(t, t + 1) = -1;
    }
    return m;
}

// f_i x u_(i-1) (2 <= i <= d1): row t carries (-1, 1) at columns (t, t+1).
IntMatrix block_jd(const Degree& d)
{
    IntMatrix m = block(d.d2(), d.d2() + 1);
    for (int t = 0; t < d.d2(); ++t) {
        m(t, t) = -1;
        m(t, t + 1) = 1;
    }
    return m;
}

// f_d1 x u~_d1: 1 on the diagonal, -1 above.
IntMatrix block_ju_tilde(const Degree& d)
{
    const int d2 = d.d2();
    IntMatrix m = block(d2, d2);
    for (int t = 0; t < d2; ++t) {
        m(t, t) = 1;
        if (t + 1 < d2)
            m(t, t + 1) = -1;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Blocks of V

// (N-1) x (N+1) second-difference band (1, -2, 1).
IntMatrix block_a_tilde(int n)
{
    IntMatrix m = block(n - 1, n + 1);
    for (int t = 0; t < n - 1; ++t) {
        m(t, t) = 1;
        m(t, t + 1) = -2;
        m(t, t + 2) = 1;
    }
    return m;
}

// (d2-1) x width with m(t, t + shift) = 1.
IntMatrix block_shifted_identity(int d2, int width, int shift)
{
    IntMatrix m = block(d2 - 1, width);
    for (int t = 0; t < d2 - 1; ++t)
        m(t, t + shift) = 1;
    return m;
}

}  // namespace

LabeledIntMatrix build_weight_matrix(const Degree& d)
{
    const int d1 = d.d1();
    IntMatrix w(d.torus_rank(), d.r());
    const Idx z0 = z_row(d, 0);
    const Idx w0 = w_row(d, 0);

    w.place(z0, a_col(d, 1, 0), scaled_identity(d1 + 1, 1));
    w.place(z0, a_col(d, 2, 0), scaled_identity(d1 + 1, 1));
    w.place(w0, b_col(d, 1, 0), scaled_identity(d.d2() + 1, 1));
    w.place(w0, b_col(d, 2, 0), scaled_identity(d.d2() + 1, 1));

    const Idx u0 = u_col(d, 0, 1);
    const Idx ud1 = u_col(d, d1, 0);
    w.place(z0, u0, block_u0(d));
    w.place(z0, ud1, block_ud1(d));
    w.place(w0, u0, block_l0(d));
    w.place(w0, ud1, block_ld1(d));
    for (int i = 1; i <= d1 - 1; ++i)
        w.place(z0, u_col(d, i, 0), block_k(d, i));

    w.place(f_row(d, 1, 1), u0, block_jd_tilde(d));
    w.place(f_row(d, d1, 1), ud1, block_ju_tilde(d));
    for (int i = 1; i <= d1; ++i) {
        if (i <= d1 - 1)
            w.place(f_row(d, i, 1), u_col(d, i, 0), block_ju(d));
        if (i >= 2)
            w.place(f_row(d, i, 1), u_col(d, i - 1, 0), block_jd(d));
    }
    return {std::move(w), weight_row_labels(d), column_labels(d)};
}

LabeledIntMatrix build_vertex_matrix(const Degree& d)
{
    const int d1 = d.d1();
    const int d2 = d.d2();
    IntMatrix v(d.n(), d.r());
    const Idx z0 = z_row(d, 0);
    const Idx w0 = w_row(d, 0);
    const Idx g_d1_0 = static_cast<Idx>(d1 + d2 + 2);
    const Idx g = g_d1_0 + static_cast<Idx>(d1 - 1);
    const Idx g_d2_0 = g + 1;

    v.place(z0, a_col(d, 1, 0), scaled_identity(d1 + 1, 1));
    v.place(z0, a_col(d, 2, 0), scaled_identity(d1 + 1, -1));
    v.place(w0, b_col(d, 1, 0), scaled_identity(d2 + 1, 1));
    v.place(w0, b_col(d, 2, 0), scaled_identity(d2 + 1, -1));

    // G_d1 rows
    if (d1 >= 2)
        v.place(g_d1_0, a_col(d, 2, 0), block_a_tilde(d1));
    for (int i = 1; i <= d1 - 1; ++i)
        for (int j = 0; j <= d2; ++j)
            v(g_d1_0 + static_cast<Idx>(i - 1), u_col(d, i, j)) = 1;

    // G row
    v(g, a_col(d, 2, 0)) = 1;
    v(g, a_col(d, 2, 1)) = -1;
    v(g, b_col(d, 2, 0)) = -1;
    v(g, b_col(d, 2, 1)) = 1;
    for (int j = 1; j <= d2; ++j)
        v(g, u_col(d, 0, j)) = -1;
    for (int i = 1; i <= d1; ++i)
        v(g, u_col(d, i, 0)) = 1;

    // G_d2 rows
    if (d2 >= 2) {
        v.place(g_d2_0, b_col(d, 2, 0), block_a_tilde(d2));
        v.place(g_d2_0, u_col(d, 0, 1), block_shifted_identity(d2, d2, 0));
        for (int i = 1; i <= d1 - 1; ++i)
            v.place(g_d2_0, u_col(d, i, 0), block_shifted_identity(d2, d2 + 1, 1));
        v.place(g_d2_0, u_col(d, d1, 0), block_shifted_identity(d2, d2, 1));
    }
    return {std::move(v), vertex_row_labels(d), column_labels(d)};
}

// ---------------------------------------------------------------------------
// Pretty printing

namespace {

std::string col_group(const ColLabel& c, int d1)
{
    switch (c.kind) {
    case ColLabel::Kind::a: return "a" + std::to_string(c.copy);
    case ColLabel::Kind::b: return "b" + std::to_string(c.copy);
    case ColLabel::Kind::u:
        if (c.i == 0)
            return "u~0";
        if (c.i == d1)
            return "u~d1";
        return "u" + std::to_string(c.i);
    }
    return "";
}

std::string row_group(const RowLabel& r)
{
    if (r.kind == RowLabel::Kind::f)
        return "f" + std::to_string(r.i);
    return std::to_string(static_cast<int>(r.kind));
}

int count_rows(const std::vector<RowLabel>& labels, RowLabel::Kind kind)
{
    return static_cast<int>(std::count_if(labels.begin(), labels.end(),
                                          [&](const RowLabel& l) { return l.kind == kind; }));
}

}  // namespace

std::string pretty_bordered(const LabeledIntMatrix& m)
{
    const int d1 = count_rows(m.row_labels, RowLabel::Kind::z) - 1;
    std::size_t width = 2;
    for (const auto& c : m.col_labels)
        width = std::max(width, c.str().size());
    std::size_t head = 0;
    for (const auto& r : m.row_labels)
        head = std::max(head, r.str().size());

    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) {
        out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
    };
    std::string rule;

    pad("", head);
    for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
        if (c > 0 && col_group(m.col_labels[c], d1) != col_group(m.col_labels[c - 1], d1))
            out << " |";
        out << ' ';
        pad(m.col_labels[c].str(), width);
    }
    out << '\n';
    std::size_t line_len = static_cast<std::size_t>(out.tellp()) - 1;
    rule = std::string(line_len, '-');

    for (std::size_t r = 0; r < m.row_labels.size(); ++r) {
        if (r > 0 && row_group(m.row_labels[r]) != row_group(m.row_labels[r - 1]))
            out << rule << '\n';
        pad(m.row_labels[r].str(), head);
        for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
            if (c > 0 && col_group(m.col_labels[c], d1) != col_group(m.col_labels[c - 1], d1))
                out << " |";
            out << ' ';
            pad(std::to_string(m.matrix(r, c)), width);
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Column identities

bool IdentityReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

std::size_t IdentityReport::count(int identity) const
{
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [&](const IdentityCheck& c) { return c.identity == identity; }));
}

IdentityReport verify_column_identities(const LabeledIntMatrix& w)
{
    const int d1 = count_rows(w.row_labels, RowLabel::Kind::z) - 1;
    const int d2 = count_rows(w.row_labels, RowLabel::Kind::w) - 1;
    const Degree d(d1, d2);
    const std::size_t rows = w.matrix.rows();

    // Sum of u-columns over a rectangle of (p, q), skipping indices outside I.
    auto rect_sum = [&](int p0, int p1, int q0, int q1) {
        std::vector<std::int64_t> acc(rows, 0);
        for (int p = p0; p <= p1; ++p)
            for (int q = q0; q <= q1; ++q) {
                if (!in_u_index_set(d, p, q))
                    continue;
                const std::size_t c = w.col_of(ColLabel::u(p, q));
                for (std::size_t r = 0; r < rows; ++r)
                    acc[r] = checked::add(acc[r], w.matrix(r, c));
            }
        return acc;
    };
    auto unit = [&](const RowLabel& l, std::int64_t s, std::vector<std::int64_t>& v) {
        v[w.row_of(l)] += s;
    };
    auto f_part_equals = [&](const std::vector<std::int64_t>& acc, const RowLabel& target) {
        const std::size_t t = w.row_of(target);
        for (std::size_t r = 0; r < rows; ++r) {
            if (w.row_labels[r].kind != RowLabel::Kind::f)
                continue;
            if (acc[r] != (r == t ? 1 : 0))
                return false;
        }
        return true;
    };

    IdentityReport rep;
    for (int i = 1; i <= d1 - 1; ++i) {
        std::vector<std::int64_t> expect(rows, 0);
        unit(RowLabel::z(i - 1), -1, expect);
        unit(RowLabel::z(i), 2, expect);
        unit(RowLabel::z(i + 1), -1, expect);
        rep.checks.push_back({1, i, 0, rect_sum(i, i, 0, d2) == expect});
    }
    for (int j = 1; j <= d2 - 1; ++j) {
        std::vector<std::int64_t> expect(rows, 0);
        unit(RowLabel::w(j - 1), -1, expect);
        unit(RowLabel::w(j), 2, expect);
        unit(RowLabel::w(j + 1), -1, expect);
        rep.checks.push_back({2, j, 0, rect_sum(0, d1, j, j) == expect});
    }
    for (int i = 1; i <= d1; ++i)
        for (int j = 0; j <= d2 - 1; ++j)
            rep.checks.push_back({3, i, j, f_part_equals(rect_sum(0, i - 1, j + 1, d2), RowLabel::f(i, j + 1))});
    for (int i = 0; i <= d1 - 1; ++i)
        for (int j = 1; j <= d2; ++j)
            rep.checks.push_back({4, i, j, f_part_equals(rect_sum(i + 1, d1, 0, j - 1), RowLabel::f(i + 1, j))});
    return rep;
}

}  // namespace qmt
