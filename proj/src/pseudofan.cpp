#include "qmt/pseudofan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace qmt {

// ---------------------------------------------------------------------------
// Primitive collections

PrimitiveCollectionSet::PrimitiveCollectionSet(const Degree& d) : degree_(d)
{
    const int d1 = d.d1();
    const int d2 = d.d2();
    std::vector<std::vector<std::size_t>> out;

    out.push_back({a_col(d, 1, 0), a_col(d, 2, 0)});
    out.push_back({a_col(d, 1, d1), a_col(d, 2, d1)});
    out.push_back({b_col(d, 1, 0), b_col(d, 2, 0)});
    out.push_back({b_col(d, 1, d2), b_col(d, 2, d2)});
    for (int i = 1; i <= d1 - 1; ++i)
        for (int j = 0; j <= d2; ++j)
            out.push_back({a_col(d, 1, i), a_col(d, 2, i), u_col(d, i, j)});
    for (int j = 1; j <= d2 - 1; ++j)
        for (int i = 0; i <= d1; ++i)
            out.push_back({b_col(d, 1, j), b_col(d, 2, j), u_col(d, i, j)});
    for (auto [i, j] : u_index_set(d))
        for (auto [k, l] : u_index_set(d))
            if (i < k && l < j)
                out.push_back({u_col(d, i, j), u_col(d, k, l)});

    for (auto& c : out)
        std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    collections_ = std::move(out);

    by_column_.assign(d.r(), {});
    for (std::size_t k = 0; k < collections_.size(); ++k)
        for (auto c : collections_[k])
            by_column_[c].push_back(k);
}

std::vector<ColLabel> PrimitiveCollectionSet::labels(std::size_t k) const
{
    const auto all = column_labels(degree_);
    std::vector<ColLabel> out;
    for (auto c : collections_.at(k))
        out.push_back(all[c]);
    return out;
}

PrimitiveCollectionSet build_primitive_collections(const Degree& d) { return PrimitiveCollectionSet(d); }

std::size_t expected_collection_count(const Degree& d)
{
    const std::size_t d1 = static_cast<std::size_t>(d.d1());
    const std::size_t d2 = static_cast<std::size_t>(d.d2());
    std::size_t pairs = 0;
    for (auto [i, j] : u_index_set(d))
        for (auto [k, l] : u_index_set(d))
            if (i < k && l < j)
                ++pairs;
    return 4 + (d1 - 1) * (d2 + 1) + (d2 - 1) * (d1 + 1) + pairs;
}

bool MinValueSolution::satisfies_amvc() const
{
    return std::all_of(residuals.begin(), residuals.end(), [](const Rational& v) { return v == 0; }) &&
           std::all_of(member_values.begin(), member_values.end(), [](const Rational& v) { return v >= 0; });
}

// ---------------------------------------------------------------------------
// z/w layers

BoundaryValues solve_boundary(const Degree& d, const std::vector<Rational>& y)
{
    auto pair_max = [&](std::size_t c1, std::size_t c2) { return std::max(y.at(c1), y.at(c2)); };
    return {pair_max(a_col(d, 1, 0), a_col(d, 2, 0)), pair_max(a_col(d, 1, d.d1()), a_col(d, 2, d.d1())),
            pair_max(b_col(d, 1, 0), b_col(d, 2, 0)), pair_max(b_col(d, 1, d.d2()), b_col(d, 2, d.d2()))};
}

namespace {

// Solves 2 x_i - x_(i-1) - x_(i+1) = c_i on the open interval, ends fixed.
std::vector<Rational> dirichlet_chain(const Rational& left, const Rational& right, const std::vector<Rational>& c)
{
    const std::size_t k = c.size();
    if (k == 0)
        return {};
    // Thomas algorithm for diag 2, off-diagonals -1.
    std::vector<Rational> cp(k), dp(k), x(k);
    std::vector<Rational> rhs = c;
    rhs.front() += left;
    rhs.back() += right;
    cp[0] = Rational(-1, 2);
    dp[0] = rhs[0] / 2;
    for (std::size_t i = 1; i < k; ++i) {
        const Rational denom = 2 + cp[i - 1];
        cp[i] = Rational(-1) / denom;
        dp[i] = (rhs[i] + dp[i - 1]) / denom;
    }
    x[k - 1] = dp[k - 1];
    for (std::size_t i = k - 1; i-- > 0;)
        x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
}

}  // namespace

std::vector<Rational> solve_tridiagonal_min_system(const Rational& left, const Rational& right,
                                                   const std::vector<Rational>& a,
                                                   const std::vector<Rational>& c)
{
    if (a.size() != c.size())
        throw Error(ErrorCode::dimension_mismatch, "tridiagonal system: a and c differ in length");
    const std::size_t m = a.size();
    if (m == 0)
        return {};

    // Positions 0..m+1 along the chain. A position is either pinned
    // (x_p = a_p, or an end) or harmonic (second argument zero). Between two
    // consecutive pinned positions the harmonic run is a Dirichlet problem.
    auto pinned_value = [&](std::size_t p) -> const Rational& {
        return p == 0 ? left : p == m + 1 ? right : a[p - 1];
    };
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::vector<Rational>>> memo;
    auto segment = [&](std::size_t p, std::size_t q) -> const std::optional<std::vector<Rational>>& {
        auto it = memo.find({p, q});
        if (it != memo.end())
            return it->second;
        std::vector<Rational> cs(c.begin() + static_cast<std::ptrdiff_t>(p),
                                 c.begin() + static_cast<std::ptrdiff_t>(q - 1));
        auto xs = dirichlet_chain(pinned_value(p), pinned_value(q), cs);
        std::optional<std::vector<Rational>> result = xs;
        for (std::size_t t = 0; t < xs.size(); ++t)
            if (xs[t] < a[p + t]) {  // first argument would be negative
                result.reset();
                break;
            }
        return memo.emplace(std::pair{p, q}, std::move(result)).first->second;
    };

    std::vector<std::vector<Rational>> found;
    std::vector<Rational> chain(m + 2);
    chain[0] = left;
    chain[m + 1] = right;

    std::function<void(std::size_t)> extend = [&](std::size_t p) {
        for (std::size_t q = p + 1; q <= m + 1; ++q) {
            const auto& seg = segment(p, q);
            if (!seg)
                continue;
            for (std::size_t t = 0; t < seg->size(); ++t)
                chain[p + 1 + t] = (*seg)[t];
            chain[q] = pinned_value(q);
            if (p >= 1) {
                const Rational second = -c[p - 1] - chain[p - 1] + 2 * chain[p] - chain[p + 1];
                if (second < 0)
                    continue;
            }
            if (q == m + 1) {
                std::vector<Rational> x(chain.begin() + 1, chain.end() - 1);
                if (std::find(found.begin(), found.end(), x) == found.end())
                    found.push_back(std::move(x));
            } else {
                extend(q);
            }
        }
    };
    extend(0);

    if (found.empty())
        throw Error(ErrorCode::no_solution, "tridiagonal min system has no solution");
    if (found.size() > 1)
        throw Error(ErrorCode::multiple_solutions, "tridiagonal min system has several solutions");
    return found.front();
}

// ---------------------------------------------------------------------------
// Reduction and f-layer

IndexGrid::IndexGrid(const Degree& d)
    : degree_(d), v_(static_cast<std::size_t>((d.d1() + 1) * (d.d2() + 1)), Rational(0))
{
}

IndexGrid reduce_to_y_prime(const Degree& d, const std::vector<Rational>& y,
                            const std::vector<Rational>& xz, const std::vector<Rational>& xw)
{
    if (y.size() != d.r() || xz.size() != static_cast<std::size_t>(d.d1() + 1) ||
        xw.size() != static_cast<std::size_t>(d.d2() + 1))
        throw Error(ErrorCode::dimension_mismatch, "reduce_to_y_prime: wrong input lengths");
    const IntMatrix w = build_weight_matrix(d).matrix;
    IndexGrid out(d);
    for (auto [i, j] : u_index_set(d)) {
        const std::size_t c = u_col(d, i, j);
        Rational v = y[c];
        for (int p = 0; p <= d.d1(); ++p)
            if (auto wz = w(z_row(d, p), c))
                v -= wz * xz[static_cast<std::size_t>(p)];
        for (int q = 0; q <= d.d2(); ++q)
            if (auto ww = w(w_row(d, q), c))
                v -= ww * xw[static_cast<std::size_t>(q)];
        out(i, j) = v;
    }
    return out;
}

std::vector<Rational> solve_f_layer(const IndexGrid& yp)
{
    const Degree& d = yp.degree();
    const int d1 = d.d1();
    const int d2 = d.d2();

    for (int i = 1; i <= d1 - 1; ++i) {
        Rational s = 0;
        for (int j = 0; j <= d2; ++j)
            s += yp(i, j);
        if (s > 0)
            throw Error(ErrorCode::precondition_violated,
                        "solve_f_layer: row sum of y' at i=" + std::to_string(i) + " is positive");
    }
    for (int j = 1; j <= d2 - 1; ++j) {
        Rational s = 0;
        for (int i = 0; i <= d1; ++i)
            s += yp(i, j);
        if (s > 0)
            throw Error(ErrorCode::precondition_violated,
                        "solve_f_layer: column sum of y' at j=" + std::to_string(j) + " is positive");
    }

    // prefix(i, j) = sum of y' over [0, i) x [0, j)
    const std::size_t cols = static_cast<std::size_t>(d2 + 2);
    std::vector<Rational> prefix(static_cast<std::size_t>(d1 + 2) * cols, Rational(0));
    auto at = [&](int i, int j) -> Rational& { return prefix[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j)]; };
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j)
            at(i + 1, j + 1) = yp(i, j) + at(i, j + 1) + at(i + 1, j) - at(i, j);
    // Delta over [p, s] x [q, t], zero when empty.
    auto delta = [&](int p, int q, int s, int t) -> Rational {
        if (p > s || q > t)
            return 0;
        return at(s + 1, t + 1) - at(p, t + 1) - at(s + 1, q) + at(p, q);
    };

    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(d1 * d2));
    for (int i = 1; i <= d1; ++i)
        for (int j = 1; j <= d2; ++j)
            x.push_back(std::max(delta(i, 0, d1, j - 1), delta(0, j, i - 1, d2)));
    return x;
}

// ---------------------------------------------------------------------------
// Assembled solver

AmvcSolver::AmvcSolver(const Degree& d) : degree_(d), w_(build_weight_matrix(d).matrix), pi_(d) {}

void AmvcSolver::check_length(const std::vector<Rational>& y) const
{
    if (y.size() != degree_.r())
        throw Error(ErrorCode::invalid_input, "y must have " + std::to_string(degree_.r()) + " components, got " +
                                                  std::to_string(y.size()));
}

MinValueSolution AmvcSolver::evaluate(const std::vector<Rational>& y, std::vector<Rational> x) const
{
    check_length(y);
    if (x.size() != w_.rows())
        throw Error(ErrorCode::dimension_mismatch, "x must have one entry per row of W");
    MinValueSolution s;
    s.member_values.resize(w_.cols());
    for (std::size_t c = 0; c < w_.cols(); ++c) {
        Rational v = -y[c];
        for (std::size_t m = 0; m < w_.rows(); ++m)
            if (w_(m, c) != 0)
                v += w_(m, c) * x[m];
        s.member_values[c] = v;
    }
    for (const auto& coll : pi_.indices()) {
        Rational lo = s.member_values[coll.front()];
        for (auto c : coll)
            lo = std::min(lo, s.member_values[c]);
        s.residuals.push_back(lo);
    }
    s.x = std::move(x);
    return s;
}

MinValueSolution AmvcSolver::solve(const std::vector<Rational>& y) const
{
    check_length(y);
    const Degree& d = degree_;
    const int d1 = d.d1();
    const int d2 = d.d2();
    auto yu = [&](int i, int j) { return in_u_index_set(d, i, j) ? y[u_col(d, i, j)] : Rational(0); };

    const BoundaryValues bv = solve_boundary(d, y);

    std::vector<Rational> a, c;
    for (int i = 1; i <= d1 - 1; ++i) {
        a.push_back(std::max(y[a_col(d, 1, i)], y[a_col(d, 2, i)]));
        Rational s = 0;
        for (int j = 0; j <= d2; ++j)
            s += yu(i, j);
        c.push_back(s);
    }
    std::vector<Rational> xz{bv.z0};
    for (auto& v : solve_tridiagonal_min_system(bv.z0, bv.zd1, a, c))
        xz.push_back(v);
    xz.push_back(bv.zd1);

    a.clear();
    c.clear();
    for (int j = 1; j <= d2 - 1; ++j) {
        a.push_back(std::max(y[b_col(d, 1, j)], y[b_col(d, 2, j)]));
        Rational s = 0;
        for (int i = 0; i <= d1; ++i)
            s += yu(i, j);
        c.push_back(s);
    }
    std::vector<Rational> xw{bv.w0};
    for (auto& v : solve_tridiagonal_min_system(bv.w0, bv.wd2, a, c))
        xw.push_back(v);
    xw.push_back(bv.wd2);

    const auto xf = solve_f_layer(reduce_to_y_prime(d, y, xz, xw));

    std::vector<Rational> x;
    x.reserve(w_.rows());
    x.insert(x.end(), xz.begin(), xz.end());
    x.insert(x.end(), xw.begin(), xw.end());
    x.insert(x.end(), xf.begin(), xf.end());

    MinValueSolution s = evaluate(y, std::move(x));
    if (!s.satisfies_amvc())
        throw Error(ErrorCode::residual_nonzero, "assembled solution violates the min-value system");
    return s;
}

namespace {

// Reduced row echelon form over Q, grown one equation at a time.
struct Echelon {
    std::size_t unknowns = 0;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<Rational>> rows;  // coefficients followed by rhs

    // Returns false if the equation contradicts the current system.
    bool add(std::vector<Rational> eq)
    {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Rational f = eq[pivots[k]];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j <= unknowns; ++j)
                if (rows[k][j] != 0)
                    eq[j] -= f * rows[k][j];
        }
        std::size_t p = 0;
        while (p < unknowns && eq[p] == 0)
            ++p;
        if (p == unknowns)
            return eq[unknowns] == 0;
        const Rational lead = eq[p];
        for (auto& v : eq)
            v /= lead;
        for (auto& row : rows) {
            const Rational f = row[p];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j <= unknowns; ++j)
                if (eq[j] != 0)
                    row[j] -= f * eq[j];
        }
        pivots.push_back(p);
        rows.push_back(std::move(eq));
        return true;
    }

    bool full() const { return rows.size() == unknowns; }

    std::vector<Rational> solution() const
    {
        std::vector<Rational> x(unknowns);
        for (std::size_t k = 0; k < rows.size(); ++k)
            x[pivots[k]] = rows[k][unknowns];
        return x;
    }
};

}  // namespace

std::vector<MinValueSolution> AmvcSolver::enumerate(const std::vector<Rational>& y, std::size_t guard) const
{
    check_length(y);
    const auto& colls = pi_.indices();
    if (colls.size() > guard)
        throw Error(ErrorCode::guard_exceeded, std::to_string(colls.size()) + " collections exceed the guard of " +
                                                   std::to_string(guard));
    const std::size_t m = w_.rows();
    auto equation = [&](std::size_t c) {
        std::vector<Rational> eq(m + 1);
        for (std::size_t r = 0; r < m; ++r)
            eq[r] = w_(r, c);
        eq[m] = y[c];
        return eq;
    };

    std::vector<MinValueSolution> out;
    std::function<void(std::size_t, const Echelon&)> visit = [&](std::size_t k, const Echelon& ech) {
        if (ech.full()) {
            auto s = evaluate(y, ech.solution());
            if (!s.satisfies_amvc())
                return;
            auto same_x = [&](const MinValueSolution& o) { return o.x == s.x; };
            if (std::none_of(out.begin(), out.end(), same_x))
                out.push_back(std::move(s));
            return;
        }
        if (k == colls.size())
            throw Error(ErrorCode::multiple_solutions,
                        "an activity pattern leaves the linear system underdetermined");
        for (auto c : colls[k]) {
            Echelon next = ech;
            if (next.add(equation(c)))
                visit(k + 1, next);
        }
    };
    Echelon start;
    start.unknowns = m;
    visit(0, start);

    std::sort(out.begin(), out.end(), [](const MinValueSolution& a, const MinValueSolution& b) { return a.x < b.x; });
    return out;
}

MinValueSolution solve_amvc(const MinValueSystem& sys) { return AmvcSolver(sys.degree).solve(sys.y); }

std::vector<MinValueSolution> enumerate_activity_patterns(const MinValueSystem& sys, std::size_t guard)
{
    return AmvcSolver(sys.degree).enumerate(sys.y, guard);
}

}  // namespace qmt
