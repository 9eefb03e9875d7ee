#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qmt/pseudofan.hpp"

using namespace qmt;

namespace {

std::vector<Rational> random_y(std::size_t r, std::mt19937_64& rng, int lo = -50, int hi = 50)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<Rational> y(r);
    for (auto& v : y)
        v = dist(rng);
    return y;
}

// Dense exact solve of a square nonsingular system; nullopt if singular.
std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= a[i][i];
    return b;
}

// All 2^m activity patterns of the chain system, each solved densely.
std::vector<std::vector<Rational>> chain_oracle(const Rational& left, const Rational& right,
                                                const std::vector<Rational>& a, const std::vector<Rational>& c)
{
    const std::size_t m = a.size();
    std::vector<std::vector<Rational>> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m, Rational(0)));
        std::vector<Rational> rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) {
                mat[i][i] = 2;
                rhs[i] = c[i];
                if (i > 0)
                    mat[i][i - 1] = -1;
                else
                    rhs[i] += left;
                if (i + 1 < m)
                    mat[i][i + 1] = -1;
                else
                    rhs[i] += right;
            } else {
                mat[i][i] = 1;
                rhs[i] = a[i];
            }
        }
        auto x = gauss_solve(mat, rhs);
        if (!x)
            continue;
        std::vector<Rational> full{left};
        full.insert(full.end(), x->begin(), x->end());
        full.push_back(right);
        bool ok = true;
        for (std::size_t i = 0; i < m; ++i)
            ok = ok && std::min<Rational>(-a[i] + full[i + 1], -c[i] - full[i] + 2 * full[i + 1] - full[i + 2]) == 0;
        if (ok && std::find(found.begin(), found.end(), *x) == found.end())
            found.push_back(*x);
    }
    return found;
}

// Rectangular sum with a plain double loop.
Rational naive_delta(const IndexGrid& yp, int p, int q, int s, int t)
{
    Rational sum = 0;
    for (int k = p; k <= s; ++k)
        for (int l = q; l <= t; ++l)
            sum += yp(k, l);
    return sum;
}

IndexGrid random_admissible(const Degree& d, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-50, 50);
    std::uniform_int_distribution<int> slack(0, 10);
    IndexGrid yp(d);
    for (auto [i, j] : u_index_set(d))
        yp(i, j) = dist(rng);
    // Interior rows are fixed through column 0, interior columns through row 0;
    // neither adjustment touches the other family of sums.
    for (int i = 1; i <= d.d1() - 1; ++i) {
        Rational s = naive_delta(yp, i, 0, i, d.d2());
        if (s > 0)
            yp(i, 0) -= s + slack(rng);
    }
    for (int j = 1; j <= d.d2() - 1; ++j) {
        Rational s = naive_delta(yp, 0, j, d.d1(), j);
        if (s > 0)
            yp(0, j) -= s + slack(rng);
    }
    return yp;
}

bool f_layer_identity_holds(const IndexGrid& yp, const std::vector<Rational>& xf)
{
    const Degree& d = yp.degree();
    auto x = [&](int i, int j) -> Rational {
        if (i < 1 || i > d.d1() || j < 1 || j > d.d2())
            return 0;
        return xf[static_cast<std::size_t>((i - 1) * d.d2() + (j - 1))];
    };
    auto delta = [&](int p, int q, int s, int t) { return p <= s && q <= t ? naive_delta(yp, p, q, s, t) : Rational(0); };
    for (auto [i, j] : u_index_set(d)) {
        const Rational lhs = x(i + 1, j) + x(i, j + 1);
        const Rational rhs = std::max<Rational>(yp(i, j) + x(i, j) + x(i + 1, j + 1),
                                      delta(i + 1, 0, d.d1(), j - 1) + delta(0, j + 1, i - 1, d.d2()));
        if (lhs != rhs)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("primitive collections for (1,1)")
{
    const PrimitiveCollectionSet pi(Degree(1, 1));
    const std::vector<std::vector<std::size_t>> expected{{0, 2}, {1, 3}, {4, 6}, {5, 7}, {8, 9}};
    CHECK(pi.indices() == expected);
}

TEST_CASE("primitive collections for (2,1)")
{
    const Degree d(2, 1);
    const PrimitiveCollectionSet pi(d);
    REQUIRE(pi.size() == 9);
    std::set<std::vector<ColLabel>> got;
    for (std::size_t k = 0; k < pi.size(); ++k)
        got.insert(pi.labels(k));
    CHECK(got.count({ColLabel::a(1, 1), ColLabel::a(2, 1), ColLabel::u(1, 0)}) == 1);
    CHECK(got.count({ColLabel::a(1, 1), ColLabel::a(2, 1), ColLabel::u(1, 1)}) == 1);
    CHECK(got.count({ColLabel::u(0, 1), ColLabel::u(1, 0)}) == 1);
    CHECK(got.count({ColLabel::u(0, 1), ColLabel::u(2, 0)}) == 1);
    CHECK(got.count({ColLabel::u(1, 1), ColLabel::u(2, 0)}) == 1);
    CHECK(got.count({ColLabel::u(0, 1), ColLabel::u(1, 1)}) == 0);
}

TEST_CASE("collection family invariants")
{
    const std::map<std::pair<int, int>, std::size_t> known{{{1, 1}, 5},  {{2, 1}, 9},  {{2, 2}, 19},
                                                           {{3, 1}, 14}, {{3, 2}, 32}, {{5, 5}, 277}};
    for (int d1 = 1; d1 <= 5; ++d1)
        for (int d2 = 1; d2 <= d1; ++d2) {
            const Degree d(d1, d2);
            const PrimitiveCollectionSet pi(d);
            CHECK(pi.size() == expected_collection_count(d));
            if (auto it = known.find({d1, d2}); it != known.end())
                CHECK(pi.size() == it->second);

            std::set<std::size_t> covered;
            for (const auto& c : pi.indices()) {
                CHECK((c.size() == 2 || c.size() == 3));
                covered.insert(c.begin(), c.end());
            }
            CHECK(covered.size() == d.r());

            bool nested = false;
            for (const auto& a : pi.indices())
                for (const auto& b : pi.indices())
                    if (&a != &b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                        nested = true;
            CHECK_FALSE(nested);
        }
}

TEST_CASE("boundary maxes")
{
    const Degree d(1, 1);
    std::vector<Rational> y(d.r(), Rational(0));
    auto b = solve_boundary(d, y);
    CHECK(b.z0 == 0);
    CHECK(b.zd1 == 0);
    CHECK(b.w0 == 0);
    CHECK(b.wd2 == 0);
    y[a_col(d, 1, 0)] = 3;
    y[a_col(d, 2, 0)] = -1;
    CHECK(solve_boundary(d, y).z0 == 3);
}

TEST_CASE("tridiagonal min system, hand examples")
{
    CHECK(solve_tridiagonal_min_system(0, 0, {Rational(0)}, {Rational(0)}) == std::vector<Rational>{0});
    CHECK(solve_tridiagonal_min_system(1, 2, {Rational(5)}, {Rational(0)}) == std::vector<Rational>{5});
    CHECK(solve_tridiagonal_min_system(1, 2, {}, {}).empty());
    // Second argument active: x = (1 + 2 + 4) / 2.
    CHECK(solve_tridiagonal_min_system(1, 2, {Rational(-10)}, {Rational(4)}) == std::vector<Rational>{Rational(7, 2)});
}

TEST_CASE("tridiagonal min system agrees with exhaustive patterns")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(-20, 20);
    for (std::size_t m = 1; m <= 5; ++m)
        for (int t = 0; t < 40; ++t) {
            std::vector<Rational> a(m), c(m);
            for (auto& v : a)
                v = dist(rng);
            for (auto& v : c)
                v = dist(rng);
            const Rational left = dist(rng);
            const Rational right = dist(rng);
            const auto oracle = chain_oracle(left, right, a, c);
            REQUIRE(oracle.size() == 1);
            CHECK(solve_tridiagonal_min_system(left, right, a, c) == oracle.front());
        }
}

TEST_CASE("f-layer, trivial cases")
{
    const Degree d(2, 2);
    const IndexGrid zero(d);
    for (const auto& v : solve_f_layer(zero))
        CHECK(v == 0);

    const Degree e(1, 1);
    IndexGrid yp(e);
    yp(1, 0) = 4;
    yp(0, 1) = -3;
    CHECK(solve_f_layer(yp) == std::vector<Rational>{4});
}

TEST_CASE("f-layer satisfies the pairwise max identity")
{
    std::mt19937_64 rng(23);
    for (auto [d1, d2] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 3}})
        for (int t = 0; t < 100; ++t) {
            const auto yp = random_admissible(Degree(d1, d2), rng);
            CHECK(f_layer_identity_holds(yp, solve_f_layer(yp)));
        }
}

TEST_CASE("f-layer precondition")
{
    const Degree d(2, 1);
    IndexGrid yp(d);
    yp(1, 0) = 1;
    try {
        solve_f_layer(yp);
        FAIL("expected precondition failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_violated);
    }
}

TEST_CASE("reduction to y'")
{
    const Degree d(1, 1);
    std::vector<Rational> y(d.r(), Rational(0));
    const std::vector<Rational> xz{0, 0}, xw{0, 0};
    const auto zero = reduce_to_y_prime(d, y, xz, xw);
    CHECK(zero(0, 1) == 0);
    CHECK(zero(1, 0) == 0);

    // Column u_(0,1) of W(1,1) is (0,-1,-1,0,1): y'_(0,1) = y_9 + x_(z_1) + x_(w_0).
    y[u_col(d, 0, 1)] = 5;
    y[u_col(d, 1, 0)] = -2;
    const auto yp = reduce_to_y_prime(d, y, {Rational(1), Rational(2)}, {Rational(3), Rational(4)});
    CHECK(yp(0, 1) == 5 + 2 + 3);
    CHECK(yp(1, 0) == -2 + 1 + 4);
    CHECK(yp(0, 0) == 0);
    CHECK(yp(1, 1) == 0);
}

TEST_CASE("reduced interior row and column sums are nonpositive")
{
    std::mt19937_64 rng(29);
    for (auto [d1, d2] : {std::pair{3, 2}, std::pair{4, 4}}) {
        const AmvcSolver solver(Degree(d1, d2));
        const Degree& d = solver.degree();
        for (int t = 0; t < 30; ++t) {
            const auto y = random_y(d.r(), rng);
            const auto x = solver.solve(y).x;
            const std::vector<Rational> xz(x.begin(), x.begin() + d1 + 1);
            const std::vector<Rational> xw(x.begin() + d1 + 1, x.begin() + d1 + d2 + 2);
            const auto yp = reduce_to_y_prime(d, y, xz, xw);
            for (int i = 1; i < d1; ++i)
                CHECK(naive_delta(yp, i, 0, i, d2) <= 0);
            for (int j = 1; j < d2; ++j)
                CHECK(naive_delta(yp, 0, j, d1, j) <= 0);
        }
    }
}

TEST_CASE("solve_amvc, zero input")
{
    const auto s = solve_amvc({Degree(1, 1), std::vector<Rational>(10, Rational(0))});
    for (const auto& v : s.x)
        CHECK(v == 0);
    CHECK(s.satisfies_amvc());
}

TEST_CASE("solve_amvc, (1,1) closed forms")
{
    std::mt19937_64 rng(31);
    const AmvcSolver solver(Degree(1, 1));
    for (int t = 0; t < 100; ++t) {
        const auto y = random_y(10, rng);
        // y[0..9] correspond to v_1..v_10
        const Rational x1 = std::max<Rational>(y[0], y[2]);
        const Rational x2 = std::max<Rational>(y[1], y[3]);
        const Rational x3 = std::max<Rational>(y[4], y[6]);
        const Rational x4 = std::max<Rational>(y[5], y[7]);
        const Rational x5 = std::max<Rational>(y[8] + x2 + x3, y[9] + x1 + x4);
        CHECK(solver.solve(y).x == std::vector<Rational>{x1, x2, x3, x4, x5});
    }
}

TEST_CASE("solve_amvc satisfies the system for every degree up to (5,5)")
{
    std::mt19937_64 rng(37);
    for (int d1 = 1; d1 <= 5; ++d1)
        for (int d2 = 1; d2 <= d1; ++d2) {
            const AmvcSolver solver(Degree(d1, d2));
            for (int t = 0; t < 20; ++t) {
                const auto s = solver.solve(random_y(solver.degree().r(), rng));
                CHECK(s.satisfies_amvc());
            }
        }
}

TEST_CASE("solve_amvc on rational input")
{
    std::mt19937_64 rng(41);
    const AmvcSolver solver(Degree(3, 2));
    std::uniform_int_distribution<int> num(-100, 100), den(1, 7);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> y(solver.degree().r());
        for (auto& v : y)
            v = Rational(num(rng), den(rng));
        CHECK(solver.solve(y).satisfies_amvc());
    }
}

TEST_CASE("solver matches the activity-pattern oracle")
{
    std::mt19937_64 rng(43);
    for (auto [d1, d2, trials] : {std::tuple{1, 1, 100}, std::tuple{2, 1, 30}, std::tuple{3, 1, 3}}) {
        const AmvcSolver solver(Degree(d1, d2));
        for (int t = 0; t < trials; ++t) {
            const auto y = random_y(solver.degree().r(), rng);
            const auto all = solver.enumerate(y);
            REQUIRE(all.size() == 1);
            CHECK(all.front().x == solver.solve(y).x);
        }
    }
}

TEST_CASE("oracle on degenerate input")
{
    const AmvcSolver solver(Degree(1, 1));
    const auto all = solver.enumerate(std::vector<Rational>(10, Rational(0)));
    REQUIRE(all.size() == 1);
    for (const auto& v : all.front().x)
        CHECK(v == 0);

    // Ties everywhere: pattern not unique, x still is.
    const AmvcSolver s21(Degree(2, 1));
    const auto ties = s21.enumerate(std::vector<Rational>(14, Rational(3)));
    REQUIRE(ties.size() == 1);
    CHECK(ties.front().x == s21.solve(std::vector<Rational>(14, Rational(3))).x);
}

TEST_CASE("oracle guard")
{
    const AmvcSolver solver(Degree(3, 2));
    try {
        solver.enumerate(std::vector<Rational>(solver.degree().r(), Rational(0)));
        FAIL("expected guard failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::guard_exceeded);
    }
}

TEST_CASE("positive homogeneity and translation covariance")
{
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> num(0, 20), den(1, 5), shift(-30, 30);
    for (auto [d1, d2] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{4, 2}}) {
        const AmvcSolver solver(Degree(d1, d2));
        const IntMatrix& w = solver.weight();
        for (int t = 0; t < 30; ++t) {
            const auto y = random_y(solver.degree().r(), rng);
            const auto x = solver.solve(y).x;

            const Rational lambda(num(rng), den(rng));
            std::vector<Rational> ly(y);
            for (auto& v : ly)
                v *= lambda;
            auto lx = x;
            for (auto& v : lx)
                v *= lambda;
            CHECK(solver.solve(ly).x == lx);

            std::vector<Rational> tv(w.rows());
            for (auto& v : tv)
                v = shift(rng);
            auto ty = y;
            for (std::size_t c = 0; c < w.cols(); ++c)
                for (std::size_t r = 0; r < w.rows(); ++r)
                    ty[c] += w(r, c) * tv[r];
            auto tx = x;
            for (std::size_t r = 0; r < tx.size(); ++r)
                tx[r] += tv[r];
            CHECK(solver.solve(ty).x == tx);
        }
    }
}

TEST_CASE("min{a, b_i} = 0 for all i iff min{a, sum b_i} = 0 and all b_i >= 0")
{
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> dist(-2, 2), len(1, 4);
    for (int t = 0; t < 5000; ++t) {
        const int a = dist(rng);
        std::vector<int> b(static_cast<std::size_t>(len(rng)));
        for (auto& v : b)
            v = dist(rng);
        const bool lhs = std::all_of(b.begin(), b.end(), [&](int v) { return std::min(a, v) == 0; });
        int sum = 0;
        for (int v : b)
            sum += v;
        const bool rhs = std::min(a, sum) == 0 && std::all_of(b.begin(), b.end(), [](int v) { return v >= 0; });
        CHECK(lhs == rhs);
    }
}

TEST_CASE("wrong y length")
{
    const AmvcSolver solver(Degree(1, 1));
    CHECK_THROWS_AS(solver.solve(std::vector<Rational>(9)), Error);
}
