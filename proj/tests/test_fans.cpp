#include <doctest.h>

#include "qmt/exactlin.hpp"
#include "qmt/fans.hpp"

using namespace qmt;

namespace {

std::vector<std::uint32_t> collection_masks(const Degree& d)
{
    std::vector<std::uint32_t> masks;
    const PrimitiveCollectionSet pi(d);
    for (const auto& c : pi.indices()) {
        std::uint32_t m = 0;
        for (auto v : c)
            m |= 1u << v;
        masks.push_back(m);
    }
    return masks;
}

bool is_cone(std::uint32_t s, const std::vector<std::uint32_t>& masks)
{
    for (auto m : masks)
        if ((s & m) == m)
            return false;
    return true;
}

// Full f-vector by walking every vertex subset.
std::vector<std::uint64_t> naive_f_vector(const Degree& d)
{
    const auto masks = collection_masks(d);
    const std::size_t r = d.r();
    std::vector<std::uint64_t> f(r + 1, 0);
    for (std::uint32_t s = 0; s < (1u << r); ++s)
        if (is_cone(s, masks))
            ++f[static_cast<std::size_t>(__builtin_popcount(s))];
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    return f;
}

}  // namespace

TEST_CASE("naive enumeration gives the full f-vectors")
{
    CHECK(naive_f_vector(Degree(1, 1)) == std::vector<std::uint64_t>{1, 10, 40, 80, 80, 32});
    CHECK(naive_f_vector(Degree(2, 1)) == std::vector<std::uint64_t>{1, 14, 84, 280, 560, 672, 448, 128});
}

TEST_CASE("cone counts agree with the naive enumeration")
{
    for (auto [d1, d2] : {std::pair{1, 1}, std::pair{2, 1}}) {
        const Degree d(d1, d2);
        const auto f = naive_f_vector(d);
        CHECK(count_cones(d, d.n()).counts == f);
        const auto half = count_cones(d, d.n() / 2);
        CHECK(half.counts == std::vector<std::uint64_t>(f.begin(), f.begin() + d.n() / 2 + 1));
    }
}

TEST_CASE("cone counts at small sizes")
{
    CHECK(count_cones(Degree(1, 1), 2).counts == std::vector<std::uint64_t>{1, 10, 40});
    CHECK(count_cones(Degree(2, 1), 3).counts == std::vector<std::uint64_t>{1, 14, 84, 280});
    for (int d1 = 3; d1 <= 5; ++d1) {
        // |Sigma(2)| = (15 d1^2 + 43 d1 + 22) / 2 when d2 = 1
        const auto t = count_cones(Degree(d1, 1), 2);
        CHECK(t.counts[1] == static_cast<std::uint64_t>(4 * d1 + 6));
        CHECK(t.counts[2] == static_cast<std::uint64_t>((15 * d1 * d1 + 43 * d1 + 22) / 2));
    }
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d2 <= d1; ++d2) {
            const Degree d(d1, d2);
            CHECK(count_cones(d, 1).counts[1] == d.r());
        }
}

TEST_CASE("count_cones errors")
{
    try {
        count_cones(Degree(1, 1), 6);
        FAIL("expected kmax error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kmax_out_of_range);
    }
    try {
        count_cones(Degree(3, 2), 4, 100);
        FAIL("expected budget error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::budget_exceeded);
    }
}

TEST_CASE("every maximal cone of (1,1) and (2,1) is simplicial of full dimension")
{
    for (auto [d1, d2] : {std::pair{1, 1}, std::pair{2, 1}}) {
        const Degree d(d1, d2);
        const auto masks = collection_masks(d);
        const auto v = build_vertex_matrix(d).matrix;
        const std::size_t r = d.r();
        std::size_t maximal = 0;
        bool all_ok = true;
        for (std::uint32_t s = 0; s < (1u << r); ++s) {
            if (!is_cone(s, masks))
                continue;
            bool extendable = false;
            for (std::size_t c = 0; c < r && !extendable; ++c)
                extendable = !(s >> c & 1) && is_cone(s | 1u << c, masks);
            if (extendable)
                continue;
            ++maximal;
            IntMatrix sub(v.rows(), static_cast<std::size_t>(__builtin_popcount(s)));
            std::size_t k = 0;
            for (std::size_t c = 0; c < r; ++c)
                if (s >> c & 1) {
                    for (std::size_t row = 0; row < v.rows(); ++row)
                        sub(row, k) = v(row, c);
                    ++k;
                }
            all_ok = all_ok && k == d.n() && integer_rank(sub) == d.n();
        }
        CHECK(all_ok);
        CHECK(maximal == (std::size_t{1} << d.n()));
    }
}

TEST_CASE("random maximal cones are simplicial")
{
    for (auto [d1, d2] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{5, 3}}) {
        const auto rep = verify_simplicial_sample(Degree(d1, d2), 50, 7);
        CHECK(rep.all_passed());
        CHECK(rep.trials == 50);
        CHECK_FALSE(rep.counterexample.has_value());
    }
    const auto a = verify_simplicial_sample(Degree(3, 3), 10, 99);
    const auto b = verify_simplicial_sample(Degree(3, 3), 10, 99);
    CHECK(a.sizes == b.sizes);
}

TEST_CASE("Betti numbers for d2 = 1")
{
    CHECK(poincare_polynomial(Degree(1, 1)).polynomial.equals_binomial_power(5));
    CHECK(poincare_polynomial(Degree(2, 1)).polynomial.equals_binomial_power(7));
    for (int d1 = 3; d1 <= 4; ++d1) {
        const auto res = poincare_polynomial(Degree(d1, 1));
        const auto& b = res.polynomial.betti;
        CHECK(b[1] == 2 * d1 + 3);
        CHECK(b[2] == (3 * d1 * d1 + 13 * d1 + 4) / 2);
        CHECK(b[2] != binomial(static_cast<std::size_t>(2 * d1 + 3), 2));
        CHECK_FALSE(res.factored);
        REQUIRE(res.matches_d2_one_form.has_value());
        CHECK_FALSE(*res.matches_d2_one_form);
        CHECK(res.polynomial.symmetric());
        CHECK(res.polynomial.nonnegative());
    }
}

TEST_CASE("formula and duality agree on full counts")
{
    for (auto [d1, d2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
        const Degree d(d1, d2);
        const auto half = betti_numbers(count_cones(d, d.n() / 2), d.n());
        const auto full_counts = count_cones(d, d.n());
        CHECK(betti_numbers(full_counts, d.n()).betti == half.betti);
        BigInt total = 0;
        for (const auto& b : half.betti)
            total += b;
        // Euler characteristic equals the number of maximal cones
        CHECK(total == full_counts.counts.back());
    }
}

TEST_CASE("insufficient counts")
{
    try {
        betti_numbers(count_cones(Degree(2, 1), 2), 7);
        FAIL("expected insufficient counts");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::insufficient_counts);
    }
}

TEST_CASE("Poincare display")
{
    CHECK(poincare_polynomial(Degree(1, 1)).polynomial.pretty() == "(1+t^2)^5");
    CHECK(poincare_polynomial(Degree(2, 1)).polynomial.pretty() == "(1+t^2)^7");
    const auto p31 = poincare_polynomial(Degree(3, 1)).polynomial.pretty();
    CHECK(p31.rfind("1 + 9t^2 + 35t^4 + ", 0) == 0);
}

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(9, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}
