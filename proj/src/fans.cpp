#include "qmt/fans.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "qmt/exactlin.hpp"

namespace qmt {

BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    BigInt out = 1;
    for (std::size_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

namespace {

// Depth-first enumeration of collection-avoiding subsets in column order.
class ConeCounter {
public:
    ConeCounter(const PrimitiveCollectionSet& pi, std::size_t kmax, std::uint64_t budget)
        : pi_(pi), kmax_(kmax), budget_(budget), hits_(pi.size(), 0), counts_(kmax + 1, 0)
    {
        for (const auto& c : pi.indices())
            need_.push_back(c.size());
    }

    void run(std::size_t r)
    {
        r_ = r;
        counts_[0] = 1;
        if (kmax_ > 0)
            descend(0, 0);
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool blocked(std::size_t v) const
    {
        for (auto k : pi_.containing(v))
            if (hits_[k] + 1 == need_[k])
                return true;
        return false;
    }

    void descend(std::size_t start, std::size_t depth)
    {
        for (std::size_t v = start; v < r_; ++v) {
            if (blocked(v))
                continue;
            if (++nodes_ > budget_)
                throw Error(ErrorCode::budget_exceeded,
                            "cone enumeration exceeded the budget of " + std::to_string(budget_) + " nodes");
            ++counts_[depth + 1];
            if (depth + 1 < kmax_) {
                for (auto k : pi_.containing(v))
                    ++hits_[k];
                descend(v + 1, depth + 1);
                for (auto k : pi_.containing(v))
                    --hits_[k];
            }
        }
    }

    const PrimitiveCollectionSet& pi_;
    std::size_t kmax_;
    std::uint64_t budget_;
    std::size_t r_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> need_;
    std::vector<std::size_t> hits_;
    std::vector<std::uint64_t> counts_;
};

}  // namespace

ConeCountTable count_cones(const Degree& d, std::size_t kmax, std::uint64_t budget)
{
    if (kmax > d.n())
        throw Error(ErrorCode::kmax_out_of_range,
                    "kmax " + std::to_string(kmax) + " exceeds n = " + std::to_string(d.n()));
    const PrimitiveCollectionSet pi(d);
    ConeCounter counter(pi, kmax, budget);
    counter.run(d.r());
    return {d, kmax, counter.counts(), counter.nodes()};
}

SimplicialSampleReport verify_simplicial_sample(const Degree& d, std::size_t trials, std::uint64_t seed)
{
    const PrimitiveCollectionSet pi(d);
    const IntMatrix v = build_vertex_matrix(d).matrix;
    const auto labels = column_labels(d);
    std::mt19937_64 rng(seed);

    std::vector<std::size_t> order(d.r());
    std::iota(order.begin(), order.end(), 0);

    SimplicialSampleReport rep;
    rep.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::size_t> hits(pi.size(), 0);
        std::vector<std::size_t> chosen;
        for (auto c : order) {
            bool ok = true;
            for (auto k : pi.containing(c))
                if (hits[k] + 1 == pi.indices()[k].size())
                    ok = false;
            if (!ok)
                continue;
            chosen.push_back(c);
            for (auto k : pi.containing(c))
                ++hits[k];
        }
        std::sort(chosen.begin(), chosen.end());

        RationalMatrix cols(v.rows(), chosen.size());
        for (std::size_t j = 0; j < chosen.size(); ++j)
            for (std::size_t r = 0; r < v.rows(); ++r)
                cols(r, j) = v(r, chosen[j]);
        const bool pass = chosen.size() == d.n() && rational_rank(cols) == chosen.size();

        rep.sizes.push_back(chosen.size());
        if (pass) {
            ++rep.passed;
        } else if (!rep.counterexample) {
            std::vector<ColLabel> s;
            for (auto c : chosen)
                s.push_back(labels[c]);
            rep.counterexample = std::move(s);
        }
    }
    return rep;
}

bool PoincarePolynomial::symmetric() const
{
    for (std::size_t k = 0; k < betti.size(); ++k)
        if (betti[k] != betti[betti.size() - 1 - k])
            return false;
    return true;
}

bool PoincarePolynomial::nonnegative() const
{
    return std::all_of(betti.begin(), betti.end(), [](const BigInt& b) { return b >= 0; });
}

bool PoincarePolynomial::equals_binomial_power(std::size_t e) const
{
    if (betti.size() != e + 1)
        return false;
    for (std::size_t k = 0; k <= e; ++k)
        if (betti[k] != binomial(e, k))
            return false;
    return true;
}

std::string PoincarePolynomial::pretty() const
{
    if (equals_binomial_power(n))
        return "(1+t^2)^" + std::to_string(n);
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (betti[k] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (k == 0) {
            out << betti[k];
            continue;
        }
        if (betti[k] != 1)
            out << betti[k];
        out << "t^" << 2 * k;
    }
    if (first)
        out << "0";
    return out.str();
}

PoincarePolynomial betti_numbers(const ConeCountTable& table, std::size_t n)
{
    const std::size_t kmax = table.counts.size() - 1;
    if (table.counts.empty() || kmax < n / 2)
        throw Error(ErrorCode::insufficient_counts, "Betti numbers need cone counts up to floor(n/2) = " +
                                                        std::to_string(n / 2));

    // b_(2k) = sum_{i=k}^{n} (-1)^(i-k) C(i,k) |Sigma(n-i)|, usable when n-k <= kmax.
    auto formula = [&](std::size_t k) -> std::optional<BigInt> {
        if (n - k > kmax)
            return std::nullopt;
        BigInt b = 0;
        for (std::size_t i = k; i <= n; ++i) {
            BigInt term = binomial(i, k) * BigInt(table.counts[n - i]);
            b += ((i - k) % 2 == 0) ? term : BigInt(-term);
        }
        return b;
    };

    PoincarePolynomial p;
    p.n = n;
    p.betti.assign(n + 1, 0);
    std::vector<std::optional<BigInt>> direct(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        direct[k] = formula(k);
    for (std::size_t k = 0; k <= n; ++k) {
        const auto& own = direct[k];
        const auto& dual = direct[n - k];
        if (own && dual && *own != *dual)
            throw Error(ErrorCode::precondition_violated,
                        "Betti formula and duality disagree at k=" + std::to_string(k));
        p.betti[k] = own ? *own : *dual;
    }
    return p;
}

PoincareResult poincare_polynomial(const Degree& d, std::uint64_t budget)
{
    PoincareResult res{count_cones(d, d.n() / 2, budget), {}, false, std::nullopt};
    res.polynomial = betti_numbers(res.counts, d.n());
    res.factored = res.polynomial.equals_binomial_power(d.n());
    if (d.d2() == 1)
        res.matches_d2_one_form = res.polynomial.equals_binomial_power(static_cast<std::size_t>(2 * d.d1() + 3));
    return res;
}

}  // namespace qmt
