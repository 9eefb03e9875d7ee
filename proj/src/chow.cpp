#include "qmt/chow.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qmt/exactlin.hpp"

namespace qmt {

ChowGroupBasis chow_group_basis(const LabeledIntMatrix& w)
{
    ChowGroupBasis out{integer_right_inverse(w.matrix), w.matrix};
    if (multiply(w.matrix, out.beta) != IntMatrix::identity(w.matrix.rows()))
        throw Error(ErrorCode::not_surjective, "right inverse failed verification");
    return out;
}

std::string format_linear_form(const LinearForm& f)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto c = f[i];
        if (c == 0)
            continue;
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        if (c != 1 && c != -1)
            out << (c < 0 ? -c : c);
        out << 'h' << i + 1;
        first = false;
    }
    return first ? "0" : out.str();
}

namespace {

bool is_bare(const LinearForm& f)
{
    return std::count_if(f.begin(), f.end(), [](auto c) { return c != 0; }) == 1 &&
           std::find(f.begin(), f.end(), 1) != f.end();
}

std::string join_factors(const std::vector<LinearForm>& factors, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i])
            ++j;
        if (!out.empty())
            out += sep;
        const std::string text = format_linear_form(factors[i]);
        out += is_bare(factors[i]) ? text : "(" + text + ")";
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string Relation::str() const { return join_factors(factors, ""); }

std::string Relation::cas_str() const { return join_factors(factors, "*"); }

ChowPresentation chow_presentation(const Degree& d)
{
    const auto w = build_weight_matrix(d);
    const PrimitiveCollectionSet pi(d);
    ChowPresentation p;
    p.num_generators = w.matrix.rows();
    for (std::size_t k = 0; k < pi.size(); ++k) {
        Relation rel;
        rel.members = pi.labels(k);
        for (auto c : pi.indices()[k])
            rel.factors.push_back(w.matrix.column(c));
        p.relations.push_back(std::move(rel));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Graded dimensions

namespace {

using Monomial = std::vector<std::uint16_t>;
using Polynomial = std::map<Monomial, std::int64_t>;

void monomials_rec(std::size_t vars, std::size_t degree, std::size_t i, Monomial& cur, std::vector<Monomial>& out)
{
    if (i + 1 == vars) {
        cur[i] = static_cast<std::uint16_t>(degree);
        out.push_back(cur);
        cur[i] = 0;
        return;
    }
    for (std::size_t e = degree + 1; e-- > 0;) {
        cur[i] = static_cast<std::uint16_t>(e);
        monomials_rec(vars, degree - e, i + 1, cur, out);
    }
    cur[i] = 0;
}

// Number of monomials of the given degree, C(vars - 1 + degree, degree).
BigInt monomial_count(std::size_t vars, std::size_t degree)
{
    if (vars == 0)
        return degree == 0 ? 1 : 0;
    BigInt out = 1;
    for (std::size_t i = 1; i <= degree; ++i)
        out = out * (vars - 1 + i) / i;
    return out;
}

std::vector<Monomial> monomials(std::size_t vars, std::size_t degree)
{
    std::vector<Monomial> out;
    if (vars == 0)
        return degree == 0 ? std::vector<Monomial>{Monomial{}} : out;
    Monomial cur(vars, 0);
    monomials_rec(vars, degree, 0, cur, out);
    return out;
}

Polynomial expand(const Relation& rel, std::size_t vars)
{
    Polynomial p{{Monomial(vars, 0), 1}};
    for (const auto& f : rel.factors) {
        Polynomial next;
        for (const auto& [m, c] : p)
            for (std::size_t i = 0; i < vars; ++i) {
                if (f[i] == 0)
                    continue;
                Monomial mm = m;
                ++mm[i];
                auto& slot = next[mm];
                slot = checked::add(slot, checked::mul(c, f[i]));
            }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        p = std::move(next);
    }
    return p;
}

// Sparse rows keyed by column, eliminated against pivots keyed by leading column.
class SparseRank {
public:
    using Row = std::map<std::size_t, Rational>;

    void add(Row row)
    {
        while (!row.empty()) {
            auto lead = row.begin();
            auto piv = pivots_.find(lead->first);
            if (piv == pivots_.end()) {
                pivots_.emplace(lead->first, std::move(row));
                return;
            }
            const Rational f = lead->second / piv->second.begin()->second;
            for (const auto& [c, v] : piv->second) {
                auto& slot = row[c];
                slot -= f * v;
                if (slot == 0)
                    row.erase(c);
            }
        }
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::size_t, Row> pivots_;
};

}  // namespace

std::vector<std::size_t> graded_dimensions(const ChowPresentation& p, std::size_t kmax, std::uint64_t budget)
{
    const std::size_t vars = p.num_generators;
    std::vector<Polynomial> rels;
    std::vector<std::size_t> rel_deg;
    for (const auto& r : p.relations) {
        if (r.factors.empty())
            throw Error(ErrorCode::invalid_input, "relation with no factors");
        for (const auto& f : r.factors)
            if (f.size() != vars)
                throw Error(ErrorCode::dimension_mismatch, "linear form length differs from generator count");
        rels.push_back(expand(r, vars));
        rel_deg.push_back(r.factors.size());
    }

    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= kmax; ++k) {
        const BigInt basis_size = monomial_count(vars, k);
        if (basis_size > budget)
            throw Error(ErrorCode::budget_exceeded, "degree " + std::to_string(k) + " has too many monomials");
        const auto basis = monomials(vars, k);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], i);

        std::uint64_t generated = 0;
        SparseRank rank;
        for (std::size_t g = 0; g < rels.size(); ++g) {
            if (rel_deg[g] > k)
                continue;
            for (const auto& m : monomials(vars, k - rel_deg[g])) {
                if (++generated > budget)
                    throw Error(ErrorCode::budget_exceeded,
                                "degree " + std::to_string(k) + " needs too many relation multiples");
                SparseRank::Row row;
                for (const auto& [mono, c] : rels[g]) {
                    Monomial prod = mono;
                    for (std::size_t i = 0; i < vars; ++i)
                        prod[i] = static_cast<std::uint16_t>(prod[i] + m[i]);
                    row.emplace(index.at(prod), Rational(c));
                }
                rank.add(std::move(row));
            }
        }
        dims.push_back(basis.size() - rank.rank());
    }
    return dims;
}

// ---------------------------------------------------------------------------
// Script output

std::string emit_cas_script(const ChowPresentation& p, std::string_view dialect)
{
    std::ostringstream out;
    auto gens = [&](std::string_view sep) {
        for (std::size_t i = 1; i <= p.num_generators; ++i)
            out << (i > 1 ? sep : "") << 'h' << i;
    };
    if (dialect == "generic") {
        out << "R = QQ[";
        gens(",");
        out << "];\n";
        if (p.relations.empty())
            return out.str();
        out << "I = ideal(";
        for (std::size_t i = 0; i < p.relations.size(); ++i)
            out << (i ? ", " : "") << p.relations[i].cas_str();
        out << ");\nA = R/I;\n";
        return out.str();
    }
    if (dialect == "plain") {
        out << "generators: ";
        gens(", ");
        out << '\n';
        if (p.relations.empty())
            return out.str();
        out << "relations:\n";
        for (const auto& r : p.relations)
            out << "  " << r.str() << '\n';
        return out.str();
    }
    throw Error(ErrorCode::unknown_dialect, "unknown dialect '" + std::string(dialect) + "'");
}

// ---------------------------------------------------------------------------
// Moduli presentation

ModuliPresentation moduli_presentation(const Degree& d)
{
    const auto w = build_weight_matrix(d);
    const PrimitiveCollectionSet pi(d);

    std::vector<ColLabel> coords;
    for (int i = 0; i <= d.d1(); ++i)
        for (int k = 1; k <= 2; ++k)
            coords.push_back(ColLabel::a(k, i));
    for (int j = 0; j <= d.d2(); ++j)
        for (int k = 1; k <= 2; ++k)
            coords.push_back(ColLabel::b(k, j));
    for (auto [i, j] : u_index_set(d))
        coords.push_back(ColLabel::u(i, j));

    IntMatrix weights(w.matrix.rows(), coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) {
        const std::size_t src = w.col_of(coords[c]);
        for (std::size_t r = 0; r < weights.rows(); ++r)
            weights(r, c) = w.matrix(r, src);
    }

    ModuliPresentation out{d, coords, d.torus_rank(), {std::move(weights), w.row_labels, coords}, {}};
    for (std::size_t k = 0; k < pi.size(); ++k)
        out.excluded_locus.push_back(pi.labels(k));
    return out;
}

std::string ModuliPresentation::locus_str(std::size_t k) const
{
    const auto& s = excluded_locus.at(k);
    if (s.size() == 2 && s[0].kind == s[1].kind && s[0].kind != ColLabel::Kind::u && s[0].i == s[1].i &&
        s[0].j == s[1].j) {
        const int idx = s[0].kind == ColLabel::Kind::a ? s[0].i : s[0].j;
        return std::string("{") + (s[0].kind == ColLabel::Kind::a ? "a_" : "b_") + std::to_string(idx) + " = 0}";
    }
    std::string lhs, rhs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        lhs += (i ? ", " : "") + s[i].str();
        rhs += i ? ",0" : "0";
    }
    return "{(" + lhs + ") = (" + rhs + ")}";
}

}  // namespace qmt
