#include "qmt/serialize.hpp"

#include <sstream>

namespace qmt {

namespace {

template <class Labels>
json label_list(const Labels& labels)
{
    json out = json::array();
    for (const auto& l : labels)
        out.push_back(l.str());
    return out;
}

}  // namespace

json to_json(const IntMatrix& m)
{
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        entries.push_back(std::vector<std::int64_t>(row.begin(), row.end()));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const LabeledIntMatrix& m)
{
    json out = to_json(m.matrix);
    out["row_labels"] = label_list(m.row_labels);
    out["col_labels"] = label_list(m.col_labels);
    return out;
}

json to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json to_json(const Rational& v) { return to_string(v); }

json to_json(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

json to_json(const ExactnessReport& r)
{
    return {{"exact", r.exact()},
            {"orthogonal", r.orthogonal},
            {"v_full_rank", r.v_full_rank},
            {"w_full_rank", r.w_full_rank},
            {"v_saturated", r.v_saturated},
            {"w_surjective", r.w_surjective},
            {"rank_v", r.rank_v},
            {"rank_w", r.rank_w}};
}

json to_json(const IdentityReport& r)
{
    json failures = json::array();
    for (const auto& c : r.checks)
        if (!c.passed)
            failures.push_back({{"identity", c.identity}, {"i", c.i}, {"j", c.j}});
    json counts = json::object();
    for (int id = 1; id <= 4; ++id)
        counts[std::to_string(id)] = r.count(id);
    return {{"all_passed", r.all_passed()}, {"checks", counts}, {"failures", std::move(failures)}};
}

json to_json(const PrimitiveCollectionSet& pi)
{
    json out = json::array();
    for (std::size_t k = 0; k < pi.size(); ++k)
        out.push_back(label_list(pi.labels(k)));
    return out;
}

json to_json(const MinValueSolution& s)
{
    return {{"x", to_json(s.x)}, {"residuals", to_json(s.residuals)}, {"member_values", to_json(s.member_values)}};
}

json to_json(const ConeCountTable& t)
{
    return {{"d1", t.degree.d1()}, {"d2", t.degree.d2()}, {"kmax", t.kmax}, {"counts", t.counts}, {"nodes", t.nodes}};
}

json to_json(const PoincarePolynomial& p)
{
    json betti = json::array();
    for (const auto& b : p.betti)
        betti.push_back(to_json(b));
    return {{"n", p.n}, {"betti_even", std::move(betti)}, {"symmetric", p.symmetric()}, {"pretty", p.pretty()}};
}

json to_json(const SimplicialSampleReport& r)
{
    json out = {{"trials", r.trials}, {"passed", r.passed}, {"all_passed", r.all_passed()}};
    if (r.counterexample)
        out["counterexample"] = label_list(*r.counterexample);
    return out;
}

json to_json(const ChowPresentation& p)
{
    json rels = json::array();
    for (const auto& r : p.relations) {
        json factors = json::array();
        for (const auto& f : r.factors)
            factors.push_back(f);
        rels.push_back({{"members", label_list(r.members)}, {"factors", std::move(factors)}, {"text", r.str()}});
    }
    return {{"num_generators", p.num_generators}, {"relations", std::move(rels)}};
}

json to_json(const ModuliPresentation& m)
{
    json loci = json::array();
    for (std::size_t k = 0; k < m.excluded_locus.size(); ++k)
        loci.push_back({{"vanishing", label_list(m.excluded_locus[k])}, {"text", m.locus_str(k)}});
    return {{"coordinates", label_list(m.coordinates)},
            {"torus_rank", m.torus_rank},
            {"weights", to_json(m.weights)},
            {"excluded_locus", std::move(loci)}};
}

std::string to_csv(const LabeledIntMatrix& m)
{
    std::ostringstream out;
    out << "label";
    for (const auto& c : m.col_labels)
        out << ',' << c.str();
    out << '\n';
    for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
        out << m.row_labels[r].str();
        for (std::size_t c = 0; c < m.matrix.cols(); ++c)
            out << ',' << m.matrix(r, c);
        out << '\n';
    }
    return out.str();
}

IntMatrix int_matrix_from_json(const json& j)
{
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (entries.size() != rows)
            throw Error(ErrorCode::invalid_input, "matrix JSON: entries do not match rows");
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (entries[r].size() != cols)
                throw Error(ErrorCode::invalid_input, "matrix JSON: ragged row " + std::to_string(r));
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = entries[r][c].get<std::int64_t>();
        }
        return m;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::invalid_input, std::string("matrix JSON: ") + e.what());
    }
}

std::vector<Rational> rational_vector_from_json(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorCode::invalid_input, "expected a JSON array");
    std::vector<Rational> out;
    for (const auto& v : j) {
        if (v.is_number_integer())
            out.emplace_back(v.get<std::int64_t>());
        else if (v.is_string())
            out.push_back(parse_rational(v.get<std::string>()));
        else
            throw Error(ErrorCode::invalid_input, "vector entries must be integers or rational strings");
    }
    return out;
}

}  // namespace qmt
