#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qmt/chow.hpp"
#include "qmt/exactlin.hpp"
#include "qmt/fans.hpp"
#include "qmt/pseudofan.hpp"
#include "qmt/toricdata.hpp"

namespace qmt {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// {"rows": n, "cols": m, "entries": [[...], ...]}
json to_json(const IntMatrix& m);
/// Matrix fields plus "row_labels" and "col_labels".
json to_json(const LabeledIntMatrix& m);
/// Integers that fit in 64 bits become numbers, others decimal strings.
json to_json(const BigInt& v);
/// Rationals are written as strings, "p" or "p/q".
json to_json(const Rational& v);
json to_json(const std::vector<Rational>& v);
json to_json(const ExactnessReport& r);
json to_json(const IdentityReport& r);
json to_json(const PrimitiveCollectionSet& pi);
json to_json(const MinValueSolution& s);
json to_json(const ConeCountTable& t);
json to_json(const PoincarePolynomial& p);
json to_json(const SimplicialSampleReport& r);
json to_json(const ChowPresentation& p);
json to_json(const ModuliPresentation& m);

std::string to_csv(const LabeledIntMatrix& m);

/// Inverse of to_json(IntMatrix). Throws Error(invalid_input) on malformed input.
IntMatrix int_matrix_from_json(const json& j);

/// Accepts a JSON array of integers or rational strings ("3", "-7/2").
std::vector<Rational> rational_vector_from_json(const json& j);

}  // namespace qmt
