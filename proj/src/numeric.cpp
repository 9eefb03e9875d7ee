#include "qmt/numeric.hpp"

#include <limits>

#include "qmt/matrix.hpp"

namespace qmt {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::arithmetic_overflow: return "arithmetic-overflow";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::not_surjective: return "not-surjective";
    case ErrorCode::invalid_degree: return "invalid-degree";
    case ErrorCode::invalid_input: return "invalid-input";
    case ErrorCode::precondition_violated: return "precondition-violated";
    case ErrorCode::no_solution: return "no-solution";
    case ErrorCode::multiple_solutions: return "multiple-solutions";
    case ErrorCode::residual_nonzero: return "residual-nonzero";
    case ErrorCode::guard_exceeded: return "guard-exceeded";
    case ErrorCode::kmax_out_of_range: return "kmax-out-of-range";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::insufficient_counts: return "insufficient-counts";
    case ErrorCode::unknown_dialect: return "unknown-dialect";
    }
    return "unknown";
}

std::int64_t narrow(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("value does not fit in int64");
    return static_cast<std::int64_t>(v);
}

IntMatrix narrow(const BigIntMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = narrow(m(r, c));
    return out;
}

std::string to_string(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool is_integer_text(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
        throw Error(ErrorCode::invalid_input, "not a rational number: '" + text + "'");
    BigInt n(num[0] == '+' ? num.substr(1) : num);
    BigInt d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0)
        throw Error(ErrorCode::invalid_input, "zero denominator: '" + text + "'");
    return Rational(n, d);
}

}  // namespace qmt
