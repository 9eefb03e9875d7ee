#include "qmt/exactlin.hpp"

#include <optional>
#include <utility>

namespace qmt {
namespace {

template <class T>
T magnitude(const T& v)
{
    return v < 0 ? checked::neg(v) : v;
}

// row[a] -= q * row[b], applied to the working matrix and the left factor.
template <class T>
void row_axpy(Matrix<T>& m, std::size_t a, std::size_t b, const T& q)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(b, c) != 0)
            m(a, c) = checked::sub(m(a, c), checked::mul(q, m(b, c)));
}

template <class T>
void col_axpy(Matrix<T>& m, std::size_t a, std::size_t b, const T& q)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, b) != 0)
            m(r, a) = checked::sub(m(r, a), checked::mul(q, m(r, b)));
}

template <class T>
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const Matrix<T>& a, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_mag = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            T mag = magnitude(a(i, j));
            if (!best || mag < best_mag) {
                best = {i, j};
                best_mag = mag;
            }
        }
    return best;
}

template <class T>
BasicSnf<T> snf_impl(const Matrix<T>& m)
{
    if (m.empty())
        throw Error(ErrorCode::invalid_input, "smith_normal_form: empty matrix");

    Matrix<T> a = m;
    Matrix<T> left = Matrix<T>::identity(m.rows());
    Matrix<T> right = Matrix<T>::identity(m.cols());
    const std::size_t steps = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            auto pivot = smallest_entry(a, t);
            if (!pivot)
                goto finished;  // remaining block is zero
            auto [pi, pj] = *pivot;
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                T q = checked::div(a(i, t), a(t, t));
                row_axpy(a, i, t, q);
                row_axpy(left, i, t, q);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                T q = checked::div(a(t, j), a(t, t));
                col_axpy(a, j, t, q);
                col_axpy(right, j, t, q);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into the pivot row and redo.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            row_axpy(a, t, *offending, T(-1));
            row_axpy(left, t, *offending, T(-1));
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < a.cols(); ++c)
                a(t, c) = checked::neg(a(t, c));
            for (std::size_t c = 0; c < left.cols(); ++c)
                left(t, c) = checked::neg(left(t, c));
        }
    }
finished:
    BasicSnf<T> out{std::move(left), std::vector<T>(steps, T(0)), std::move(right)};
    for (std::size_t t = 0; t < steps; ++t)
        out.diag[t] = a(t, t);
    return out;
}

std::vector<BigInt> to_big(const std::vector<std::int64_t>& v)
{
    return {v.begin(), v.end()};
}

bool all_ones(const std::vector<BigInt>& factors, std::size_t expected)
{
    if (factors.size() < expected)
        return false;
    for (std::size_t i = 0; i < expected; ++i)
        if (factors[i] != 1)
            return false;
    return true;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) { return snf_impl(m); }

BigSnfDecomposition smith_normal_form(const BigIntMatrix& m) { return snf_impl(m); }

std::vector<BigInt> invariant_factors(const IntMatrix& m)
{
    try {
        return to_big(smith_normal_form(m).diag);
    } catch (const OverflowError&) {
        return smith_normal_form(matrix_cast<BigInt>(m)).diag;
    }
}

std::size_t integer_rank(const IntMatrix& m)
{
    if (m.empty())
        return 0;
    std::size_t k = 0;
    for (const auto& d : invariant_factors(m))
        if (d != 0)
            ++k;
    return k;
}

std::size_t rational_rank(RationalMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(rank, p);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0)
                continue;
            Rational f = m(i, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

BigInt determinant(const BigIntMatrix& input)
{
    if (input.rows() != input.cols())
        throw Error(ErrorCode::dimension_mismatch, "determinant: matrix not square");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    BigIntMatrix a = input;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

ExactnessReport verify_exact_sequence(const IntMatrix& v, const IntMatrix& w)
{
    if (v.cols() != w.cols() || v.rows() > v.cols() || w.rows() != v.cols() - v.rows())
        throw Error(ErrorCode::dimension_mismatch,
                    "verify_exact_sequence: expected V n x r and W (r-n) x r");
    ExactnessReport rep;
    BigIntMatrix product = multiply(matrix_cast<BigInt>(w), matrix_cast<BigInt>(v).transpose());
    rep.orthogonal = product.is_zero();

    const auto fv = invariant_factors(v);
    const auto fw = invariant_factors(w);
    for (const auto& d : fv)
        rep.rank_v += d != 0 ? 1 : 0;
    for (const auto& d : fw)
        rep.rank_w += d != 0 ? 1 : 0;
    rep.v_full_rank = rep.rank_v == v.rows();
    rep.w_full_rank = rep.rank_w == w.rows();
    rep.v_saturated = all_ones(fv, v.rows());
    rep.w_surjective = all_ones(fw, w.rows());
    return rep;
}

namespace {

// W = L^-1 D R^-1 with D = [I | 0], so B = R[:, :m] * L gives W B = I.
template <class T>
Matrix<T> right_inverse_from(const BasicSnf<T>& snf, std::size_t m)
{
    Matrix<T> r_head(snf.right.rows(), m);
    for (std::size_t i = 0; i < snf.right.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            r_head(i, j) = snf.right(i, j);
    return multiply(r_head, snf.left);
}

}  // namespace

IntMatrix integer_right_inverse(const IntMatrix& w)
{
    if (w.empty() || w.rows() > w.cols())
        throw Error(ErrorCode::not_surjective, "integer_right_inverse: W cannot be surjective");
    auto check = [&](const auto& snf) {
        for (const auto& d : snf.diag)
            if (d != 1)
                throw Error(ErrorCode::not_surjective,
                            "integer_right_inverse: W has an invariant factor other than 1");
    };
    try {
        auto snf = smith_normal_form(w);
        check(snf);
        return right_inverse_from(snf, w.rows());
    } catch (const OverflowError&) {
        auto snf = smith_normal_form(matrix_cast<BigInt>(w));
        check(snf);
        return narrow(right_inverse_from(snf, w.rows()));
    }
}

}  // namespace qmt
