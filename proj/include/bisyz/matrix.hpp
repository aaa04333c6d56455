#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "bisyz/rational.hpp"

namespace bisyz {

/// Dense matrix of exact rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;

    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
            for (long v : r) e_.emplace_back(v);
        }
    }

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& q : e_)
            if (sgn(q) != 0) return false;
        return true;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    /// Columns of `b` appended to the right of `a`.
    static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
        ExactMatrix m(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
        }
        return m;
    }

    /// Rows of `b` appended below the rows of `a`.
    static ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
        ExactMatrix m(a.rows() + b.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
        return m;
    }

    static ExactMatrix from_columns(std::size_t rows,
                                    const std::vector<std::vector<Rational>>& cols)
    {
        ExactMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
        ExactMatrix m(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (sgn(a.at(i, k)) == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return m;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const
    {
        if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape");
        std::vector<Rational> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(at(i, j)) != 0 && sgn(x[j]) != 0) y[i] += at(i, j) * x[j];
        return y;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

namespace detail {

/// Integer matrix used by the elimination core.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Integer> a;

    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Clear denominators row by row.  Row scaling by nonzero factors preserves
/// rank, the right null space, and consistency of M x = v; the factor applied
/// to each row is written to `row_scale` when recovering determinants.
inline IntMat integer_rows(const ExactMatrix& m, std::vector<Rational>* row_scale = nullptr)
{
    IntMat out(m.rows(), m.cols());
    Integer lcm, g;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer& den = m.at(i, j).get_den();
            if (den != 1) {
                mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
                lcm = lcm / g * den;
            }
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            // q * lcm is integral by construction
            out.at(i, j) = q.get_num() * (lcm / q.get_den());
        }
        if (row_scale) row_scale->push_back(Rational(lcm));
    }
    return out;
}

struct EchelonResult {
    std::vector<std::size_t> pivot_cols;  // ascending
    int sign = 1;                         // row-permutation sign
    Integer last_pivot = 1;               // det of the pivot block (full-rank square case)
};

/// Fraction-free (Bareiss) forward elimination, first-nonzero pivoting.
/// On return rows 0..r-1 form an upper echelon with pivots at pivot_cols;
/// rows r.. are zero.  All divisions are exact (entries are minors of the
/// input).
inline EchelonResult bareiss_echelon(IntMat& m)
{
    EchelonResult res;
    std::size_t r = 0;
    Integer prev = 1;
    mpz_t t;
    mpz_init(t);

    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && sgn(m.at(p, c)) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r) {
            for (std::size_t j = c; j < m.cols; ++j)
                std::swap(m.at(p, j), m.at(r, j));
            res.sign = -res.sign;
        }
        const Integer& piv = m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            Integer& lead = m.at(i, c);
            for (std::size_t j = c + 1; j < m.cols; ++j) {
                Integer& x = m.at(i, j);
                mpz_mul(t, piv.get_mpz_t(), x.get_mpz_t());
                if (sgn(lead) != 0)
                    mpz_submul(t, lead.get_mpz_t(), m.at(r, j).get_mpz_t());
                mpz_divexact(x.get_mpz_t(), t, prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = piv;
        res.pivot_cols.push_back(c);
        ++r;
    }
    mpz_clear(t);
    res.last_pivot = prev;
    return res;
}

/// Back-substitution on an echelon matrix: given values for all coordinates
/// right of pivot column pivot_cols[i] (rows processed bottom-up), fill in
/// the pivot coordinates so that every echelon row evaluates to rhs.
inline void back_substitute(const IntMat& u, const EchelonResult& e,
                            std::vector<Rational>& x,
                            const std::vector<Rational>* rhs = nullptr)
{
    for (std::size_t ii = e.pivot_cols.size(); ii-- > 0;) {
        std::size_t pc = e.pivot_cols[ii];
        Rational s = rhs ? (*rhs)[ii] : Rational(0);
        for (std::size_t j = pc + 1; j < u.cols; ++j)
            if (sgn(x[j]) != 0 && sgn(u.at(ii, j)) != 0)
                s -= Rational(u.at(ii, j)) * x[j];
        x[pc] = s / Rational(u.at(ii, pc));
    }
}

}  // namespace detail

/// Rank over the rationals (fraction-free elimination).
inline std::size_t rank(const ExactMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    detail::IntMat im = detail::integer_rows(m);
    return detail::bareiss_echelon(im).pivot_cols.size();
}

/// Basis of the right null space.  Each basis column is normalized so that
/// its first nonzero coordinate is 1; columns appear in free-column order.
inline std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m)
{
    std::vector<std::vector<Rational>> basis;
    if (m.cols() == 0) return basis;
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::vector<Rational> v(m.cols());
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }

    detail::IntMat u = detail::integer_rows(m);
    detail::EchelonResult e = detail::bareiss_echelon(u);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        detail::back_substitute(u, e, x);
        // leading-1 normalization
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (sgn(x[j]) != 0) {
                if (x[j] != 1) {
                    Rational lead = x[j];
                    for (auto& q : x) q /= lead;
                }
                break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Exact determinant.
inline Rational det(const ExactMatrix& m)
{
    if (m.rows() != m.cols()) throw NonSquare("det of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    std::vector<Rational> scale;
    detail::IntMat im = detail::integer_rows(m, &scale);
    detail::EchelonResult e = detail::bareiss_echelon(im);
    if (e.pivot_cols.size() < m.rows()) return Rational(0);
    Rational d(e.last_pivot);
    if (e.sign < 0) d = -d;
    for (const auto& s : scale) d /= s;
    return d;
}

/// Consistency of M x = r for many right-hand sides r (the columns of
/// `rhs`) with one shared elimination: pivots are restricted to the columns
/// of M, so each rhs column is consistent exactly when its entries in the
/// pivot-free rows vanish.
inline std::vector<bool> solvable_batch(const ExactMatrix& m, const ExactMatrix& rhs)
{
    if (rhs.rows() != m.rows()) throw DimensionMismatch("solvable_batch: rhs rows != rows");
    ExactMatrix aug = ExactMatrix::hstack(m, rhs);
    detail::IntMat u = detail::integer_rows(aug);

    // forward elimination, pivot columns limited to the M part
    std::size_t r = 0;
    Integer prev = 1;
    mpz_t t;
    mpz_init(t);
    for (std::size_t c = 0; c < m.cols() && r < u.rows; ++c) {
        std::size_t p = r;
        while (p < u.rows && sgn(u.at(p, c)) == 0) ++p;
        if (p == u.rows) continue;
        if (p != r)
            for (std::size_t j = c; j < u.cols; ++j) std::swap(u.at(p, j), u.at(r, j));
        const Integer& piv = u.at(r, c);
        for (std::size_t i = r + 1; i < u.rows; ++i) {
            Integer& lead = u.at(i, c);
            for (std::size_t j = c + 1; j < u.cols; ++j) {
                Integer& x = u.at(i, j);
                mpz_mul(t, piv.get_mpz_t(), x.get_mpz_t());
                if (sgn(lead) != 0)
                    mpz_submul(t, lead.get_mpz_t(), u.at(r, j).get_mpz_t());
                mpz_divexact(x.get_mpz_t(), t, prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = piv;
        ++r;
    }
    mpz_clear(t);

    std::vector<bool> ok(rhs.cols(), true);
    for (std::size_t k = 0; k < rhs.cols(); ++k)
        for (std::size_t i = r; i < u.rows; ++i)
            if (sgn(u.at(i, m.cols() + k)) != 0) {
                ok[k] = false;
                break;
            }
    return ok;
}

/// One solution of M x = v if the system is consistent (free variables set
/// to zero), std::nullopt otherwise.
inline std::optional<std::vector<Rational>> solve(const ExactMatrix& m,
                                                  const std::vector<Rational>& v)
{
    if (v.size() != m.rows()) throw DimensionMismatch("solve: rhs length != rows");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = v[i];
    }
    detail::IntMat u = detail::integer_rows(aug);
    detail::EchelonResult e = detail::bareiss_echelon(u);

    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == m.cols()) return std::nullopt;  // pivot in rhs column
        rhs.emplace_back(u.at(i, m.cols()));
    }
    std::vector<Rational> x(m.cols() + 1);  // trailing slot stays 0 during back-substitution
    detail::back_substitute(u, e, x, &rhs);
    x.resize(m.cols());
    return x;
}

}  // namespace bisyz
