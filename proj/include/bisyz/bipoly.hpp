#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisyz/matrix.hpp"

namespace bisyz {

/// dim R_{m,n} = (m+1)(n+1) for m, n >= 0, else 0.
inline long dim_R(BiDeg d)
{
    return (d.m >= 0 && d.n >= 0) ? (d.m + 1) * (d.n + 1) : 0;
}

/// Bihomogeneous element of R = k[x,y,z,w], deg x = deg y = (1,0),
/// deg z = deg w = (0,1), stored as a dense coefficient grid.
///
/// Monomial order (fixed project-wide): index pair (i, j) with
/// 0 <= i <= m, 0 <= j <= n, flat index i*(n+1)+j, where c[i][j]
/// multiplies x^(m-i) y^i z^(n-j) w^j.
class BiHomPoly {
public:
    BiHomPoly() : deg_{0, 0}, c_(1) {}

    /// Zero polynomial of the given bidegree.
    explicit BiHomPoly(BiDeg deg) : deg_(deg)
    {
        if (!deg.nonnegative()) throw WrongBidegree("polynomial bidegree must be >= 0");
        c_.assign(static_cast<std::size_t>(dim_R(deg)), Rational(0));
    }

    static BiHomPoly make(BiDeg deg, const std::vector<Rational>& grid_row_major)
    {
        BiHomPoly p(deg);
        if (grid_row_major.size() != p.c_.size())
            throw DimensionMismatch("coefficient grid does not match bidegree");
        p.c_ = grid_row_major;
        return p;
    }

    static BiHomPoly constant(const Rational& value)
    {
        BiHomPoly p({0, 0});
        p.c_[0] = value;
        return p;
    }

    /// Basis monomial x^(m-i) y^i z^(n-j) w^j of bidegree (m, n).
    static BiHomPoly monomial(BiDeg deg, long i, long j)
    {
        BiHomPoly p(deg);
        p.coeff(i, j) = 1;
        return p;
    }

    static BiHomPoly x() { return monomial({1, 0}, 0, 0); }
    static BiHomPoly y() { return monomial({1, 0}, 1, 0); }
    static BiHomPoly z() { return monomial({0, 1}, 0, 0); }
    static BiHomPoly w() { return monomial({0, 1}, 0, 1); }

    BiDeg deg() const { return deg_; }

    Rational& coeff(long i, long j) { return c_[idx(i, j)]; }
    const Rational& coeff(long i, long j) const { return c_[idx(i, j)]; }

    const std::vector<Rational>& coeff_vector() const { return c_; }

    bool is_zero() const
    {
        for (const auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }

    friend bool operator==(const BiHomPoly& a, const BiHomPoly& b)
    {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }

    friend BiHomPoly operator+(const BiHomPoly& a, const BiHomPoly& b)
    {
        if (a.deg_ != b.deg_) throw DegreeMismatch("sum of distinct bidegrees");
        BiHomPoly r(a.deg_);
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }

    friend BiHomPoly operator-(const BiHomPoly& a, const BiHomPoly& b)
    {
        if (a.deg_ != b.deg_) throw DegreeMismatch("difference of distinct bidegrees");
        BiHomPoly r(a.deg_);
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }

    BiHomPoly operator-() const
    {
        BiHomPoly r(deg_);
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
        return r;
    }

    friend BiHomPoly operator*(const Rational& s, const BiHomPoly& a)
    {
        BiHomPoly r(a.deg_);
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = s * a.c_[k];
        return r;
    }

    friend BiHomPoly operator*(const BiHomPoly& a, const BiHomPoly& b)
    {
        BiHomPoly r(a.deg_ + b.deg_);
        for (long i = 0; i <= a.deg_.m; ++i)
            for (long j = 0; j <= a.deg_.n; ++j) {
                const Rational& ca = a.coeff(i, j);
                if (sgn(ca) == 0) continue;
                for (long k = 0; k <= b.deg_.m; ++k)
                    for (long l = 0; l <= b.deg_.n; ++l) {
                        const Rational& cb = b.coeff(k, l);
                        if (sgn(cb) != 0) r.coeff(i + k, j + l) += ca * cb;
                    }
            }
        return r;
    }

    Rational eval(const Rational& x0, const Rational& y0,
                  const Rational& z0, const Rational& w0) const
    {
        std::vector<Rational> xp(deg_.m + 1), yp(deg_.m + 1), zp(deg_.n + 1), wp(deg_.n + 1);
        xp[0] = yp[0] = zp[0] = wp[0] = 1;
        for (long i = 1; i <= deg_.m; ++i) { xp[i] = xp[i - 1] * x0; yp[i] = yp[i - 1] * y0; }
        for (long j = 1; j <= deg_.n; ++j) { zp[j] = zp[j - 1] * z0; wp[j] = wp[j - 1] * w0; }
        Rational v(0);
        for (long i = 0; i <= deg_.m; ++i)
            for (long j = 0; j <= deg_.n; ++j) {
                const Rational& c = coeff(i, j);
                if (sgn(c) != 0) v += c * xp[deg_.m - i] * yp[i] * zp[deg_.n - j] * wp[j];
            }
        return v;
    }

    std::string str() const;

private:
    std::size_t idx(long i, long j) const
    {
        return static_cast<std::size_t>(i) * (deg_.n + 1) + static_cast<std::size_t>(j);
    }

    BiDeg deg_;
    std::vector<Rational> c_;
};

/// Matrix of the multiplication map R_src -> R_{src + deg p}, q |-> p*q,
/// in the fixed monomial order.  Column k is coeff_vector(p * monomial_k).
inline ExactMatrix mult_matrix(const BiHomPoly& p, BiDeg src)
{
    BiDeg tgt = src + p.deg();
    ExactMatrix m(static_cast<std::size_t>(dim_R(tgt)),
                  static_cast<std::size_t>(dim_R(src)));
    if (m.cols() == 0 || m.rows() == 0) return m;
    for (long si = 0; si <= src.m; ++si)
        for (long sj = 0; sj <= src.n; ++sj) {
            std::size_t col = static_cast<std::size_t>(si) * (src.n + 1) + sj;
            for (long i = 0; i <= p.deg().m; ++i)
                for (long j = 0; j <= p.deg().n; ++j) {
                    const Rational& c = p.coeff(i, j);
                    if (sgn(c) == 0) continue;
                    std::size_t row =
                        static_cast<std::size_t>(i + si) * (tgt.n + 1) + (j + sj);
                    m.at(row, col) = c;
                }
        }
    return m;
}

/// p = A z + B w for a polynomial of bidegree (m, 1).
struct SplitZW {
    BiHomPoly A, B;  // bidegree (m, 0)
};

inline SplitZW split_zw(const BiHomPoly& p)
{
    if (p.deg().n != 1) throw WrongBidegree("split_zw requires bidegree (m, 1)");
    long m = p.deg().m;
    BiHomPoly A({m, 0}), B({m, 0});
    for (long i = 0; i <= m; ++i) {
        A.coeff(i, 0) = p.coeff(i, 0);  // z-slice
        B.coeff(i, 0) = p.coeff(i, 1);  // w-slice
    }
    return {A, B};
}

/// p = C x^2 + D xy + E y^2 for a polynomial of bidegree (2, n).
struct SplitXY {
    BiHomPoly C, D, E;  // bidegree (0, n)
};

inline SplitXY split_xy(const BiHomPoly& p)
{
    if (p.deg().m != 2) throw WrongBidegree("split_xy requires bidegree (2, n)");
    long n = p.deg().n;
    BiHomPoly C({0, n}), D({0, n}), E({0, n});
    for (long j = 0; j <= n; ++j) {
        C.coeff(0, j) = p.coeff(0, j);
        D.coeff(0, j) = p.coeff(1, j);
        E.coeff(0, j) = p.coeff(2, j);
    }
    return {C, D, E};
}

/// Exact quotient p / d, or nullopt when d does not divide p.  Realized as
/// the linear system mult_matrix(d, deg p - deg d) * q = coeff_vector(p).
inline std::optional<BiHomPoly> divide_exact(const BiHomPoly& p, const BiHomPoly& d)
{
    if (d.is_zero()) throw ZeroDivisor("division by the zero polynomial");
    BiDeg qdeg = p.deg() - d.deg();
    if (!qdeg.nonnegative()) return std::nullopt;
    auto sol = solve(mult_matrix(d, qdeg), p.coeff_vector());
    if (!sol) return std::nullopt;
    return BiHomPoly::make(qdeg, *sol);
}

/// Common linear factor in x, y of a triple of bidegree-(1,2) polynomials.
/// Writes each entry as x*u_k(z,w) + y*v_k(z,w) and looks for (alpha, beta)
/// with beta*u_k == alpha*v_k for all k (a stacked 9x2 kernel).  Returns the
/// factor l = alpha*x + beta*y (leading coefficient 1) and the quotient
/// triple of bidegree (0,2), or nullopt when no common factor exists.
inline std::optional<std::pair<BiHomPoly, std::array<BiHomPoly, 3>>>
linear_content_xy(const std::array<BiHomPoly, 3>& t)
{
    for (const auto& e : t)
        if (e.deg() != BiDeg{1, 2})
            throw WrongBidegree("linear_content_xy requires bidegree (1, 2) entries");
    if (t[0].is_zero() && t[1].is_zero() && t[2].is_zero()) return std::nullopt;

    ExactMatrix sys(9, 2);
    for (std::size_t k = 0; k < 3; ++k)
        for (long j = 0; j <= 2; ++j) {
            sys.at(k * 3 + j, 0) = -t[k].coeff(1, j);  // -v_k[j] * alpha
            sys.at(k * 3 + j, 1) = t[k].coeff(0, j);   //  u_k[j] * beta
        }
    auto ker = kernel_basis(sys);
    if (ker.empty()) return std::nullopt;
    const Rational& alpha = ker[0][0];
    const Rational& beta = ker[0][1];

    BiHomPoly ell({1, 0});
    ell.coeff(0, 0) = alpha;
    ell.coeff(1, 0) = beta;
    std::array<BiHomPoly, 3> q{BiHomPoly({0, 2}), BiHomPoly({0, 2}), BiHomPoly({0, 2})};
    long slice = sgn(alpha) != 0 ? 0 : 1;  // leading-1 kernel: the used slice has factor 1
    for (std::size_t k = 0; k < 3; ++k)
        for (long j = 0; j <= 2; ++j) q[k].coeff(0, j) = t[k].coeff(slice, j);
    return std::make_pair(ell, q);
}

/// The input data: three bidegree-(2,1) forms p_0, p_1, p_2.
///
/// The canonical six-coefficient order [a,b,c,d,e,f] stands for
/// a x^2 z + b xyz + c y^2 z + d x^2 w + e xyw + f y^2 w; on the grid this is
/// c[0][0]=a, c[1][0]=b, c[2][0]=c, c[0][1]=d, c[1][1]=e, c[2][1]=f.
struct InputTriple {
    std::array<BiHomPoly, 3> p;

    InputTriple(BiHomPoly p0, BiHomPoly p1, BiHomPoly p2)
        : p{std::move(p0), std::move(p1), std::move(p2)}
    {
        for (const auto& q : p)
            if (q.deg() != BiDeg{2, 1})
                throw WrongBidegree("input forms must have bidegree (2, 1)");
    }

    static InputTriple from_rows(const std::array<std::array<Rational, 6>, 3>& rows)
    {
        std::array<BiHomPoly, 3> ps{BiHomPoly({2, 1}), BiHomPoly({2, 1}), BiHomPoly({2, 1})};
        for (int k = 0; k < 3; ++k) {
            const auto& r = rows[k];
            ps[k].coeff(0, 0) = r[0];
            ps[k].coeff(1, 0) = r[1];
            ps[k].coeff(2, 0) = r[2];
            ps[k].coeff(0, 1) = r[3];
            ps[k].coeff(1, 1) = r[4];
            ps[k].coeff(2, 1) = r[5];
        }
        return InputTriple(ps[0], ps[1], ps[2]);
    }

    std::array<std::array<Rational, 6>, 3> rows() const
    {
        std::array<std::array<Rational, 6>, 3> out;
        for (int k = 0; k < 3; ++k) {
            out[k] = {p[k].coeff(0, 0), p[k].coeff(1, 0), p[k].coeff(2, 0),
                      p[k].coeff(0, 1), p[k].coeff(1, 1), p[k].coeff(2, 1)};
        }
        return out;
    }

    const BiHomPoly& operator[](std::size_t k) const { return p[k]; }

    /// Linear recombination q_i = sum_j M[i][j] p_j by a 3x3 scalar matrix.
    InputTriple transformed(const ExactMatrix& m3) const
    {
        if (m3.rows() != 3 || m3.cols() != 3)
            throw DimensionMismatch("basis change must be 3x3");
        std::array<BiHomPoly, 3> q{BiHomPoly({2, 1}), BiHomPoly({2, 1}), BiHomPoly({2, 1})};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q[i] = q[i] + m3.at(i, j) * p[j];
        return InputTriple(q[0], q[1], q[2]);
    }
};

inline std::string BiHomPoly::str() const
{
    if (is_zero()) return "0";
    std::string out;
    auto power = [](const char* v, long e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return v;
        return std::string(v) + "^" + std::to_string(e);
    };
    for (long i = 0; i <= deg_.m; ++i)
        for (long j = 0; j <= deg_.n; ++j) {
            const Rational& c = coeff(i, j);
            if (sgn(c) == 0) continue;
            Rational a = abs(c);
            if (out.empty())
                out += sgn(c) < 0 ? "-" : "";
            else
                out += sgn(c) < 0 ? " - " : " + ";
            std::string mono;
            for (const std::string& part :
                 {power("x", deg_.m - i), power("y", i), power("z", deg_.n - j), power("w", j)}) {
                if (part.empty()) continue;
                if (!mono.empty()) mono += "*";
                mono += part;
            }
            if (mono.empty()) {
                out += to_string(a);
            } else {
                if (a != 1) out += to_string(a) + "*";
                out += mono;
            }
        }
    return out;
}

}  // namespace bisyz
