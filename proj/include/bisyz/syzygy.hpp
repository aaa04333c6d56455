#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bisyz/resultant.hpp"

namespace bisyz {

/// An element of Syz(p)_{m,n}: three polynomials of common bidegree
/// (m-2, n-1) with s0 p0 + s1 p1 + s2 p2 = 0.
struct SyzTriple {
    std::array<BiHomPoly, 3> s;

    SyzTriple(BiHomPoly a, BiHomPoly b, BiHomPoly c) : s{std::move(a), std::move(b), std::move(c)}
    {
        if (s[0].deg() != s[1].deg() || s[0].deg() != s[2].deg())
            throw DegreeMismatch("syzygy entries must share one bidegree");
    }

    BiDeg entry_deg() const { return s[0].deg(); }
    BiDeg ambient() const { return entry_deg() + BiDeg{2, 1}; }

    const BiHomPoly& operator[](std::size_t k) const { return s[k]; }

    bool is_zero() const { return s[0].is_zero() && s[1].is_zero() && s[2].is_zero(); }

    friend bool operator==(const SyzTriple& a, const SyzTriple& b) { return a.s == b.s; }

    friend SyzTriple operator*(const Rational& c, const SyzTriple& t)
    {
        return SyzTriple(c * t.s[0], c * t.s[1], c * t.s[2]);
    }

    friend SyzTriple operator*(const BiHomPoly& m, const SyzTriple& t)
    {
        return SyzTriple(m * t.s[0], m * t.s[1], m * t.s[2]);
    }

    /// Concatenated coefficient vectors, the fixed embedding into
    /// R_{m-2,n-1}^3 used by all matrix realizations.
    std::vector<Rational> stacked_coeffs() const
    {
        std::vector<Rational> v;
        for (const auto& e : s)
            for (const auto& q : e.coeff_vector()) v.push_back(q);
        return v;
    }

    std::string str() const
    {
        return "(" + s[0].str() + ", " + s[1].str() + ", " + s[2].str() + ")";
    }
};

inline bool is_syzygy(const InputTriple& p, const SyzTriple& t)
{
    BiHomPoly sum = t[0] * p[0] + t[1] * p[1] + t[2] * p[2];
    return sum.is_zero();
}

/// Matrix of R_{m-2,n-1}^3 -> R_{m,n}, (s0,s1,s2) |-> s0 p0 + s1 p1 + s2 p2.
/// Its kernel is Syz(p)_{m,n} and its rank is dim I_{m,n}.
inline ExactMatrix syz_matrix(const InputTriple& p, long m, long n)
{
    BiDeg src{m - 2, n - 1};
    std::size_t d = static_cast<std::size_t>(dim_R(src));
    ExactMatrix out(static_cast<std::size_t>(dim_R({m, n})), 3 * d);
    for (int k = 0; k < 3; ++k) {
        ExactMatrix mk = mult_matrix(p[k], src);
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(mk.at(i, j)) != 0) out.at(i, k * d + j) = mk.at(i, j);
    }
    return out;
}

struct SyzIdealDims {
    long syz = 0;    // dim Syz(p)_{m,n}
    long ideal = 0;  // dim I_{m,n}
};

/// Both dimensions from a single elimination of syz_matrix.
inline SyzIdealDims syz_and_ideal_dims(const InputTriple& p, long m, long n)
{
    if (dim_R({m - 2, n - 1}) <= 0) return {0, 0};
    ExactMatrix s = syz_matrix(p, m, n);
    long r = static_cast<long>(rank(s));
    return {static_cast<long>(s.cols()) - r, r};
}

/// The project-wide oracle: a basis of Syz(p)_{m,n} computed by exact
/// kernel extraction, with the exactnum normalization (leading-1 columns,
/// free-column order).
inline std::vector<SyzTriple> syz_basis(const InputTriple& p, long m, long n)
{
    std::vector<SyzTriple> out;
    if (m < 2 || n < 1) return out;
    BiDeg ed{m - 2, n - 1};
    std::size_t d = static_cast<std::size_t>(dim_R(ed));
    for (const auto& col : kernel_basis(syz_matrix(p, m, n))) {
        std::array<BiHomPoly, 3> e{BiHomPoly(ed), BiHomPoly(ed), BiHomPoly(ed)};
        for (int k = 0; k < 3; ++k)
            e[k] = BiHomPoly::make(ed, std::vector<Rational>(col.begin() + k * d,
                                                             col.begin() + (k + 1) * d));
        out.emplace_back(e[0], e[1], e[2]);
    }
    return out;
}

/// The 3x3 polynomial matrix of the middle Koszul map; its columns
/// are the three Koszul generators.
inline std::array<std::array<BiHomPoly, 3>, 3> koszul_poly_matrix(const InputTriple& p)
{
    BiHomPoly zero({2, 1});
    return {{{p[1], p[2], zero}, {-p[0], zero, p[2]}, {zero, -p[0], -p[1]}}};
}

inline std::array<SyzTriple, 3> koszul_generators(const InputTriple& p)
{
    BiHomPoly zero({2, 1});
    return {SyzTriple(p[1], -p[0], zero), SyzTriple(p[2], zero, -p[0]),
            SyzTriple(zero, p[2], -p[1])};
}

/// Matrix of the Koszul map R_{m-4,n-2}^3 -> R_{m-2,n-1}^3.
inline ExactMatrix koszul_map_matrix(const InputTriple& p, long m, long n)
{
    BiDeg src{m - 4, n - 2};
    BiDeg tgt{m - 2, n - 1};
    std::size_t ds = static_cast<std::size_t>(dim_R(src));
    std::size_t dt = static_cast<std::size_t>(dim_R(tgt));
    ExactMatrix out(3 * dt, 3 * ds);
    if (ds == 0 || dt == 0) return out;
    auto k = koszul_poly_matrix(p);
    for (int bi = 0; bi < 3; ++bi)
        for (int bk = 0; bk < 3; ++bk) {
            if (k[bi][bk].is_zero()) continue;
            ExactMatrix blk = mult_matrix(k[bi][bk], src);
            for (std::size_t i = 0; i < dt; ++i)
                for (std::size_t j = 0; j < ds; ++j)
                    if (sgn(blk.at(i, j)) != 0) out.at(bi * dt + i, bk * ds + j) = blk.at(i, j);
        }
    return out;
}

/// Dimension of the space of Koszul syzygies in degree (m, n).
inline long koszul_image_dim(const InputTriple& p, long m, long n)
{
    if (m < 4 || n < 2) return 0;
    return static_cast<long>(rank(koszul_map_matrix(p, m, n)));
}

/// dim of the non-Koszul quotient ''E_2^{0,1}(m, n) measured by the oracle.
inline long nonkoszul_dim(const InputTriple& p, long m, long n)
{
    long sd = syz_and_ideal_dims(p, m, n).syz;
    long kd = koszul_image_dim(p, m, n);
    if (sd < kd)
        throw InternalInvariantViolation("Koszul image larger than the syzygy space");
    return sd - kd;
}

/// Membership of t in the Koszul image in its ambient degree, by linear solve.
inline bool in_koszul_image(const InputTriple& p, const SyzTriple& t)
{
    BiDeg a = t.ambient();
    if (a.m < 4 || a.n < 2) return t.is_zero();
    return solve(koszul_map_matrix(p, a.m, a.n), t.stacked_coeffs()).has_value();
}

/// The determinant syzygy of a splitting: given p_i = A_i g + B_i h,
/// the triple (C_12, C_20, C_01) with C_ij = A_i B_j - A_j B_i.
inline SyzTriple syzygy_from_split(const std::array<BiHomPoly, 3>& A,
                                   const std::array<BiHomPoly, 3>& B)
{
    if (A[0].deg() != A[1].deg() || A[0].deg() != A[2].deg() || B[0].deg() != B[1].deg() ||
        B[0].deg() != B[2].deg())
        throw DegreeMismatch("split components must share bidegrees");
    auto minor = [&](int i, int j) { return A[i] * B[j] - A[j] * B[i]; };
    return SyzTriple(minor(1, 2), minor(2, 0), minor(0, 1));
}

/// The non-Koszul syzygy of degree (6,1) from the z/w splitting.
inline SyzTriple syzygy_61(const InputTriple& p)
{
    if (resultant_21(p).is_zero)
        throw DegenerateInput("syzygy_61 needs a triple without common zeros");
    std::array<BiHomPoly, 3> A, B;
    for (int i = 0; i < 3; ++i) {
        SplitZW s = split_zw(p[i]);
        A[i] = s.A;
        B[i] = s.B;
    }
    SyzTriple t = syzygy_from_split(A, B);
    if (t.is_zero())
        throw InternalInvariantViolation("degree-(6,1) syzygy vanished on a regular input");
    return t;
}

/// The two degree-(3,3) syzygies C^(1), C^(2) from the x/y splittings:
/// C^(1) uses g = x, h = y^2 and C^(2) uses g = x^2, h = y.
inline std::pair<SyzTriple, SyzTriple> syzygies_33(const InputTriple& p)
{
    std::array<BiHomPoly, 3> C, D, E;
    for (int i = 0; i < 3; ++i) {
        SplitXY s = split_xy(p[i]);
        C[i] = s.C;
        D[i] = s.D;
        E[i] = s.E;
    }
    const BiHomPoly x = BiHomPoly::x(), y = BiHomPoly::y();
    std::array<BiHomPoly, 3> A1, A2, B2;
    for (int i = 0; i < 3; ++i) {
        A1[i] = C[i] * x + D[i] * y;  // pairs with h = y^2 part E_i
        B2[i] = D[i] * x + E[i] * y;  // pairs with g = x^2 part C_i
        A2[i] = C[i];
    }
    return {syzygy_from_split(A1, E), syzygy_from_split(A2, B2)};
}

}  // namespace bisyz
