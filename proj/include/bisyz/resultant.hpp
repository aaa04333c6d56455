#pragma once

#include <array>

#include "bisyz/bipoly.hpp"

namespace bisyz {

/// Dense polynomial in the four affine variables x, z, X, Z used by the
/// resultant pipeline.  The pipeline needs deg_x <= 2, deg_z <= 2,
/// deg_X <= 4, deg_Z <= 1; the X and Z axes carry one unit of headroom for
/// synthetic-division intermediates.
class AffinePoly3 {
public:
    static constexpr long NX = 3, NZ = 3, NXX = 6, NZZ = 3;

    AffinePoly3() : c_(NX * NZ * NXX * NZZ) {}

    Rational& at(long a, long b, long g, long d) { return c_[idx(a, b, g, d)]; }
    const Rational& at(long a, long b, long g, long d) const { return c_[idx(a, b, g, d)]; }

    bool is_zero() const
    {
        for (const auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }

    long deg_x() const { return max_deg(0); }
    long deg_z() const { return max_deg(1); }
    long deg_X() const { return max_deg(2); }
    long deg_Z() const { return max_deg(3); }

    friend AffinePoly3 operator+(const AffinePoly3& p, const AffinePoly3& q)
    {
        AffinePoly3 r;
        for (std::size_t k = 0; k < p.c_.size(); ++k) r.c_[k] = p.c_[k] + q.c_[k];
        return r;
    }

    friend AffinePoly3 operator-(const AffinePoly3& p, const AffinePoly3& q)
    {
        AffinePoly3 r;
        for (std::size_t k = 0; k < p.c_.size(); ++k) r.c_[k] = p.c_[k] - q.c_[k];
        return r;
    }

    friend AffinePoly3 operator*(const AffinePoly3& p, const AffinePoly3& q)
    {
        AffinePoly3 r;
        for (long a = 0; a < NX; ++a)
            for (long b = 0; b < NZ; ++b)
                for (long g = 0; g < NXX; ++g)
                    for (long d = 0; d < NZZ; ++d) {
                        const Rational& cp = p.at(a, b, g, d);
                        if (sgn(cp) == 0) continue;
                        for (long a2 = 0; a2 + a < NX; ++a2)
                            for (long b2 = 0; b2 + b < NZ; ++b2)
                                for (long g2 = 0; g2 + g < NXX; ++g2)
                                    for (long d2 = 0; d2 + d < NZZ; ++d2) {
                                        const Rational& cq = q.at(a2, b2, g2, d2);
                                        if (sgn(cq) != 0)
                                            r.at(a + a2, b + b2, g + g2, d + d2) += cp * cq;
                                    }
                    }
        return r;
    }

private:
    long max_deg(int axis) const
    {
        long best = 0;
        for (long a = 0; a < NX; ++a)
            for (long b = 0; b < NZ; ++b)
                for (long g = 0; g < NXX; ++g)
                    for (long d = 0; d < NZZ; ++d)
                        if (sgn(at(a, b, g, d)) != 0) {
                            long e = axis == 0 ? a : axis == 1 ? b : axis == 2 ? g : d;
                            if (e > best) best = e;
                        }
        return best;
    }

    static std::size_t idx(long a, long b, long g, long d)
    {
        return ((static_cast<std::size_t>(a) * NZ + b) * NXX + g) * NZZ + d;
    }

    std::vector<Rational> c_;
};

struct ResultantReport {
    Rational value;
    bool is_zero = false;
};

/// P(x, z) = p(x, 1, z, 1) for a bidegree-(2,1) form:
/// a x^2 z + b xz + c z + d x^2 + e x + f.
inline AffinePoly3 dehomogenize(const BiHomPoly& p)
{
    if (p.deg() != BiDeg{2, 1}) throw WrongBidegree("dehomogenize requires bidegree (2, 1)");
    AffinePoly3 out;
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 1; ++j) out.at(2 - i, 1 - j, 0, 0) = p.coeff(i, j);
    return out;
}

namespace detail {

/// P with x replaced by X: exponent moved to the X axis.
inline AffinePoly3 sub_X(const BiHomPoly& p)
{
    AffinePoly3 out;
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 1; ++j) out.at(0, 1 - j, 2 - i, 0) = p.coeff(i, j);
    return out;
}

/// P with x -> X and z -> Z.
inline AffinePoly3 sub_XZ(const BiHomPoly& p)
{
    AffinePoly3 out;
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 1; ++j) out.at(0, 0, 2 - i, 1 - j) = p.coeff(i, j);
    return out;
}

/// Slice with fixed exponent e of x (axis 0) or z (axis 1); the slice keeps
/// exponent 0 on that axis.
inline AffinePoly3 slice(const AffinePoly3& p, int axis, long e)
{
    AffinePoly3 out;
    for (long a = 0; a < AffinePoly3::NX; ++a)
        for (long b = 0; b < AffinePoly3::NZ; ++b)
            for (long g = 0; g < AffinePoly3::NXX; ++g)
                for (long d = 0; d < AffinePoly3::NZZ; ++d) {
                    const Rational& c = p.at(a, b, g, d);
                    if (sgn(c) == 0) continue;
                    if (axis == 0 && a == e) out.at(0, b, g, d) = c;
                    if (axis == 1 && b == e) out.at(a, 0, g, d) = c;
                }
    return out;
}

/// Multiply by one power of the given axis variable.
inline AffinePoly3 shift(const AffinePoly3& p, int axis)
{
    AffinePoly3 out;
    for (long a = 0; a < AffinePoly3::NX; ++a)
        for (long b = 0; b < AffinePoly3::NZ; ++b)
            for (long g = 0; g < AffinePoly3::NXX; ++g)
                for (long d = 0; d < AffinePoly3::NZZ; ++d) {
                    const Rational& c = p.at(a, b, g, d);
                    if (sgn(c) == 0) continue;
                    long aa = a + (axis == 0), bb = b + (axis == 1);
                    long gg = g + (axis == 2), dd = d + (axis == 3);
                    if (aa >= AffinePoly3::NX || bb >= AffinePoly3::NZ ||
                        gg >= AffinePoly3::NXX || dd >= AffinePoly3::NZZ)
                        throw InternalInvariantViolation("resultant degree bound exceeded");
                    out.at(aa, bb, gg, dd) = c;
                }
    return out;
}

/// Exact synthetic division by (v - V) where v is the main variable
/// (axis 0 = x or 1 = z) and V the matching capital variable (axis 2 or 3).
/// Throws when the remainder does not vanish.
inline AffinePoly3 divide_linear(const AffinePoly3& p, int main_axis)
{
    int cap_axis = main_axis == 0 ? 2 : 3;
    AffinePoly3 c0 = slice(p, main_axis, 0);
    AffinePoly3 c1 = slice(p, main_axis, 1);
    AffinePoly3 c2 = slice(p, main_axis, 2);

    AffinePoly3 q1 = c2;
    AffinePoly3 q0 = c1 + shift(q1, cap_axis);
    AffinePoly3 rem = c0 + shift(q0, cap_axis);
    if (!rem.is_zero())
        throw InternalNonExactDivision("nonzero remainder in resultant division");
    return q0 + shift(q1, main_axis);
}

}  // namespace detail

/// The 4x4 matrix (b_ij) of the resultant construction: rows of B are P_i(x,z), P_i(X,z),
/// P_i(X,Z); b = det(B)/((x-X)(z-Z)); index i runs over {1, x, z, xz} and
/// j over X^0..X^3.
inline ExactMatrix bezout_matrix(const InputTriple& p)
{
    std::array<AffinePoly3, 3> r0, r1, r2;
    for (int k = 0; k < 3; ++k) {
        r0[k] = dehomogenize(p[k]);
        r1[k] = detail::sub_X(p[k]);
        r2[k] = detail::sub_XZ(p[k]);
    }
    AffinePoly3 det3 = r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
                       r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
                       r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    if (det3.deg_x() > 2 || det3.deg_z() > 2 || det3.deg_X() > 4 || det3.deg_Z() > 1)
        throw InternalInvariantViolation("det(B) degree bound exceeded");

    AffinePoly3 b = detail::divide_linear(det3, 0);   // divide by (x - X)
    b = detail::divide_linear(b, 1);                  // divide by (z - Z)
    if (b.deg_x() > 1 || b.deg_z() > 1 || b.deg_X() > 3 || b.deg_Z() != 0)
        throw InternalNonExactDivision("b(x, z, X) degree bound violated");

    ExactMatrix m(4, 4);
    const long rows[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};  // 1, x, z, xz
    for (int i = 0; i < 4; ++i)
        for (long j = 0; j <= 3; ++j) m.at(i, j) = b.at(rows[i][0], rows[i][1], j, 0);
    return m;
}

/// Res_{(2,1)} as det(b_ij), up to the fixed normalization of the
/// construction order above.  Vanishes exactly when p_0, p_1, p_2 have a
/// common zero on P^1 x P^1.
inline ResultantReport resultant_21(const InputTriple& p)
{
    Rational v = det(bezout_matrix(p));
    return {v, sgn(v) == 0};
}

}  // namespace bisyz
