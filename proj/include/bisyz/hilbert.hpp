#pragma once

#include <optional>

#include "bisyz/classify.hpp"

namespace bisyz {

/// Hilbert function of R: (m+1)(n+1) in the first quadrant, 0 outside.
inline long h_R(long m, long n)
{
    return dim_R({m, n});
}

/// h^0 and h^1 of O_{P^1}(k).
inline long h0_p1(long k) { return k >= -1 ? k + 1 : 0; }
inline long h1_p1(long k) { return k <= -1 ? -k - 1 : 0; }

/// dim H^1(P^1 x P^1, O(m, n)) by the Kuenneth formula:
/// h^0(m) h^1(n) + h^1(m) h^0(n); zero whenever m, n >= -1 or m, n <= -1.
inline long h1(long m, long n)
{
    return h0_p1(m) * h1_p1(n) + h1_p1(m) * h0_p1(n);
}

/// Predicted dimension of the non-Koszul quotient ''E_2^{0,1}(m, n)
/// (closed forms; the m = 2 column depends on the instance class).
inline long e2_pred(InstanceClass cls, long m, long n)
{
    if (cls == InstanceClass::Degenerate)
        throw DegenerateClass("no closed-form dimensions for degenerate triples");
    if (n == 1 && m >= 6) return m - 5;
    if (m == 3 && n >= 3) return 2 * (n - 2);
    if (m == 4 && n >= 3) return n - 2;
    if (m == 2 && n >= 3) return cls == InstanceClass::NonGeneric ? n - 2 : 0;
    return 0;
}

/// Hilbert function of Syz(p) as a piecewise closed form.  The m = 4 row
/// applies from n = 2 on: at (4,2) it yields 3, the three Koszul
/// generators, which the four-term dimension identity forces.
inline long h_syz_pred(InstanceClass cls, long m, long n)
{
    if (cls == InstanceClass::Degenerate)
        throw DegenerateClass("no closed-form dimensions for degenerate triples");
    if (m >= 5 && n >= 2) return 3 * (m - 3) * (n - 1) - (m - 5) * (n - 2);
    if (m >= 6 && n == 1) return m - 5;
    if (m == 4 && n >= 2) return 3 * (n - 1) + (n - 2);
    if (m == 3 && n >= 3) return 2 * (n - 2);
    if (m == 2 && n >= 3 && cls == InstanceClass::NonGeneric) return n - 2;
    return 0;
}

/// Hilbert function of I from 0 -> Syz -> R(-2,-1)^3 -> I -> 0.
inline long h_I_pred(InstanceClass cls, long m, long n)
{
    long v = 3 * h_R(m - 2, n - 1) - h_syz_pred(cls, m, n);
    if (v < 0)
        throw InternalInvariantViolation("negative predicted ideal dimension");
    return v;
}

struct DimCell {
    long m = 0, n = 0;
    long h_syz_pred = 0, h_syz = 0;
    long h_I_pred = 0, h_I = 0;
    long e2_pred = 0, e2 = 0;

    bool match() const
    {
        return h_syz_pred == h_syz && h_I_pred == h_I && e2_pred == e2;
    }
};

/// Predictions next to oracle values over a box; the acceptance payload.
struct DimTable {
    BiDeg box;
    InstanceClass cls = InstanceClass::Generic;
    std::vector<DimCell> cells;  // (m, n) with n inner, ascending

    bool all_match() const
    {
        for (const auto& c : cells)
            if (!c.match()) return false;
        return true;
    }

    std::optional<BiDeg> first_mismatch() const
    {
        for (const auto& c : cells)
            if (!c.match()) return BiDeg{c.m, c.n};
        return std::nullopt;
    }
};

/// Table with the class forced by the caller (exposed for sensitivity tests;
/// dim_table() below classifies first).
inline DimTable dim_table_with_class(const InputTriple& p, InstanceClass cls, BiDeg box)
{
    if (cls == InstanceClass::Degenerate) throw DegenerateInput("dim_table is undefined");
    DimTable t;
    t.box = box;
    t.cls = cls;
    for (long m = 0; m <= box.m; ++m)
        for (long n = 0; n <= box.n; ++n) {
            DimCell c;
            c.m = m;
            c.n = n;
            c.h_syz_pred = h_syz_pred(cls, m, n);
            c.h_I_pred = h_I_pred(cls, m, n);
            c.e2_pred = e2_pred(cls, m, n);
            SyzIdealDims d = syz_and_ideal_dims(p, m, n);
            c.h_syz = d.syz;
            c.h_I = d.ideal;
            c.e2 = d.syz - koszul_image_dim(p, m, n);
            t.cells.push_back(c);
        }
    return t;
}

inline DimTable dim_table(const InputTriple& p, BiDeg box)
{
    InstanceClass cls = classify(p);
    if (cls == InstanceClass::Degenerate)
        throw DegenerateInput("dim_table on a degenerate triple");
    return dim_table_with_class(p, cls, box);
}

}  // namespace bisyz
