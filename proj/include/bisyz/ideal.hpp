#pragma once

#include <vector>

#include "bisyz/bipoly.hpp"

namespace bisyz {

/// Matrix whose image is the degree-(deg) piece of the ideal generated by
/// `gens`: the horizontal stack of the multiplication maps
/// R_{deg - deg g_i} -> R_deg.
inline ExactMatrix ideal_matrix(const std::vector<BiHomPoly>& gens, BiDeg deg)
{
    std::size_t rows = static_cast<std::size_t>(dim_R(deg));
    ExactMatrix out(rows, 0);
    for (const auto& g : gens) {
        BiDeg src = deg - g.deg();
        if (dim_R(src) <= 0) continue;
        out = ExactMatrix::hstack(out, mult_matrix(g, src));
    }
    return out;
}

inline long ideal_piece_dim(const std::vector<BiHomPoly>& gens, BiDeg deg)
{
    if (dim_R(deg) <= 0) return 0;
    return static_cast<long>(rank(ideal_matrix(gens, deg)));
}

/// Membership f in <gens>, decided by a linear solve in degree deg f.
inline bool in_ideal(const std::vector<BiHomPoly>& gens, const BiHomPoly& f)
{
    if (f.is_zero()) return true;
    return solve(ideal_matrix(gens, f.deg()), f.coeff_vector()).has_value();
}

/// dim of the degree-(deg) piece of the ideal quotient (<gens> : f):
/// elements a in R_deg with a f in <gens>.  Computed from the kernel of
/// [G | mult f] minus the kernel of G alone.
inline long colon_piece_dim(const std::vector<BiHomPoly>& gens, const BiHomPoly& f, BiDeg deg)
{
    if (dim_R(deg) <= 0) return 0;
    if (f.is_zero()) throw ZeroDivisor("colon by the zero polynomial");
    BiDeg tgt = deg + f.deg();
    ExactMatrix g = ideal_matrix(gens, tgt);
    ExactMatrix combined = ExactMatrix::hstack(g, mult_matrix(f, deg));
    long null_g = static_cast<long>(g.cols()) - static_cast<long>(rank(g));
    long null_c = static_cast<long>(combined.cols()) - static_cast<long>(rank(combined));
    return null_c - null_g;
}

}  // namespace bisyz
