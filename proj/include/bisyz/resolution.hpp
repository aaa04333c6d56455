#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bisyz/generators.hpp"
#include "bisyz/hilbert.hpp"
#include "bisyz/ideal.hpp"

namespace bisyz {

/// Free bigraded module ⊕_k R(-a_k, -b_k), recorded by its (positive) twists.
struct FreeModule {
    std::vector<BiDeg> shifts;

    std::size_t rank() const { return shifts.size(); }

    long dim_at(BiDeg d) const
    {
        long s = 0;
        for (BiDeg a : shifts) s += dim_R(d - a);
        return s;
    }

    std::vector<BiDeg> sorted_shifts() const
    {
        std::vector<BiDeg> s = shifts;
        std::sort(s.begin(), s.end());
        return s;
    }

    friend FreeModule operator+(const FreeModule& a, const FreeModule& b)
    {
        FreeModule s = a;
        s.shifts.insert(s.shifts.end(), b.shifts.begin(), b.shifts.end());
        return s;
    }
};

/// Map of free bigraded modules: a polynomial matrix whose entry (i, k) has
/// bidegree source.shifts[k] - target.shifts[i] (or is zero).
class GradedMap {
public:
    GradedMap(FreeModule source, FreeModule target,
              std::vector<std::vector<BiHomPoly>> entries)
        : src_(std::move(source)), tgt_(std::move(target)), e_(std::move(entries))
    {
        if (e_.size() != tgt_.rank()) throw DimensionMismatch("entry grid rows != target rank");
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i].size() != src_.rank())
                throw DimensionMismatch("entry grid cols != source rank");
            for (std::size_t k = 0; k < e_[i].size(); ++k) {
                BiDeg req = src_.shifts[k] - tgt_.shifts[i];
                if (e_[i][k].is_zero()) {
                    e_[i][k] = req.nonnegative() ? BiHomPoly(req) : BiHomPoly();
                } else if (e_[i][k].deg() != req) {
                    throw DegreeMismatch("entry bidegree violates the shifts at (" +
                                         std::to_string(i) + "," + std::to_string(k) + ")");
                }
            }
        }
    }

    const FreeModule& source() const { return src_; }
    const FreeModule& target() const { return tgt_; }
    const BiHomPoly& entry(std::size_t i, std::size_t k) const { return e_[i][k]; }

    bool is_zero() const
    {
        for (const auto& row : e_)
            for (const auto& q : row)
                if (!q.is_zero()) return false;
        return true;
    }

    /// Minimality predicate: no nonzero scalar entry.
    bool has_constant_entry() const
    {
        for (const auto& row : e_)
            for (const auto& q : row)
                if (!q.is_zero() && q.deg() == BiDeg{0, 0}) return true;
        return false;
    }

    /// The linear map (source piece at d) -> (target piece at d) in the fixed
    /// monomial order, blocks in shift order.
    ExactMatrix piece(BiDeg d) const
    {
        std::vector<long> row_off(tgt_.rank() + 1, 0), col_off(src_.rank() + 1, 0);
        for (std::size_t i = 0; i < tgt_.rank(); ++i)
            row_off[i + 1] = row_off[i] + dim_R(d - tgt_.shifts[i]);
        for (std::size_t k = 0; k < src_.rank(); ++k)
            col_off[k + 1] = col_off[k] + dim_R(d - src_.shifts[k]);
        ExactMatrix out(static_cast<std::size_t>(row_off.back()),
                        static_cast<std::size_t>(col_off.back()));
        for (std::size_t i = 0; i < tgt_.rank(); ++i)
            for (std::size_t k = 0; k < src_.rank(); ++k) {
                if (e_[i][k].is_zero()) continue;
                BiDeg bsrc = d - src_.shifts[k];
                if (dim_R(bsrc) <= 0 || dim_R(d - tgt_.shifts[i]) <= 0) continue;
                ExactMatrix blk = mult_matrix(e_[i][k], bsrc);
                for (std::size_t r = 0; r < blk.rows(); ++r)
                    for (std::size_t c = 0; c < blk.cols(); ++c)
                        if (sgn(blk.at(r, c)) != 0)
                            out.at(row_off[i] + r, col_off[k] + c) = blk.at(r, c);
            }
        return out;
    }

    GradedMap twisted(BiDeg t) const
    {
        FreeModule s = src_, g = tgt_;
        for (auto& a : s.shifts) a = a + t;
        for (auto& a : g.shifts) a = a + t;
        return GradedMap(std::move(s), std::move(g), e_);
    }

private:
    FreeModule src_, tgt_;
    std::vector<std::vector<BiHomPoly>> e_;
};

/// f ∘ g as a polynomial matrix (f : B -> C, g : A -> B).
inline GradedMap compose(const GradedMap& f, const GradedMap& g)
{
    if (f.source().rank() != g.target().rank())
        throw DimensionMismatch("compose: inner ranks differ");
    std::vector<std::vector<BiHomPoly>> e(f.target().rank(),
                                          std::vector<BiHomPoly>(g.source().rank()));
    for (std::size_t i = 0; i < f.target().rank(); ++i)
        for (std::size_t j = 0; j < g.source().rank(); ++j) {
            BiDeg req = g.source().shifts[j] - f.target().shifts[i];
            BiHomPoly acc = req.nonnegative() ? BiHomPoly(req) : BiHomPoly();
            for (std::size_t k = 0; k < f.source().rank(); ++k) {
                if (f.entry(i, k).is_zero() || g.entry(k, j).is_zero()) continue;
                acc = acc + f.entry(i, k) * g.entry(k, j);
            }
            e[i][j] = std::move(acc);
        }
    return GradedMap(g.source(), f.target(), std::move(e));
}

/// Chain of free modules F_0 <- F_1 <- ... with maps[i] : F_{i+1} -> F_i.
struct GradedComplex {
    std::vector<FreeModule> mods;
    std::vector<GradedMap> maps;

    std::size_t length() const { return maps.size(); }

    /// Composite of consecutive maps vanishes (exact polynomial identity).
    bool is_complex() const
    {
        for (std::size_t i = 0; i + 1 < maps.size(); ++i)
            if (!compose(maps[i], maps[i + 1]).is_zero()) return false;
        return true;
    }

    GradedComplex twisted(BiDeg t) const
    {
        GradedComplex c;
        c.mods = mods;
        for (auto& m : c.mods)
            for (auto& a : m.shifts) a = a + t;
        for (const auto& f : maps) c.maps.push_back(f.twisted(t));
        return c;
    }
};

/// Koszul complex of a length-two regular sequence:
/// 0 -> R(-deg f - deg g) --(g, -f)--> R(-deg f) ⊕ R(-deg g) --[f g]--> R.
inline GradedComplex koszul_two(const BiHomPoly& f, const BiHomPoly& g)
{
    GradedComplex c;
    FreeModule f0{{BiDeg{0, 0}}};
    FreeModule f1{{f.deg(), g.deg()}};
    FreeModule f2{{f.deg() + g.deg()}};
    c.mods = {f0, f1, f2};
    c.maps.push_back(GradedMap(f1, f0, {{f, g}}));
    c.maps.push_back(GradedMap(f2, f1, {{g}, {-f}}));
    return c;
}

/// Determinant of a small square polynomial matrix by Laplace expansion
/// along the first row; `expected` is the common bidegree of the terms.
inline BiHomPoly poly_det(const std::vector<std::vector<BiHomPoly>>& m, BiDeg expected)
{
    std::size_t n = m.size();
    if (n == 1) return m[0][0].is_zero() ? BiHomPoly(expected) : m[0][0];
    BiHomPoly acc = expected.nonnegative() ? BiHomPoly(expected) : BiHomPoly();
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<BiHomPoly>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BiHomPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        BiHomPoly cof = m[0][j] * poly_det(sub, expected - m[0][j].deg());
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

/// Signed maximal minors (-1)^i det(phi with row i deleted) of an
/// (r+1) x r polynomial matrix.
inline std::vector<BiHomPoly> signed_maximal_minors(const GradedMap& phi)
{
    std::size_t rows = phi.target().rank(), cols = phi.source().rank();
    if (rows != cols + 1) throw DimensionMismatch("maximal minors need an (r+1) x r matrix");
    BiDeg total{0, 0};
    for (BiDeg s : phi.source().shifts) total = total + s;
    std::vector<BiHomPoly> out;
    for (std::size_t drop = 0; drop < rows; ++drop) {
        std::vector<std::vector<BiHomPoly>> sub;
        BiDeg expected = total;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == drop) continue;
            expected = expected - phi.target().shifts[i];
            std::vector<BiHomPoly> row;
            for (std::size_t k = 0; k < cols; ++k) row.push_back(phi.entry(i, k));
            sub.push_back(std::move(row));
        }
        BiHomPoly d = poly_det(sub, expected);
        out.push_back(drop % 2 == 0 ? d : -d);
    }
    return out;
}

namespace detail {

/// Hilbert-Burch content: the generator row must be a constant multiple of
/// the signed maximal minors of the presentation matrix.
inline void check_hilbert_burch_minors(const GradedMap& row, const GradedMap& phi)
{
    std::vector<BiHomPoly> minors = signed_maximal_minors(phi);
    Rational c;
    bool have_c = false;
    for (std::size_t i = 0; i < minors.size(); ++i) {
        const BiHomPoly& u = row.entry(0, i);
        if (minors[i].is_zero() != u.is_zero())
            throw VerificationFailure("Hilbert-Burch minor/generator zero mismatch");
        if (minors[i].is_zero()) continue;
        if (!have_c) {
            for (std::size_t k = 0; k < u.coeff_vector().size(); ++k)
                if (sgn(minors[i].coeff_vector()[k]) != 0) {
                    c = u.coeff_vector()[k] / minors[i].coeff_vector()[k];
                    have_c = true;
                    break;
                }
        }
        if (!have_c || !(c * minors[i] == u))
            throw VerificationFailure("generator row is not proportional to the maximal minors");
    }
}

/// Rank-exactness of a two-step complex R <- F1 <- F2 over a box: the
/// presentation matrix has full column rank and its image is the kernel of
/// the generator row in every bidegree.
inline void check_two_step_exactness(const GradedComplex& cx, BiDeg box)
{
    for (long m = 0; m <= box.m; ++m)
        for (long n = 0; n <= box.n; ++n) {
            BiDeg d{m, n};
            long r1 = static_cast<long>(rank(cx.maps[0].piece(d)));
            long r2 = static_cast<long>(rank(cx.maps[1].piece(d)));
            if (r2 != cx.mods[2].dim_at(d) || r1 + r2 != cx.mods[1].dim_at(d))
                throw VerificationFailure("Hilbert-Burch complex not exact at " + d.str());
        }
}

}  // namespace detail

/// Hilbert-Burch resolution of R/K in the non-generic case,
/// K = <zw, g0 z, g1 w> presented by [[g0, g1], [-w, 0], [0, -z]].
inline GradedComplex hilbert_burch_nongeneric(const BiHomPoly& g0, const BiHomPoly& g1,
                                              std::optional<BiDeg> exactness_box = std::nullopt)
{
    const BiHomPoly z = BiHomPoly::z(), w = BiHomPoly::w();
    GradedComplex c;
    FreeModule f0{{BiDeg{0, 0}}};
    FreeModule f1{{BiDeg{0, 2}, BiDeg{2, 1}, BiDeg{2, 1}}};
    FreeModule f2{{BiDeg{2, 2}, BiDeg{2, 2}}};
    c.mods = {f0, f1, f2};
    BiHomPoly zero;
    c.maps.push_back(GradedMap(f1, f0, {{z * w, g0 * z, g1 * w}}));
    c.maps.push_back(GradedMap(f2, f1, {{g0, g1}, {-w, zero}, {zero, -z}}));
    if (!c.is_complex()) throw VerificationFailure("Hilbert-Burch composite is nonzero");
    detail::check_hilbert_burch_minors(c.maps[0], c.maps[1]);
    if (exactness_box) detail::check_two_step_exactness(c, *exactness_box);
    return c;
}

/// Hilbert-Burch resolution of R/K in the generic case,
/// K = <p0, p1, k1, k2> for a complete-intersection pair p0, p1, with
/// k1 = (C0 x + D0 y) E1 - (C1 x + D1 y) E0 and
/// k2 = C0 (D1 x + E1 y) - C1 (D0 x + E0 y) from the x,y-splittings.
inline GradedComplex hilbert_burch_generic(const BiHomPoly& p0, const BiHomPoly& p1,
                                           std::optional<BiDeg> exactness_box = std::nullopt)
{
    const BiHomPoly x = BiHomPoly::x(), y = BiHomPoly::y();
    SplitXY s0 = split_xy(p0), s1 = split_xy(p1);
    BiHomPoly k1 = (s0.C * x + s0.D * y) * s1.E - (s1.C * x + s1.D * y) * s0.E;
    BiHomPoly k2 = s0.C * (s1.D * x + s1.E * y) - s1.C * (s0.D * x + s0.E * y);

    GradedComplex c;
    FreeModule f0{{BiDeg{0, 0}}};
    FreeModule f1{{BiDeg{2, 1}, BiDeg{2, 1}, BiDeg{1, 2}, BiDeg{1, 2}}};
    FreeModule f2{{BiDeg{2, 2}, BiDeg{2, 2}, BiDeg{2, 2}}};
    c.mods = {f0, f1, f2};
    BiHomPoly zero;
    c.maps.push_back(GradedMap(f1, f0, {{p0, p1, -k1, -k2}}));
    c.maps.push_back(GradedMap(f2, f1,
                               {{s1.E, s1.D, s1.C},
                                {-s0.E, -s0.D, -s0.C},
                                {x, -y, zero},
                                {zero, x, -y}}));
    if (!c.is_complex()) throw VerificationFailure("Hilbert-Burch composite is nonzero");
    detail::check_hilbert_burch_minors(c.maps[0], c.maps[1]);
    if (exactness_box) detail::check_two_step_exactness(c, *exactness_box);
    return c;
}

/// Lift of multiplication by f to a map of complexes psi : F -> G, where
/// F resolves R(-deg f)/(L : f) and G resolves R/L.  psi_0 = [f];
/// each further psi_i is solved column by column from
/// delta_i psi_i = psi_{i-1} d_i and the commutation is re-checked exactly.
inline std::vector<GradedMap> lift_chain_map(const GradedComplex& F, const GradedComplex& G,
                                             const BiHomPoly& f)
{
    if (F.mods.empty() || G.mods.empty() || F.mods[0].rank() != 1 || G.mods[0].rank() != 1)
        throw DimensionMismatch("lift_chain_map expects augmented resolutions");
    if (F.mods[0].shifts[0] - G.mods[0].shifts[0] != f.deg())
        throw DegreeMismatch("twist of F must match deg f");

    std::vector<GradedMap> psi;
    psi.push_back(GradedMap(F.mods[0], G.mods[0], {{f}}));

    for (std::size_t i = 1; i <= F.length(); ++i) {
        GradedMap rhs = compose(psi.back(), F.maps[i - 1]);  // F_i -> G_{i-1}
        if (i > G.length()) {
            if (!rhs.is_zero())
                throw LiftInconsistent("chain map does not terminate with G");
            FreeModule empty;
            std::vector<std::vector<BiHomPoly>> none;
            psi.push_back(GradedMap(F.mods[i], empty, std::move(none)));
            continue;
        }

        const FreeModule& gi = G.mods[i];
        const GradedMap& delta = G.maps[i - 1];
        std::vector<std::vector<BiHomPoly>> cols(F.mods[i].rank());
        for (std::size_t k = 0; k < F.mods[i].rank(); ++k) {
            BiDeg s = F.mods[i].shifts[k];
            // right-hand side: column k of rhs realized in degree s
            std::vector<Rational> b;
            for (std::size_t j = 0; j < rhs.target().rank(); ++j) {
                BiDeg comp = s - rhs.target().shifts[j];
                long dim = dim_R(comp);
                if (dim <= 0) {
                    if (!rhs.entry(j, k).is_zero())
                        throw InternalInvariantViolation("nonzero entry in an empty piece");
                    continue;
                }
                if (rhs.entry(j, k).is_zero()) {
                    b.insert(b.end(), static_cast<std::size_t>(dim), Rational(0));
                } else {
                    const auto& cv = rhs.entry(j, k).coeff_vector();
                    b.insert(b.end(), cv.begin(), cv.end());
                }
            }
            auto x = solve(delta.piece(s), b);
            if (!x) throw LiftInconsistent("no preimage for column " + std::to_string(k) +
                                           " in homological degree " + std::to_string(i));
            // split the solution into polynomial entries of psi_i
            std::vector<BiHomPoly> col(gi.rank());
            std::size_t off = 0;
            for (std::size_t j = 0; j < gi.rank(); ++j) {
                BiDeg comp = s - gi.shifts[j];
                long dim = dim_R(comp);
                if (dim <= 0) {
                    col[j] = BiHomPoly();
                    continue;
                }
                col[j] = BiHomPoly::make(
                    comp, std::vector<Rational>(x->begin() + off, x->begin() + off + dim));
                off += static_cast<std::size_t>(dim);
            }
            cols[k] = std::move(col);
        }
        std::vector<std::vector<BiHomPoly>> entries(gi.rank(),
                                                    std::vector<BiHomPoly>(F.mods[i].rank()));
        for (std::size_t k = 0; k < F.mods[i].rank(); ++k)
            for (std::size_t j = 0; j < gi.rank(); ++j) entries[j][k] = cols[k][j];
        GradedMap psi_i(F.mods[i], gi, std::move(entries));
        GradedMap check = compose(delta, psi_i);
        for (std::size_t a = 0; a < check.target().rank(); ++a)
            for (std::size_t bcol = 0; bcol < check.source().rank(); ++bcol)
                if (!(check.entry(a, bcol) == rhs.entry(a, bcol)))
                    throw LiftInconsistent("lifted square does not commute");
        psi.push_back(std::move(psi_i));
    }
    return psi;
}

/// Normal form of a non-generic triple: after an invertible
/// basis change the forms factor as q_0 = g_0 z, q_1 = g_1 w,
/// q_2 = (g_0 + g_1)(z + w) with g_0, g_1 coprime binary quadratics.
struct NormalForm {
    BiHomPoly g0, g1, g2;        // bidegree (2, 0), g2 = g0 + g1
    std::array<BiHomPoly, 3> l;  // z, w, z + w
    ExactMatrix basis_change;    // 3x3, q_i = sum_j M[i][j] p_j
    std::array<BiHomPoly, 3> q;  // q_i = g_i l_i
};

/// Sylvester resultant of two binary quadratic forms in x, y (4x4).
inline Rational sylvester_quadratics(const BiHomPoly& g, const BiHomPoly& h)
{
    if (g.deg() != BiDeg{2, 0} || h.deg() != BiDeg{2, 0})
        throw WrongBidegree("sylvester_quadratics expects bidegree (2, 0) forms");
    ExactMatrix s(4, 4);
    for (int j = 0; j < 3; ++j) {
        s.at(0, j) = g.coeff(j, 0);
        s.at(1, j + 1) = g.coeff(j, 0);
        s.at(2, j) = h.coeff(j, 0);
        s.at(3, j + 1) = h.coeff(j, 0);
    }
    return det(s);
}

/// Build the normal form by evaluating the degree-(2,3) syzygy (A_0,A_1,A_2)
/// at the parameter pairs (0,1), (-1,0), (-1,1): each combination
/// q = sum_i A_i(s,t) p_i factors as g (t z - s w).
inline NormalForm normal_form(const InputTriple& p)
{
    SyzTriple a = syzygy_23(p);  // throws GenericInstance / DegenerateInput

    const long params[3][2] = {{0, 1}, {-1, 0}, {-1, 1}};
    NormalForm nf;
    nf.basis_change = ExactMatrix(3, 3);
    std::array<BiHomPoly, 3> g;
    for (int r = 0; r < 3; ++r) {
        Rational s(params[r][0]), t(params[r][1]);
        BiHomPoly q({2, 1});
        for (int k = 0; k < 3; ++k) {
            Rational val = a[k].eval(0, 0, s, t);
            nf.basis_change.at(r, k) = val;
            q = q + val * p[k];
        }
        BiHomPoly ell({0, 1});
        ell.coeff(0, 0) = t;   // z coefficient
        ell.coeff(0, 1) = -s;  // w coefficient
        auto quot = divide_exact(q, ell);
        if (!quot) throw FactorizationFailure("conic point does not factor at " +
                                              std::to_string(r));
        g[r] = *quot;
        nf.l[r] = ell;
        nf.q[r] = q;
    }
    nf.g0 = g[0];
    nf.g1 = g[1];
    nf.g2 = g[2];
    if (!(nf.g2 == nf.g0 + nf.g1))
        throw FactorizationFailure("g2 != g0 + g1 in the normal form");
    if (sgn(det(nf.basis_change)) == 0)
        throw FactorizationFailure("conic points are linearly dependent");
    if (sgn(sylvester_quadratics(nf.g0, nf.g1)) == 0)
        throw FactorizationFailure("g0, g1 are not coprime");
    return nf;
}

struct LabeledPoly {
    std::string label;
    BiHomPoly poly;
};

/// Generators of an ideal quotient, with their construction labels.
struct IdealGens {
    std::vector<LabeledPoly> gens;

    std::vector<BiHomPoly> polys() const
    {
        std::vector<BiHomPoly> out;
        for (const auto& g : gens) out.push_back(g.poly);
        return out;
    }
};

/// J = (C : g2 l2) = <zw, g0 z, g1 w, g0 g1> for C = <g0 z, g1 w>.
/// Sanity: each generator times g2 l2 lies in C.
inline IdealGens quotient_gens_nongeneric(const NormalForm& nf)
{
    const BiHomPoly z = BiHomPoly::z(), w = BiHomPoly::w();
    IdealGens out;
    out.gens = {{"zw", z * w},
                {"g0*z", nf.g0 * z},
                {"g1*w", nf.g1 * w},
                {"g0*g1", nf.g0 * nf.g1}};
    std::vector<BiHomPoly> c{nf.g0 * z, nf.g1 * w};
    BiHomPoly f = nf.g2 * nf.l[2];
    for (const auto& gen : out.gens)
        if (!in_ideal(c, gen.poly * f))
            throw InternalInvariantViolation("J generator " + gen.label +
                                             " fails the colon membership test");
    return out;
}

/// (C : p2) = <p0, p1, k1, k2, g> for C = <p0, p1> a complete intersection;
/// k1, k2 come from the x,y-splittings and g = A0 B1 - A1 B0 from the
/// z,w-splittings.  Sanity: each generator times p2 lies in C.
inline IdealGens quotient_gens_generic(const BiHomPoly& p0, const BiHomPoly& p1,
                                       const BiHomPoly& p2)
{
    if (!coprime_pair(p0, p1))
        throw NotCompleteIntersection("p0, p1 share a common factor");
    const BiHomPoly x = BiHomPoly::x(), y = BiHomPoly::y();
    SplitXY s0 = split_xy(p0), s1 = split_xy(p1);
    BiHomPoly k1 = (s0.C * x + s0.D * y) * s1.E - (s1.C * x + s1.D * y) * s0.E;
    BiHomPoly k2 = s0.C * (s1.D * x + s1.E * y) - s1.C * (s0.D * x + s0.E * y);
    SplitZW t0 = split_zw(p0), t1 = split_zw(p1);
    BiHomPoly g = t0.A * t1.B - t1.A * t0.B;

    IdealGens out;
    out.gens = {{"p0", p0}, {"p1", p1}, {"k1", k1}, {"k2", k2}, {"g", g}};
    std::vector<BiHomPoly> c{p0, p1};
    for (const auto& gen : out.gens)
        if (!in_ideal(c, gen.poly * p2))
            throw InternalInvariantViolation("(C : p2) generator " + gen.label +
                                             " fails the colon membership test");
    return out;
}

/// Mapping cone of psi : F -> G: M_0 = G_0,
/// M_i = F_{i-1} ⊕ G_i, with the displayed block differentials and signs.
inline GradedComplex mapping_cone(const GradedComplex& F, const GradedComplex& G,
                                  const std::vector<GradedMap>& psi)
{
    std::size_t len = std::max(F.length() + 1, G.length());
    GradedComplex M;
    auto gmod = [&](std::size_t i) {
        return i < G.mods.size() ? G.mods[i] : FreeModule{};
    };
    auto fmod = [&](std::size_t i) {
        return i < F.mods.size() ? F.mods[i] : FreeModule{};
    };
    M.mods.push_back(G.mods[0]);
    for (std::size_t i = 1; i <= len; ++i) M.mods.push_back(fmod(i - 1) + gmod(i));

    for (std::size_t i = 1; i <= len; ++i) {
        const FreeModule& src = M.mods[i];
        const FreeModule& tgt = M.mods[i - 1];
        std::vector<std::vector<BiHomPoly>> e(tgt.rank(), std::vector<BiHomPoly>(src.rank()));
        std::size_t fsrc = fmod(i - 1).rank();   // F_{i-1} columns first
        std::size_t frow = i >= 2 ? fmod(i - 2).rank() : 0;

        if (i == 1) {
            // [psi_0 | delta_1]
            e[0][0] = psi[0].entry(0, 0);
            if (G.length() >= 1)
                for (std::size_t k = 0; k < gmod(1).rank(); ++k)
                    e[0][1 + k] = G.maps[0].entry(0, k);
        } else {
            if (i - 2 < F.maps.size())  // d_{i-1} block
                for (std::size_t r = 0; r < frow; ++r)
                    for (std::size_t k = 0; k < fsrc; ++k)
                        e[r][k] = F.maps[i - 2].entry(r, k);
            if (i - 1 < psi.size())  // (-1)^{i-1} psi_{i-1} block
                for (std::size_t r = 0; r < psi[i - 1].target().rank(); ++r)
                    for (std::size_t k = 0; k < fsrc; ++k)
                        e[frow + r][k] = (i % 2 == 0) ? -psi[i - 1].entry(r, k)
                                                      : psi[i - 1].entry(r, k);
            if (i - 1 < G.maps.size())  // delta_i block
                for (std::size_t r = 0; r < gmod(i - 1).rank(); ++r)
                    for (std::size_t k = 0; k < gmod(i).rank(); ++k)
                        e[frow + r][fsrc + k] = G.maps[i - 1].entry(r, k);
        }
        M.maps.push_back(GradedMap(src, tgt, std::move(e)));
    }
    return M;
}

/// The two possible shift multisets of the minimal free resolution of R/I
/// (index 0 is the ambient R itself).
inline std::vector<std::vector<BiDeg>> expected_shifts(InstanceClass cls)
{
    std::vector<std::vector<BiDeg>> s(5);
    s[0] = {{0, 0}};
    s[1] = {{2, 1}, {2, 1}, {2, 1}};
    if (cls == InstanceClass::Generic) {
        s[2] = {{3, 3}, {3, 3}, {4, 2}, {4, 2}, {4, 2}, {6, 1}};
        s[3] = {{4, 3}, {4, 3}, {4, 3}, {6, 2}, {6, 2}};
    } else {
        s[2] = {{2, 3}, {4, 2}, {4, 2}, {4, 2}, {6, 1}};
        s[3] = {{4, 3}, {4, 3}, {6, 2}, {6, 2}};
    }
    s[4] = {{6, 3}};
    return s;
}

inline std::vector<std::size_t> betti_ranks(const GradedComplex& cx)
{
    std::vector<std::size_t> r;
    for (const auto& m : cx.mods) r.push_back(m.rank());
    return r;
}

/// Minimal free resolution of R/I by iterated mapping cones.
/// The returned complex has mods[0] = R and maps[0] the generator row, so
/// mods[1..] with maps[1..] present the resolution of I itself.
inline GradedComplex build_resolution(const InputTriple& p)
{
    InstanceClass cls = classify(p);
    if (cls == InstanceClass::Degenerate)
        throw DegenerateInput("no free resolution is built for degenerate triples");

    const BiHomPoly z = BiHomPoly::z(), w = BiHomPoly::w();
    GradedComplex cone;

    if (cls == InstanceClass::NonGeneric) {
        NormalForm nf = normal_form(p);
        // inner cone: J = K + <g0 g1> out of K = <zw, g0 z, g1 w>
        GradedComplex gk = hilbert_burch_nongeneric(nf.g0, nf.g1);
        GradedComplex fk = koszul_two(z, w).twisted({4, 0});
        BiHomPoly f = nf.g0 * nf.g1;
        GradedComplex inner = mapping_cone(fk, gk, lift_chain_map(fk, gk, f));
        if (!inner.is_complex())
            throw VerificationFailure("inner cone differentials do not square to zero");
        // outer cone: I = C + <q2> out of C = <q0, q1>
        GradedComplex fj = inner.twisted({2, 1});
        GradedComplex gc = koszul_two(nf.q[0], nf.q[1]);
        cone = mapping_cone(fj, gc, lift_chain_map(fj, gc, nf.q[2]));
    } else {
        // complete-intersection basis: identity order, then permutations,
        // then seeded scalar recombinations
        std::array<BiHomPoly, 3> b{p[0], p[1], p[2]};
        bool found = coprime_pair(b[0], b[1]);
        if (!found) {
            const int perms[2][3] = {{0, 2, 1}, {1, 2, 0}};
            for (const auto& pe : perms) {
                std::array<BiHomPoly, 3> cand{p[pe[0]], p[pe[1]], p[pe[2]]};
                if (coprime_pair(cand[0], cand[1])) {
                    b = cand;
                    found = true;
                    break;
                }
            }
        }
        std::mt19937_64 rng(20040615u);
        for (int tries = 0; !found && tries < 100; ++tries) {
            ExactMatrix m(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    m.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
            if (sgn(det(m)) == 0) continue;
            InputTriple cand = p.transformed(m);
            if (!cand[0].is_zero() && !cand[1].is_zero() && coprime_pair(cand[0], cand[1])) {
                b = {cand[0], cand[1], cand[2]};
                found = true;
            }
        }
        if (!found) throw VerificationFailure("no complete-intersection basis found");

        quotient_gens_generic(b[0], b[1], b[2]);  // colon membership sanity
        SplitZW t0 = split_zw(b[0]), t1 = split_zw(b[1]);
        BiHomPoly g = t0.A * t1.B - t1.A * t0.B;
        GradedComplex gk = hilbert_burch_generic(b[0], b[1]);
        GradedComplex fk = koszul_two(z, w).twisted({4, 0});
        GradedComplex inner = mapping_cone(fk, gk, lift_chain_map(fk, gk, g));
        if (!inner.is_complex())
            throw VerificationFailure("inner cone differentials do not square to zero");
        GradedComplex fj = inner.twisted({2, 1});
        GradedComplex gc = koszul_two(b[0], b[1]);
        cone = mapping_cone(fj, gc, lift_chain_map(fj, gc, b[2]));
    }

    if (!cone.is_complex())
        throw VerificationFailure("resolution differentials do not square to zero");
    return cone;
}

/// Report of the six resolution checks.
struct VerifyReport {
    bool d2_zero = false;     // (i)   composite of consecutive maps vanishes
    bool exactness = false;   // (ii)  rank-exactness at every interior spot
    bool h_agree = false;     // (iii) image of the end map matches oracle H_I
    bool minimal = false;     // (iv)  no constant entries
    bool shape_ok = false;    // (v)   shifts equal the classified shape
    bool euler_ok = false;    // (vi)  Euler characteristic vs oracle H_I
    std::optional<BiDeg> first_fail;
    std::string detail;

    bool pass() const
    {
        return d2_zero && exactness && h_agree && minimal && shape_ok && euler_ok;
    }
};

/// Certify a built R/I complex against the instance over a box of bidegrees.
inline VerifyReport verify_complex(const GradedComplex& cx, const InputTriple& p, BiDeg box)
{
    VerifyReport rep;
    rep.d2_zero = cx.is_complex();

    rep.minimal = true;
    for (const auto& f : cx.maps)
        if (f.has_constant_entry()) rep.minimal = false;

    InstanceClass cls = classify(p);
    auto want = expected_shifts(cls);
    rep.shape_ok = cx.mods.size() == want.size();
    if (rep.shape_ok)
        for (std::size_t i = 0; i < want.size(); ++i) {
            std::vector<BiDeg> w = want[i];
            std::sort(w.begin(), w.end());
            if (cx.mods[i].sorted_shifts() != w) rep.shape_ok = false;
        }

    rep.exactness = rep.h_agree = rep.euler_ok = true;
    auto note = [&rep](BiDeg d, const std::string& what) {
        if (!rep.first_fail) {
            rep.first_fail = d;
            rep.detail = what + " fails first at " + d.str();
        }
    };
    for (long m = 0; m <= box.m; ++m)
        for (long n = 0; n <= box.n; ++n) {
            BiDeg d{m, n};
            long h_i = syz_and_ideal_dims(p, m, n).ideal;
            std::vector<long> r, dims;
            for (const auto& f : cx.maps) r.push_back(static_cast<long>(rank(f.piece(d))));
            for (const auto& mod : cx.mods) dims.push_back(mod.dim_at(d));

            if (r[0] != h_i) {
                rep.h_agree = false;
                note(d, "oracle H_I agreement");
            }
            for (std::size_t spot = 1; spot + 1 < cx.mods.size(); ++spot)
                if (r[spot] != dims[spot] - r[spot - 1]) {
                    rep.exactness = false;
                    note(d, "rank exactness at homological degree " + std::to_string(spot));
                }
            if (r.back() != dims.back()) {
                rep.exactness = false;
                note(d, "injectivity of the last differential");
            }
            long euler = 0;
            for (std::size_t i = 1; i < dims.size(); ++i)
                euler += (i % 2 == 1) ? dims[i] : -dims[i];
            if (euler != h_i) {
                rep.euler_ok = false;
                note(d, "Euler characteristic");
            }
        }
    return rep;
}

}  // namespace bisyz
