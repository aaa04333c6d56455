#pragma once

#include <algorithm>
#include <optional>

#include "bisyz/classify.hpp"

namespace bisyz {

/// The minimal generating set of Syz(p).
struct SyzGens {
    std::vector<SyzTriple> gens;

    std::vector<BiDeg> degrees() const
    {
        std::vector<BiDeg> d;
        for (const auto& g : gens) d.push_back(g.ambient());
        std::sort(d.begin(), d.end());
        return d;
    }
};

/// The degree-(2,3) syzygy of a non-generic triple, extracted as the common
/// linear x,y-content of C^(1) (falling back to C^(2)), normalized so the
/// first nonzero coefficient of its first nonzero entry is 1.
inline SyzTriple syzygy_23(const InputTriple& p)
{
    InstanceClass cls = classify(p);
    if (cls == InstanceClass::Degenerate)
        throw DegenerateInput("syzygy_23 on a degenerate triple");
    if (cls == InstanceClass::Generic)
        throw GenericInstance("Syz(p)_{2,3} = 0 for a generic triple");

    auto [c1, c2] = syzygies_33(p);
    const SyzTriple& use = c1.is_zero() ? c2 : c1;
    auto content = linear_content_xy(use.s);
    if (!content)
        throw InternalInvariantViolation("no linear content in a non-generic C^(i)");

    SyzTriple t(content->second[0], content->second[1], content->second[2]);
    Rational lead;
    bool found = false;
    for (const auto& e : t.s) {
        for (const auto& q : e.coeff_vector())
            if (sgn(q) != 0) {
                lead = q;
                found = true;
                break;
            }
        if (found) break;
    }
    if (found && lead != 1) t = (Rational(1) / lead) * t;
    if (t.is_zero() || !is_syzygy(p, t))
        throw InternalInvariantViolation("degree-(2,3) extraction failed");
    return t;
}

/// Minimal generators: generic {(6,1), (4,2)^3, (3,3)^2},
/// non-generic {(6,1), (4,2)^3, (2,3)}.
inline SyzGens min_generators(const InputTriple& p)
{
    InstanceClass cls = classify(p);
    if (cls == InstanceClass::Degenerate)
        throw DegenerateInput("min_generators on a degenerate triple");

    SyzGens out;
    out.gens.push_back(syzygy_61(p));
    for (auto& k : koszul_generators(p)) out.gens.push_back(k);
    if (cls == InstanceClass::Generic) {
        auto [c1, c2] = syzygies_33(p);
        out.gens.push_back(c1);
        out.gens.push_back(c2);
    } else {
        out.gens.push_back(syzygy_23(p));
    }
    return out;
}

struct GenReport {
    bool pass = true;
    std::optional<BiDeg> first_fail;
    std::string detail;
};

/// Cell-by-cell comparison of the span of all monomial shifts of `gens`
/// against the oracle Syz(p)_{m,n} over the box: containment is certified by
/// the syzygy identity for every shifted generator, dimension equality by a
/// rank test.
inline GenReport check_generation(const InputTriple& p, const SyzGens& gens, BiDeg box)
{
    GenReport rep;
    for (long m = 0; m <= box.m && rep.pass; ++m)
        for (long n = 0; n <= box.n; ++n) {
            long want = syz_and_ideal_dims(p, m, n).syz;

            std::vector<std::vector<Rational>> cols;
            for (const auto& g : gens.gens) {
                BiDeg shift = BiDeg{m, n} - g.ambient();
                if (!shift.nonnegative()) continue;
                for (long i = 0; i <= shift.m; ++i)
                    for (long j = 0; j <= shift.n; ++j) {
                        SyzTriple shifted = BiHomPoly::monomial(shift, i, j) * g;
                        if (!is_syzygy(p, shifted)) {
                            rep.pass = false;
                            rep.first_fail = BiDeg{m, n};
                            rep.detail = "shifted generator is not a syzygy at " +
                                         BiDeg{m, n}.str();
                            return rep;
                        }
                        cols.push_back(shifted.stacked_coeffs());
                    }
            }

            long got = 0;
            if (!cols.empty()) {
                ExactMatrix g = ExactMatrix::from_columns(cols.front().size(), cols);
                got = static_cast<long>(rank(g));
            }
            if (got != want) {
                rep.pass = false;
                rep.first_fail = BiDeg{m, n};
                rep.detail = "span dimension " + std::to_string(got) + " != oracle " +
                             std::to_string(want) + " at " + BiDeg{m, n}.str();
                return rep;
            }
        }
    return rep;
}

}  // namespace bisyz
