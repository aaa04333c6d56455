#pragma once

#include <random>
#include <sstream>

#include "bisyz/instance.hpp"
#include "bisyz/resolution.hpp"

namespace bisyz {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Machine-readable run result: classification, resultant, generator
/// degrees, the dimension table, and one verdict line per check.
struct RunReport {
    InstanceClass cls = InstanceClass::Degenerate;
    Rational resultant;
    std::vector<BiDeg> gen_degrees;
    DimTable table;
    std::vector<CheckLine> checks;

    bool pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// The 20 degree-(3,3) products of three generators of B = <xz, xw, yz, yw>.
inline std::vector<BiHomPoly> b_cubed_products()
{
    auto x = BiHomPoly::x(), y = BiHomPoly::y(), z = BiHomPoly::z(), w = BiHomPoly::w();
    std::array<BiHomPoly, 4> b{x * z, x * w, y * z, y * w};
    std::vector<BiHomPoly> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            for (int k = j; k < 4; ++k) out.push_back(b[i] * b[j] * b[k]);
    return out;
}

/// Every shift of `t` by a degree-(3,3) product of B-generators lies in the
/// Koszul image (the testable form of exactness modulo B-torsion).
inline bool b_cubed_koszul(const InputTriple& p, const SyzTriple& t)
{
    BiDeg a = t.ambient() + BiDeg{3, 3};
    ExactMatrix k = koszul_map_matrix(p, a.m, a.n);
    std::vector<std::vector<Rational>> cols;
    for (const auto& mu : b_cubed_products()) cols.push_back((mu * t).stacked_coeffs());
    ExactMatrix rhs = ExactMatrix::from_columns(k.rows(), cols);
    for (bool ok : solvable_batch(k, rhs))
        if (!ok) return false;
    return true;
}

/// Res(lambda p0, mu p1, nu p2) == (lambda mu nu)^4 Res(p) for seeded
/// nonzero scalars (degree 4 in each coefficient block).
inline bool resultant_scaling_check(const InputTriple& p, std::uint64_t seed, int rounds = 3)
{
    Rational base = resultant_21(p).value;
    std::mt19937_64 rng(seed);
    auto nonzero = [&]() {
        long v = 0;
        while (v == 0) v = static_cast<long>(rng() % 19) - 9;
        return Rational(v);
    };
    for (int r = 0; r < rounds; ++r) {
        Rational l = nonzero(), m = nonzero(), n = nonzero();
        InputTriple q(l * p[0], m * p[1], n * p[2]);
        Rational factor = l * m * n;
        Rational want = factor * factor * factor * factor * base;
        if (!(resultant_21(q).value == want)) return false;
    }
    return true;
}

/// The full verification pipeline behind `verify`: resultant scaling,
/// classification, dimension table, generator completeness, resolution
/// checks, the four-term dimension identity, and B-torsion.
inline RunReport run_full_verification(const InputTriple& p, BiDeg box, std::uint64_t seed = 1)
{
    RunReport rep;
    rep.resultant = resultant_21(p).value;
    rep.cls = classify(p);
    if (rep.cls == InstanceClass::Degenerate)
        throw DegenerateInput("verification needs a triple without common zeros");

    rep.checks.push_back({"resultant scaling (lambda mu nu)^4",
                          resultant_scaling_check(p, seed),
                          "3 seeded scalar triples"});
    rep.checks.push_back({"classification", true, to_string(rep.cls)});

    rep.table = dim_table_with_class(p, rep.cls, box);
    {
        CheckLine c{"hilbert agreement over " + box.str(), rep.table.all_match(), ""};
        if (auto f = rep.table.first_mismatch()) c.detail = "first mismatch at " + f->str();
        rep.checks.push_back(c);
    }

    SyzGens gens = min_generators(p);
    rep.gen_degrees = gens.degrees();
    {
        GenReport gr = check_generation(p, gens, box);
        rep.checks.push_back({"minimal generators generate Syz(p)", gr.pass, gr.detail});
    }

    {
        CheckLine c{"resolution (six checks)", false, ""};
        try {
            GradedComplex cx = build_resolution(p);
            VerifyReport vr = verify_complex(cx, p, box);
            c.pass = vr.pass();
            std::ostringstream os;
            os << "d2=" << vr.d2_zero << " exactness=" << vr.exactness
               << " H_I=" << vr.h_agree << " minimal=" << vr.minimal
               << " shape=" << vr.shape_ok << " euler=" << vr.euler_ok;
            if (vr.first_fail) os << "; " << vr.detail;
            c.detail = os.str();
        } catch (const Error& e) {
            c.detail = e.what();
        }
        rep.checks.push_back(c);
    }

    {
        CheckLine c{"four-term dimension identity", true, ""};
        for (const auto& cell : rep.table.cells) {
            long want = 3 * h_R(cell.m - 4, cell.n - 2) - h_R(cell.m - 6, cell.n - 3) + cell.e2;
            if (cell.h_syz != want) {
                c.pass = false;
                c.detail = "fails at (" + std::to_string(cell.m) + "," +
                           std::to_string(cell.n) + ")";
                break;
            }
        }
        rep.checks.push_back(c);
    }

    {
        CheckLine c{"B^3 multiples become Koszul", true, ""};
        for (std::size_t i = 0; i < gens.gens.size(); ++i)
            if (!b_cubed_koszul(p, gens.gens[i])) {
                c.pass = false;
                c.detail = "generator " + std::to_string(i) + " of degree " +
                           gens.gens[i].ambient().str();
                break;
            }
        rep.checks.push_back(c);
    }
    return rep;
}

/// ASCII degree picture: '.' for Syz(p)_{m,n} = 0, '*' for nonzero but all
/// Koszul, '#' when non-Koszul syzygies are present.  Rows run n top-down,
/// columns m left-right.
inline std::string render_picture(const DimTable& t)
{
    std::ostringstream os;
    for (long n = t.box.n; n >= 0; --n) {
        os << (n < 10 ? " " : "") << n << " |";
        for (long m = 0; m <= t.box.m; ++m) {
            const DimCell& c = t.cells[static_cast<std::size_t>(m * (t.box.n + 1) + n)];
            os << ' ' << (c.h_syz == 0 ? '.' : c.e2 == 0 ? '*' : '#');
        }
        os << '\n';
    }
    os << "   +";
    for (long m = 0; m <= t.box.m; ++m) os << "--";
    os << "\n    ";
    for (long m = 0; m <= t.box.m; ++m) os << ' ' << m % 10;
    os << "\nn/m   . Syz=0   * Koszul only   # non-Koszul present\n";
    return os.str();
}

inline std::string render_hilbert_csv(const DimTable& t)
{
    std::ostringstream os;
    os << "m,n,h_syz_pred,h_syz,h_I_pred,h_I,e2_pred,e2\n";
    for (const auto& c : t.cells)
        os << c.m << ',' << c.n << ',' << c.h_syz_pred << ',' << c.h_syz << ',' << c.h_I_pred
           << ',' << c.h_I << ',' << c.e2_pred << ',' << c.e2 << '\n';
    return os.str();
}

inline std::string render_hilbert_table(const DimTable& t)
{
    std::ostringstream os;
    os << "   m   n  h_syz(pred/orc)  h_I(pred/orc)  e2(pred/orc)  ok\n";
    for (const auto& c : t.cells) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%4ld%4ld     %4ld/%-4ld      %4ld/%-4ld    %4ld/%-4ld   %s\n",
                      c.m, c.n, c.h_syz_pred, c.h_syz, c.h_I_pred, c.h_I, c.e2_pred, c.e2,
                      c.match() ? "ok" : "MISMATCH");
        os << buf;
    }
    return os.str();
}

}  // namespace bisyz
