#pragma once

#include <array>
#include <istream>
#include <random>
#include <sstream>
#include <string>

#include "bisyz/classify.hpp"

namespace bisyz {

struct GenerationExhausted : Error {
    using Error::Error;
};

/// Instance files hold three rows of six rationals [a b c d e f], one row
/// per form, in the order a x^2 z + b xyz + c y^2 z + d x^2 w + e xyw +
/// f y^2 w.  '#' starts a comment; blank lines are skipped.
inline InputTriple parse_instance(std::istream& in)
{
    std::array<std::array<Rational, 6>, 3> rows;
    std::size_t got = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream fields(line);
        std::string tok;
        std::size_t col = 0;
        while (fields >> tok) {
            if (got >= 3 || col >= 6) throw ParseError("too many coefficients");
            rows[got][col++] = parse_rational(tok);
        }
        if (col == 0) continue;
        if (col != 6) throw ParseError("row " + std::to_string(got) + " has " +
                                       std::to_string(col) + " coefficients, expected 6");
        ++got;
    }
    if (got != 3) throw ParseError("expected 3 coefficient rows, found " + std::to_string(got));
    return InputTriple::from_rows(rows);
}

inline InputTriple parse_instance(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

/// Canonical file form: exactly three "a b c d e f" lines.
inline std::string format_instance(const InputTriple& p)
{
    std::string out;
    for (const auto& row : p.rows()) {
        for (std::size_t j = 0; j < 6; ++j) {
            if (j) out += ' ';
            out += to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

/// p0 = x^2 z, p1 = y^2 w, p2 = x^2 w + y^2 z: the classic non-generic triple.
inline InputTriple example_43()
{
    auto x = BiHomPoly::x, y = BiHomPoly::y, z = BiHomPoly::z, w = BiHomPoly::w;
    return InputTriple(x() * x() * z(), y() * y() * w(),
                       x() * x() * w() + y() * y() * z());
}

/// The three-point family:
/// p0 = x(x - Ay) z, p1 = y(y - Bx) w, p2 = (x + y)(x - Cy)(z + w).
/// Resultant equals -C(1+B)(BC-1)(1+A)(A-C)(AB-1) under this library's
/// normalization; non-generic exactly on the locus A = BC + C - 1
/// (verified by exhaustive exact computation on integer grids).
inline InputTriple three_point_family(const Rational& A, const Rational& B, const Rational& C)
{
    auto x = BiHomPoly::x(), y = BiHomPoly::y(), z = BiHomPoly::z(), w = BiHomPoly::w();
    BiHomPoly p0 = x * (x - A * y) * z;
    BiHomPoly p1 = y * (y - B * x) * w;
    BiHomPoly p2 = (x + y) * (x - C * y) * (z + w);
    return InputTriple(p0, p1, p2);
}

/// A tangent variant of the family whose plane meets the Segre variety in
/// a double point and a simple point; generic whenever
/// (1 - AB)(A + 1)(A - C) C != 0.
inline InputTriple tangent_family(const Rational& A, const Rational& B, const Rational& C)
{
    auto x = BiHomPoly::x(), y = BiHomPoly::y(), z = BiHomPoly::z(), w = BiHomPoly::w();
    BiHomPoly p0 = x * (x - A * y) * z;
    BiHomPoly p1 = y * (y - B * x) * z + x * (x - A * y) * w;
    BiHomPoly p2 = (x + y) * (x - C * y) * (z + w);
    return InputTriple(p0, p1, p2);
}

/// Known-generic fixture: the three-point family at (A, B, C) = (3, 2, 1),
/// off the non-generic locus (BC + C - 1 = 2 != 3).
inline InputTriple generic_fixture()
{
    return three_point_family(3, 2, 1);
}

/// A second non-generic fixture: (A, B, C) = (2, 2, 1) sits on the locus
/// A = BC + C - 1 with resultant -27.
inline InputTriple nongeneric_fixture()
{
    return three_point_family(2, 2, 1);
}

namespace detail {

/// Deterministic draw in [-bound, bound] (modulo mapping keeps the byte
/// stream reproducible across standard libraries).
inline long draw(std::mt19937_64& rng, long bound)
{
    return static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
}

}  // namespace detail

/// Seeded instance generation.  Generic: uniform coefficients redrawn until
/// the resultant is nonzero and Syz(p)_{2,3} = 0.  Non-generic: a rank-2
/// family of linear forms r_i pushed through phi(s, t) =
/// (r_0 x^2 + r_1 xy + r_2 y^2)(t z - s w) at (0,1), (-1,0), (-1,1),
/// redrawn until the resultant is nonzero.
inline InputTriple gen_instance(InstanceClass target, std::uint64_t seed, long bound,
                                int max_tries = 1000)
{
    if (bound < 1) throw Error("generation bound must be >= 1");
    if (target == InstanceClass::Degenerate)
        throw Error("only generic|nongeneric instances are generated");
    std::mt19937_64 rng(seed);

    for (int t = 0; t < max_tries; ++t) {
        if (target == InstanceClass::Generic) {
            std::array<std::array<Rational, 6>, 3> rows;
            for (auto& row : rows)
                for (auto& c : row) c = Rational(detail::draw(rng, bound));
            InputTriple p = InputTriple::from_rows(rows);
            if (resultant_21(p).is_zero) continue;
            if (syz_and_ideal_dims(p, 2, 3).syz != 0) continue;
            return p;
        }

        long u[3], v[3];
        for (int k = 0; k < 3; ++k) {
            u[k] = detail::draw(rng, bound);
            v[k] = detail::draw(rng, bound);
        }
        bool rank2 = (u[0] * v[1] - u[1] * v[0]) != 0 || (u[0] * v[2] - u[2] * v[0]) != 0 ||
                     (u[1] * v[2] - u[2] * v[1]) != 0;
        if (!rank2) continue;
        auto x = BiHomPoly::x(), y = BiHomPoly::y(), z = BiHomPoly::z(), w = BiHomPoly::w();
        auto quad = [&](long c0, long c1, long c2) {
            return Rational(c0) * (x * x) + Rational(c1) * (x * y) + Rational(c2) * (y * y);
        };
        BiHomPoly p0 = quad(v[0], v[1], v[2]) * z;
        BiHomPoly p1 = quad(-u[0], -u[1], -u[2]) * w;
        BiHomPoly p2 = quad(v[0] - u[0], v[1] - u[1], v[2] - u[2]) * (z + w);
        InputTriple p(p0, p1, p2);
        if (resultant_21(p).is_zero) continue;
        if (classify(p) != InstanceClass::NonGeneric)
            throw InternalInvariantViolation("conic construction produced a generic triple");
        return p;
    }
    throw GenerationExhausted("no admissible instance after " + std::to_string(max_tries) +
                              " draws");
}

/// Random instance adjusted to vanish at a planted point of P^1 x P^1
/// (resultant must then vanish exactly).
inline InputTriple plant_common_zero(std::uint64_t seed, long bound = 5)
{
    static const long pts[][4] = {{0, 1, 0, 1}, {1, 0, 1, 0},  {1, 1, 1, 1},
                                  {1, 2, 1, 3}, {2, 1, 1, 1},  {1, 1, 2, 3},
                                  {3, 1, 1, 2}, {1, 3, 2, 1},  {2, 3, 3, 2},
                                  {1, 4, 5, 1}};
    std::mt19937_64 rng(seed);
    const long* pt = pts[seed % 10];
    Rational x0(pt[0]), y0(pt[1]), z0(pt[2]), w0(pt[3]);

    std::array<std::array<Rational, 6>, 3> rows;
    for (auto& row : rows)
        for (auto& c : row) c = Rational(detail::draw(rng, bound));
    InputTriple p = InputTriple::from_rows(rows);

    // cancel the value at the point against a monomial that does not vanish there
    std::array<BiHomPoly, 3> adj;
    for (int k = 0; k < 3; ++k) {
        BiHomPoly q = p[k];
        Rational val = q.eval(x0, y0, z0, w0);
        for (long i = 0; i <= 2 && sgn(val) != 0; ++i)
            for (long j = 0; j <= 1; ++j) {
                Rational mono = BiHomPoly::monomial({2, 1}, i, j).eval(x0, y0, z0, w0);
                if (sgn(mono) != 0) {
                    q.coeff(i, j) -= val / mono;
                    val = 0;
                    break;
                }
            }
        adj[k] = q;
    }
    return InputTriple(adj[0], adj[1], adj[2]);
}

}  // namespace bisyz
