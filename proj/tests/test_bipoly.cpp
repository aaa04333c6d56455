#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bisyz/bipoly.hpp"

using namespace bisyz;

namespace {

const BiHomPoly X = BiHomPoly::x(), Y = BiHomPoly::y(), Z = BiHomPoly::z(), W = BiHomPoly::w();

BiHomPoly random_poly(std::mt19937_64& rng, BiDeg d, long bound = 3)
{
    BiHomPoly p(d);
    for (long i = 0; i <= d.m; ++i)
        for (long j = 0; j <= d.n; ++j)
            p.coeff(i, j) = Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound);
    return p;
}

}  // namespace

TEST_CASE("construction and grids")
{
    CHECK(BiHomPoly::make({0, 0}, {Rational(5)}).eval(0, 0, 0, 0) == 5);
    BiHomPoly x2z = BiHomPoly::make({2, 1}, {Rational(1), 0, 0, 0, 0, 0});
    CHECK(x2z == X * X * Z);
    CHECK(BiHomPoly({1, 1}).is_zero());
    CHECK_THROWS_AS(BiHomPoly::make({1, 1}, {Rational(1)}), DimensionMismatch);
    CHECK(dim_R({2, 1}) == 6);
    CHECK(dim_R({-1, 5}) == 0);
}

TEST_CASE("products")
{
    BiHomPoly xy = X * Y;
    CHECK(xy.deg() == BiDeg{2, 0});
    CHECK(xy.coeff(1, 0) == 1);
    CHECK((Z * W).coeff(0, 1) == 1);
    BiHomPoly p = (X * X * Z) * (Y * Y * W);
    CHECK(p.deg() == BiDeg{4, 2});
    CHECK(p.coeff(2, 1) == 1);  // x^2 y^2 z w
    CHECK(p.str() == "x^2*y^2*z*w");
}

TEST_CASE("evaluation")
{
    CHECK((X * X * Z).eval(0, 1, 0, 1) == 0);
    CHECK((Y * Y * W).eval(0, 1, 0, 1) == 1);
    CHECK((X * X * W + Y * Y * Z).eval(1, 1, 1, 1) == 2);
}

TEST_CASE("coefficient vectors follow the monomial order")
{
    CHECK(BiHomPoly::constant(7).coeff_vector() == std::vector<Rational>{Rational(7)});
    CHECK((X * X * Z).coeff_vector() == std::vector<Rational>{1, 0, 0, 0, 0, 0});
    CHECK((Y * Y * W).coeff_vector() == std::vector<Rational>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("multiplication matrices")
{
    CHECK(mult_matrix(BiHomPoly::constant(1), {2, 1}) == ExactMatrix::identity(6));
    ExactMatrix zero = mult_matrix(BiHomPoly({2, 1}), {1, 1});
    CHECK(zero.rows() == 12);
    CHECK(zero.cols() == 4);
    CHECK(zero.is_zero());
    CHECK(rank(mult_matrix(Z, {0, 1})) == 2);
}

TEST_CASE("mult_matrix is multiplicative")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 10; ++round) {
        BiHomPoly p = random_poly(rng, {static_cast<long>(rng() % 3), static_cast<long>(rng() % 2)});
        BiHomPoly q = random_poly(rng, {static_cast<long>(rng() % 2), static_cast<long>(rng() % 3)});
        BiDeg s{static_cast<long>(rng() % 3), static_cast<long>(rng() % 3)};
        CHECK(mult_matrix(p * q, s) == mult_matrix(p, s + q.deg()) * mult_matrix(q, s));
    }
}

TEST_CASE("z/w and x/y splittings reconstitute")
{
    auto s = split_zw(X * X * Z);
    CHECK(s.A == X * X);
    CHECK(s.B.is_zero());

    auto t = split_zw(X * X * W + Y * Y * Z);
    CHECK(t.A == Y * Y);
    CHECK(t.B == X * X);

    auto u = split_zw(X * Y * Z - X * Y * W);
    CHECK(u.A == X * Y);
    CHECK(u.B == -(X * Y));

    auto v = split_xy(X * X * Z + Rational(3) * X * Y * W + Y * Y * W);
    CHECK(v.C == Z);
    CHECK(v.D == Rational(3) * W);
    CHECK(v.E == W);

    CHECK_THROWS_AS(split_zw(X * Z * Z), WrongBidegree);
    CHECK_THROWS_AS(split_xy(X * Z), WrongBidegree);

    std::mt19937_64 rng(11);
    for (int round = 0; round < 10; ++round) {
        BiHomPoly p = random_poly(rng, {2 + static_cast<long>(rng() % 2), 1});
        auto sp = split_zw(p);
        CHECK(sp.A * Z + sp.B * W == p);
        BiHomPoly q = random_poly(rng, {2, static_cast<long>(rng() % 3)});
        auto sq = split_xy(q);
        CHECK(sq.C * X * X + sq.D * X * Y + sq.E * Y * Y == q);
    }
}

TEST_CASE("exact division")
{
    auto q = divide_exact(X * X * Y * Y * Z * W, Z * W);
    REQUIRE(q);
    CHECK(*q == X * X * Y * Y);

    auto r = divide_exact((X * X + Y * Y) * (Z + W), Z + W);
    REQUIRE(r);
    CHECK(*r == X * X + Y * Y);

    CHECK_FALSE(divide_exact(X * X * Z, W).has_value());
    CHECK_THROWS_AS(divide_exact(X, BiHomPoly({1, 0})), ZeroDivisor);

    std::mt19937_64 rng(13);
    for (int round = 0; round < 15; ++round) {
        BiHomPoly p = random_poly(rng, {static_cast<long>(rng() % 3), static_cast<long>(rng() % 3)});
        BiHomPoly d = random_poly(rng, {static_cast<long>(rng() % 2), static_cast<long>(rng() % 2)});
        if (d.is_zero()) continue;
        auto quot = divide_exact(p * d, d);
        REQUIRE(quot);
        CHECK(*quot == p);
    }
}

TEST_CASE("common linear content in x, y")
{
    std::array<BiHomPoly, 3> t{-(X * W * W), -(X * Z * Z), X * Z * W};
    auto c = linear_content_xy(t);
    REQUIRE(c);
    CHECK(c->first == X);
    CHECK(c->second[0] == -(W * W));
    CHECK(c->second[1] == -(Z * Z));
    CHECK(c->second[2] == Z * W);

    std::array<BiHomPoly, 3> u{-(Y * W * W), -(Y * Z * Z), Y * Z * W};
    auto cu = linear_content_xy(u);
    REQUIRE(cu);
    CHECK(cu->first == Y);

    std::array<BiHomPoly, 3> v{X * Z * Z, Y * W * W, BiHomPoly({1, 2})};
    CHECK_FALSE(linear_content_xy(v).has_value());

    // reconstitution for a synthetic common factor 2x - y
    BiHomPoly ell = Rational(2) * X - Y;
    std::array<BiHomPoly, 3> wts{ell * (Z * Z), ell * (W * W - Z * W), ell * (Z * W)};
    auto cw = linear_content_xy(wts);
    REQUIRE(cw);
    for (int k = 0; k < 3; ++k) CHECK(cw->first * cw->second[k] == wts[k]);
}

TEST_CASE("input triple row conversion")
{
    InputTriple p = InputTriple::from_rows({{{1, 2, 3, 4, 5, 6},
                                             {0, 0, 0, 0, 0, 1},
                                             {1, 0, 0, 0, 0, 0}}});
    CHECK(p[0].coeff(0, 0) == 1);  // a x^2 z
    CHECK(p[0].coeff(1, 0) == 2);  // b xyz
    CHECK(p[0].coeff(2, 0) == 3);  // c y^2 z
    CHECK(p[0].coeff(0, 1) == 4);  // d x^2 w
    CHECK(p[0].coeff(1, 1) == 5);  // e xyw
    CHECK(p[0].coeff(2, 1) == 6);  // f y^2 w
    auto rows = p.rows();
    CHECK(rows[0][4] == 5);
    CHECK(rows[1][5] == 1);
}

TEST_CASE("polynomial printing")
{
    CHECK(BiHomPoly({2, 1}).str() == "0");
    CHECK((-(X * W * W)).str() == "-x*w^2");
    CHECK((Rational(-3) * X * Y + X * X).str() == "x^2 - 3*x*y");
    CHECK((rat(1, 2) * Z).str() == "1/2*z");
}
