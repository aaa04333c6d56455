#include <catch2/catch_amalgamated.hpp>

#include "bisyz/instance.hpp"
#include "bisyz/resolution.hpp"

using namespace bisyz;

namespace {

const BiHomPoly X = BiHomPoly::x(), Y = BiHomPoly::y(), Z = BiHomPoly::z(), W = BiHomPoly::w();

/// Interior rank-exactness plus injectivity of the last map, per bidegree.
bool complex_rank_exact(const GradedComplex& cx, BiDeg box)
{
    for (long m = 0; m <= box.m; ++m)
        for (long n = 0; n <= box.n; ++n) {
            BiDeg d{m, n};
            std::vector<long> r;
            for (const auto& f : cx.maps) r.push_back(static_cast<long>(rank(f.piece(d))));
            for (std::size_t spot = 1; spot + 1 < cx.mods.size(); ++spot)
                if (r[spot] != cx.mods[spot].dim_at(d) - r[spot - 1]) return false;
            if (r.back() != cx.mods.back().dim_at(d)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("length-two Koszul complexes")
{
    GradedComplex k = koszul_two(Z, W);
    CHECK(k.mods[1].shifts == std::vector<BiDeg>{{0, 1}, {0, 1}});
    CHECK(k.mods[2].shifts == std::vector<BiDeg>{{0, 2}});
    CHECK(k.maps[1].entry(0, 0) == W);
    CHECK(k.maps[1].entry(1, 0) == -Z);
    CHECK(k.is_complex());

    InputTriple g = generic_fixture();
    GradedComplex kp = koszul_two(g[0], g[1]);
    CHECK(kp.mods[2].shifts == std::vector<BiDeg>{{4, 2}});
    CHECK(kp.is_complex());
    CHECK(complex_rank_exact(kp, {6, 4}));

    // the factored pair of a normal form gives the same shape
    NormalForm nf = normal_form(example_43());
    GradedComplex kn = koszul_two(nf.q[0], nf.q[1]);
    CHECK(kn.mods[1].shifts == std::vector<BiDeg>{{2, 1}, {2, 1}});
    CHECK(kn.mods[2].shifts == std::vector<BiDeg>{{4, 2}});
    CHECK(complex_rank_exact(kn, {6, 4}));
}

TEST_CASE("normal form of the worked non-generic example")
{
    NormalForm nf = normal_form(example_43());
    CHECK(nf.g0 == X * X);
    CHECK(nf.g1 == Y * Y);
    CHECK(nf.g2 == X * X + Y * Y);
    CHECK(nf.q[2] == (X * X + Y * Y) * (Z + W));
    InputTriple p = example_43();
    CHECK(nf.q[2] == p[0] + p[1] + p[2]);
    for (int i = 0; i < 3; ++i) CHECK(nf.q[i] == std::array<BiHomPoly, 3>{nf.g0, nf.g1, nf.g2}[i] * nf.l[i]);
    CHECK(sgn(det(nf.basis_change)) != 0);

    // family member on the locus
    NormalForm nf2 = normal_form(nongeneric_fixture());
    CHECK(nf2.g2 == nf2.g0 + nf2.g1);
    CHECK(sgn(sylvester_quadratics(nf2.g0, nf2.g1)) != 0);

    CHECK_THROWS_AS(normal_form(generic_fixture()), GenericInstance);
}

TEST_CASE("ideal quotient generators, non-generic")
{
    NormalForm nf = normal_form(example_43());
    IdealGens j = quotient_gens_nongeneric(nf);  // membership sanity built in
    REQUIRE(j.gens.size() == 4);
    CHECK(j.gens[0].poly == Z * W);
    CHECK(j.gens[1].poly == X * X * Z);
    CHECK(j.gens[2].poly == Y * Y * W);
    CHECK(j.gens[3].poly == X * X * Y * Y);
    std::vector<BiDeg> degs;
    for (const auto& g : j.gens) degs.push_back(g.poly.deg());
    CHECK(degs == std::vector<BiDeg>{{0, 2}, {2, 1}, {2, 1}, {4, 0}});
}

TEST_CASE("ideal quotient generators, generic")
{
    // p0 = x^2 z, p1 = y^2 w is a complete intersection
    IdealGens k = quotient_gens_generic(X * X * Z, Y * Y * W, X * X * W + Y * Y * Z);
    REQUIRE(k.gens.size() == 5);
    CHECK(k.gens[2].poly == X * Z * W);       // k1
    CHECK(k.gens[3].poly == Y * Z * W);       // k2
    CHECK(k.gens[4].poly == X * X * Y * Y);   // g

    CHECK_THROWS_AS(quotient_gens_generic(X * X * Z, X * X * W, Y * Y * W),
                    NotCompleteIntersection);
}

TEST_CASE("Hilbert-Burch complexes")
{
    GradedComplex hb = hilbert_burch_nongeneric(X * X, Y * Y, BiDeg{7, 4});
    CHECK(hb.mods[1].shifts == std::vector<BiDeg>{{0, 2}, {2, 1}, {2, 1}});
    CHECK(hb.mods[2].shifts == std::vector<BiDeg>{{2, 2}, {2, 2}});

    InputTriple g = generic_fixture();
    GradedComplex hg = hilbert_burch_generic(g[0], g[1], BiDeg{7, 4});
    CHECK(hg.mods[1].shifts == std::vector<BiDeg>{{2, 1}, {2, 1}, {1, 2}, {1, 2}});
    CHECK(hg.mods[2].shifts == std::vector<BiDeg>{{2, 2}, {2, 2}, {2, 2}});
    // full column rank of the presentation matrix in every bidegree
    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n <= 4; ++n)
            CHECK(rank(hg.maps[1].piece({m, n})) ==
                  static_cast<std::size_t>(hg.mods[2].dim_at({m, n})));
}

TEST_CASE("chain-map lifting")
{
    // identity lift
    GradedComplex k = koszul_two(Z, W);
    auto psi = lift_chain_map(k, k, BiHomPoly::constant(1));
    REQUIRE(psi.size() == 3);
    CHECK(psi[1].entry(0, 0) == BiHomPoly::constant(1));
    CHECK(psi[1].entry(0, 1).is_zero());
    CHECK(psi[2].entry(0, 0) == BiHomPoly::constant(1));

    // non-generic inner lift exists
    NormalForm nf = normal_form(example_43());
    GradedComplex gk = hilbert_burch_nongeneric(nf.g0, nf.g1);
    GradedComplex fk = koszul_two(Z, W).twisted({4, 0});
    CHECK_NOTHROW(lift_chain_map(fk, gk, nf.g0 * nf.g1));

    // generic inner lift exists
    InputTriple g = generic_fixture();
    SplitZW t0 = split_zw(g[0]), t1 = split_zw(g[1]);
    GradedComplex gg = hilbert_burch_generic(g[0], g[1]);
    CHECK_NOTHROW(lift_chain_map(fk, gg, t0.A * t1.B - t1.A * t0.B));
}

TEST_CASE("mapping cones")
{
    // cone over the identity of the trivial complex is contractible
    GradedComplex triv;
    triv.mods = {FreeModule{{BiDeg{0, 0}}}};
    auto psi0 = std::vector<GradedMap>{
        GradedMap(triv.mods[0], triv.mods[0], {{BiHomPoly::constant(1)}})};
    GradedComplex cone = mapping_cone(triv, triv, psi0);
    CHECK(cone.mods.size() == 2);
    CHECK(cone.is_complex());
    CHECK(complex_rank_exact(cone, {3, 3}));

    // inner cone ranks: 1,4,4,1 non-generic and 1,5,5,1 generic, both exact
    NormalForm nf = normal_form(example_43());
    GradedComplex gk = hilbert_burch_nongeneric(nf.g0, nf.g1);
    GradedComplex fk = koszul_two(Z, W).twisted({4, 0});
    GradedComplex inner =
        mapping_cone(fk, gk, lift_chain_map(fk, gk, nf.g0 * nf.g1));
    CHECK(betti_ranks(inner) == std::vector<std::size_t>{1, 4, 4, 1});
    CHECK(inner.is_complex());
    CHECK(complex_rank_exact(inner, {7, 4}));

    InputTriple g = generic_fixture();
    SplitZW t0 = split_zw(g[0]), t1 = split_zw(g[1]);
    GradedComplex gg = hilbert_burch_generic(g[0], g[1]);
    GradedComplex ginner =
        mapping_cone(fk, gg, lift_chain_map(fk, gg, t0.A * t1.B - t1.A * t0.B));
    CHECK(betti_ranks(ginner) == std::vector<std::size_t>{1, 5, 5, 1});
    CHECK(ginner.is_complex());
    CHECK(complex_rank_exact(ginner, {7, 4}));
}

TEST_CASE("colon-ideal identities behind the cones")
{
    // non-generic: (K : g0 g1) = <z, w>
    NormalForm nf = normal_form(example_43());
    std::vector<BiHomPoly> k{Z * W, nf.g0 * Z, nf.g1 * W};
    BiHomPoly f = nf.g0 * nf.g1;
    CHECK(in_ideal(k, Z * f));
    CHECK(in_ideal(k, W * f));
    std::vector<BiHomPoly> zw{Z, W};
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 3; ++n)
            CHECK(colon_piece_dim(k, f, {m, n}) == ideal_piece_dim(zw, {m, n}));

    // generic: (K : g) = <z, w>
    InputTriple gfix = generic_fixture();
    IdealGens kg = quotient_gens_generic(gfix[0], gfix[1], gfix[2]);
    std::vector<BiHomPoly> kgen{kg.gens[0].poly, kg.gens[1].poly, kg.gens[2].poly,
                                kg.gens[3].poly};
    const BiHomPoly& g = kg.gens[4].poly;
    CHECK(in_ideal(kgen, Z * g));
    CHECK(in_ideal(kgen, W * g));
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 3; ++n)
            CHECK(colon_piece_dim(kgen, g, {m, n}) == ideal_piece_dim(zw, {m, n}));
}

TEST_CASE("full resolutions match the two expected shapes")
{
    GradedComplex nx = build_resolution(example_43());
    CHECK(betti_ranks(nx) == std::vector<std::size_t>{1, 3, 5, 4, 1});
    auto want_n = expected_shifts(InstanceClass::NonGeneric);
    for (std::size_t i = 0; i < want_n.size(); ++i) {
        std::sort(want_n[i].begin(), want_n[i].end());
        CHECK(nx.mods[i].sorted_shifts() == want_n[i]);
    }

    GradedComplex gx = build_resolution(generic_fixture());
    CHECK(betti_ranks(gx) == std::vector<std::size_t>{1, 3, 6, 5, 1});
    auto want_g = expected_shifts(InstanceClass::Generic);
    for (std::size_t i = 0; i < want_g.size(); ++i) {
        std::sort(want_g[i].begin(), want_g[i].end());
        CHECK(gx.mods[i].sorted_shifts() == want_g[i]);
    }

    CHECK_THROWS_AS(build_resolution(parse_instance("1 0 0 0 0 0\n0 1 0 0 0 0\n0 0 1 0 0 0\n")),
                    DegenerateInput);
}

TEST_CASE("alternating dimension sum at (6,3)")
{
    // generic shape: 45 - 29 + 13 - 1 == 28 == dim I_{6,3} == h_R(6,3)
    InputTriple g = generic_fixture();
    GradedComplex cx = build_resolution(g);
    BiDeg d{6, 3};
    std::vector<long> dims;
    for (const auto& m : cx.mods) dims.push_back(m.dim_at(d));
    CHECK(dims == std::vector<long>{28, 45, 29, 13, 1});
    long h_i = syz_and_ideal_dims(g, 6, 3).ideal;
    CHECK(h_i == 28);
    CHECK(dims[1] - dims[2] + dims[3] - dims[4] == h_i);
    CHECK(dims[0] - dims[1] + dims[2] - dims[3] + dims[4] == h_R(6, 3) - h_i);
}

TEST_CASE("partial resolution consistency with the generator degrees")
{
    for (const InputTriple& p : {example_43(), generic_fixture()}) {
        GradedComplex cx = build_resolution(p);
        CHECK(cx.mods[1].sorted_shifts() == std::vector<BiDeg>{{2, 1}, {2, 1}, {2, 1}});
        CHECK(cx.mods[2].sorted_shifts() == min_generators(p).degrees());
    }
}

TEST_CASE("six-check verification passes on the fixtures")
{
    for (const InputTriple& p : {example_43(), generic_fixture(), nongeneric_fixture()}) {
        VerifyReport rep = verify_complex(build_resolution(p), p, {7, 4});
        CHECK(rep.pass());
    }
}

TEST_CASE("a sign flip in a differential is detected")
{
    GradedComplex cx = build_resolution(example_43());
    // negate one nonzero entry of the third differential
    const GradedMap& d3 = cx.maps[2];
    std::vector<std::vector<BiHomPoly>> e;
    for (std::size_t i = 0; i < d3.target().rank(); ++i) {
        std::vector<BiHomPoly> row;
        for (std::size_t k = 0; k < d3.source().rank(); ++k) row.push_back(d3.entry(i, k));
        e.push_back(std::move(row));
    }
    bool flipped = false;
    for (auto& row : e) {
        for (auto& q : row)
            if (!q.is_zero()) {
                q = -q;
                flipped = true;
                break;
            }
        if (flipped) break;
    }
    REQUIRE(flipped);
    cx.maps[2] = GradedMap(d3.source(), d3.target(), std::move(e));
    VerifyReport rep = verify_complex(cx, example_43(), {4, 3});
    CHECK_FALSE(rep.d2_zero);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("seeded instances resolve and verify")
{
    for (std::uint64_t seed : {7ull, 8ull}) {
        for (auto target : {InstanceClass::Generic, InstanceClass::NonGeneric}) {
            InputTriple p = gen_instance(target, seed, 5);
            VerifyReport rep = verify_complex(build_resolution(p), p, {7, 4});
            CHECK(rep.pass());
        }
    }
}
