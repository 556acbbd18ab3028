#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "xp/curve.hpp"
#include "xp/parse.hpp"

using namespace xp;

namespace {

CurveSpec affine_line(const std::string& f, std::vector<std::string> marked = {}) {
    CurveSpec s;
    s.punctures = {P1Point::inf()};
    for (const auto& m : marked) s.marked.push_back(p1_from_string(m));
    s.f = parse_ratfunc(f);
    s.validate();
    return s;
}

struct RandomCurve {
    CurveSpec spec;
    int punctures;
    int boundary_pieces;
    int marked;
};

// Random spec with poles only at the chosen punctures, by construction.
RandomCurve random_curve(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nfin(0, 2), kdist(1, 3), extra(0, 1), nmark(0, 2);
    std::uniform_int_distribution<long> val(-4, 4);

    std::vector<GaussianRational> finite_poles;
    std::set<std::pair<long, long>> used;
    int nf = nfin(rng);
    for (int i = 0; i < nf; ++i) {
        long re = val(rng), im = val(rng);
        if (!used.insert({re, im}).second) continue;
        finite_poles.push_back({Rational(re), Rational(im)});
    }

    Polynomial den = Polynomial::constant(1, GaussianRational(1));
    int total_k = 0;
    for (const auto& p : finite_poles) {
        int k = kdist(rng);
        total_k += k;
        Polynomial lin = Polynomial::variable(1, 0) - Polynomial::constant(1, p);
        den = den * lin.pow(k);
    }
    std::uniform_int_distribution<int> degdist(0, total_k + 3);
    int deg = degdist(rng);
    Polynomial num(1);
    for (int d = 0; d < deg; ++d)
        num.add_term({d}, GaussianRational(Rational(val(rng)), Rational(val(rng))));
    num.add_term({deg}, GaussianRational(1)); // exact degree

    RandomCurve out;
    for (const auto& p : finite_poles) out.spec.punctures.push_back(P1Point::at(p));
    bool pole_at_inf = num.degree_in(0) > den.degree_in(0);
    if (pole_at_inf || extra(rng)) out.spec.punctures.push_back(P1Point::inf());
    out.spec.f = RatFunc(num, den);

    int nm = nmark(rng);
    for (int i = 0; i < nm; ++i)
        out.spec.marked.push_back(P1Point::at(GaussianRational(Rational(10 + i))));
    out.spec.validate();

    auto pc = classify_punctures(out.spec);
    out.punctures = (int)out.spec.punctures.size();
    out.boundary_pieces = 0;
    for (const auto& pd : pc.polar) out.boundary_pieces += pd.order;
    out.marked = (int)out.spec.marked.size();
    return out;
}

} // namespace

TEST_CASE("puncture classification") {
    SUBCASE("monomials on the affine line") {
        for (int n = 1; n <= 4; ++n) {
            auto pc = classify_punctures(affine_line("z^" + std::to_string(n)));
            REQUIRE(pc.polar.size() == 1);
            CHECK(pc.polar[0].location.infinite);
            CHECK(pc.polar[0].order == n);
            CHECK(pc.regular.empty());
        }
    }
    SUBCASE("pole at a finite puncture, regular at infinity") {
        CurveSpec s;
        s.punctures = {P1Point::at(GaussianRational(1)), P1Point::inf()};
        s.f = parse_ratfunc("1/(z-1)");
        auto pc = classify_punctures(s);
        REQUIRE(pc.polar.size() == 1);
        CHECK_FALSE(pc.polar[0].location.infinite);
        CHECK(pc.polar[0].order == 1);
        REQUIRE(pc.regular.size() == 1);
        CHECK(pc.regular[0].infinite);
    }
    SUBCASE("constant function has no poles") {
        auto pc = classify_punctures(affine_line("1/2"));
        CHECK(pc.polar.empty());
        CHECK(pc.regular.size() == 1);
    }
    SUBCASE("poles must sit at punctures") {
        CurveSpec s;
        s.punctures = {P1Point::inf()};
        s.f = parse_ratfunc("1/(z-1)");
        CHECK_THROWS_AS(s.validate(), Error);
    }
}

TEST_CASE("rapid decay model of the affine line") {
    SUBCASE("identity with one marked point") {
        CurveSpec s = affine_line("z", {"0"});
        CurveRdModel m = build_rd_model(s);
        CHECK(m.total_boundary_pieces == 1);
        auto h = rd_ranks(s);
        CHECK(h[0] == 0);
        CHECK(h[1] == 1);
        CHECK(h[2] == 0);
    }
    SUBCASE("monomials give rank n") {
        for (int n = 1; n <= 6; ++n) {
            CurveSpec s = affine_line("z^" + std::to_string(n), {"0"});
            CHECK(rd_rank(s, 1) == n);
            CHECK(rd_rank(s, 0) == 0);
        }
    }
    SUBCASE("extra marked points add to the rank") {
        for (int n = 1; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) {
                std::vector<std::string> marks;
                for (int i = 0; i < m; ++i) marks.push_back(std::to_string(i));
                CurveSpec s = affine_line("z^" + std::to_string(n), marks);
                CHECK(rd_rank(s, 1) == n + m - 1);
            }
    }
    SUBCASE("no marked points") {
        CHECK(rd_rank(affine_line("z"), 1) == 0);
        CHECK(rd_rank(affine_line("z^3"), 1) == 2);
    }
}

TEST_CASE("boundary piece counts match the pole orders") {
    CurveSpec s;
    s.punctures = {P1Point::at(GaussianRational(0)), P1Point::inf()};
    s.f = parse_ratfunc("(z^3+1)/z^2");
    CurveRdModel m = build_rd_model(s);
    CHECK(m.total_boundary_pieces == 3); // order 2 at 0 plus order 1 at infinity
    int complementary_arcs = 0;
    for (const auto& lab : m.arcs_complex.basis[1])
        if (lab.rfind("E@", 0) == 0) ++complementary_arcs;
    CHECK(complementary_arcs == 3);
    int spokes = 0;
    for (const auto& lab : m.points_complex.basis[1])
        if (lab.rfind("s@", 0) == 0) ++spokes;
    CHECK(spokes == 3);
}

TEST_CASE("euler characteristic of the surface model") {
    std::mt19937_64 rng(2718);
    for (int round = 0; round < 20; ++round) {
        RandomCurve rc = random_curve(rng);
        CurveRdModel m = build_rd_model(rc.spec);
        CHECK(rd_model_euler(m) == 2 - rc.punctures);
    }
}

TEST_CASE("the two boundary models agree on 30 random specs") {
    std::mt19937_64 rng(424243);
    for (int round = 0; round < 30; ++round) {
        RandomCurve rc = random_curve(rng);
        CurveRdModel m = build_rd_model(rc.spec); // throws if ranks disagree
        auto ha = homology_ranks(m.arcs_complex);
        auto hp = homology_ranks(m.points_complex);
        ha.resize(3, 0);
        hp.resize(3, 0);
        CHECK(ha == hp);

        // independent long-exact-sequence oracle for genus zero
        int p = rc.punctures, b = rc.boundary_pieces, mm = rc.marked;
        if (p >= 1) {
            int expect1 = (p - 1) + std::max(b + mm - 1, 0);
            int expect0 = (b + mm >= 1) ? 0 : 1;
            CHECK(ha[1] == expect1);
            CHECK(ha[0] == expect0);
            CHECK(ha[2] == 0);
        }
    }
}

TEST_CASE("generator rays for monomials") {
    auto g1 = rd_generators(affine_line("z", {"0"}));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].value.real() == doctest::Approx(1.0));

    auto g2 = rd_generators(affine_line("z^2", {"0"}));
    REQUIRE(g2.size() == 2);
    CHECK(g2[1].value.real() == doctest::Approx(-1.0));
    CHECK(g2[1].value.imag() == doctest::Approx(0.0).epsilon(1e-12));

    auto g4 = rd_generators(affine_line("z^4", {"0"}));
    REQUIRE(g4.size() == 4);
    CHECK(g4[1].value.imag() == doctest::Approx(1.0));
    CHECK(g4[2].value.real() == doctest::Approx(-1.0));
    CHECK(g4[3].value.imag() == doctest::Approx(-1.0));

    CHECK_THROWS_AS(rd_generators(affine_line("z^2+z", {"0"})), UnsupportedShape);
}

TEST_CASE("polar chart and its inverse") {
    std::vector<std::complex<double>> z = {{0.0, 2.0}, {3.0, 4.0}, {1.0, 1.0}};
    BlowupChart c = blowup_chart(z, 2);
    CHECK(c.radii[0] == doctest::Approx(2.0));
    CHECK(c.directions[0].imag() == doctest::Approx(1.0));
    CHECK(c.radii[1] == doctest::Approx(5.0));
    auto back = blowup_chart_inverse(c);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(back[i] - z[i]) < 1e-12);

    CHECK_THROWS_AS(blowup_chart({{0.0, 0.0}}, 1), MissingDirection);
    BlowupChart b = blowup_chart({{0.0, 0.0}}, 1, {{2.0, 0.0}});
    CHECK(b.radii[0] == 0.0);
    CHECK(b.directions[0].real() == doctest::Approx(1.0));

    std::vector<std::complex<double>> zr = {{0.75, 0.0}, {0.0, -0.5}};
    auto back2 = blowup_chart_inverse(blowup_chart(zr, 2));
    CHECK(back2[0] == zr[0]);
    CHECK(back2[1] == zr[1]);
}

TEST_CASE("curve JSON round trip") {
    nlohmann::json j = {{"punctures", {"inf", "1/2"}}, {"marked", {"0"}}, {"f", "1/(z-1/2)"}};
    CurveSpec s = CurveSpec::from_json(j);
    CHECK(s.punctures.size() == 2);
    auto j2 = s.to_json();
    CurveSpec s2 = CurveSpec::from_json(j2);
    CHECK(s2.marked.size() == 1);
    CHECK(rd_ranks(s) == rd_ranks(s2));
}
