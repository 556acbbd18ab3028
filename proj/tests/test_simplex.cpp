#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace xp;
using namespace xp::testing;

namespace {

// 1-d complexes on the line are used throughout the unit examples.
GeomComplex line_complex(const std::vector<std::vector<Rational>>& simplices_by_coords) {
    GeomComplex k(1);
    for (const auto& coords : simplices_by_coords) {
        std::vector<int> ids;
        for (const auto& c : coords) ids.push_back(k.add_vertex({c}));
        k.add_simplex(ids);
    }
    return k;
}

} // namespace

TEST_CASE("faces enumeration") {
    GeomComplex k(2);
    int a = k.add_vertex({Rational(0), Rational(0)});
    int b = k.add_vertex({Rational(1), Rational(0)});
    int c = k.add_vertex({Rational(0), Rational(1)});
    CHECK(GeomComplex::faces({a}).size() == 1);
    CHECK(GeomComplex::faces({a, b}).size() == 3);
    CHECK(GeomComplex::faces({a, b, c}).size() == 7);
}

TEST_CASE("complex validation") {
    SUBCASE("two segments sharing an endpoint: ok") {
        GeomComplex k = line_complex({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}});
        CHECK_FALSE(k.validate().has_value());
    }
    SUBCASE("crossing segments: violation") {
        GeomComplex k(2);
        int a = k.add_vertex({Rational(0), Rational(0)});
        int b = k.add_vertex({Rational(2), Rational(2)});
        int c = k.add_vertex({Rational(0), Rational(2)});
        int d = k.add_vertex({Rational(2), Rational(0)});
        k.add_simplex({a, b});
        k.add_simplex({c, d});
        CHECK(k.validate().has_value());
    }
    SUBCASE("closed triangle: ok") {
        GeomComplex k(2);
        int a = k.add_vertex({Rational(0), Rational(0)});
        int b = k.add_vertex({Rational(1), Rational(0)});
        int c = k.add_vertex({Rational(0), Rational(1)});
        k.add_simplex({a, b, c});
        GeomComplex cl = k.closure();
        CHECK(cl.simplices().size() == 7);
        CHECK_FALSE(cl.validate().has_value());
    }
    SUBCASE("vertex inside an edge: violation") {
        GeomComplex k(1);
        int a = k.add_vertex({Rational(0)});
        int b = k.add_vertex({Rational(2)});
        int m = k.add_vertex({Rational(1)});
        k.add_simplex({a, b});
        k.add_simplex({m});
        CHECK(k.validate().has_value());
    }
}

TEST_CASE("closure") {
    GeomComplex k = line_complex({{Rational(0), Rational(1)}});
    GeomComplex cl = k.closure();
    CHECK(cl.simplices().size() == 3);
    CHECK(cl.closure().simplices() == cl.simplices());
}

TEST_CASE("barycentric subdivision of the closed interval") {
    GeomComplex k = line_complex({{Rational(0)}, {Rational(1)}, {Rational(0), Rational(1)}});
    GeomComplex b = k.barycentric_subdivision();
    // expected: (0), (1), (1/2), (0,1/2), (1/2,1)
    CHECK(b.simplices().size() == 5);
    int half = b.find_vertex({Rational(1, 2)});
    REQUIRE(half >= 0);
    CHECK(b.has_simplex({half}));
    int zero = b.find_vertex({Rational(0)});
    REQUIRE(zero >= 0);
    VertexSet left = {std::min(zero, half), std::max(zero, half)};
    CHECK(b.has_simplex(left));
    CHECK_FALSE(b.validate().has_value());
}

TEST_CASE("subdivision of the open interval keeps only chains ending in K") {
    GeomComplex k = line_complex({{Rational(0), Rational(1)}});
    GeomComplex b = k.barycentric_subdivision();
    CHECK(b.simplices().size() == 3); // (1/2), (0,1/2), (1/2,1)
    CHECK(b.find_vertex({Rational(1, 2)}) >= 0);
    int zero = b.find_vertex({Rational(0)});
    if (zero >= 0) CHECK_FALSE(b.has_simplex({zero}));
}

TEST_CASE("subdivision of a single vertex is itself") {
    GeomComplex k = line_complex({{Rational(5)}});
    GeomComplex b = k.barycentric_subdivision();
    CHECK(b.simplices().size() == 1);
}

TEST_CASE("closed core") {
    SUBCASE("open interval has empty core") {
        GeomComplex k = line_complex({{Rational(0), Rational(1)}});
        CHECK(k.closed_core().empty());
    }
    SUBCASE("face-closed complex is its own core") {
        GeomComplex k = line_complex({{Rational(0), Rational(1)}}).closure();
        CHECK(k.closed_core().simplices() == k.simplices());
    }
    SUBCASE("core of the subdivided open interval is the barycenter") {
        GeomComplex k = line_complex({{Rational(0), Rational(1)}});
        GeomComplex cc = k.barycentric_subdivision().closed_core();
        REQUIRE(cc.simplices().size() == 1);
        VertexSet s = *cc.simplices().begin();
        REQUIRE(s.size() == 1);
        CHECK(cc.vertices()[s[0]] == Point{Rational(1, 2)});
    }
}

TEST_CASE("carrier lookup") {
    GeomComplex k = line_complex({{Rational(0)}, {Rational(1)}, {Rational(0), Rational(1)}});
    CHECK(k.carrier({Rational(1, 2)}).size() == 2);
    CHECK(k.carrier({Rational(0)}).size() == 1);
    CHECK_THROWS_AS(k.carrier({Rational(2)}), NotInPolyhedron);
}

TEST_CASE("retraction on the open interval") {
    GeomComplex k = line_complex({{Rational(0), Rational(1)}});
    Retraction r(k);
    CHECK(r.retract({Rational(1, 4)}) == Point{Rational(1, 2)});
    CHECK(r.retract({Rational(1, 2)}) == Point{Rational(1, 2)});
    CHECK(r.retract({Rational(9, 10)}) == Point{Rational(1, 2)});
    CHECK(r.homotopy({Rational(1, 4)}, Rational(0)) == Point{Rational(1, 4)});
    CHECK(r.homotopy({Rational(1, 4)}, Rational(1)) == Point{Rational(1, 2)});
    CHECK(r.homotopy({Rational(1, 4)}, Rational(1, 2)) == Point{Rational(3, 8)});
}

TEST_CASE("retraction fixes a face-closed complex pointwise") {
    GeomComplex k = line_complex({{Rational(0)}, {Rational(1)}, {Rational(0), Rational(1)}});
    Retraction r(k);
    for (long i = 0; i <= 8; ++i) {
        Point x = {Rational(i, 8)};
        CHECK(r.retract(x) == x);
    }
}

TEST_CASE("retraction suite on random complexes") {
    std::mt19937_64 rng(99);
    int complexes = 0;
    while (complexes < 12) {
        GeomComplex k = random_complex(rng, 12);
        if (k.empty()) continue;
        ++complexes;
        Retraction r(k);
        CHECK_FALSE(r.subdivision().validate().has_value());
        CHECK_FALSE(r.core().empty()); // non-empty K has non-empty core of the subdivision

        for (int pt = 0; pt < 4; ++pt) {
            auto [x, carrier_in_k] = random_point_in(rng, k);
            Point rx = r.retract(x);
            // idempotence, exactly
            CHECK(r.retract(rx) == rx);
            // lands in the core
            CHECK(r.core().member(rx));
            // H(x,0) = x, H(x,1) = r(x)
            CHECK(r.homotopy(x, Rational(0)) == x);
            CHECK(r.homotopy(x, Rational(1)) == rx);
            // segment containment: carrier of H(x,t) equals carrier of x (or a face)
            VertexSet cx = r.subdivision().carrier(x);
            for (int tt = 0; tt < 10; ++tt) {
                Rational t = random_rational01(rng);
                VertexSet ct = r.subdivision().carrier(r.homotopy(x, t));
                bool face = std::includes(cx.begin(), cx.end(), ct.begin(), ct.end());
                CHECK(face);
            }
        }
    }
}

TEST_CASE("polyhedron is preserved by subdivision") {
    std::mt19937_64 rng(123);
    for (int round = 0; round < 5; ++round) {
        GeomComplex k = random_complex(rng, 10);
        if (k.empty()) continue;
        GeomComplex b = k.barycentric_subdivision();
        for (int pt = 0; pt < 20; ++pt) {
            auto [x, s] = random_point_in(rng, k);
            CHECK(b.member(x));
        }
        // points slightly outside stay outside
        CHECK(b.member({Rational(50), Rational(50), Rational(50)}) ==
              k.member({Rational(50), Rational(50), Rational(50)}));
    }
}

TEST_CASE("core monotonicity for subcomplexes") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 8; ++round) {
        GeomComplex k = random_complex(rng, 10);
        if (k.empty()) continue;
        // L: drop some simplices
        GeomComplex l(3);
        size_t keep = 0;
        for (const auto& s : k.simplices()) {
            if (keep++ % 2 == 0) continue;
            std::vector<int> ids;
            for (int v : s) ids.push_back(l.add_vertex(k.vertices()[v]));
            l.add_simplex(ids);
        }
        if (l.empty()) continue;
        GeomComplex ck = k.barycentric_subdivision().closed_core();
        GeomComplex cl = l.barycentric_subdivision().closed_core();
        CHECK(ck.contains_subcomplex(cl));
    }
}

TEST_CASE("complex JSON round trip") {
    GeomComplex k = line_complex({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}});
    auto j = k.to_json();
    GeomComplex back = GeomComplex::from_json(j);
    CHECK(back.simplices().size() == k.simplices().size());
    CHECK(back.ambient() == 1);
    CHECK(back.contains_subcomplex(k));
}
