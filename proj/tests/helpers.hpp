#ifndef XP_TEST_HELPERS_HPP
#define XP_TEST_HELPERS_HPP

#include <random>

#include "xp/simplex.hpp"

namespace xp::testing {

// Kuhn triangulation of the unit cube [0,1]^3 shifted to a grid cell:
// six tetrahedra, one per permutation of the axes. All faces of all cells
// of a grid meet in common faces, so any subset of the face set is a
// valid complex.
inline GeomComplex kuhn_grid_faces(int cells_per_axis) {
    GeomComplex k(3);
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int cx = 0; cx < cells_per_axis; ++cx)
        for (int cy = 0; cy < cells_per_axis; ++cy)
            for (int cz = 0; cz < cells_per_axis; ++cz)
                for (auto& perm : perms) {
                    std::vector<int> ids;
                    Point p = {Rational(cx), Rational(cy), Rational(cz)};
                    ids.push_back(k.add_vertex(p));
                    for (int step = 0; step < 3; ++step) {
                        p[perm[step]] += 1;
                        ids.push_back(k.add_vertex(p));
                    }
                    k.add_simplex(ids);
                }
    return k.closure();
}

// Random subset of at most `max_simplices` open simplices of a Kuhn grid.
inline GeomComplex random_complex(std::mt19937_64& rng, int max_simplices) {
    static const GeomComplex pool = kuhn_grid_faces(2);
    std::vector<VertexSet> all(pool.simplices().begin(), pool.simplices().end());
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> count(1, max_simplices);
    GeomComplex k(3);
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const VertexSet& s = all[pick(rng)];
        std::vector<int> ids;
        for (int v : s) ids.push_back(k.add_vertex(pool.vertices()[v]));
        if (!k.has_simplex([&] {
                VertexSet t = ids;
                std::sort(t.begin(), t.end());
                return t;
            }()))
            k.add_simplex(ids);
    }
    return k;
}

// Random rational point inside a random open simplex of K, plus its carrier.
inline std::pair<Point, VertexSet> random_point_in(std::mt19937_64& rng, const GeomComplex& k) {
    std::vector<VertexSet> all(k.simplices().begin(), k.simplices().end());
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    const VertexSet& s = all[pick(rng)];
    std::uniform_int_distribution<long> w(1, 7);
    std::vector<Rational> weights;
    Rational total(0);
    for (size_t i = 0; i < s.size(); ++i) {
        weights.emplace_back(w(rng));
        total += weights.back();
    }
    Point x(k.ambient(), Rational(0));
    for (size_t i = 0; i < s.size(); ++i)
        for (int j = 0; j < k.ambient(); ++j)
            x[j] += weights[i] / total * k.vertices()[s[i]][j];
    return {x, s};
}

inline Rational random_rational01(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 62);
    return Rational(num(rng), 63);
}

} // namespace xp::testing

#endif
