#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tfan/polyhedron.hpp"

using namespace tfan;

namespace {

Polyhedron interval(const Rat& lo, const Rat& hi) {
    return Polyhedron::make({{lo}, {hi}}, {}, 1);
}

Polyhedron ray_left(const Rat& from) { return Polyhedron::make({{from}}, {{Int(-1)}}, 1); }
Polyhedron ray_right(const Rat& from) { return Polyhedron::make({{from}}, {{Int(1)}}, 1); }

}  // namespace

TEST_CASE("minkowski sums in one dimension") {
    // neutral element: the tailcone itself
    Polyhedron a = ray_right(Rat(-1, 2));
    Polyhedron zero_cone = ray_right(0);
    CHECK(a.minkowski(zero_cone) == a);

    CHECK(interval(0, 1).minkowski(interval(0, 1)) == interval(0, 2));
    CHECK(ray_left(Rat(-1, 2)).minkowski(ray_left(0)) == ray_left(Rat(-1, 2)));

    // empty absorbs
    CHECK(a.minkowski(Polyhedron::empty(1)).is_empty());
}

TEST_CASE("intersections") {
    Polyhedron a = interval(Rat(-1, 2), 0);
    CHECK(a.intersect(a) == a);
    CHECK(a.intersect(ray_right(0)) == Polyhedron::point({Rat(0)}));
    CHECK(ray_right(0).intersect(ray_left(0)) == Polyhedron::point({Rat(0)}));
    CHECK(interval(0, 1).intersect(interval(2, 3)).is_empty());
}

TEST_CASE("min_support") {
    Polyhedron a = interval(Rat(-1, 2), 0);
    CHECK(*a.min_support({Rat(0)}) == 0);
    CHECK(*a.min_support({Rat(2)}) == -1);
    CHECK(!ray_right(0).min_support({Rat(-1)}).has_value());
}

TEST_CASE("face in direction") {
    Cone quadrant = Cone::from_generators({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2);
    CHECK(quadrant.face_in_direction({Rat(0), Rat(0)}) == quadrant);
    Cone f = quadrant.face_in_direction({Rat(1), Rat(0)});
    CHECK(f == Cone::from_generators({{Int(0), Int(1)}}, 2));
    Cone half = Cone::from_generators({{Int(1)}}, 1);
    CHECK(half.face_in_direction({Rat(1)}) == Cone(1));
    CHECK_THROWS(quadrant.face_in_direction({Rat(-1), Rat(0)}));
}

TEST_CASE("lattice points") {
    Polyhedron seg = interval(0, 3);
    auto pts = seg.lattice_points();
    REQUIRE(pts.size() == 4);
    for (long k = 0; k <= 3; ++k) CHECK(pts[k] == ZVec{Int(k)});

    // hexagon with 19 lattice points
    std::vector<QVec> hex = {{Rat(0), Rat(-2)}, {Rat(2), Rat(-2)}, {Rat(2), Rat(0)},
                             {Rat(0), Rat(2)},  {Rat(-2), Rat(2)}, {Rat(-2), Rat(0)}};
    Polyhedron h = Polyhedron::make(hex, {}, 2);
    CHECK(h.lattice_points().size() == 19);

    Polyhedron pt = Polyhedron::point({Rat(5), Rat(7)});
    auto single = pt.lattice_points();
    REQUIRE(single.size() == 1);
    CHECK(single[0] == ZVec{Int(5), Int(7)});

    CHECK_THROWS(ray_right(0).lattice_points());
}

TEST_CASE("vertex arithmetic") {
    auto va = vertex_arith({Rat(2), Rat(4)});
    CHECK(va.mu == 1);
    CHECK(*va.eps == 2);
    CHECK(*va.n_v == ZVec{Int(1), Int(2)});

    auto vb = vertex_arith({Rat(-1, 2)});
    CHECK(vb.mu == 2);
    CHECK(*vb.eps == 1);
    CHECK(*vb.n_v == ZVec{Int(-1)});

    auto vc = vertex_arith({Rat(2, 3)});
    CHECK(vc.mu == 3);
    CHECK(*vc.eps == 2);
    CHECK(*vc.n_v == ZVec{Int(1)});

    auto vz = vertex_arith({Rat(0), Rat(0)});
    CHECK(vz.mu == 1);
    CHECK(!vz.eps.has_value());
}

TEST_CASE("vertex arithmetic invariants on random rationals") {
    oracle::Rng rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        QVec v = {rng.rational(-4, 4, 6), rng.rational(-4, 4, 6)};
        if (is_zero(v)) continue;
        auto va = vertex_arith(v);
        // mu*v integral, (mu-1)*v not, gcd(mu, eps) = 1
        for (const auto& x : v) CHECK(is_integral(x * Rat(va.mu)));
        if (va.mu > 1) {
            bool all = true;
            for (const auto& x : v)
                if (!is_integral(x * Rat(va.mu - 1))) all = false;
            CHECK(!all);
        }
        CHECK(gcd(va.mu, *va.eps) == 1);
        for (size_t i = 0; i < v.size(); ++i)
            CHECK(Rat(va.mu) * v[i] == Rat(*va.eps) * Rat((*va.n_v)[i]));
    }
}

TEST_CASE("face test") {
    Polyhedron a = interval(Rat(-1, 2), 0);
    CHECK(a.is_face_of_me(a));
    CHECK(ray_right(0).is_face_of_me(Polyhedron::point({Rat(0)})));
    CHECK(!a.is_face_of_me(Polyhedron::point({Rat(-1, 4)})));
    CHECK(a.is_face_of_me(Polyhedron::empty(1)));
    CHECK_THROWS(a.is_face_of_me(interval(0, 1)));
}

TEST_CASE("double description round trip is canonical") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<QVec> pts;
        int n = (int)rng.integer(1, 6);
        for (int i = 0; i < n; ++i)
            pts.push_back({rng.rational(-3, 3, 4), rng.rational(-3, 3, 4)});
        std::vector<ZVec> rays;
        if (rng.integer(0, 1)) rays.push_back({Int(rng.integer(0, 1) ? 1 : -1), Int(0)});
        Polyhedron p = Polyhedron::make(pts, rays, 2);
        // rebuilding from the canonical data is the identity
        Polyhedron q = Polyhedron::make(p.vertices(), p.rays(), 2);
        CHECK(p == q);
        // H -> V -> H round trip
        Polyhedron r = Polyhedron::from_hrep(p.inequalities(), p.equations(), 2);
        CHECK(p == r);
    }
}

TEST_CASE("minkowski support additivity against brute force") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<QVec> apts, bpts;
        for (int i = 0, n = (int)rng.integer(1, 5); i < n; ++i)
            apts.push_back({rng.rational(-3, 3, 4), rng.rational(-3, 3, 4)});
        for (int i = 0, n = (int)rng.integer(1, 5); i < n; ++i)
            bpts.push_back({rng.rational(-3, 3, 4), rng.rational(-3, 3, 4)});
        Polyhedron a = Polyhedron::make(apts, {}, 2);
        Polyhedron b = Polyhedron::make(bpts, {}, 2);
        Polyhedron sum = a.minkowski(b);

        QVec u = {Rat(rng.integer(-3, 3)), Rat(rng.integer(-3, 3))};
        CHECK(*sum.min_support(u) == *a.min_support(u) + *b.min_support(u));

        // and against the all-pairs oracle
        std::vector<QVec> all;
        for (const auto& x : apts)
            for (const auto& y : bpts) all.push_back(add(x, y));
        CHECK(*sum.min_support(u) == oracle::min_over(all, u));
    }
}

TEST_CASE("lattice points agree with the hull-membership oracle") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<QVec> pts;
        for (int i = 0, n = (int)rng.integer(1, 6); i < n; ++i)
            pts.push_back({rng.rational(-4, 4, 3), rng.rational(-4, 4, 3)});
        Polyhedron p = Polyhedron::make(pts, {}, 2);
        CHECK(p.lattice_points() == oracle::lattice_points_2d(pts));
    }
}

TEST_CASE("faces produced by directions are faces") {
    std::vector<Cone> cones = {
        Cone::from_generators({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2),
        Cone::from_generators({{Int(1), Int(0)}, {Int(-1), Int(2)}}, 2),
        Cone::from_generators({{Int(1), Int(1), Int(0)}, {Int(1), Int(0), Int(1)},
                               {Int(0), Int(1), Int(1)}},
                              3),
    };
    for (const auto& c : cones) {
        ConeDesc dual = c.dual_rays();
        for (const auto& u : dual.rays) {
            Cone f = c.face_in_direction(to_qvec(u));
            CHECK(c.has_face(f));
        }
        CHECK(c.has_face(c));
        CHECK(c.has_face(Cone(c.ambient_dim())));
    }
}

TEST_CASE("polyhedra with lines are rejected") {
    CHECK_THROWS(Polyhedron::make({{Rat(0)}}, {{Int(1)}, {Int(-1)}}, 1));
    CHECK_THROWS(Cone::from_generators({{Int(1), Int(0)}, {Int(-1), Int(0)}}, 2));
}

TEST_CASE("facets of a cube corner") {
    Polyhedron tri = Polyhedron::make({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {}, 2);
    auto fs = tri.facets();
    CHECK(fs.size() == 3);
    for (const auto& f : fs) CHECK(tri.is_face_of_me(f));
}
