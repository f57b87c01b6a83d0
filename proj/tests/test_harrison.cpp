#include <random>

#include "adelic/errors.hpp"
#include "adelic/harrison.hpp"
#include "adelic/modular.hpp"
#include "adelic/sampling.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace adelic;

namespace {

Idele idele_with(FieldCtx& ctx, const std::map<Point, int>& vals, std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    return sampling::idele_with_valuations(ctx, rng, vals, 8);
}

ExtensionClass cls(std::uint32_t p, const std::map<Point, std::int64_t>& v) { return {ValuationVector(p, v), std::nullopt}; }

ValuationVector random_vector(std::uint32_t p, const std::vector<Point>& pool, std::mt19937_64& rng) {
    ValuationVector v(p);
    for (const auto& x : pool)
        if (rng() % 2) v.set(x, static_cast<std::int64_t>(rng() % p));
    return v;
}

std::vector<std::uint32_t> dense(const ValuationVector& v, const std::vector<Point>& pool) {
    std::vector<std::uint32_t> out;
    for (const auto& x : pool) out.push_back(v[x]);
    return out;
}

}  // namespace

TEST_CASE("classification examples") {
    FieldCtx ctx(7, 3);
    const Idele t = idele_with(ctx, {{"x0", 1}});
    const ExtensionClass c = classify(t, CyclicSubgroup(GlobalAutomorphism::kummer(t, 3)), Character(3, 1));
    CHECK(c == cls(3, {{"x0", 1}}));
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->t == t);

    const ExtensionClass tw = classify(t, CyclicSubgroup(GlobalAutomorphism::kummer(t, 3, 2)), Character(3, 1));
    CHECK(tw == cls(3, {{"x0", 2}}));

    const Idele unram = idele_with(ctx, {{"x0", 3}, {"x1", -6}});
    CHECK(classify(unram, CyclicSubgroup(GlobalAutomorphism::kummer(unram, 3)), Character(3, 1)).vec.empty());

    const Idele t1 = idele_with(ctx, {{"x0", 1}});
    std::map<Point, LocalAutomorphism> ex{{"x0", LocalAutomorphism::ramified(3, 0)}};
    try {
        classify(t1, CyclicSubgroup(GlobalAutomorphism({2, 3, 1}, ex)), Character(3, 1));
        FAIL("expected NotGalois");
    } catch (const DomainError& e) {
        CHECK(std::string(e.code()) == "NotGalois");
    }
}

TEST_CASE("the class is trivial exactly when nothing ramifies") {
    std::mt19937_64 rng(17);
    const auto pool = sampling::point_pool(6);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(11, p);
        for (int i = 0; i < 40; ++i) {
            const Idele t = sampling::idele(ctx, rng, pool, 3, 6);
            const CyclicSubgroup G(sampling::transitive_generator(t, p, rng, {pool[4]}));
            const ExtensionClass c = classify(t, G, Character(p, 1));
            CHECK(c.vec.empty() == ramified_points(t, p).empty());
            CHECK(classify(t, CyclicSubgroup(GlobalAutomorphism::kummer(t, p)), Character(p, 1)).vec ==
                  valuation_vector(t, p));
        }
    }
}

TEST_CASE("group operations examples") {
    CHECK(product(cls(3, {{"x0", 1}}), cls(3, {{"x0", 2}})) == trivial_class(3));
    const ExtensionClass c = cls(3, {{"x0", 1}, {"x1", 2}});
    CHECK(product(c, trivial_class(3)) == c);
    CHECK(inverse(c) == cls(3, {{"x0", 2}, {"x1", 1}}));

    // witnesses: t · t^2 = t^3 is a cube
    FieldCtx ctx(7, 3);
    const Idele t = idele_with(ctx, {{"x0", 1}});
    CHECK(is_pth_power(t * t.pow(2), 3));
    CHECK(kummer_map(t * t.pow(2), 3) == trivial_class(3));
}

TEST_CASE("group axioms and the homomorphism property") {
    std::mt19937_64 rng(4242);
    const auto pool = sampling::point_pool(6);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(7, p);
        for (int i = 0; i < 500 / 3 + 1; ++i) {
            const ExtensionClass a{random_vector(p, pool, rng), {}}, b{random_vector(p, pool, rng), {}},
                c{random_vector(p, pool, rng), {}};
            CHECK(product(product(a, b), c) == product(a, product(b, c)));
            CHECK(product(a, b) == product(b, a));
            CHECK(product(a, inverse(a)) == trivial_class(p));
            CHECK(product(trivial_class(p), a) == a);

            const Idele s = sampling::idele(ctx, rng, pool, 4, 6);
            const Idele t = sampling::idele(ctx, rng, pool, 4, 6);
            CHECK(kummer_map(s * t, p) == product(kummer_map(s, p), kummer_map(t, p)));
        }
    }
}

TEST_CASE("equivariant isomorphism and conjugacy examples") {
    CHECK(equivariant_isomorphic(cls(3, {{"x0", 1}}), cls(3, {{"x0", 1}})));
    CHECK_FALSE(equivariant_isomorphic(cls(3, {{"x0", 1}}), cls(3, {{"x0", 2}})));
    CHECK(equivariant_isomorphic(trivial_class(3), trivial_class(3)));

    const ExtensionClass a = cls(3, {{"x0", 1}, {"x1", 2}}), b = cls(3, {{"x0", 2}, {"x1", 1}});
    CHECK(conjugate(a, b));
    CHECK(conjugating_unit(a, b) == std::optional<std::uint32_t>(2));
    CHECK_FALSE(conjugate(cls(3, {{"x0", 1}, {"x1", 1}}), a));
    CHECK_FALSE(conjugating_unit(cls(3, {{"x0", 1}, {"x1", 1}}), a).has_value());
    CHECK(valuation_class(b).canonical() == ValuationVector(3, {{"x0", 1}, {"x1", 2}}));
    CHECK(valuation_class(trivial_class(3)).trivial());
}

TEST_CASE("isomorphism agrees with the p-th power criterion on witnesses") {
    std::mt19937_64 rng(90);
    const auto pool = sampling::point_pool(5);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(7, p);
        for (int i = 0; i < 50; ++i) {
            const ExtensionClass a{random_vector(p, pool, rng), {}};
            const ExtensionClass b = i % 3 == 0 ? a : ExtensionClass{random_vector(p, pool, rng), {}};
            const Idele q = kummer_inverse(a, ctx, 8) / kummer_inverse(b, ctx, 8);
            CHECK(equivariant_isomorphic(a, b) == is_pth_power(q, p));
        }
    }
}

TEST_CASE("canonical forms match orbit enumeration") {
    std::mt19937_64 rng(5150);
    const auto pool = sampling::point_pool(4);
    for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
        for (int i = 0; i < 100; ++i) {
            const ValuationVector u = random_vector(p, pool, rng), v = random_vector(p, pool, rng);
            const ValuationClass cu(u);
            CHECK(ValuationClass(cu.canonical()) == cu);
            if (!u.empty()) CHECK(cu.canonical().entries().begin()->second == 1);
            const auto orbit = oracle::scalar_orbit(dense(u, pool), p);
            const bool same = orbit.count(dense(v, pool)) > 0;
            CHECK((cu == ValuationClass(v)) == same);
            CHECK(conjugate({u, {}}, {v, {}}) == same);
            CHECK(conjugating_unit({u, {}}, {v, {}}).has_value() == same);
            const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % (p - 1));
            CHECK(ValuationClass(u.scaled(k)) == cu);
        }
    }
}

TEST_CASE("algebra isomorphism examples") {
    FieldCtx ctx(7, 3);
    CHECK(algebra_isomorphic(idele_with(ctx, {{"x0", 1}}), idele_with(ctx, {{"x0", 4}}, 2), 3));
    CHECK_FALSE(algebra_isomorphic(idele_with(ctx, {{"x0", 1}}), idele_with(ctx, {{"x1", 1}}), 3));
    std::mt19937_64 rng(3);
    const auto pool = sampling::point_pool(5);
    for (int i = 0; i < 30; ++i) {
        const Idele t = sampling::idele(ctx, rng, pool, 4, 6);
        const Idele u = sampling::idele(ctx, rng, pool, 4, 6);
        // unit factor: valuations divisible by 3
        const Idele w = sampling::idele(ctx, rng, pool, 4, 6, 0, 0) * u.pow(3);
        CHECK(algebra_isomorphic(t, w * t, 3));
        CHECK(algebra_isomorphic(t, u, 3) == (ramified_points(t, 3) == ramified_points(u, 3)));
    }
    // composite rank: e_x = 6 / gcd(6, υ)
    CHECK(algebra_isomorphic(idele_with(ctx, {{"x0", 2}}), idele_with(ctx, {{"x0", 4}}), 6));
    CHECK_FALSE(algebra_isomorphic(idele_with(ctx, {{"x0", 2}}), idele_with(ctx, {{"x0", 3}}), 6));
}

TEST_CASE("kummer map round trip") {
    std::mt19937_64 rng(7);
    const auto pool = sampling::point_pool(6);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(7, p);
        for (int i = 0; i < 100; ++i) {
            const ExtensionClass c{random_vector(p, pool, rng), {}};
            CHECK(kummer_map(kummer_inverse(c, ctx, 8), p) == c);
        }
        CHECK(kummer_inverse(trivial_class(p), ctx, 8) == Idele(ctx, 8));
        const Idele t = sampling::idele(ctx, rng, pool, 5, 8);
        CHECK(kummer_map(t.pow(p), p) == trivial_class(p));
    }
}

TEST_CASE("changing the character scales the class") {
    std::mt19937_64 rng(11);
    const auto pool = sampling::point_pool(6);
    for (std::uint32_t p : {3U, 5U}) {
        FieldCtx ctx(11, p);
        for (int i = 0; i < 20; ++i) {
            const Idele t = sampling::idele(ctx, rng, pool, 5, 6);
            const CyclicSubgroup G(sampling::transitive_generator(t, p, rng, {pool[5]}));
            const std::int64_t s = 1 + static_cast<std::int64_t>(rng() % (p - 1));
            const ExtensionClass base = classify(t, G, Character(p, s));
            for (std::int64_t b = 1; b < p; ++b)
                CHECK(classify(t, G, Character(p, s * b)).vec == base.vec.scaled(b));
        }
    }
}

TEST_CASE("conjugacy of classes agrees with equivalence of subgroups") {
    std::mt19937_64 rng(100);
    const auto pool = sampling::point_pool(6);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(11, p);
        for (int i = 0; i < 34; ++i) {
            const Idele t = sampling::idele(ctx, rng, pool, 4, 6);
            const CyclicSubgroup g1(sampling::transitive_generator(t, p, rng, {}));
            const CyclicSubgroup g2(sampling::transitive_generator(t, p, rng, {}));
            const Character chi(p, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
            CHECK(conjugate(classify(t, g1, chi), classify(t, g2, chi)) == galois_equivalent(g1, g2, t).has_value());
        }
    }
}

TEST_CASE("stratification over two points") {
    const std::vector<Point> pts{"x0", "x1"};
    const auto classes = classes_supported_on(pts, 3);
    std::set<std::set<std::vector<std::uint32_t>>> orbits;
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
            orbits.insert(a == 0 && b == 0 ? std::set<std::vector<std::uint32_t>>{{0, 0}} : oracle::scalar_orbit({a, b}, 3));
    CHECK(orbits.size() == 5);
    CHECK(classes.size() == orbits.size());
    CHECK(classes_supported_on({"x0", "x1", "x2"}, 5).size() == 1 + (125 - 1) / 4);
}
