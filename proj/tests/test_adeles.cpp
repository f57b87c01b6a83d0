#include <random>

#include "adelic/adeles.hpp"
#include "adelic/errors.hpp"
#include "adelic/sampling.hpp"
#include "doctest.h"

using namespace adelic;

namespace {

LaurentSeries parse(const FieldCtx& ctx, const char* text, std::size_t prec = 8) {
    return LaurentSeries::parse(ctx, text, prec);
}

}  // namespace

TEST_CASE("points order lexicographically with infinity last") {
    CHECK(Point("0") < Point("1"));
    CHECK(Point("10") < Point("2"));
    CHECK(Point("zzz") < Point::infinity());
    CHECK(Point("inf") == Point::infinity());
    CHECK(Point("inf").label() == "∞");
    CHECK(Point::infinity().is_infinity());
}

TEST_CASE("idele components and pruning") {
    FieldCtx ctx(7, 3);
    Idele t(ctx, 8);
    t.set("a", parse(ctx, "z"));
    t.set("b", parse(ctx, "1"));
    CHECK(t.exceptions().size() == 1);
    CHECK(t.at("b") == t.default_value());
    CHECK(t.at("a").valuation() == 1);
    CHECK_THROWS_AS(t.set("c", LaurentSeries::zero(ctx)), DomainError);
    CHECK_THROWS_AS(Idele(parse(ctx, "z")), DomainError);
    CHECK((t * t.inverse()) == Idele(ctx, 8));
}

TEST_CASE("valuation vector examples") {
    FieldCtx ctx(7, 3);
    Idele t(ctx, 8);
    t.set("x0", parse(ctx, "z"));
    t.set("x1", parse(ctx, "z^2*(1 + 1*z)"));
    const ValuationVector v = valuation_vector(t, 3);
    CHECK(v == ValuationVector(3, {{"x0", 1}, {"x1", 2}}));
    CHECK(valuation_vector(Idele(ctx), 3).empty());

    // oracle: square each component and read the leading exponent
    const Idele sq = t.pow(2);
    CHECK(sq.at("x0").valuation() == 2);
    CHECK(sq.at("x1").valuation() == 4);
    CHECK(valuation_vector(sq, 3) == ValuationVector(3, {{"x0", 2}, {"x1", 1}}));
}

TEST_CASE("ramification profile examples") {
    FieldCtx ctx(7, 5);
    Idele t(ctx, 4);
    t.set("x0", parse(ctx, "z^2", 4));
    t.set("x1", parse(ctx, "z^3", 4));
    const RamProfile r = ram_profile(t, 6);
    CHECK(r.e.at("x0") == 3);
    CHECK(r.e.at("x1") == 2);

    Idele u(ctx, 4);
    u.set("x0", parse(ctx, "z^5", 4));
    u.set("x1", parse(ctx, "2 + z", 4));
    CHECK(ram_profile(u, 5).e.empty());

    Idele w(ctx, 4);
    w.set("x0", parse(ctx, "z^3", 4));
    CHECK(ram_profile(w, 5).e == std::map<Point, std::uint64_t>{{"x0", 5}});
}

TEST_CASE("ramification profile rejects zero components and ramified defaults") {
    FieldCtx ctx(7, 3);
    Adele a(LaurentSeries::constant(ctx.one(), 4));
    a.set("x0", LaurentSeries::zero(ctx));
    CHECK_THROWS_AS(ram_profile(a, 3), DomainError);
    Adele b(parse(ctx, "z", 4));
    CHECK_THROWS_AS(ram_profile(b, 3), DomainError);
    Adele c(parse(ctx, "z^3", 4));
    CHECK(ram_profile(c, 3).e.empty());
    CHECK_THROWS_AS(Adele(parse(ctx, "z^-1", 4)), DomainError);
}

TEST_CASE("p-th powers of ideles") {
    FieldCtx ctx(7, 3);
    Idele t(ctx, 8);
    t.set("x0", parse(ctx, "z"));
    CHECK_FALSE(is_pth_power(t, 3));
    CHECK_THROWS_AS(pth_root(t, ctx), DomainError);

    std::mt19937_64 rng(1);
    const auto pool = sampling::point_pool(6);
    for (int i = 0; i < 20; ++i) {
        const Idele s = sampling::idele(ctx, rng, pool, 4, 8);
        const Idele cube = s.pow(3);
        CHECK(is_pth_power(cube, 3));
        const Idele root = pth_root(cube, ctx);
        CHECK(root.pow(3) == cube);
    }
}

TEST_CASE("valuation vector is a homomorphism and its kernel consists of p-th powers") {
    std::mt19937_64 rng(77);
    const auto pool = sampling::point_pool(8);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(7, p);
        for (int i = 0; i < 500 / 3; ++i) {
            const Idele a = sampling::idele(ctx, rng, pool, 6, 12);
            const Idele b = sampling::idele(ctx, rng, pool, 6, 12);
            CHECK(valuation_vector(a * b, p) == valuation_vector(a, p) + valuation_vector(b, p));
            CHECK(valuation_vector(a.inverse(), p) == -valuation_vector(a, p));

            // kernel element with valuations divisible by p, not built as a p-th power
            std::map<Point, int> vals;
            for (const auto& [x, v] : a.exceptions()) vals[x] = static_cast<int>(p) * (v.valuation() % 3);
            const Idele k = sampling::idele_with_valuations(ctx, rng, vals, 12);
            REQUIRE(is_pth_power(k, p));
            CHECK(pth_root(k, ctx).pow(p) == k);
        }
    }
}

TEST_CASE("ramified locus equals the support of the valuation vector for prime rank") {
    std::mt19937_64 rng(5);
    const auto pool = sampling::point_pool(6);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(11, p);
        for (int i = 0; i < 50; ++i) {
            const Idele t = sampling::idele(ctx, rng, pool, 5, 4, -7, 7);
            std::set<Point> ram, supp;
            const RamProfile prof = ram_profile(t, p);
            for (const auto& [x, e] : prof.e) {
                CHECK(e == p);
                ram.insert(x);
            }
            const ValuationVector vec = valuation_vector(t, p);
            for (const auto& [x, v] : vec.entries()) supp.insert(x);
            CHECK(ram == supp);
        }
    }
}
