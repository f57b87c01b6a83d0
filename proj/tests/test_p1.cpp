#include <random>

#include "adelic/errors.hpp"
#include "adelic/modular.hpp"
#include "adelic/p1.hpp"
#include "doctest.h"

using namespace adelic;

namespace {

RationalFunction rf(const FieldCtx& ctx, std::initializer_list<std::pair<std::int64_t, std::int64_t>> fs,
                      std::int64_t c = 1) {
    std::vector<std::pair<FieldElem, std::int64_t>> out;
    for (auto [r, v] : fs) out.emplace_back(ctx.elem(r), v);
    return RationalFunction(ctx.elem(c), std::move(out));
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

// f(a + z) for a polynomial f, by multiplying out (z + (a - r))^v
std::vector<FieldElem> taylor(const RationalFunction& f, const FieldElem& a) {
    const FieldCtx& ctx = a.ctx();
    std::vector<FieldElem> acc{f.constant()};
    for (const auto& [r, v] : f.factors())
        for (std::int64_t k = 0; k < v; ++k) {
            std::vector<FieldElem> next(acc.size() + 1, ctx.zero());
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i] * (a - r);
                next[i + 1] += acc[i];
            }
            acc = std::move(next);
        }
    return acc;
}

RationalFunction random_function(FieldCtx& ctx, std::mt19937_64& rng, int lo, int hi) {
    std::vector<std::pair<FieldElem, std::int64_t>> fs;
    std::set<std::uint32_t> used;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
        const auto r = static_cast<std::uint32_t>(rng() % ctx.ell());
        std::int64_t v = 0;
        while (v == 0) v = lo + static_cast<std::int64_t>(rng() % (hi - lo + 1));
        if (used.insert(r).second) fs.emplace_back(ctx.elem(r), v);
    }
    return RationalFunction(ctx.elem(1 + static_cast<std::int64_t>(rng() % (ctx.ell() - 1))), std::move(fs));
}

}  // namespace

TEST_CASE("divisor examples") {
    FieldCtx ctx(7, 3);
    CHECK(divisor(rf(ctx, {{0, 1}, {1, 2}})) == Divisor{{"0", 1}, {"1", 2}, {"∞", -3}});
    CHECK(divisor(rf(ctx, {}, 5)).empty());
    CHECK(divisor(rf(ctx, {{2, 1}, {3, 1}, {4, 1}})) == Divisor{{"2", 1}, {"3", 1}, {"4", 1}, {"∞", -3}});
    CHECK(divisor(rf(ctx, {{2, 1}, {3, -1}})) == Divisor{{"2", 1}, {"3", -1}});
    CHECK_THROWS_AS(rf(ctx, {{2, 1}, {2, 3}}), ParseError);
    CHECK_THROWS_AS(rf(ctx, {{2, 0}}), ParseError);
    CHECK_THROWS_AS(rf(ctx, {{2, 1}}, 0), ParseError);
}

TEST_CASE("germ examples") {
    FieldCtx ctx(7, 3);
    const RationalFunction x = rf(ctx, {{0, 1}});
    CHECK(germ_at(x, ctx.zero(), 8) == LaurentSeries::monomial(ctx.one(), 1, 8));
    CHECK(germ_at_infinity(x, 8) == LaurentSeries::monomial(ctx.one(), -1, 8));

    const RationalFunction f = rf(ctx, {{0, 1}, {1, 2}});
    const LaurentSeries g = germ_at(f, ctx.one(), 8);
    CHECK(g.valuation() == 2);
    CHECK(g.leading() == ctx.one());
    // x(x-1)^2 at x = 1 + z is z^2 + z^3
    CHECK(g.coeff(3) == ctx.one());
    CHECK(g.coeff(4) == ctx.zero());

    const Idele t = germ_idele(f, ctx, 8);
    for (const auto& [pt, v] : divisor(f)) CHECK(t.at(pt).valuation() == v);
    CHECK(t.exceptions().size() == divisor(f).size());
}

TEST_CASE("germs of polynomials match Taylor expansion") {
    std::mt19937_64 rng(1);
    FieldCtx ctx(11, 3);
    for (int i = 0; i < 50; ++i) {
        const RationalFunction f = random_function(ctx, rng, 1, 4);
        const FieldElem a = ctx.elem(static_cast<std::int64_t>(rng() % 11));
        const auto expected = taylor(f, a);
        const LaurentSeries g = germ_at(f, a, 20);
        for (std::size_t k = 0; k < expected.size(); ++k) CHECK(g.coeff(static_cast<long>(k)) == expected[k]);
        for (std::size_t k = expected.size(); k < 20; ++k) CHECK(g.coeff(static_cast<long>(k)).is_zero());
    }
}

TEST_CASE("germ valuations are additive and reciprocal germs invert") {
    std::mt19937_64 rng(2);
    FieldCtx ctx(13, 5);
    for (int i = 0; i < 100; ++i) {
        const RationalFunction f = random_function(ctx, rng, -6, 6), g = random_function(ctx, rng, -6, 6);
        const RationalFunction fg = f * g;
        const Idele tf = germ_idele(f, ctx, 8), tg = germ_idele(g, ctx, 8), tfg = germ_idele(fg, ctx, 8);
        std::set<Point> pts;
        for (const auto* t : {&tf, &tg, &tfg})
            for (const auto& [x, _] : t->exceptions()) pts.insert(x);
        for (const auto& x : pts) CHECK(tfg.at(x).valuation() == tf.at(x).valuation() + tg.at(x).valuation());
        CHECK(equal_within(germ_at_infinity(fg, 8), germ_at_infinity(f, 8) * germ_at_infinity(g, 8)));
    }
}

TEST_CASE("superelliptic examples") {
    FieldCtx ctx(7, 3);
    const SuperellipticClass a = classify_superelliptic(rf(ctx, {{0, 1}, {1, 2}}), 3, ctx, 8);
    CHECK(a.vec == ValuationVector(3, {{"0", 1}, {"1", 2}}));
    CHECK(a.ram == std::set<Point>{"0", "1"});
    CHECK_FALSE(a.ram.count(Point::infinity()));
    CHECK(a.cls.canonical() == ValuationVector(3, {{"0", 1}, {"1", 2}}));
    CHECK(a.admissible);
    CHECK(a.warnings.empty());

    CHECK(code_of([&] { classify_superelliptic(rf(ctx, {{0, 3}}), 3, ctx, 8); }) == "PthPower");

    const SuperellipticClass b = classify_superelliptic(rf(ctx, {{2, 1}, {3, 1}, {4, 1}}), 3, ctx, 8);
    CHECK(b.vec == ValuationVector(3, {{"2", 1}, {"3", 1}, {"4", 1}}));
    const SuperellipticClass b2 = classify_superelliptic(rf(ctx, {{2, 2}, {3, 2}, {4, 2}}), 3, ctx, 8);
    CHECK(b2.vec == b.vec.scaled(2));
    CHECK(b.cls == b2.cls);

    CHECK(code_of([&] { classify_superelliptic(rf(ctx, {{0, 1}}), 3, ctx, 8); }) == "NotAdmissible");
    CHECK(code_of([&] { classify_superelliptic(rf(ctx, {{0, 4}, {1, 2}}), 3, ctx, 8); }) == "NotAdmissible");

    // p = 5 with gcd 2: admissible but reducible
    FieldCtx ctx5(11, 5);
    const SuperellipticClass r = classify_superelliptic(rf(ctx5, {{0, 2}, {1, 4}, {2, 4}}), 5, ctx5, 8);
    CHECK(r.warnings.size() == 1);
}

TEST_CASE("lenient mode puts infinity in the ramified locus") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(11, p);
        for (int i = 0; i < 60; ++i) {
            const RationalFunction f = random_function(ctx, rng, -7, 7);
            if (std::all_of(f.factors().begin(), f.factors().end(),
                            [&](const auto& kv) { return mod(kv.second, p) == 0; }))
                continue;
            const SuperellipticClass c = classify_superelliptic(f, p, ctx, 8, Admissibility::Lenient);
            const std::int64_t inf = mod(-f.degree(), p);
            CHECK(c.ram.count(Point::infinity()) == (inf != 0 ? 1U : 0U));
            if (inf != 0) CHECK(c.vec[Point::infinity()] == inf);
            for (const auto& [r, v] : f.factors()) CHECK(c.vec[point_of(r)] == mod(v, p));
            if (c.admissible) {
                CHECK_FALSE(c.ram.count(Point::infinity()));
                CHECK(c.vec == classify_superelliptic(f, p, ctx, 8).vec);
            }
        }
    }
}

TEST_CASE("superelliptic classes agree with classifying the germ idele directly") {
    std::mt19937_64 rng(4);
    for (std::uint32_t p : {3U, 5U}) {
        FieldCtx ctx(11, p);
        for (int i = 0; i < 30; ++i) {
            const RationalFunction f = random_function(ctx, rng, 1, static_cast<int>(p) - 1);
            if (mod(f.degree(), p) != 0) continue;
            const SuperellipticClass c = classify_superelliptic(f, p, ctx, 8);
            const Idele t = germ_idele(f, ctx, 8);
            CHECK(c.vec == classify(t, CyclicSubgroup(GlobalAutomorphism::kummer(t, p)), Character(p, 1)).vec);
        }
    }
}
