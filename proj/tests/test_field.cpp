#include <random>
#include <set>

#include "adelic/errors.hpp"
#include "adelic/field.hpp"
#include "doctest.h"

using namespace adelic;

namespace {

// Brute-force multiplicative order in a small field.
int brute_order(const FieldElem& a) {
    FieldElem cur = a;
    int k = 1;
    while (!cur.is_one()) {
        cur *= a;
        ++k;
    }
    return k;
}

// All elements of a level by counting through coordinates.
std::vector<FieldElem> enumerate_level(const FieldCtx& ctx, std::size_t level) {
    const std::size_t n = ctx.abs_degree(level);
    std::vector<std::uint32_t> c(n, 0);
    std::vector<FieldElem> out;
    for (;;) {
        out.push_back(FieldElem::from_coords(ctx, level, c));
        std::size_t i = 0;
        while (i < n && ++c[i] == ctx.ell()) c[i++] = 0;
        if (i == n) break;
    }
    return out;
}

}  // namespace

TEST_CASE("zeta over F_7 for p = 3 is the smallest element of order 3") {
    FieldCtx ctx(7, 3);
    std::vector<std::int64_t> order3;
    for (std::int64_t a = 1; a < 7; ++a)
        if (brute_order(ctx.elem(a)) == 3) order3.push_back(a);
    REQUIRE(order3 == std::vector<std::int64_t>{2, 4});
    const FieldElem& z = ctx.ensure_zeta();
    CHECK(z == ctx.elem(2));
    CHECK(ctx.num_levels() == 1);
    CHECK(z.pow(3).is_one());
}

TEST_CASE("zeta over F_2 for p = 3 forces F_4") {
    FieldCtx ctx(2, 3);
    const FieldElem z = ctx.ensure_zeta();
    REQUIRE(ctx.num_levels() == 2);
    CHECK(ctx.rel_degree(1) == 2);
    CHECK(z.level() == 1);
    CHECK((z * z + z + ctx.one()).is_zero());
    // oracle: lexicographically smallest element of order 3 in F_4
    std::vector<FieldElem> order3;
    for (const auto& e : enumerate_level(ctx, 1))
        if (!e.is_zero() && brute_order(e) == 3) order3.push_back(e);
    REQUIRE(order3.size() == 2);
    const FieldElem& smallest = lex_less(order3[0], order3[1]) ? order3[0] : order3[1];
    CHECK(z == smallest);
}

TEST_CASE("zeta is stable and log_zeta inverts it") {
    FieldCtx ctx(7, 3);
    const FieldElem z = ctx.ensure_zeta();
    CHECK(ctx.ensure_zeta() == z);
    CHECK(ctx.log_zeta(ctx.elem(4)) == 2);
    CHECK(ctx.log_zeta(ctx.elem(1)) == 0);
    CHECK(ctx.log_zeta(ctx.elem(2)) == 1);
    CHECK_THROWS_AS(ctx.log_zeta(ctx.elem(3)), DomainError);
    CHECK_THROWS_AS(ctx.log_zeta(ctx.zero()), DomainError);
}

TEST_CASE("log_zeta is a homomorphism on mu_p") {
    for (std::uint32_t p : {2U, 3U, 5U}) {
        FieldCtx ctx(7, p);
        const FieldElem z = ctx.ensure_zeta();
        for (std::uint32_t c = 0; c < p; ++c) {
            CHECK(ctx.log_zeta(z.pow(c)) == c);
            for (std::uint32_t d = 0; d < p; ++d)
                CHECK(ctx.log_zeta(z.pow(c) * z.pow(d)) == (c + d) % p);
        }
    }
}

TEST_CASE("pth_root examples over F_7, p = 3") {
    FieldCtx ctx(7, 3);
    std::set<std::int64_t> roots_of_6;
    for (std::int64_t r = 1; r < 7; ++r)
        if (r * r * r % 7 == 6) roots_of_6.insert(r);
    REQUIRE(roots_of_6 == std::set<std::int64_t>{3, 5, 6});
    CHECK(ctx.pth_root(ctx.elem(6)) == ctx.elem(3));
    CHECK(ctx.pth_root(ctx.elem(1)) == ctx.elem(1));
    CHECK(ctx.num_levels() == 1);

    std::set<std::int64_t> cubes;
    for (std::int64_t r = 0; r < 7; ++r) cubes.insert(r * r * r % 7);
    REQUIRE(cubes == std::set<std::int64_t>{0, 1, 6});
    const FieldElem r = ctx.pth_root(ctx.elem(2));
    CHECK(ctx.num_levels() == 2);
    CHECK(ctx.rel_degree(1) == 3);
    CHECK(r.level() == 1);
    CHECK(r.pow(3) == ctx.elem(2));
    CHECK_THROWS_AS(ctx.pth_root(ctx.zero()), DomainError);
}

TEST_CASE("pth_root picks the smallest root at the minimal level") {
    FieldCtx ctx(7, 3);
    const FieldElem a = ctx.elem(2);
    const FieldElem r = ctx.pth_root(a);
    std::vector<FieldElem> roots;
    for (const auto& e : enumerate_level(ctx, 1))
        if (e.pow(3) == a) roots.push_back(e);
    REQUIRE(roots.size() == 3);
    for (const auto& other : roots) CHECK_FALSE(lex_less(other, r));
}

TEST_CASE("pth_root(a)^p = a on random inputs across towers") {
    std::mt19937_64 rng(11);
    for (auto [ell, p] : {std::pair{7U, 2U}, {7U, 3U}, {7U, 5U}, {2U, 3U}, {3U, 2U}, {11U, 5U}}) {
        FieldCtx ctx(ell, p);
        ctx.ensure_zeta();
        for (int i = 0; i < 60; ++i) {
            const std::size_t level = std::min<std::size_t>(ctx.top_level(), i % 2);
            const FieldElem a = ctx.random_nonzero(level, rng);
            const FieldElem r = ctx.pth_root(a);
            CHECK(r.pow(p) == a);
        }
    }
}

TEST_CASE("general roots of unity and n-th roots") {
    FieldCtx ctx(7, 3);
    const FieldElem xi = ctx.root_of_unity(6);
    CHECK(xi.pow(6).is_one());
    CHECK_FALSE(xi.pow(2).is_one());
    CHECK_FALSE(xi.pow(3).is_one());
    const FieldElem a = ctx.elem(3);
    CHECK(ctx.nth_root(a, 6).pow(6) == a);
}

TEST_CASE("field axioms on random triples at every level") {
    FieldCtx ctx(7, 5);
    ctx.ensure_zeta();  // degree 4 step
    std::mt19937_64 pick(9);
    FieldElem non_power = ctx.random_nonzero(1, pick);
    while (ctx.is_power_at(non_power, 5, 1)) non_power = ctx.random_nonzero(1, pick);
    ctx.pth_root(non_power);  // degree 5 step on top
    REQUIRE(ctx.num_levels() == 3);
    std::mt19937_64 rng(3);
    for (std::size_t level = 0; level < ctx.num_levels(); ++level) {
        const int trials = level == 2 ? 200 : 1000;
        for (int i = 0; i < trials; ++i) {
            const FieldElem a = ctx.random(level, rng), b = ctx.random(level, rng), c = ctx.random(level, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK((a.inverse() * a).is_one());
        }
    }
}

TEST_CASE("fused multiply-add matches x + a * b across mixed levels") {
    FieldCtx ctx(7, 3);
    ctx.ensure_zeta();
    ctx.extend_by_degree(3);
    ctx.extend_by_degree(2);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const auto lv = [&] { return static_cast<std::size_t>(rng() % ctx.num_levels()); };
        const FieldElem x = ctx.random(lv(), rng), a = ctx.random(lv(), rng), b = ctx.random(lv(), rng);
        FieldElem y = x;
        y.add_product(a, b);
        CHECK(y == x + a * b);
    }
}

TEST_CASE("tower steps pass the Frobenius irreducibility test") {
    FieldCtx ctx(7, 5);
    ctx.ensure_zeta();
    ctx.extend_by_degree(5);
    for (std::size_t level = 1; level < ctx.num_levels(); ++level)
        CHECK(ctx.is_irreducible_over(ctx.modulus(level), level - 1));
}

TEST_CASE("irreducibility test matches the count of monic irreducibles over F_7") {
    FieldCtx ctx(7, 3);
    // Gauss: N(2) = (49 - 7) / 2, N(3) = (343 - 7) / 3
    for (auto [d, expected] : {std::pair{2, 21}, {3, 112}}) {
        int count = 0, rootless = 0;
        std::vector<std::int64_t> c(d, 0);
        for (;;) {
            FieldPoly f;
            for (auto v : c) f.push_back(ctx.elem(v));
            f.push_back(ctx.one());
            if (ctx.is_irreducible_over(f, 0)) ++count;
            bool has_root = false;
            for (std::int64_t x = 0; x < 7 && !has_root; ++x) {
                std::int64_t acc = 0;
                for (int i = d; i >= 0; --i) acc = (acc * x + (i == d ? 1 : c[i])) % 7;
                has_root = acc == 0;
            }
            if (!has_root) ++rootless;
            int i = 0;
            while (i < d && ++c[i] == 7) c[i++] = 0;
            if (i == d) break;
        }
        CHECK(count == expected);
        CHECK(rootless == expected);  // degree <= 3: irreducible iff no root
    }
}

TEST_CASE("adjoin rejects reducible steps") {
    FieldCtx ctx(7, 3);
    // X^2 - 1 = (X - 1)(X + 1)
    CHECK_THROWS_AS(ctx.adjoin({ctx.elem(-1), ctx.zero(), ctx.one()}), DomainError);
    // X^2 - 3: 3 is a non-residue mod 7
    CHECK(ctx.adjoin({ctx.elem(-3), ctx.zero(), ctx.one()}) == 1);
}

TEST_CASE("embedding up and back down is the identity") {
    FieldCtx ctx(7, 3);
    ctx.pth_root(ctx.elem(2));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const FieldElem a = ctx.random(0, rng);
        const FieldElem up = FieldElem::from_coords(ctx, 1, a.coords_at(1));
        CHECK(up == a);
        CHECK(up.level() == 0);
        const FieldElem b = ctx.random(1, rng);
        CHECK(FieldElem::parse(ctx, b.to_string()) == b);
    }
}

TEST_CASE("text form") {
    FieldCtx ctx(7, 3);
    CHECK(ctx.elem(3).to_string() == "L0:[3]");
    CHECK(FieldElem::parse(ctx, "-1") == ctx.elem(6));
    CHECK(FieldElem::parse(ctx, " L0:[ 5 ] ") == ctx.elem(5));
    CHECK_THROWS_AS(FieldElem::parse(ctx, "L3:[1]"), ParseError);
    CHECK_THROWS_AS(FieldElem::parse(ctx, "L0:[1,2]"), ParseError);
    CHECK_THROWS_AS(FieldElem::parse(ctx, "x"), ParseError);
}
