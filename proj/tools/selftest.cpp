#include "selftest.hpp"

#include <functional>
#include <random>

#include "adelic/errors.hpp"
#include "adelic/modular.hpp"
#include "adelic/sampling.hpp"

namespace adelic::tools {

namespace {

using Check = std::function<bool(FieldCtx&, std::mt19937_64&, std::size_t)>;

bool homomorphism(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec) {
    const std::uint32_t p = ctx.p();
    const auto pool = sampling::point_pool(6);
    for (int i = 0; i < 30; ++i) {
        const Idele a = sampling::idele(ctx, rng, pool, 6, prec), b = sampling::idele(ctx, rng, pool, 6, prec);
        if (!(valuation_vector(a * b, p) == valuation_vector(a, p) + valuation_vector(b, p))) return false;
        const Idele c = a.pow(p);
        if (!(pth_root(c, ctx).pow(p) == c)) return false;
    }
    return true;
}

bool pairing(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec) {
    const std::uint32_t p = ctx.p();
    for (int i = 0; i < 30; ++i) {
        int tv = 0;
        while (mod(tv, p) == 0) tv = static_cast<int>(rng() % 15) - 7;
        const LaurentSeries t = sampling::unit(ctx, rng, prec).shifted(tv);
        const LaurentSeries lambda = sampling::series(ctx, rng, prec, -7, 7);
        const auto a = static_cast<std::int64_t>(rng() % p);
        if (!(oracle_pair(a, lambda, t, ctx) == kummer_pair(a, lambda.valuation(), tv, ctx))) return false;
    }
    return true;
}

bool primitive(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec) {
    const std::uint32_t p = ctx.p();
    const auto pool = sampling::point_pool(6);
    for (int i = 0; i < 10; ++i) {
        const Idele t = sampling::idele(ctx, rng, pool, 5, prec);
        const CyclicSubgroup g(sampling::transitive_generator(t, p, rng, {pool[5]}));
        const Character chi(p, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
        const PrimitiveElement alpha = primitive_element(t, g, chi);
        if (!verify_primitive(alpha, t, g, chi, ctx)) return false;
        if (ramified_points(alpha.alpha_p, p) != ramified_points(t, p)) return false;
    }
    return true;
}

bool conjugacy(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec) {
    const std::uint32_t p = ctx.p();
    const auto pool = sampling::point_pool(6);
    for (int i = 0; i < 10; ++i) {
        const Idele t = sampling::idele(ctx, rng, pool, 4, prec);
        const CyclicSubgroup g1(sampling::transitive_generator(t, p, rng, {pool[5]}));
        const CyclicSubgroup g2(sampling::transitive_generator(t, p, rng, {pool[5]}));
        const bool eq = galois_equivalent(g1, g2, t).has_value();
        if (eq != (ram_projection(g1, t) == ram_projection(g2, t))) return false;
        try {
            const Conjugation c = construct_conjugation(g1, g2, t, Character(p, 1), ctx);
            if (!eq || !verify_conjugation(c, g1, g2, t, ctx)) return false;
        } catch (const DomainError&) {
            if (eq) return false;
        }
    }
    return true;
}

bool transitivity(FieldCtx& ctx, std::mt19937_64& rng, std::size_t) {
    const std::uint32_t p = ctx.p();
    const Idele t(ctx);
    for (int i = 0; i < 30; ++i) {
        const Permutation sigma = sampling::permutation(p, rng);
        if (sigma == perm::identity(p)) continue;
        const CyclicSubgroup g{GlobalAutomorphism(sigma)};
        if (is_pointwise_transitive(g, t) != is_pointwise_transitive_by_orbits(g, t)) return false;
    }
    return true;
}

bool stratification(FieldCtx& ctx, std::mt19937_64&, std::size_t) {
    const std::uint32_t p = ctx.p();
    // 1 + (p^2 - 1)/(p - 1) classes over two points
    return classes_supported_on({"a", "b"}, p).size() == 1 + (p * p - 1) / (p - 1);
}

}  // namespace

json_io::Json run_selftest(std::uint32_t ell, std::size_t prec) {
    const std::vector<std::pair<const char*, Check>> checks{
        {"valuation_homomorphism", homomorphism}, {"pairing_oracle", pairing},  {"primitive_element", primitive},
        {"conjugacy", conjugacy},                 {"transitivity", transitivity}, {"stratification", stratification},
    };
    json_io::Json out;
    json_io::Json results = json_io::Json::object();
    bool all = true;
    for (const auto& [name, check] : checks) {
        bool ok = true;
        for (std::uint32_t p : {2U, 3U, 5U}) {
            if (p == ell) continue;
            FieldCtx ctx(ell, p);
            std::mt19937_64 rng(p * 1000003ULL);
            ok = ok && check(ctx, rng, std::min<std::size_t>(prec, 12));
        }
        results[name] = ok;
        all = all && ok;
    }
    out["checks"] = std::move(results);
    out["passed"] = all;
    return out;
}

}  // namespace adelic::tools
