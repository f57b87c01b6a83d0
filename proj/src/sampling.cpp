#include "adelic/sampling.hpp"

#include <algorithm>

#include "adelic/modular.hpp"

namespace adelic::sampling {

LaurentSeries unit(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec, std::size_t max_level) {
    const std::size_t level = std::min<std::size_t>({ctx.top_level(), max_level, rng() % 2});
    std::vector<FieldElem> cs;
    cs.push_back(ctx.random_nonzero(level, rng));
    for (std::size_t i = 1; i < prec; ++i) cs.push_back(ctx.random(0, rng));
    return LaurentSeries::from_coeffs(0, std::move(cs));
}

LaurentSeries series(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec, int lo, int hi) {
    std::uniform_int_distribution<int> val(lo, hi);
    return unit(ctx, rng, prec).shifted(val(rng));
}

std::vector<Point> point_pool(std::size_t n) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back("P" + std::to_string(i));
    return out;
}

Idele idele(FieldCtx& ctx, std::mt19937_64& rng, const std::vector<Point>& pool, std::size_t max_points,
            std::size_t prec, int lo, int hi) {
    std::vector<Point> pts = pool;
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t count = std::min(pts.size(), rng() % (max_points + 1));
    Idele t(ctx, prec);
    for (std::size_t i = 0; i < count; ++i) t.set(pts[i], series(ctx, rng, prec, lo, hi));
    return t;
}

Idele idele_with_valuations(FieldCtx& ctx, std::mt19937_64& rng, const std::map<Point, int>& vals,
                            std::size_t prec) {
    Idele t(ctx, prec);
    for (const auto& [x, v] : vals) t.set(x, unit(ctx, rng, prec).shifted(v));
    return t;
}

Permutation permutation(std::uint32_t p, std::mt19937_64& rng) {
    Permutation out = perm::identity(p);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

Permutation p_cycle(std::uint32_t p, std::mt19937_64& rng) {
    // a random cyclic order of {1..p}
    Permutation order = perm::identity(p);
    std::shuffle(order.begin(), order.end(), rng);
    Permutation out(p);
    for (std::uint32_t i = 0; i < p; ++i) out[order[i] - 1] = order[(i + 1) % p];
    return out;
}

GlobalAutomorphism transitive_generator(const Idele& t, std::uint32_t p, std::mt19937_64& rng,
                                        const std::vector<Point>& extra_unramified) {
    std::map<Point, LocalAutomorphism> ex;
    for (const auto& [x, v] : t.exceptions()) {
        if (mod(v.valuation(), p) != 0)
            ex.emplace(x, LocalAutomorphism::ramified(p, 1 + static_cast<std::int64_t>(rng() % (p - 1))));
        else if (rng() % 2 == 0)
            ex.emplace(x, LocalAutomorphism::unramified(p_cycle(p, rng)));
    }
    for (const auto& x : extra_unramified)
        if (!ex.count(x) && mod(t.at(x).valuation(), p) == 0) ex.emplace(x, LocalAutomorphism::unramified(p_cycle(p, rng)));
    return GlobalAutomorphism(p_cycle(p, rng), std::move(ex));
}

}  // namespace adelic::sampling
