#pragma once

// Random instance generators shared by the self-test and the test suites.
// Everything is driven by an explicit mt19937_64 so runs are reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "adelic/adeles.hpp"
#include "adelic/galois.hpp"

namespace adelic::sampling {

/// Unit of K_x with a leading coefficient at level <= min(top, max_level)
/// and the remaining coefficients in F_l.
LaurentSeries unit(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec, std::size_t max_level = 1);

/// z^v * unit with v uniform in [lo, hi].
LaurentSeries series(FieldCtx& ctx, std::mt19937_64& rng, std::size_t prec, int lo, int hi);

/// Labels "P0", "P1", ... of a fixed pool.
std::vector<Point> point_pool(std::size_t n);

/// Idele with up to `max_points` exceptions drawn from `pool`, valuations in [lo, hi].
Idele idele(FieldCtx& ctx, std::mt19937_64& rng, const std::vector<Point>& pool, std::size_t max_points,
            std::size_t prec, int lo = -4, int hi = 4);

/// Idele whose valuations at the given points are exactly `vals`.
Idele idele_with_valuations(FieldCtx& ctx, std::mt19937_64& rng, const std::map<Point, int>& vals,
                            std::size_t prec);

/// Uniform permutation of {1..p} (one-line, 1-based).
Permutation permutation(std::uint32_t p, std::mt19937_64& rng);
/// Uniform p-cycle.
Permutation p_cycle(std::uint32_t p, std::mt19937_64& rng);

/// Generator of a pointwise transitive subgroup for t: random nonzero a at
/// ramified points, random p-cycles at `extra_unramified` points and as default.
GlobalAutomorphism transitive_generator(const Idele& t, std::uint32_t p, std::mt19937_64& rng,
                                        const std::vector<Point>& extra_unramified = {});

}  // namespace adelic::sampling
