#pragma once

// Independent brute-force references used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "adelic/adeles.hpp"
#include "adelic/local_algebra.hpp"

namespace oracle {

using adelic::FieldCtx;
using adelic::FieldElem;
using adelic::LaurentSeries;
using adelic::Permutation;

// The cyclic group generated by sigma, listed by closure under composition.
inline std::set<Permutation> generated_group(const Permutation& sigma) {
    std::set<Permutation> group;
    Permutation id(sigma.size());
    std::iota(id.begin(), id.end(), 1U);
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        Permutation cur = frontier.back();
        frontier.pop_back();
        if (!group.insert(cur).second) continue;
        Permutation next(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) next[i] = sigma[cur[i] - 1];
        frontier.push_back(next);
    }
    return group;
}

// Transitive iff for every j some group element sends 1 to j.
inline bool transitive(const Permutation& sigma) {
    std::set<std::uint32_t> images;
    for (const auto& g : generated_group(sigma)) images.insert(g[0]);
    return images.size() == sigma.size();
}

// Polynomials in X with series coefficients, lowest degree first; an empty
// optional is an exact zero coefficient.
using SeriesPoly = std::vector<LaurentSeries>;

inline SeriesPoly poly_mul(const SeriesPoly& a, const SeriesPoly& b, const FieldCtx& ctx) {
    SeriesPoly out(a.size() + b.size() - 1, LaurentSeries::zero(ctx));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (a[i].is_zero() || b[j].is_zero()) continue;
            const LaurentSeries term = a[i] * b[j];
            out[i + j] = out[i + j].is_zero() ? term : out[i + j] + term;
        }
    return out;
}

// det(X·I - M) by expanding every permutation product as a polynomial.
inline SeriesPoly char_poly_leibniz(const std::vector<std::vector<LaurentSeries>>& m, const FieldCtx& ctx,
                                    std::size_t prec) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SeriesPoly total(n + 1, LaurentSeries::zero(ctx));
    const LaurentSeries one = LaurentSeries::constant(ctx.one(), prec);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SeriesPoly prod{one};
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            SeriesPoly entry{m[i][perm[i]].is_zero() ? LaurentSeries::zero(ctx) : -m[i][perm[i]]};
            if (perm[i] == i) entry.push_back(one);
            zero = std::all_of(entry.begin(), entry.end(), [](const LaurentSeries& s) { return s.is_zero(); });
            prod = poly_mul(prod, entry, ctx);
        }
        if (zero) continue;
        for (std::size_t k = 0; k < prod.size(); ++k) {
            if (prod[k].is_zero()) continue;
            const LaurentSeries term = sign < 0 ? -prod[k] : prod[k];
            total[k] = total[k].is_zero() ? term : total[k] + term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// det(X·I - C) over k, by the same expansion.
inline std::vector<FieldElem> const_char_poly_leibniz(const std::vector<std::vector<FieldElem>>& c,
                                                      const FieldCtx& ctx) {
    const std::size_t n = c.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<FieldElem> total(n + 1, ctx.zero());
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<FieldElem> prod{ctx.one()};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<FieldElem> next(prod.size() + 1, ctx.zero());
            for (std::size_t k = 0; k < prod.size(); ++k) {
                next[k] -= prod[k] * c[i][perm[i]];
                if (perm[i] == i) next[k + 1] += prod[k];
            }
            prod = std::move(next);
        }
        for (std::size_t k = 0; k <= n; ++k) total[k] += sign < 0 ? -prod[k] : prod[k];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// For every nonempty set E of split coordinates (idempotent e_E), search all
// constant vectors s ∈ F_l^p for one with g(s)·e_E ≠ h(s)·e_E, where
// g(s)_i = s_{σ_g(i)}.
inline bool strongly_distinct_split(const Permutation& sg, const Permutation& sh, std::uint32_t ell) {
    const std::size_t p = sg.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < p; ++i) total *= ell;
    for (std::uint32_t mask = 1; mask < (1U << p); ++mask) {
        bool found = false;
        for (std::size_t code = 0; code < total && !found; ++code) {
            std::vector<std::uint32_t> s(p);
            std::size_t c = code;
            for (std::size_t i = 0; i < p; ++i, c /= ell) s[i] = static_cast<std::uint32_t>(c % ell);
            for (std::size_t i = 0; i < p && !found; ++i)
                if ((mask >> i) & 1U) found = s[sg[i] - 1] != s[sh[i] - 1];
        }
        if (!found) return false;
    }
    return true;
}

// All (Z/p)^* multiples of a vector of residues.
inline std::set<std::vector<std::uint32_t>> scalar_orbit(const std::vector<std::uint32_t>& v, std::uint32_t p) {
    std::set<std::vector<std::uint32_t>> out;
    for (std::uint32_t b = 1; b < p; ++b) {
        std::vector<std::uint32_t> w;
        for (auto x : v) w.push_back(x * b % p);
        out.insert(w);
    }
    return out;
}

}  // namespace oracle
