#include "adelic/galois.hpp"

#include <random>

#include "adelic/errors.hpp"
#include "adelic/modular.hpp"
#include "adelic/sampling.hpp"

namespace adelic {

namespace {

template <class... Maps>
std::set<Point> union_keys(const Maps&... maps) {
    std::set<Point> out;
    (
        [&] {
            for (const auto& [x, _] : maps) out.insert(x);
        }(),
        ...);
    return out;
}

bool is_shift(const Permutation& sigma, std::uint32_t& a) {
    const auto p = static_cast<std::uint32_t>(sigma.size());
    a = sigma[0] - 1;
    return sigma == perm::shift(p, a);
}

LocalPrimitive local_primitive(const LocalAutomorphism& g, std::uint32_t s, std::size_t prec, const FieldCtx& ctx) {
    const std::uint32_t p = g.p();
    LocalPrimitive out;
    out.w = LaurentSeries::constant(ctx.one(), prec);
    std::uint32_t a = g.a();
    if (g.is_ramified_kind() || is_shift(g.sigma(), a)) {
        // g(T^b) = ζ^{ab} T^b
        out.form = LocalPrimitive::Form::Monomial;
        out.b = static_cast<std::uint32_t>(mod(static_cast<std::int64_t>(s) * inv_mod(a, p), p));
        return out;
    }
    // c_1 = 0 and c_{σ(j)} = c_j + s along the cycle
    out.form = LocalPrimitive::Form::Split;
    out.c.assign(p, 0);
    const Permutation& sigma = g.sigma();
    std::uint32_t j = 1;
    for (std::uint32_t step = 1; step < p; ++step) {
        out.c[sigma[j - 1] - 1] = (out.c[j - 1] + s) % p;
        j = sigma[j - 1];
    }
    return out;
}

LaurentSeries local_alpha_p(const LocalPrimitive& part, const LaurentSeries& t_x) {
    if (part.form == LocalPrimitive::Form::Split) return part.w.pow(static_cast<long>(t_x.ctx().p()));
    return part.w.pow(static_cast<long>(t_x.ctx().p())) * t_x.pow(part.b);
}

void require_transitive(const CyclicSubgroup& g, const Idele& t) {
    if (!is_pointwise_transitive(g, t)) raise("NotTransitive", "subgroup is not pointwise transitive");
}

// π with π(ρ^j(1)) = σ^j(1), so that σ ∘ π = π ∘ ρ.
Permutation matching_permutation(const Permutation& sigma, const Permutation& rho) {
    Permutation pi(sigma.size());
    std::uint32_t a = 1, b = 1;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        pi[b - 1] = a;
        a = sigma[a - 1];
        b = rho[b - 1];
    }
    return pi;
}

LocalElement random_element(const LocalStructure& s, FieldCtx& ctx, std::mt19937_64& rng) {
    LocalElement out;
    for (std::uint64_t j = 0; j < s.n(); ++j) out.c.push_back(sampling::series(ctx, rng, s.precision(), -2, 2));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

GlobalAutomorphism::GlobalAutomorphism(Permutation default_sigma, std::map<Point, LocalAutomorphism> exceptions)
    : default_sigma_(std::move(default_sigma)), exceptions_(std::move(exceptions)) {
    if (default_sigma_.size() < 2) throw ParseError("default permutation needs at least two points");
    perm::validate(default_sigma_, p());
    for (const auto& [x, g] : exceptions_)
        if (g.p() != p()) throw ParseError("component at " + x.label() + " has the wrong rank");
}

GlobalAutomorphism GlobalAutomorphism::identity(std::uint32_t p) { return GlobalAutomorphism(perm::identity(p)); }

GlobalAutomorphism GlobalAutomorphism::kummer(const Idele& t, std::uint32_t p, std::int64_t a) {
    std::map<Point, LocalAutomorphism> ex;
    for (const auto& [x, _] : t.exceptions()) ex.emplace(x, LocalAutomorphism::ramified(p, a));
    return GlobalAutomorphism(perm::shift(p, a), std::move(ex));
}

LocalAutomorphism GlobalAutomorphism::at(const Point& x) const {
    auto it = exceptions_.find(x);
    return it == exceptions_.end() ? LocalAutomorphism::unramified(default_sigma_) : it->second;
}

bool GlobalAutomorphism::is_identity() const {
    if (default_sigma_ != perm::identity(p())) return false;
    return std::all_of(exceptions_.begin(), exceptions_.end(), [](const auto& kv) { return kv.second.is_identity(); });
}

GlobalAutomorphism GlobalAutomorphism::inverse() const { return pow(-1); }

GlobalAutomorphism GlobalAutomorphism::pow(std::int64_t k) const {
    std::map<Point, LocalAutomorphism> ex;
    for (const auto& [x, g] : exceptions_) ex.emplace(x, g.pow(k));
    return GlobalAutomorphism(perm::power(default_sigma_, k), std::move(ex));
}

void GlobalAutomorphism::validate(const Idele& t) const {
    for (const auto& x : ramified_points(t, p())) {
        auto it = exceptions_.find(x);
        if (it == exceptions_.end() || !it->second.is_ramified_kind())
            raise("InvalidAutomorphism", "ramified point " + x.label() + " needs a component T -> zeta^a T");
    }
}

bool operator==(const GlobalAutomorphism& g, const GlobalAutomorphism& h) {
    if (g.default_sigma_ != h.default_sigma_) return false;
    for (const auto& x : union_keys(g.exceptions_, h.exceptions_))
        if (!same_action(g.at(x), h.at(x))) return false;
    return true;
}

GlobalAutomorphism compose(const GlobalAutomorphism& h, const GlobalAutomorphism& g) {
    const LocalAutomorphism d =
        compose(LocalAutomorphism::unramified(h.default_sigma()), LocalAutomorphism::unramified(g.default_sigma()));
    std::map<Point, LocalAutomorphism> ex;
    for (const auto& x : union_keys(h.exceptions(), g.exceptions())) ex.emplace(x, compose(h.at(x), g.at(x)));
    return GlobalAutomorphism(d.sigma(), std::move(ex));
}

CyclicSubgroup::CyclicSubgroup(GlobalAutomorphism generator) : gen_(std::move(generator)) {
    if (gen_.is_identity()) raise("InvalidSubgroup", "the generator is the identity");
}

Character::Character(std::uint32_t p, std::int64_t s) : p_(p), s_(static_cast<std::uint32_t>(mod(s, p))) {
    if (s_ == 0) raise("InvalidCharacter", "the character must be nontrivial");
}

const LocalPrimitive& PrimitiveElement::at(const Point& x) const {
    auto it = parts.find(x);
    return it == parts.end() ? default_part : it->second;
}

RamTuple RamTuple::scaled(std::int64_t k) const {
    RamTuple out{p, {}};
    for (const auto& [x, v] : entries) out.entries[x] = static_cast<std::uint32_t>(mod(k * v, p));
    return out;
}

// ---------------------------------------------------------------------------

std::set<Point> ramified_points(const Idele& t, std::uint32_t p) {
    std::set<Point> out;
    const ValuationVector vec = valuation_vector(t, p);
    for (const auto& [x, v] : vec.entries()) out.insert(x);
    return out;
}

bool is_pointwise_transitive(const CyclicSubgroup& g, const Idele& t) {
    const GlobalAutomorphism& gen = g.generator();
    gen.validate(t);
    if (perm::order(gen.default_sigma()) != g.p()) return false;
    return std::all_of(gen.exceptions().begin(), gen.exceptions().end(),
                       [&](const auto& kv) { return kv.second.order() == g.p(); });
}

bool is_pointwise_transitive_by_orbits(const CyclicSubgroup& g, const Idele& t) {
    const GlobalAutomorphism& gen = g.generator();
    gen.validate(t);
    auto transitive = [p = g.p()](const Permutation& sigma) {
        // orbit of 1 under every element of <σ>
        std::set<std::uint32_t> orbit;
        Permutation cur = perm::identity(p);
        for (std::uint64_t k = 0; k < perm::order(sigma); ++k) {
            orbit.insert(cur[0]);
            cur = perm::compose(sigma, cur);
        }
        return orbit.size() == p;
    };
    if (!transitive(gen.default_sigma())) return false;
    for (const auto& [x, h] : gen.exceptions())
        if (!transitive(h.as_permutation())) return false;
    return true;
}

bool is_galois(const Idele& t, const CyclicSubgroup& g) {
    try {
        return is_pointwise_transitive(g, t);
    } catch (const DomainError&) {
        return false;
    }
}

PrimitiveElement primitive_element(const Idele& t, const CyclicSubgroup& g, const Character& chi) {
    if (!is_galois(t, g)) raise("NotGalois", "the subgroup does not act as a Galois group");
    if (chi.p() != g.p()) throw std::invalid_argument("character and subgroup have different p");
    const GlobalAutomorphism& gen = g.generator();
    const FieldCtx& ctx = t.ctx();

    PrimitiveElement out{{}, {}, Idele(ctx)};
    out.default_part =
        local_primitive(LocalAutomorphism::unramified(gen.default_sigma()), chi.s(), t.default_value().precision(), ctx);
    Idele alpha_p(local_alpha_p(out.default_part, t.default_value()));
    for (const auto& x : union_keys(gen.exceptions(), t.exceptions())) {
        const LaurentSeries& t_x = t.at(x);
        LocalPrimitive part = local_primitive(gen.at(x), chi.s(), t_x.precision(), ctx);
        alpha_p.set(x, local_alpha_p(part, t_x));
        out.parts.emplace(x, std::move(part));
    }
    out.alpha_p = std::move(alpha_p);
    return out;
}

Point generic_point(const Idele& t, const std::vector<const GlobalAutomorphism*>& autos) {
    std::string label = "_generic";
    auto used = [&](const Point& x) {
        if (t.exceptions().count(x)) return true;
        return std::any_of(autos.begin(), autos.end(), [&](const auto* g) { return g->exceptions().count(x) > 0; });
    };
    while (used(label)) label += "_";
    return label;
}

bool verify_primitive(const PrimitiveElement& alpha, const Idele& t, const CyclicSubgroup& g, const Character& chi,
                      FieldCtx& ctx) {
    const GlobalAutomorphism& gen = g.generator();
    std::set<Point> points = union_keys(gen.exceptions(), t.exceptions(), alpha.parts);
    points.insert(generic_point(t, {&gen}));
    const FieldElem chi_g = ctx.ensure_zeta().pow(static_cast<std::int64_t>(chi.s()));
    for (const auto& x : points) {
        const LocalStructure s(t.at(x), g.p(), ctx);
        const LocalElement a = s.element(alpha.at(x));
        if (!equal_within(s.apply(gen.at(x), a), s.scaled(a, chi_g))) return false;
        if (!equal_within(s.pth_power(alpha.at(x)), alpha.alpha_p.at(x))) return false;
    }
    return true;
}

RamTuple ram_tuple(const CyclicSubgroup& g, const Idele& t) {
    require_transitive(g, t);
    const std::uint32_t p = g.p();
    RamTuple out{p, {}};
    for (const auto& x : ramified_points(t, p)) {
        const std::int64_t a = g.generator().at(x).a();
        out.entries[x] = static_cast<std::uint32_t>(mod(a * inv_mod(t.at(x).valuation(), p), p));
    }
    return out;
}

std::optional<std::uint32_t> galois_equivalent(const CyclicSubgroup& g1, const CyclicSubgroup& g2, const Idele& t) {
    const RamTuple r1 = ram_tuple(g1, t), r2 = ram_tuple(g2, t);
    for (std::uint32_t b = 1; b < g1.p(); ++b)
        if (r1 == r2.scaled(b)) return b;
    return std::nullopt;
}

std::set<std::vector<std::uint32_t>> ram_projection(const CyclicSubgroup& g, const Idele& t) {
    const std::set<Point> ram = ramified_points(t, g.p());
    std::set<std::vector<std::uint32_t>> out;
    for (std::uint32_t k = 0; k < g.p(); ++k) {
        const GlobalAutomorphism cur = g.generator().pow(k);
        std::vector<std::uint32_t> row;
        for (const auto& x : ram) row.push_back(cur.at(x).as_permutation()[0] - 1);
        out.insert(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------

Conjugation construct_conjugation(const CyclicSubgroup& g1, const CyclicSubgroup& g2, const Idele& t,
                                  const Character& chi1, FieldCtx& ctx) {
    require_transitive(g1, t);
    require_transitive(g2, t);
    const std::uint32_t p = g1.p();
    const std::set<Point> ram = ramified_points(t, p);

    // τ(g1) = g2^k needs a1_x = k a2_x at every ramified point
    std::optional<std::uint32_t> k;
    for (std::uint32_t cand = 1; cand < p && !k; ++cand) {
        const bool ok = std::all_of(ram.begin(), ram.end(), [&](const Point& x) {
            return g1.generator().at(x).a() == mod(static_cast<std::int64_t>(cand) * g2.generator().at(x).a(), p);
        });
        if (ok) k = cand;
    }
    if (!k) raise("NotEquivalent", "the ramified projections generate different subgroups");

    const GlobalAutomorphism& s1 = g1.generator();
    const GlobalAutomorphism rho = g2.generator().pow(*k);
    std::map<Point, LocalAutomorphism> phi_ex;
    for (const auto& x : union_keys(s1.exceptions(), rho.exceptions(), t.exceptions())) {
        if (ram.count(x)) phi_ex.emplace(x, LocalAutomorphism::ramified(p, 0));
        else
            phi_ex.emplace(x, LocalAutomorphism::unramified(
                                  matching_permutation(s1.at(x).as_permutation(), rho.at(x).as_permutation())));
    }
    GlobalAutomorphism phi(matching_permutation(s1.default_sigma(), rho.default_sigma()), std::move(phi_ex));

    const Character chi2(p, static_cast<std::int64_t>(chi1.s()) * inv_mod(*k, p));
    PrimitiveElement alpha1 = primitive_element(t, g1, chi1);
    PrimitiveElement alpha2 = primitive_element(t, g2, chi2);

    // u_x = φ(α1)_x / α2_x, read off in split coordinates (or directly at ramified points)
    const Point generic = generic_point(t, {&s1, &rho});
    auto ratio_at = [&](const Point& x) -> LaurentSeries {
        const LocalStructure s(t.at(x), p, ctx);
        const LocalPrimitive &a1 = alpha1.at(x), &a2 = alpha2.at(x);
        if (s.ramified()) {
            if (a1.b != a2.b) throw std::logic_error("construct_conjugation: exponents differ at a ramified point");
            return a1.w / a2.w;
        }
        const Permutation pi = phi.at(x).as_permutation();
        const auto v1 = s.split(a1), v2 = s.split(a2);
        return v1[pi[0] - 1] / v2[0];
    };
    Idele u(ratio_at(generic));
    for (const auto& x : union_keys(phi.exceptions(), alpha1.parts, alpha2.parts)) u.set(x, ratio_at(x));

    Conjugation out{*k, chi2, std::move(phi), std::move(alpha1), std::move(alpha2), std::move(u)};
    if (!verify_conjugation(out, g1, g2, t, ctx)) throw std::logic_error("construct_conjugation: verification failed");
    return out;
}

bool verify_conjugation(const Conjugation& c, const CyclicSubgroup& g1, const CyclicSubgroup& g2, const Idele& t,
                        FieldCtx& ctx) {
    const std::uint32_t p = g1.p();
    const GlobalAutomorphism rho = g2.generator().pow(c.k);
    const GlobalAutomorphism& s1 = g1.generator();
    try {
        c.phi.validate(t);
    } catch (const DomainError&) {
        return false;
    }
    if (!(compose(c.phi, s1) == compose(rho, c.phi))) return false;

    std::mt19937_64 rng(0x5eedc0de);
    std::set<Point> points = union_keys(c.phi.exceptions(), s1.exceptions(), rho.exceptions(), t.exceptions());
    points.insert(generic_point(t, {&c.phi, &s1, &rho}));
    for (const auto& x : points) {
        const LocalStructure s(t.at(x), p, ctx);
        const LaurentSeries& u = c.u.at(x);
        if (s.ramified()) {
            if (!equal_within(s.element(c.alpha1.at(x)), s.multiply(s.monomial(u, 0), s.element(c.alpha2.at(x)))))
                return false;
        } else {
            // φ(α1^j) = (u α2)^j in split coordinates
            const Permutation pi = c.phi.at(x).as_permutation();
            const auto v1 = s.split(c.alpha1.at(x)), v2 = s.split(c.alpha2.at(x));
            for (std::uint32_t i = 0; i < p; ++i) {
                const LaurentSeries lhs = v1[pi[i] - 1], rhs = u * v2[i];
                for (long j = 0; j < static_cast<long>(p); ++j)
                    if (!equal_within(lhs.pow(j), rhs.pow(j))) return false;
            }
        }
        for (int trial = 0; trial < 3; ++trial) {
            const LocalElement e = random_element(s, ctx, rng);
            const LocalElement lhs = s.apply(c.phi.at(x), s.apply(s1.at(x), e));
            const LocalElement rhs = s.apply(rho.at(x), s.apply(c.phi.at(x), e));
            if (!equal_within(lhs, rhs)) return false;
        }
    }
    return true;
}

AlgebraElement eigenproject(const AlgebraElement& sample, const CyclicSubgroup& g, const Character& chi,
                            const Idele& t, FieldCtx& ctx) {
    if (!is_galois(t, g)) raise("NotGalois", "the subgroup does not act as a Galois group");
    const std::uint32_t p = g.p();
    const FieldElem zeta_inv = ctx.ensure_zeta().inverse().pow(static_cast<std::int64_t>(chi.s()));
    const FieldElem inv_p = ctx.elem(p).inverse();
    AlgebraElement out;
    for (const auto& [x, e] : sample.parts) {
        const LocalStructure s(t.at(x), p, ctx);
        const LocalAutomorphism gx = g.generator().at(x);
        // (1/p) Σ_k χ(g)^{-k} M(g^k), formed over k before touching series
        TwistedMatrix proj = s.matrix(gx.pow(0));
        FieldElem weight = ctx.one();
        for (std::uint32_t k = 1; k < p; ++k) {
            weight *= zeta_inv;
            proj = proj + s.matrix(gx.pow(k)).scaled(weight);
        }
        out.parts.emplace(x, s.apply(proj.scaled(inv_p), e));
    }
    return out;
}

}  // namespace adelic
