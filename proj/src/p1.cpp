#include "adelic/p1.hpp"

#include <numeric>

#include "adelic/errors.hpp"
#include "adelic/modular.hpp"

namespace adelic {

namespace {

// (d + e·z)^v to prec coefficients, d ≠ 0
LaurentSeries linear_power(const FieldElem& d, const FieldElem& e, std::int64_t v, std::size_t prec) {
    std::vector<FieldElem> cs(prec, d.ctx().zero());
    cs[0] = d;
    if (prec > 1) cs[1] = e;
    return LaurentSeries::from_coeffs(0, std::move(cs)).pow(v);
}

}  // namespace

RationalFunction::RationalFunction(FieldElem constant, std::vector<std::pair<FieldElem, std::int64_t>> factors)
    : constant_(std::move(constant)), factors_(std::move(factors)) {
    if (constant_.is_zero()) throw ParseError("rational function with zero constant");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second == 0) throw ParseError("factor with zero exponent");
        for (std::size_t j = 0; j < i; ++j)
            if (factors_[i].first == factors_[j].first) throw ParseError("repeated root " + factors_[i].first.to_string());
    }
}

std::int64_t RationalFunction::degree() const {
    std::int64_t d = 0;
    for (const auto& [_, v] : factors_) d += v;
    return d;
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    std::vector<std::pair<FieldElem, std::int64_t>> out = f.factors_;
    for (const auto& [r, v] : g.factors_) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& kv) { return kv.first == r; });
        if (it == out.end()) out.emplace_back(r, v);
        else it->second += v;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return RationalFunction(f.constant_ * g.constant_, std::move(out));
}

Point point_of(const FieldElem& a) {
    if (a.level() == 0) {
        const auto c = a.coords_at(0);
        return Point(std::to_string(c.empty() ? 0U : c[0]));
    }
    return Point(a.to_string());
}

Divisor divisor(const RationalFunction& f) {
    Divisor out;
    for (const auto& [r, v] : f.factors()) out[point_of(r)] = v;
    if (f.degree() != 0) out[Point::infinity()] = -f.degree();
    return out;
}

LaurentSeries germ_at(const RationalFunction& f, const FieldElem& a, std::size_t prec) {
    const FieldCtx& ctx = a.ctx();
    LaurentSeries out = LaurentSeries::constant(f.constant(), prec);
    int shift = 0;
    for (const auto& [r, v] : f.factors()) {
        if (r == a) shift = static_cast<int>(v);
        else out = out * linear_power(a - r, ctx.one(), v, prec);
    }
    return out.shifted(shift);
}

LaurentSeries germ_at_infinity(const RationalFunction& f, std::size_t prec) {
    const FieldCtx& ctx = f.constant().ctx();
    // x - r = z^{-1} (1 - r z)
    LaurentSeries out = LaurentSeries::constant(f.constant(), prec);
    for (const auto& [r, v] : f.factors()) out = out * linear_power(ctx.one(), -r, v, prec);
    return out.shifted(static_cast<int>(-f.degree()));
}

Idele germ_idele(const RationalFunction& f, const FieldCtx& ctx, std::size_t prec) {
    Idele out(ctx, prec);
    for (const auto& [r, _] : f.factors()) out.set(point_of(r), germ_at(f, r, prec));
    if (f.degree() != 0) out.set(Point::infinity(), germ_at_infinity(f, prec));
    return out;
}

SuperellipticClass classify_superelliptic(const RationalFunction& f, std::uint32_t p, FieldCtx& ctx,
                                          std::size_t prec, Admissibility mode) {
    const auto ip = static_cast<std::int64_t>(p);
    if (std::all_of(f.factors().begin(), f.factors().end(), [&](const auto& kv) { return mod(kv.second, ip) == 0; }))
        raise("PthPower", "f is a p-th power; the cover is trivial");

    SuperellipticClass out{ValuationVector(p), {}, ValuationClass(ValuationVector(p)), true, {}};
    std::int64_t g = 0;
    for (const auto& [r, v] : f.factors()) {
        if (v <= 0 || v >= ip) {
            out.admissible = false;
            if (mode == Admissibility::Strict)
                raise("NotAdmissible", "exponent " + std::to_string(v) + " at " + point_of(r).label() + " is not in (0, p)");
        }
        g = std::gcd(g, v);
    }
    if (mod(f.degree(), ip) != 0) {
        out.admissible = false;
        if (mode == Admissibility::Strict)
            raise("NotAdmissible", "sum of exponents is not divisible by p, so infinity ramifies");
    }
    if (g != 1) out.warnings.push_back("gcd of exponents is " + std::to_string(g) + "; the cover is reducible");

    const Idele t = germ_idele(f, ctx, prec);
    const ExtensionClass c = classify(t, CyclicSubgroup(GlobalAutomorphism::kummer(t, p, 1)), Character(p, 1));

    ValuationVector direct(p);
    for (const auto& [x, v] : divisor(f)) direct.set(x, v);
    if (!(direct == c.vec)) throw std::logic_error("superelliptic: germ classification disagrees with exponents mod p");

    out.vec = c.vec;
    for (const auto& [x, _] : c.vec.entries()) out.ram.insert(x);
    out.cls = valuation_class(c);
    return out;
}

}  // namespace adelic
