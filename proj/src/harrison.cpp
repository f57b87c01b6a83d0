#include "adelic/harrison.hpp"

#include "adelic/modular.hpp"

namespace adelic {

ValuationClass::ValuationClass(const ValuationVector& v) : canon_(v.p()) {
    if (v.empty()) return;
    const std::uint32_t first = v.entries().begin()->second;
    canon_ = v.scaled(inv_mod(first, v.p()));
}

ExtensionClass classify(const Idele& t, const CyclicSubgroup& g, const Character& chi) {
    const PrimitiveElement alpha = primitive_element(t, g, chi);
    return {valuation_vector(alpha.alpha_p, g.p()), ClassWitness{t, g.generator(), chi}};
}

ExtensionClass trivial_class(std::uint32_t p) { return {ValuationVector(p), std::nullopt}; }

ExtensionClass product(const ExtensionClass& a, const ExtensionClass& b) {
    if (a.p() != b.p()) throw std::invalid_argument("product: classes for different p");
    return {a.vec + b.vec, std::nullopt};
}

ExtensionClass inverse(const ExtensionClass& a) { return {-a.vec, std::nullopt}; }

bool equivariant_isomorphic(const ExtensionClass& a, const ExtensionClass& b) { return a.vec == b.vec; }

ValuationClass valuation_class(const ExtensionClass& c) { return ValuationClass(c.vec); }

std::optional<std::uint32_t> conjugating_unit(const ExtensionClass& a, const ExtensionClass& c) {
    if (a.p() != c.p()) throw std::invalid_argument("conjugate: classes for different p");
    for (std::uint32_t b = 1; b < a.p(); ++b)
        if (a.vec == c.vec.scaled(b)) return b;
    return std::nullopt;
}

bool conjugate(const ExtensionClass& a, const ExtensionClass& c) { return valuation_class(a) == valuation_class(c); }

bool algebra_isomorphic(const Idele& t1, const Idele& t2, std::uint64_t n) {
    return ram_profile(Adele(t1), n) == ram_profile(Adele(t2), n);
}

ExtensionClass kummer_map(const Idele& t, std::uint32_t p) { return {valuation_vector(t, p), std::nullopt}; }

Idele kummer_inverse(const ExtensionClass& c, const FieldCtx& ctx, std::size_t prec) {
    Idele out(ctx, prec);
    for (const auto& [x, v] : c.vec.entries())
        out.set(x, LaurentSeries::monomial(ctx.one(), static_cast<int>(v), prec));
    return out;
}

std::set<ValuationClass> classes_supported_on(const std::vector<Point>& points, std::uint32_t p) {
    std::set<ValuationClass> out;
    std::vector<std::uint32_t> digits(points.size(), 0);
    while (true) {
        ValuationVector v(p);
        for (std::size_t i = 0; i < points.size(); ++i) v.set(points[i], digits[i]);
        out.insert(ValuationClass(v));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

}  // namespace adelic
