#pragma once

// Rational functions on the projective line in factored form
//     f(x) = c · ∏ (x - x_i)^{v_i}
// with their divisors, local germs and the classification of the covers
// y^p = f(x). Local uniformizers: z = x - a at finite points, z = 1/x at ∞.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adelic/harrison.hpp"

namespace adelic {

class RationalFunction {
public:
    /// Throws ParseError for c = 0, a zero exponent or a repeated root.
    RationalFunction(FieldElem constant, std::vector<std::pair<FieldElem, std::int64_t>> factors);

    const FieldElem& constant() const { return constant_; }
    const std::vector<std::pair<FieldElem, std::int64_t>>& factors() const { return factors_; }
    std::int64_t degree() const;

    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);

private:
    FieldElem constant_;
    std::vector<std::pair<FieldElem, std::int64_t>> factors_;
};

/// Label of the finite point x = a: decimal for prime-field values.
Point point_of(const FieldElem& a);

using Divisor = std::map<Point, std::int64_t>;

/// Orders at the roots and at ∞ (zero entries omitted).
Divisor divisor(const RationalFunction& f);

/// Expansion of f at x = a.
LaurentSeries germ_at(const RationalFunction& f, const FieldElem& a, std::size_t prec);
LaurentSeries germ_at_infinity(const RationalFunction& f, std::size_t prec);

/// True germs at the roots and at ∞; the constant 1 stands in at every other
/// point (all unit germs, available exactly through germ_at).
Idele germ_idele(const RationalFunction& f, const FieldCtx& ctx, std::size_t prec);

enum class Admissibility { Strict, Lenient };

struct SuperellipticClass {
    ValuationVector vec;
    std::set<Point> ram;
    ValuationClass cls;
    bool admissible = true;
    std::vector<std::string> warnings;
};

/// Classifies y^p = f(x) through the germ idele and the Kummer action, and
/// checks the result against the exponents mod p. Raises PthPower when every
/// exponent is divisible by p; in Strict mode raises NotAdmissible unless
/// 0 < v_i < p for every root and Σ v_i ≡ 0 mod p.
SuperellipticClass classify_superelliptic(const RationalFunction& f, std::uint32_t p, FieldCtx& ctx,
                                          std::size_t prec = kDefaultPrecision,
                                          Admissibility mode = Admissibility::Strict);

}  // namespace adelic
