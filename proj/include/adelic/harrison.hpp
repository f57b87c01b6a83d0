#pragma once

// Classes of p-cyclic extensions of the adeles, kept as valuation vectors.
// Group operations are vector arithmetic mod p; conjugacy classes are
// (Z/p)^* orbits with a canonical representative.

#include <optional>
#include <set>
#include <vector>

#include "adelic/adeles.hpp"
#include "adelic/galois.hpp"

namespace adelic {

/// The (t, G, χ) a class was computed from, kept for diagnostics.
struct ClassWitness {
    Idele t;
    GlobalAutomorphism generator;
    Character chi;
};

struct ExtensionClass {
    ValuationVector vec;
    std::optional<ClassWitness> witness;

    std::uint32_t p() const { return vec.p(); }
    /// Ignores the witness.
    friend bool operator==(const ExtensionClass& a, const ExtensionClass& b) { return a.vec == b.vec; }
};

/// Orbit of a valuation vector under (Z/p)^*, represented by the multiple
/// whose first nonzero entry (in point order) is 1.
class ValuationClass {
public:
    explicit ValuationClass(const ValuationVector& v);

    const ValuationVector& canonical() const { return canon_; }
    bool trivial() const { return canon_.empty(); }

    friend bool operator==(const ValuationClass&, const ValuationClass&) = default;
    friend bool operator<(const ValuationClass& a, const ValuationClass& b) {
        return a.canon_.entries() < b.canon_.entries();
    }

private:
    ValuationVector canon_;
};

/// υ(α^p) for a (G, χ)-primitive element α. Raises NotGalois.
ExtensionClass classify(const Idele& t, const CyclicSubgroup& g, const Character& chi);

ExtensionClass trivial_class(std::uint32_t p);
ExtensionClass product(const ExtensionClass& a, const ExtensionClass& b);
ExtensionClass inverse(const ExtensionClass& a);

bool equivariant_isomorphic(const ExtensionClass& a, const ExtensionClass& b);

ValuationClass valuation_class(const ExtensionClass& c);
/// b with a.vec = b · c.vec, if any.
std::optional<std::uint32_t> conjugating_unit(const ExtensionClass& a, const ExtensionClass& c);
bool conjugate(const ExtensionClass& a, const ExtensionClass& c);

/// A{t1} ≅ A{t2} as algebras, for ideles: equal ramification profiles.
bool algebra_isomorphic(const Idele& t1, const Idele& t2, std::uint64_t n);

ExtensionClass kummer_map(const Idele& t, std::uint32_t p);
/// z^v at each support point, 1 elsewhere.
Idele kummer_inverse(const ExtensionClass& c, const FieldCtx& ctx, std::size_t prec = kDefaultPrecision);

/// Every conjugacy class with support inside `points`, trivial class included.
std::set<ValuationClass> classes_supported_on(const std::vector<Point>& points, std::uint32_t p);

}  // namespace adelic
