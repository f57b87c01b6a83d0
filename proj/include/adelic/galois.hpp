#pragma once

// The global automorphism group 𝔾(t) = ∏_x 𝔾_x(t) of A_X{t} = 𝔸_X[T]/(T^p - t),
// p-cyclic subgroups, characters, primitive elements and conjugations.
//
// A GlobalAutomorphism lists finitely many local components and applies one
// default permutation at every other point. All unlisted points must be
// unramified for t.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "adelic/adeles.hpp"
#include "adelic/local_algebra.hpp"

namespace adelic {

class GlobalAutomorphism {
public:
    GlobalAutomorphism(Permutation default_sigma, std::map<Point, LocalAutomorphism> exceptions = {});

    static GlobalAutomorphism identity(std::uint32_t p);
    /// T ↦ ζ^a T at every point (the Kummer action when a = 1).
    static GlobalAutomorphism kummer(const Idele& t, std::uint32_t p, std::int64_t a = 1);

    std::uint32_t p() const { return static_cast<std::uint32_t>(default_sigma_.size()); }
    const Permutation& default_sigma() const { return default_sigma_; }
    const std::map<Point, LocalAutomorphism>& exceptions() const { return exceptions_; }
    LocalAutomorphism at(const Point& x) const;

    bool is_identity() const;
    GlobalAutomorphism inverse() const;
    GlobalAutomorphism pow(std::int64_t k) const;

    /// Raises InvalidAutomorphism unless every ramified point of t is listed
    /// with a ramified-kind component.
    void validate(const Idele& t) const;

    /// Same action at every point.
    friend bool operator==(const GlobalAutomorphism& g, const GlobalAutomorphism& h);

private:
    Permutation default_sigma_;
    std::map<Point, LocalAutomorphism> exceptions_;
};

/// h ∘ g, pointwise.
GlobalAutomorphism compose(const GlobalAutomorphism& h, const GlobalAutomorphism& g);

/// The subgroup generated by a designated non-identity generator.
class CyclicSubgroup {
public:
    explicit CyclicSubgroup(GlobalAutomorphism generator);
    const GlobalAutomorphism& generator() const { return gen_; }
    std::uint32_t p() const { return gen_.p(); }

private:
    GlobalAutomorphism gen_;
};

/// χ(generator) = ζ^s with s ≠ 0 mod p.
class Character {
public:
    Character(std::uint32_t p, std::int64_t s);
    std::uint32_t p() const { return p_; }
    std::uint32_t s() const { return s_; }
    friend bool operator==(const Character&, const Character&) = default;

private:
    std::uint32_t p_;
    std::uint32_t s_;
};

struct PrimitiveElement {
    std::map<Point, LocalPrimitive> parts;
    LocalPrimitive default_part;
    Idele alpha_p;

    const LocalPrimitive& at(const Point& x) const;
};

/// Entries a_x · υ_x(t_x)^{-1} mod p over the ramified points.
struct RamTuple {
    std::uint32_t p = 0;
    std::map<Point, std::uint32_t> entries;

    RamTuple scaled(std::int64_t k) const;
    friend bool operator==(const RamTuple&, const RamTuple&) = default;
};

/// Points where p does not divide υ_x(t_x).
std::set<Point> ramified_points(const Idele& t, std::uint32_t p);

/// Every component of the generator has order p.
bool is_pointwise_transitive(const CyclicSubgroup& g, const Idele& t);
/// Brute force: every projected component group is transitive on {1..p}.
bool is_pointwise_transitive_by_orbits(const CyclicSubgroup& g, const Idele& t);
bool is_galois(const Idele& t, const CyclicSubgroup& g);

/// Raises NotGalois.
PrimitiveElement primitive_element(const Idele& t, const CyclicSubgroup& g, const Character& chi);

/// Checks g(α) = χ(g)α at every listed point and at a generic default point,
/// and that alpha_p matches the local p-th powers.
bool verify_primitive(const PrimitiveElement& alpha, const Idele& t, const CyclicSubgroup& g, const Character& chi,
                      FieldCtx& ctx);

/// Raises NotTransitive.
RamTuple ram_tuple(const CyclicSubgroup& g, const Idele& t);

/// b with ram_tuple(g1) = b · ram_tuple(g2), or nothing. Raises NotTransitive.
std::optional<std::uint32_t> galois_equivalent(const CyclicSubgroup& g1, const CyclicSubgroup& g2, const Idele& t);

/// π_Ram(G) as an explicit set of tuples (a_x)_{x ∈ Ram}, one per group element.
std::set<std::vector<std::uint32_t>> ram_projection(const CyclicSubgroup& g, const Idele& t);

struct Conjugation {
    std::uint32_t k = 1;  ///< τ(g1) = g2^k
    Character chi2;       ///< χ1 ∘ τ^{-1}
    GlobalAutomorphism phi;
    PrimitiveElement alpha1, alpha2;
    Idele u;              ///< φ(α1) = u · α2
};

/// Builds (φ, τ) with φ ∘ g = τ(g) ∘ φ. Raises NotEquivalent when the
/// ramified projections differ; throws std::logic_error if the result fails
/// verify_conjugation.
Conjugation construct_conjugation(const CyclicSubgroup& g1, const CyclicSubgroup& g2, const Idele& t,
                                  const Character& chi1, FieldCtx& ctx);

/// φ ∘ g1 = g2^k ∘ φ as automorphisms, φ(α1) = u·α2 and φ(α1^j) = (u·α2)^j in
/// split coordinates, and the identity on 3 random algebra elements per point.
bool verify_conjugation(const Conjugation& c, const CyclicSubgroup& g1, const CyclicSubgroup& g2, const Idele& t,
                        FieldCtx& ctx);

/// Finitely supported element of A_X{t} (zero at unlisted points).
struct AlgebraElement {
    std::map<Point, LocalElement> parts;
};

/// e_χ = (1/p) Σ_k χ(g^k)^{-1} g^k applied pointwise. Raises NotGalois.
AlgebraElement eigenproject(const AlgebraElement& sample, const CyclicSubgroup& g, const Character& chi,
                            const Idele& t, FieldCtx& ctx);

/// A label not used by any of the given ideles or automorphisms; stands for
/// every unlisted point.
Point generic_point(const Idele& t, const std::vector<const GlobalAutomorphism*>& autos);

}  // namespace adelic
