#pragma once

// Local algebras K_x{t_x} = K_x[T]/(T^n - t_x) and their automorphisms.
//
// Elements are kept in the basis 1, T, ..., T^{n-1}. For prime n = p the
// algebra is a field when p does not divide υ(t_x) (ramified point) and splits
// as ∏^p K_x via ψ(P) = (P(τ), P(ζτ), ..., P(ζ^{p-1}τ)) when it does
// (unramified point), τ being the canonical p-th root of t_x.
//
// Every automorphism of K_x{t_x} used here acts on coefficients as
//     c'_j = Σ_m M[j][m] τ^{m-j} c_m
// with M a constant matrix over k (a "twisted" matrix). Constant matrices
// compose exactly, so combinations of automorphisms are formed over k before
// any series arithmetic happens.

#include <cstdint>
#include <optional>
#include <vector>

#include "adelic/laurent.hpp"

namespace adelic {

/// One-line permutation of {1..p}, 1-based: sigma[i-1] = σ(i).
using Permutation = std::vector<std::uint32_t>;

namespace perm {

Permutation identity(std::uint32_t p);
/// i ↦ i + a (mod p).
Permutation shift(std::uint32_t p, std::int64_t a);
/// (f ∘ g)(i) = f(g(i)).
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
Permutation power(const Permutation& f, std::int64_t k);
std::uint64_t order(const Permutation& f);
/// Throws ParseError unless f is a permutation of {1..p}.
void validate(const Permutation& f, std::uint32_t p);
/// Size of the orbit of `start` under the cyclic group generated by f.
std::size_t orbit_size(const Permutation& f, std::uint32_t start);

}  // namespace perm

/// g_x ∈ 𝔾_x(t). Ramified kind: T ↦ ζ^a T. Unramified kind: permutation of
/// split coordinates, (σ·v)_i = v_{σ(i)}. At an unramified point the
/// ramified kind with exponent a is the same map as the shift i ↦ i + a.
class LocalAutomorphism {
public:
    static LocalAutomorphism ramified(std::uint32_t p, std::int64_t a);
    static LocalAutomorphism unramified(Permutation sigma);

    std::uint32_t p() const { return p_; }
    bool is_ramified_kind() const { return sigma_.empty(); }
    std::uint32_t a() const { return a_; }
    const Permutation& sigma() const { return sigma_; }

    /// The action on split coordinates (a shift for the ramified kind).
    Permutation as_permutation() const;
    std::uint64_t order() const;
    bool is_identity() const;

    LocalAutomorphism inverse() const;
    LocalAutomorphism pow(std::int64_t k) const;

    /// Same kind and data.
    friend bool operator==(const LocalAutomorphism&, const LocalAutomorphism&) = default;

private:
    std::uint32_t p_ = 0;
    std::uint32_t a_ = 0;
    Permutation sigma_;
};

/// h ∘ g: first g, then h.
LocalAutomorphism compose(const LocalAutomorphism& h, const LocalAutomorphism& g);
/// Equal as maps on an unramified algebra.
bool same_action(const LocalAutomorphism& g, const LocalAutomorphism& h);

/// p×p constant matrix describing an automorphism (see header comment).
struct TwistedMatrix {
    std::vector<std::vector<FieldElem>> m;

    std::size_t size() const { return m.size(); }
    bool is_diagonal() const;
    friend TwistedMatrix operator*(const TwistedMatrix& a, const TwistedMatrix& b);
    friend TwistedMatrix operator+(const TwistedMatrix& a, const TwistedMatrix& b);
    TwistedMatrix scaled(const FieldElem& c) const;
    friend bool operator==(const TwistedMatrix&, const TwistedMatrix&) = default;
};

/// Σ c_j T^j; a zero coefficient is the exact zero series.
struct LocalElement {
    std::vector<LaurentSeries> c;
};

/// Local eigenvector data for a primitive element.
///   Monomial: α = w·T^b.
///   Split (unramified points only): ψ(α) = w·(ζ^{c_1}, ..., ζ^{c_p}).
struct LocalPrimitive {
    enum class Form { Monomial, Split };
    Form form = Form::Monomial;
    std::uint32_t b = 0;
    std::vector<std::uint32_t> c;
    LaurentSeries w;
};

enum class LocalKind { Unramified, TotallyRamified, Mixed };

const char* to_string(LocalKind kind);

class LocalStructure {
public:
    /// Raises ZeroParameter for t_x = 0. Computes m = gcd(n, υ(t_x)),
    /// e = n / m, τ = canonical m-th root of t_x and ξ = primitive m-th root
    /// of unity (ξ = ζ when m = p).
    LocalStructure(const LaurentSeries& t_x, std::uint64_t n, FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }
    const LaurentSeries& t() const { return t_; }
    std::uint64_t n() const { return n_; }
    std::uint64_t m() const { return m_; }
    std::uint64_t e() const { return e_; }
    LocalKind kind() const { return kind_; }
    bool ramified() const { return e_ > 1; }
    const LaurentSeries& tau() const { return tau_; }
    const FieldElem& xi() const { return xi_; }
    std::size_t precision() const { return t_.precision(); }

    /// ξ^i τ for i = 0..m-1: T^n - t = ∏ (T^e - ξ^i τ).
    std::vector<LaurentSeries> factor_constants() const;

    // The remaining members need n = p.

    LocalElement zero() const;
    LocalElement one() const;
    LocalElement monomial(const LaurentSeries& w, std::uint32_t b) const;
    LocalElement element(const LocalPrimitive& alpha) const;
    LocalElement multiply(const LocalElement& a, const LocalElement& b) const;
    LocalElement power(const LocalElement& a, std::uint64_t k) const;
    LocalElement scaled(const LocalElement& a, const FieldElem& c) const;

    /// Raises InvalidAutomorphism for an unramified-kind automorphism at a
    /// ramified point.
    TwistedMatrix matrix(const LocalAutomorphism& g) const;
    LocalElement apply(const TwistedMatrix& m, const LocalElement& a) const;
    LocalElement apply(const LocalAutomorphism& g, const LocalElement& a) const;

    /// ψ(a); unramified points only.
    std::vector<LaurentSeries> split(const LocalElement& a) const;
    /// ψ(α) computed from the eigenvector data, no cancellation involved.
    std::vector<LaurentSeries> split(const LocalPrimitive& alpha) const;
    /// ψ^{-1}(w · v) for a constant vector v.
    LocalElement from_split(const LaurentSeries& w, const std::vector<FieldElem>& v) const;

    /// α^p as an element of K_x.
    LaurentSeries pth_power(const LocalPrimitive& alpha) const;

private:
    void require_prime() const;
    const LaurentSeries& tau_power(long k) const;

    FieldCtx* ctx_;
    LaurentSeries t_;
    std::uint64_t n_, m_, e_;
    LocalKind kind_;
    LaurentSeries tau_;
    FieldElem xi_;
    mutable std::vector<std::optional<LaurentSeries>> tau_powers_;  // index k + n
};

/// a and b agree coefficientwise on every known coefficient.
bool equal_within(const LocalElement& a, const LocalElement& b);

/// φ: K_x{t1} → K_x{t2}, T ↦ τ·T^b, with τ^p · t2^b = t1.
struct LocalIsomorphism {
    std::uint32_t b = 1;
    LaurentSeries tau;
};

/// Raises IncompatibleStructure when the ramification indices differ. When
/// υ(t1) = υ(t2), b = 1 and τ = hensel_pth_root(t1/t2).
LocalIsomorphism local_isom(const LaurentSeries& t1, const LaurentSeries& t2, FieldCtx& ctx);

/// ⟨g, λ⟩ = ζ^{a·λ_val·t_val^{-1}}. Raises UnramifiedPoint if p | t_val.
FieldElem kummer_pair(std::int64_t a, std::int64_t lambda_val, std::int64_t t_val, FieldCtx& ctx);

/// g(λ^{1/p}) / λ^{1/p} computed by writing λ = t^c·w^p with explicit roots
/// and applying T ↦ ζ^a T inside K_x{t}.
FieldElem oracle_pair(std::int64_t a, const LaurentSeries& lambda, const LaurentSeries& t, FieldCtx& ctx);

/// Characteristic polynomial of multiplication by α, coefficients lowest
/// degree first (monic of degree p). Raises NonInvertible if w = 0.
std::vector<LaurentSeries> char_poly_primitive(const LocalPrimitive& alpha, const LocalStructure& s);

/// Determinant of a square matrix of series by the Leibniz expansion,
/// skipping products that contain an exact zero.
LaurentSeries leibniz_det(const std::vector<std::vector<LaurentSeries>>& m, const FieldCtx& ctx);

/// Characteristic polynomial of a constant matrix over k (principal minors).
std::vector<FieldElem> char_poly(const std::vector<std::vector<FieldElem>>& m, const FieldCtx& ctx);

/// For every nonzero idempotent e of K_x{t}, g and h differ after
/// multiplication by e (searched over split basis vectors).
bool strongly_distinct(const LocalAutomorphism& g, const LocalAutomorphism& h, const LocalStructure& s);

}  // namespace adelic
