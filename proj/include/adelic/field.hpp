#pragma once

// Finite-field tower F_l = L0 ⊂ L1 ⊂ L2 ⊂ ... used as the constant field.
//
// Level k is L(k-1)[y]/(f_k(y)) for a monic irreducible f_k over L(k-1).
// Elements are stored as flat coordinate vectors over F_l: the coordinate of
// y_1^{i_1} ... y_k^{i_k} sits at index i_1 + d_1 (i_2 + d_2 (...)), so an
// element of L(k-1) embeds into L(k) by zero padding. Every FieldElem is kept
// at the lowest level that contains it.
//
// The tower grows on demand (roots of unity, r-th roots). A FieldCtx is
// append-only: growing it never invalidates existing elements. Growth must be
// serialized by the caller; concurrent read-only arithmetic is safe.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace adelic {

class FieldCtx;

class FieldElem {
public:
    /// A detached placeholder; only assignment and destruction are valid.
    FieldElem() = default;
    FieldElem(const FieldCtx& ctx, std::int64_t value);

    static FieldElem from_coords(const FieldCtx& ctx, std::size_t level,
                                 std::vector<std::uint32_t> coords);

    const FieldCtx& ctx() const { return *ctx_; }
    bool attached() const { return ctx_ != nullptr; }
    std::size_t level() const { return level_; }
    std::span<const std::uint32_t> coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;

    /// Coordinates after embedding into `level` (>= this->level()).
    std::vector<std::uint32_t> coords_at(std::size_t level) const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    /// this += a * b without a temporary for the product.
    FieldElem& add_product(const FieldElem& a, const FieldElem& b);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);

    FieldElem inverse() const;
    FieldElem pow(const mpz_class& e) const;
    FieldElem pow(std::int64_t e) const { return pow(mpz_class(static_cast<long>(e))); }

    /// "L<level>:[c0,c1,...]", lowest coordinate first.
    std::string to_string() const;

    /// Accepts "L<k>:[...]" or a bare (possibly negative) integer.
    static FieldElem parse(const FieldCtx& ctx, std::string_view text);

private:
    FieldElem(const FieldCtx* ctx, std::size_t level, std::vector<std::uint32_t> coords);
    void normalize();

    const FieldCtx* ctx_ = nullptr;
    std::size_t level_ = 0;
    std::vector<std::uint32_t> coords_;

    friend class FieldCtx;
};

/// Lexicographic order on coordinates at the common level; this is the
/// enumeration order used for every canonical choice.
bool lex_less(const FieldElem& a, const FieldElem& b);

using FieldPoly = std::vector<FieldElem>;  ///< coefficients, lowest degree first

class FieldCtx {
public:
    static constexpr std::uint64_t kDefaultSeed = 0x5eed'ade1'1c00ULL;

    FieldCtx(std::uint32_t ell, std::uint32_t p, std::uint64_t seed = kDefaultSeed);
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::uint32_t ell() const { return ell_; }
    std::uint32_t p() const { return p_; }

    std::size_t num_levels() const { return levels_.size(); }
    std::size_t top_level() const { return levels_.size() - 1; }
    std::size_t abs_degree(std::size_t level) const { return levels_.at(level).abs_degree; }
    std::size_t rel_degree(std::size_t level) const { return levels_.at(level).rel_degree; }
    /// Number of elements of the level.
    const mpz_class& order(std::size_t level) const { return levels_.at(level).order; }
    /// Monic defining polynomial of `level` over `level - 1` (level >= 1).
    const FieldPoly& modulus(std::size_t level) const;

    FieldElem zero() const { return FieldElem(*this, 0); }
    FieldElem one() const { return FieldElem(*this, 1); }
    FieldElem elem(std::int64_t v) const { return FieldElem(*this, v); }

    /// Distinguished primitive p-th root of unity, adjoined on first use.
    const FieldElem& ensure_zeta();
    /// The cached zeta; throws std::logic_error if ensure_zeta() never ran.
    const FieldElem& zeta() const;
    /// Canonical primitive m-th root of unity (gcd(m, l) = 1).
    const FieldElem& root_of_unity(std::uint64_t m);

    /// c in [0, p) with zeta^c = w. Throws NotARootOfUnity unless w^p = 1.
    std::uint32_t log_zeta(const FieldElem& w);

    /// Canonical p-th root: smallest (lex) root at the lowest sufficient level.
    FieldElem pth_root(const FieldElem& a);
    /// Some r-th root for a prime r != l; canonical in the same sense.
    FieldElem prime_root(const FieldElem& a, std::uint64_t r);
    /// An n-th root obtained by chaining prime roots (gcd(n, l) = 1).
    FieldElem nth_root(const FieldElem& a, std::uint64_t n);

    bool is_power_at(const FieldElem& a, std::uint64_t r, std::size_t level) const;

    /// Appends a level defined by a monic polynomial over the top level.
    /// Throws DomainError "Reducible" when the polynomial fails the test.
    std::size_t adjoin(const FieldPoly& monic);
    /// Appends a random irreducible extension of the given degree.
    std::size_t extend_by_degree(std::size_t degree);

    /// Rabin's test: f of degree d is irreducible over `level` iff
    /// X^{Q^d} = X mod f and gcd(X^{Q^{d/r}} - X, f) = 1 for primes r | d.
    bool is_irreducible_over(const FieldPoly& f, std::size_t level) const;

    FieldElem random(std::size_t level, std::mt19937_64& rng) const;
    FieldElem random_nonzero(std::size_t level, std::mt19937_64& rng) const;

    // Raw coordinate arithmetic, exposed for FieldElem.
    std::vector<std::uint32_t> mul_raw(std::size_t level, std::span<const std::uint32_t> a,
                                       std::span<const std::uint32_t> b) const;

private:
    struct Level {
        std::size_t rel_degree = 1;
        std::size_t abs_degree = 1;
        mpz_class order;
        FieldPoly modulus;                                  // over level - 1
        std::vector<std::vector<std::uint32_t>> modulus_raw;  // coords at level - 1
        // e_i * e_j in absolute coordinates, row i * abs_degree + j; empty when not tabulated
        std::vector<std::vector<std::uint32_t>> products;
    };

    FieldElem root_at_level(const FieldElem& a, std::uint64_t r, std::size_t level);
    std::size_t append_level(const FieldPoly& monic);

    std::uint32_t ell_;
    std::uint32_t p_;
    std::vector<Level> levels_;
    std::map<std::uint64_t, FieldElem> roots_of_unity_;
    std::mt19937_64 rng_;
};

namespace poly {

void trim(FieldPoly& f);
FieldPoly mul(const FieldPoly& a, const FieldPoly& b);
FieldPoly sub(const FieldPoly& a, const FieldPoly& b);
/// Remainder of a modulo b (b nonzero).
FieldPoly rem(const FieldPoly& a, const FieldPoly& b);
FieldPoly gcd(FieldPoly a, FieldPoly b);
FieldPoly powmod(const FieldPoly& base, const mpz_class& e, const FieldPoly& modulus);
std::size_t degree(const FieldPoly& f);

}  // namespace poly

}  // namespace adelic
