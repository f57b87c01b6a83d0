#pragma once

// Truncated Laurent series over the constant-field tower: the local fields
// K_x = k((z)) and their integers A_x = k[[z]].
//
// A nonzero series is z^val * (c_0 + c_1 z + ... + c_{prec-1} z^{prec-1} + O(z^prec))
// with c_0 != 0. The exact zero is a separate state and has no valuation.
// Results of arithmetic keep only coefficients known from both operands; a
// sum whose whole window cancels raises PrecisionExhausted unless the
// operands were exact negatives (same valuation, same window).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "adelic/field.hpp"

namespace adelic {

inline constexpr std::size_t kDefaultPrecision = 32;

class LaurentSeries {
public:
    /// Detached placeholder; assign before use.
    LaurentSeries() = default;

    static LaurentSeries zero(const FieldCtx& ctx);
    static LaurentSeries constant(const FieldElem& c, std::size_t prec = kDefaultPrecision);
    /// c * z^exponent
    static LaurentSeries monomial(const FieldElem& c, int exponent, std::size_t prec = kDefaultPrecision);
    /// Coefficients of z^val, z^{val+1}, ...; leading zeros shift the valuation.
    /// An all-zero window raises PrecisionExhausted.
    static LaurentSeries from_coeffs(int val, std::vector<FieldElem> coeffs);

    const FieldCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return zero_; }
    int valuation() const;
    /// Number of known coefficients starting at the leading term.
    std::size_t precision() const { return coeffs_.size(); }
    /// Exponent of the first unknown coefficient.
    long abs_precision() const;
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    const FieldElem& leading() const;
    /// Coefficient of z^e; throws PrecisionExhausted when e is not known.
    FieldElem coeff(long e) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries invert() const;
    LaurentSeries pow(long k) const;
    LaurentSeries scaled(const FieldElem& c) const;
    /// Multiplication by z^k.
    LaurentSeries shifted(int k) const;
    /// z^{-val} * this: the unit part.
    LaurentSeries unit_part() const;
    LaurentSeries truncated(std::size_t prec) const;

    /// True iff every coefficient is zero past the constant term (within the window).
    bool is_constant() const;

    /// Same valuation, same window, same coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    /// "z^v*(c0 + c1*z + ...)"; zero coefficients are omitted.
    std::string to_string() const;
    /// Parses the text form. Missing coefficients are zeros; the window is
    /// `prec` coefficients or the written span, whichever is longer.
    static LaurentSeries parse(const FieldCtx& ctx, std::string_view text,
                               std::size_t prec = kDefaultPrecision);

private:
    const FieldCtx* ctx_ = nullptr;
    bool zero_ = false;
    int val_ = 0;
    std::vector<FieldElem> coeffs_;
};

/// a and b agree on every coefficient known for both.
bool equal_within(const LaurentSeries& a, const LaurentSeries& b);

/// r with r^p = u, valuation 0; leading coefficient is the canonical p-th
/// root of u's; the 1 + m part is lifted by Newton iteration. NotAUnit unless
/// valuation(u) == 0.
LaurentSeries hensel_pth_root(const LaurentSeries& u, FieldCtx& ctx);
/// n-th root of a unit for any n prime to the characteristic.
LaurentSeries hensel_root(const LaurentSeries& u, std::uint64_t n, FieldCtx& ctx);
/// n-th root of any series whose valuation is divisible by n:
/// z^{v/n} * hensel_root(unit part). NotAPower otherwise.
LaurentSeries series_root(const LaurentSeries& s, std::uint64_t n, FieldCtx& ctx);

}  // namespace adelic
