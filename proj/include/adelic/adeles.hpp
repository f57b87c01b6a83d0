#pragma once

// Adeles and ideles over an abstract set of closed points.
//
// An idele is stored as a finite map of exceptional components plus one
// default component of valuation 0 used at every other point. Adeles use the
// same layout but allow zero components and a default of valuation >= 0.

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "adelic/laurent.hpp"

namespace adelic {

/// Label of a closed point. Labels compare lexicographically except that the
/// point at infinity ("∞", also accepted as "inf") sorts after everything.
class Point {
public:
    Point() = default;
    Point(std::string label);  // NOLINT(google-explicit-constructor)
    Point(const char* label) : Point(std::string(label)) {}  // NOLINT

    static Point infinity();

    const std::string& label() const { return label_; }
    bool is_infinity() const;

    friend std::strong_ordering operator<=>(const Point& a, const Point& b);
    friend bool operator==(const Point& a, const Point& b) { return a.label_ == b.label_; }

private:
    std::string label_;
};

class Idele {
public:
    /// The unit idele: default 1 at precision `prec`, no exceptions.
    explicit Idele(const FieldCtx& ctx, std::size_t prec = kDefaultPrecision);
    /// Raises InvalidIdele unless `default_value` has valuation 0.
    explicit Idele(LaurentSeries default_value);

    const FieldCtx& ctx() const { return default_.ctx(); }
    const LaurentSeries& default_value() const { return default_; }
    const std::map<Point, LaurentSeries>& exceptions() const { return exceptions_; }

    /// Component at x (the default when x is not listed).
    const LaurentSeries& at(const Point& x) const;
    /// Raises ZeroComponent for the zero series; drops entries equal to the default.
    void set(const Point& x, LaurentSeries value);

    Idele inverse() const;
    Idele pow(long k) const;
    friend Idele operator*(const Idele& a, const Idele& b);
    friend Idele operator/(const Idele& a, const Idele& b) { return a * b.inverse(); }
    friend bool operator==(const Idele& a, const Idele& b);

private:
    LaurentSeries default_;
    std::map<Point, LaurentSeries> exceptions_;
};

class Adele {
public:
    /// Raises InvalidAdele if the default has negative valuation.
    explicit Adele(LaurentSeries default_value);
    Adele(const Idele& t);  // NOLINT(google-explicit-constructor)

    const LaurentSeries& default_value() const { return default_; }
    const std::map<Point, LaurentSeries>& exceptions() const { return exceptions_; }
    const LaurentSeries& at(const Point& x) const;
    void set(const Point& x, LaurentSeries value);

private:
    LaurentSeries default_;
    std::map<Point, LaurentSeries> exceptions_;
};

/// A finitely supported vector in ⊕_x Z/(p). Zero entries are never stored.
class ValuationVector {
public:
    explicit ValuationVector(std::uint32_t p) : p_(p) {}
    ValuationVector(std::uint32_t p, const std::map<Point, std::int64_t>& entries);

    std::uint32_t p() const { return p_; }
    const std::map<Point, std::uint32_t>& entries() const { return entries_; }
    std::uint32_t operator[](const Point& x) const;
    void set(const Point& x, std::int64_t residue);
    bool empty() const { return entries_.empty(); }

    ValuationVector operator+(const ValuationVector& o) const;
    ValuationVector operator-() const;
    ValuationVector scaled(std::int64_t k) const;
    friend bool operator==(const ValuationVector&, const ValuationVector&) = default;

    std::string to_string() const;

private:
    std::uint32_t p_;
    std::map<Point, std::uint32_t> entries_;
};

struct RamProfile {
    std::uint64_t n = 0;
    std::map<Point, std::uint64_t> e;  ///< only points with e_x > 1

    friend bool operator==(const RamProfile&, const RamProfile&) = default;
};

/// (υ_x(t_x) mod p)_x.
ValuationVector valuation_vector(const Idele& t, std::uint32_t p);

/// e_x = n / gcd(n, υ_x(t_x)) for every point with e_x > 1. Raises
/// ZeroComponent for a zero component and InfiniteLocus when the default's
/// valuation is not divisible by n.
RamProfile ram_profile(const Adele& t, std::uint64_t n);

bool is_pth_power(const Idele& t, std::uint32_t p);

/// u with u^p = t componentwise. Raises NotAPower unless is_pth_power(t, p).
Idele pth_root(const Idele& t, FieldCtx& ctx);

}  // namespace adelic
