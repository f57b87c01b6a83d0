#include "adelic/adeles.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "adelic/errors.hpp"
#include "adelic/modular.hpp"

namespace adelic {

namespace {

const std::string kInfinity = "∞";

template <class Map>
std::set<Point> keys_of(const Map& a, const Map& b) {
    std::set<Point> out;
    for (const auto& [x, _] : a) out.insert(x);
    for (const auto& [x, _] : b) out.insert(x);
    return out;
}

}  // namespace

Point::Point(std::string label) : label_(label == "inf" ? kInfinity : std::move(label)) {}

Point Point::infinity() { return Point(kInfinity); }

bool Point::is_infinity() const { return label_ == kInfinity; }

std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.is_infinity() != b.is_infinity()) return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.label_ <=> b.label_;
}

// ---------------------------------------------------------------------------

Idele::Idele(const FieldCtx& ctx, std::size_t prec) : default_(LaurentSeries::constant(ctx.one(), prec)) {}

Idele::Idele(LaurentSeries default_value) : default_(std::move(default_value)) {
    if (default_.is_zero() || default_.valuation() != 0)
        raise("InvalidIdele", "the default component must have valuation 0");
}

const LaurentSeries& Idele::at(const Point& x) const {
    auto it = exceptions_.find(x);
    return it == exceptions_.end() ? default_ : it->second;
}

void Idele::set(const Point& x, LaurentSeries value) {
    if (value.is_zero()) raise("ZeroComponent", "idele component at " + x.label() + " is zero");
    if (value == default_) exceptions_.erase(x);
    else exceptions_.insert_or_assign(x, std::move(value));
}

Idele Idele::inverse() const {
    Idele out(default_.invert());
    for (const auto& [x, v] : exceptions_) out.set(x, v.invert());
    return out;
}

Idele Idele::pow(long k) const {
    Idele out(default_.pow(k));
    for (const auto& [x, v] : exceptions_) out.set(x, v.pow(k));
    return out;
}

Idele operator*(const Idele& a, const Idele& b) {
    Idele out(a.default_ * b.default_);
    for (const auto& x : keys_of(a.exceptions_, b.exceptions_)) out.set(x, a.at(x) * b.at(x));
    return out;
}

bool operator==(const Idele& a, const Idele& b) {
    if (!(a.default_ == b.default_)) return false;
    for (const auto& x : keys_of(a.exceptions_, b.exceptions_))
        if (!(a.at(x) == b.at(x))) return false;
    return true;
}

// ---------------------------------------------------------------------------

Adele::Adele(LaurentSeries default_value) : default_(std::move(default_value)) {
    if (!default_.is_zero() && default_.valuation() < 0)
        raise("InvalidAdele", "the default component must be integral");
}

Adele::Adele(const Idele& t) : default_(t.default_value()), exceptions_(t.exceptions()) {}

const LaurentSeries& Adele::at(const Point& x) const {
    auto it = exceptions_.find(x);
    return it == exceptions_.end() ? default_ : it->second;
}

void Adele::set(const Point& x, LaurentSeries value) {
    if (value == default_) exceptions_.erase(x);
    else exceptions_.insert_or_assign(x, std::move(value));
}

// ---------------------------------------------------------------------------

ValuationVector::ValuationVector(std::uint32_t p, const std::map<Point, std::int64_t>& entries) : p_(p) {
    for (const auto& [x, v] : entries) set(x, v);
}

std::uint32_t ValuationVector::operator[](const Point& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
}

void ValuationVector::set(const Point& x, std::int64_t residue) {
    const auto r = static_cast<std::uint32_t>(mod(residue, p_));
    if (r == 0) entries_.erase(x);
    else entries_[x] = r;
}

ValuationVector ValuationVector::operator+(const ValuationVector& o) const {
    if (o.p_ != p_) throw std::invalid_argument("ValuationVector: mismatched p");
    ValuationVector out = *this;
    for (const auto& [x, v] : o.entries_) out.set(x, static_cast<std::int64_t>((*this)[x]) + v);
    return out;
}

ValuationVector ValuationVector::operator-() const { return scaled(-1); }

ValuationVector ValuationVector::scaled(std::int64_t k) const {
    ValuationVector out(p_);
    for (const auto& [x, v] : entries_) out.set(x, k * static_cast<std::int64_t>(v));
    return out;
}

std::string ValuationVector::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [x, v] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << x.label() << ':' << v;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------

ValuationVector valuation_vector(const Idele& t, std::uint32_t p) {
    ValuationVector out(p);
    for (const auto& [x, v] : t.exceptions()) out.set(x, v.valuation());
    return out;
}

RamProfile ram_profile(const Adele& t, std::uint64_t n) {
    RamProfile out{n, {}};
    auto index = [&](const Point& x, const LaurentSeries& v) -> std::uint64_t {
        if (v.is_zero()) raise("ZeroComponent", "component at " + x.label() + " is zero");
        const auto val = static_cast<std::uint64_t>(std::abs(static_cast<std::int64_t>(v.valuation())));
        return n / std::gcd(n, val);
    };
    if (index("(default)", t.default_value()) != 1)
        raise("InfiniteLocus", "the default component ramifies at almost every point");
    for (const auto& [x, v] : t.exceptions()) {
        const auto e = index(x, v);
        if (e > 1) out.e[x] = e;
    }
    return out;
}

bool is_pth_power(const Idele& t, std::uint32_t p) { return valuation_vector(t, p).empty(); }

Idele pth_root(const Idele& t, FieldCtx& ctx) {
    if (!is_pth_power(t, ctx.p())) raise("NotAPower", "valuation vector is not zero");
    Idele out(hensel_pth_root(t.default_value(), ctx));
    for (const auto& [x, v] : t.exceptions()) out.set(x, series_root(v, ctx.p(), ctx));
    return out;
}

}  // namespace adelic
