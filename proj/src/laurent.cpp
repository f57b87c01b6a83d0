#include "adelic/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

using Coeffs = std::vector<FieldElem>;

// Truncated power-series helpers on raw coefficient arrays (no valuation).

Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, std::size_t n, const FieldCtx& ctx) {
    Coeffs out(n, ctx.zero());
    for (std::size_t i = 0; i < std::min(n, a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j].add_product(a[i], b[j]);
    }
    return out;
}

// Inverse of a power series with a[0] != 0, to n terms.
Coeffs inv_trunc(const Coeffs& a, std::size_t n, const FieldCtx& ctx) {
    Coeffs out(n, ctx.zero());
    const FieldElem inv0 = a.at(0).inverse();
    out[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        FieldElem acc = ctx.zero();
        for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc.add_product(a[i], out[k - i]);
        out[k] = -(acc * inv0);
    }
    return out;
}

Coeffs pow_trunc(const Coeffs& a, std::uint64_t k, std::size_t n, const FieldCtx& ctx) {
    Coeffs result(n, ctx.zero());
    result[0] = ctx.one();
    Coeffs base(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(n, a.size())));
    while (k > 0) {
        if (k & 1U) result = mul_trunc(result, base, n, ctx);
        k >>= 1U;
        if (k > 0) base = mul_trunc(base, base, n, ctx);
    }
    return result;
}

[[noreturn]] void exhausted(const std::string& what) { raise("PrecisionExhausted", what); }

std::string coeff_text(const FieldElem& c) {
    if (c.level() == 0) return std::to_string(c.coords()[0]);
    return c.to_string();
}

}  // namespace

// ---------------------------------------------------------------------------

LaurentSeries LaurentSeries::zero(const FieldCtx& ctx) {
    LaurentSeries s;
    s.ctx_ = &ctx;
    s.zero_ = true;
    return s;
}

LaurentSeries LaurentSeries::constant(const FieldElem& c, std::size_t prec) {
    return monomial(c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(const FieldElem& c, int exponent, std::size_t prec) {
    if (c.is_zero()) return zero(c.ctx());
    if (prec == 0) throw std::invalid_argument("LaurentSeries: precision must be positive");
    LaurentSeries s;
    s.ctx_ = &c.ctx();
    s.val_ = exponent;
    s.coeffs_.assign(prec, c.ctx().zero());
    s.coeffs_[0] = c;
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(int val, std::vector<FieldElem> coeffs) {
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const FieldElem& c) { return !c.is_zero(); });
    if (first == coeffs.end()) exhausted("no nonzero coefficient in the window");
    LaurentSeries s;
    s.ctx_ = &first->ctx();
    s.val_ = val + static_cast<int>(first - coeffs.begin());
    s.coeffs_.assign(first, coeffs.end());
    return s;
}

int LaurentSeries::valuation() const {
    if (zero_) raise("ZeroValuation", "valuation of the zero series");
    return val_;
}

long LaurentSeries::abs_precision() const {
    if (zero_) return std::numeric_limits<long>::max();
    return val_ + static_cast<long>(coeffs_.size());
}

const FieldElem& LaurentSeries::leading() const {
    if (zero_) raise("ZeroValuation", "leading coefficient of the zero series");
    return coeffs_.front();
}

FieldElem LaurentSeries::coeff(long e) const {
    if (zero_) return ctx_->zero();
    if (e >= abs_precision()) exhausted("coefficient of z^" + std::to_string(e) + " is beyond the window");
    if (e < val_) return ctx_->zero();
    return coeffs_[static_cast<std::size_t>(e - val_)];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    const long lo = std::min(a.val_, b.val_);
    const long hi = std::min(a.abs_precision(), b.abs_precision());
    Coeffs window;
    window.reserve(static_cast<std::size_t>(hi - lo));
    for (long e = lo; e < hi; ++e) window.push_back(a.coeff(e) + b.coeff(e));
    const bool cancelled =
        std::all_of(window.begin(), window.end(), [](const FieldElem& c) { return c.is_zero(); });
    if (cancelled) {
        if (a.val_ == b.val_ && a.coeffs_.size() == b.coeffs_.size()) return LaurentSeries::zero(*a.ctx_);
        exhausted("sum cancels every retained coefficient");
    }
    return LaurentSeries::from_coeffs(static_cast<int>(lo), std::move(window));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.zero_) return a;
    if (b.zero_) return b;
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    LaurentSeries s;
    s.ctx_ = a.ctx_;
    s.val_ = a.val_ + b.val_;
    s.coeffs_ = mul_trunc(a.coeffs_, b.coeffs_, n, *a.ctx_);
    return s;
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.invert(); }

LaurentSeries LaurentSeries::invert() const {
    if (zero_) raise("ZeroInverse", "inverse of the zero series");
    LaurentSeries s;
    s.ctx_ = ctx_;
    s.val_ = -val_;
    s.coeffs_ = inv_trunc(coeffs_, coeffs_.size(), *ctx_);
    return s;
}

LaurentSeries LaurentSeries::pow(long k) const {
    if (k < 0) return invert().pow(-k);
    if (zero_) {
        if (k == 0) raise("ZeroValuation", "0^0 of the zero series");
        return *this;
    }
    LaurentSeries s;
    s.ctx_ = ctx_;
    s.val_ = static_cast<int>(val_ * k);
    s.coeffs_ = pow_trunc(coeffs_, static_cast<std::uint64_t>(k), coeffs_.size(), *ctx_);
    return s;
}

LaurentSeries LaurentSeries::scaled(const FieldElem& c) const {
    if (zero_) return *this;
    if (c.is_zero()) return zero(*ctx_);
    LaurentSeries s = *this;
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries s = *this;
    if (!zero_) s.val_ += k;
    return s;
}

LaurentSeries LaurentSeries::unit_part() const {
    if (zero_) raise("ZeroValuation", "unit part of the zero series");
    return shifted(-val_);
}

LaurentSeries LaurentSeries::truncated(std::size_t prec) const {
    if (zero_ || prec >= coeffs_.size()) return *this;
    if (prec == 0) throw std::invalid_argument("truncated: precision must be positive");
    LaurentSeries s = *this;
    s.coeffs_.resize(prec);
    return s;
}

bool LaurentSeries::is_constant() const {
    if (zero_) return true;
    if (val_ != 0) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
}

bool equal_within(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    const long lo = std::min(a.valuation(), b.valuation());
    const long hi = std::min(a.abs_precision(), b.abs_precision());
    for (long e = lo; e < hi; ++e)
        if (!(a.coeff(e) == b.coeff(e))) return false;
    return true;
}

std::string LaurentSeries::to_string() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << "z^" << val_ << "*(";
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeff_text(coeffs_[i]);
        if (i == 1) os << "*z";
        else if (i > 1) os << "*z^" << i;
    }
    os << ')';
    return os.str();
}

LaurentSeries LaurentSeries::parse(const FieldCtx& ctx, std::string_view text_in, std::size_t prec) {
    std::string text;
    for (char ch : text_in)
        if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    if (text.empty()) throw ParseError("empty series");

    auto parse_int = [](std::string_view s) {
        long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw ParseError("bad exponent '" + std::string(s) + "'");
        return v;
    };

    long shift = 0;
    std::string_view body = text;
    if (body.rfind("z*(", 0) == 0) {
        shift = 1;
        body = body.substr(2);
    } else if (body.rfind("z^", 0) == 0) {
        const auto star = body.find("*(");
        if (star != std::string_view::npos) {
            shift = parse_int(body.substr(2, star - 2));
            body = body.substr(star + 1);
        }
    }
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parentheses in series");
        body = body.substr(1, body.size() - 2);
    }

    // split into signed terms at top-level + and -
    std::vector<std::pair<bool, std::string_view>> terms;
    int depth = 0;
    std::size_t start = 0;
    bool negative = false;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        const char ch = i < body.size() ? body[i] : '+';
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        const bool split = depth == 0 && (ch == '+' || ch == '-') && (i == body.size() || i == 0 || body[i - 1] != '^');
        if (!split) continue;
        if (i > start) terms.emplace_back(negative, body.substr(start, i - start));
        else if (i != 0 && i != body.size()) throw ParseError("empty term in series");
        negative = ch == '-';
        start = i + 1;
    }
    if (terms.empty()) throw ParseError("series has no terms");

    std::map<long, FieldElem> acc;
    for (auto [neg, term] : terms) {
        FieldElem c = ctx.one();
        long exponent = 0;
        const auto zpos = term.find('z');
        if (zpos == std::string_view::npos) {
            c = FieldElem::parse(ctx, term);
        } else {
            if (zpos > 0) {
                if (term[zpos - 1] != '*') throw ParseError("expected '*z' in term '" + std::string(term) + "'");
                c = FieldElem::parse(ctx, term.substr(0, zpos - 1));
            }
            std::string_view rest = term.substr(zpos + 1);
            if (rest.empty()) exponent = 1;
            else if (rest.front() == '^') exponent = parse_int(rest.substr(1));
            else throw ParseError("unexpected text after z in '" + std::string(term) + "'");
        }
        if (neg) c = -c;
        auto [it, inserted] = acc.emplace(exponent, c);
        if (!inserted) it->second += c;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    if (acc.empty()) return zero(ctx);
    const long lo = acc.begin()->first;
    const long hi = acc.rbegin()->first;
    const std::size_t n = std::max<std::size_t>(prec, static_cast<std::size_t>(hi - lo + 1));
    Coeffs coeffs(n, ctx.zero());
    for (const auto& [e, c] : acc) coeffs[static_cast<std::size_t>(e - lo)] = c;
    return from_coeffs(static_cast<int>(lo + shift), std::move(coeffs));
}

// ---------------------------------------------------------------------------

LaurentSeries hensel_root(const LaurentSeries& u, std::uint64_t n, FieldCtx& ctx) {
    if (u.is_zero() || u.valuation() != 0) raise("NotAUnit", "root extraction needs a unit");
    if (n == 0 || n % ctx.ell() == 0) throw std::invalid_argument("hensel_root: n must be prime to l");
    const FieldElem lead = u.leading();
    const FieldElem lead_root = n == ctx.p() ? ctx.pth_root(lead) : ctx.nth_root(lead, n);
    const std::size_t prec = u.precision();
    if (n == 1) return u;

    // Newton on y^n = w with w = u / lead, y(0) = 1:
    //   y <- y - (y^n - w) / (n y^{n-1})
    const FieldElem lead_inv = lead.inverse();
    Coeffs w(u.coeffs());
    for (auto& c : w) c *= lead_inv;
    const FieldElem n_inv = ctx.elem(static_cast<std::int64_t>(n % ctx.ell())).inverse();
    Coeffs y{ctx.one()};
    for (std::size_t m = 1; m < prec;) {
        m = std::min(prec, 2 * m);
        y.resize(m, ctx.zero());
        const Coeffs y_pow = pow_trunc(y, n - 1, m, ctx);
        Coeffs resid = mul_trunc(y_pow, y, m, ctx);
        for (std::size_t i = 0; i < m; ++i) resid[i] -= w[i];
        const Coeffs step = mul_trunc(resid, inv_trunc(y_pow, m, ctx), m, ctx);
        for (std::size_t i = 0; i < m; ++i) y[i] -= step[i] * n_inv;
    }
    for (auto& c : y) c *= lead_root;
    return LaurentSeries::from_coeffs(0, std::move(y));
}

LaurentSeries hensel_pth_root(const LaurentSeries& u, FieldCtx& ctx) { return hensel_root(u, ctx.p(), ctx); }

LaurentSeries series_root(const LaurentSeries& s, std::uint64_t n, FieldCtx& ctx) {
    const int v = s.valuation();
    if (v % static_cast<long>(n) != 0)
        raise("NotAPower", "valuation " + std::to_string(v) + " is not divisible by " + std::to_string(n));
    return hensel_root(s.unit_part(), n, ctx).shifted(v / static_cast<int>(n));
}

}  // namespace adelic
