#include "adelic/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "adelic/errors.hpp"
#include "adelic/modular.hpp"

namespace adelic {

namespace {

using Coords = std::vector<std::uint32_t>;

bool all_zero(std::span<const std::uint32_t> v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

void require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (!a.attached() || !b.attached() || &a.ctx() != &b.ctx())
        throw std::logic_error("FieldElem: operands from different contexts");
}

mpz_class pow_ui(std::uint64_t base, std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

std::uint64_t mpz_mod_ui(const mpz_class& a, std::uint64_t m) {
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(const FieldCtx& ctx, std::int64_t value)
    : ctx_(&ctx), level_(0), coords_{static_cast<std::uint32_t>(mod(value, ctx.ell()))} {}

FieldElem::FieldElem(const FieldCtx* ctx, std::size_t level, Coords coords)
    : ctx_(ctx), level_(level), coords_(std::move(coords)) {
    normalize();
}

FieldElem FieldElem::from_coords(const FieldCtx& ctx, std::size_t level, Coords coords) {
    if (level >= ctx.num_levels()) throw ParseError("field level " + std::to_string(level) + " does not exist");
    if (coords.size() != ctx.abs_degree(level))
        throw ParseError("coordinate count does not match the absolute degree of level " +
                         std::to_string(level));
    for (auto& c : coords) c %= ctx.ell();
    return FieldElem(&ctx, level, std::move(coords));
}

void FieldElem::normalize() {
    while (level_ > 0) {
        std::size_t lower = ctx_->abs_degree(level_ - 1);
        if (!all_zero(std::span(coords_).subspan(lower))) break;
        coords_.resize(lower);
        --level_;
    }
}

bool FieldElem::is_zero() const { return level_ == 0 && coords_.at(0) == 0; }
bool FieldElem::is_one() const { return level_ == 0 && coords_.at(0) == 1; }

Coords FieldElem::coords_at(std::size_t level) const {
    if (level < level_) throw std::logic_error("coords_at: cannot embed downwards");
    Coords out = coords_;
    out.resize(ctx_->abs_degree(level), 0);
    return out;
}

FieldElem FieldElem::operator-() const {
    Coords c = coords_;
    const std::uint32_t ell = ctx_->ell();
    for (auto& x : c) x = x == 0 ? 0 : ell - x;
    return FieldElem(ctx_, level_, std::move(c));
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    require_same_ctx(*this, o);
    const std::uint32_t ell = ctx_->ell();
    if (level_ < o.level_) coords_.resize(ctx_->abs_degree(level_ = o.level_), 0);
    for (std::size_t i = 0; i < o.coords_.size(); ++i) {
        const std::uint32_t s = coords_[i] + o.coords_[i];
        coords_[i] = s >= ell ? s - ell : s;
    }
    normalize();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    require_same_ctx(*this, o);
    const std::uint32_t ell = ctx_->ell();
    if (level_ < o.level_) coords_.resize(ctx_->abs_degree(level_ = o.level_), 0);
    for (std::size_t i = 0; i < o.coords_.size(); ++i)
        coords_[i] = coords_[i] >= o.coords_[i] ? coords_[i] - o.coords_[i] : coords_[i] + ell - o.coords_[i];
    normalize();
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    require_same_ctx(*this, o);
    const std::size_t level = std::max(level_, o.level_);
    if (o.level_ == 0) {
        const std::uint64_t k = o.coords_[0];
        for (auto& x : coords_) x = static_cast<std::uint32_t>(x * k % ctx_->ell());
        normalize();
        return *this;
    }
    if (level_ == 0) {
        // scalar from F_l
        const std::uint64_t s = coords_[0];
        Coords c = o.coords_;
        for (auto& x : c) x = static_cast<std::uint32_t>(x * s % ctx_->ell());
        *this = FieldElem(ctx_, level, std::move(c));
        return *this;
    }
    if (level_ == o.level_) {
        coords_ = ctx_->mul_raw(level, coords_, o.coords_);
        normalize();
        return *this;
    }
    Coords a = coords_at(level);
    Coords b = o.coords_at(level);
    *this = FieldElem(ctx_, level, ctx_->mul_raw(level, a, b));
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem& FieldElem::add_product(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(*this, a);
    require_same_ctx(a, b);
    const std::uint32_t ell = ctx_->ell();
    if (a.is_zero() || b.is_zero()) return *this;
    const std::size_t level = std::max(a.level_, b.level_);
    if (level_ < level) coords_.resize(ctx_->abs_degree(level_ = level), 0);
    if (a.level_ == 0 || b.level_ == 0) {
        const FieldElem& s = a.level_ == 0 ? a : b;
        const FieldElem& v = a.level_ == 0 ? b : a;
        const std::uint64_t k = s.coords_[0];
        for (std::size_t i = 0; i < v.coords_.size(); ++i)
            coords_[i] = static_cast<std::uint32_t>((coords_[i] + k * v.coords_[i]) % ell);
    } else {
        const Coords prod = a.level_ == b.level_ ? ctx_->mul_raw(level, a.coords_, b.coords_)
                                                 : ctx_->mul_raw(level, a.coords_at(level), b.coords_at(level));
        for (std::size_t i = 0; i < prod.size(); ++i) {
            const std::uint32_t t = coords_[i] + prod[i];
            coords_[i] = t >= ell ? t - ell : t;
        }
    }
    normalize();
    return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.ctx_ == b.ctx_ && a.level_ == b.level_ && a.coords_ == b.coords_;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) raise("ZeroInverse", "inverse of zero in the constant field");
    if (level_ == 0)
        return FieldElem(*ctx_, inv_mod(coords_[0], ctx_->ell()));
    // Extended Euclid over the previous level: s * a = 1 mod f.
    const std::size_t below = level_ - 1;
    const std::size_t block = ctx_->abs_degree(below);
    const std::size_t d = ctx_->rel_degree(level_);
    FieldPoly a;
    for (std::size_t i = 0; i < d; ++i)
        a.push_back(FieldElem::from_coords(
            *ctx_, below, Coords(coords_.begin() + i * block, coords_.begin() + (i + 1) * block)));
    poly::trim(a);
    FieldPoly r0 = ctx_->modulus(level_), r1 = a;
    FieldPoly s0, s1{ctx_->one()};
    while (!r1.empty()) {
        // q, r = divmod(r0, r1)
        FieldPoly rem = r0;
        FieldPoly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, ctx_->zero());
        const FieldElem lead_inv = r1.back().inverse();
        while (rem.size() >= r1.size() && !rem.empty()) {
            const std::size_t shift = rem.size() - r1.size();
            const FieldElem c = rem.back() * lead_inv;
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            poly::trim(rem);
        }
        poly::trim(q);
        FieldPoly s2 = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant because f is irreducible.
    const FieldElem scale = r0.at(0).inverse();
    Coords out(coords_.size(), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) {
        Coords c = (s0[i] * scale).coords_at(below);
        std::copy(c.begin(), c.end(), out.begin() + i * block);
    }
    return FieldElem(ctx_, level_, std::move(out));
}

FieldElem FieldElem::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    FieldElem result = ctx_->one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result *= result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
    }
    return result;
}

std::string FieldElem::to_string() const {
    std::ostringstream os;
    os << 'L' << level_ << ":[";
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ']';
    return os.str();
}

FieldElem FieldElem::parse(const FieldCtx& ctx, std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw ParseError("bad integer '" + std::string(s) + "'");
        return v;
    };
    text = strip(text);
    if (text.empty()) throw ParseError("empty field element");
    if (text.front() != 'L') return FieldElem(ctx, parse_int(text));
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("field element missing ':'");
    const auto level = static_cast<std::size_t>(parse_int(strip(text.substr(1, colon - 1))));
    std::string_view body = strip(text.substr(colon + 1));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("field element coordinates must be bracketed");
    body = body.substr(1, body.size() - 2);
    Coords coords;
    while (!body.empty()) {
        const auto comma = body.find(',');
        coords.push_back(static_cast<std::uint32_t>(mod(parse_int(strip(body.substr(0, comma))), ctx.ell())));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return from_coords(ctx, level, std::move(coords));
}

bool lex_less(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    const std::size_t level = std::max(a.level(), b.level());
    return a.coords_at(level) < b.coords_at(level);
}

// ---------------------------------------------------------------------------
// polynomials over the tower

namespace poly {

void trim(FieldPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

std::size_t degree(const FieldPoly& f) {
    if (f.empty()) throw std::logic_error("degree of the zero polynomial");
    return f.size() - 1;
}

FieldPoly mul(const FieldPoly& a, const FieldPoly& b) {
    if (a.empty() || b.empty()) return {};
    FieldPoly out(a.size() + b.size() - 1, a.front().ctx().zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

FieldPoly sub(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly out = a;
    if (out.size() < b.size()) {
        const FieldElem zero = b.front().ctx().zero();
        out.resize(b.size(), zero);
    }
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

FieldPoly rem(const FieldPoly& a, const FieldPoly& b) {
    if (b.empty()) throw std::logic_error("poly::rem by zero");
    FieldPoly r = a;
    trim(r);
    const FieldElem lead_inv = b.back().inverse();
    while (!r.empty() && r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const FieldElem c = r.back() * lead_inv;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    return r;
}

FieldPoly gcd(FieldPoly a, FieldPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FieldPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const FieldElem inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

FieldPoly powmod(const FieldPoly& base, const mpz_class& e, const FieldPoly& modulus) {
    FieldPoly result{modulus.front().ctx().one()};
    FieldPoly b = rem(base, modulus);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result), modulus);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), modulus);
    }
    return result;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(std::uint32_t ell, std::uint32_t p, std::uint64_t seed)
    : ell_(ell), p_(p), rng_(seed) {
    if (!is_prime(ell)) raise("InvalidParameters", "characteristic " + std::to_string(ell) + " is not prime");
    if (!is_prime(p)) raise("InvalidParameters", "rank " + std::to_string(p) + " is not prime");
    if (ell == p) raise("InvalidParameters", "the rank must differ from the characteristic");
    if (ell >= (1U << 31)) raise("InvalidParameters", "characteristic too large");
    Level base;
    base.order = ell;
    levels_.push_back(std::move(base));
}

const FieldPoly& FieldCtx::modulus(std::size_t level) const {
    if (level == 0 || level >= levels_.size()) throw std::out_of_range("modulus: no such level");
    return levels_[level].modulus;
}

std::vector<std::uint32_t> FieldCtx::mul_raw(std::size_t level, std::span<const std::uint32_t> a,
                                             std::span<const std::uint32_t> b) const {
    if (level == 0) return {static_cast<std::uint32_t>(std::uint64_t{a[0]} * b[0] % ell_)};
    const Level& lv = levels_[level];
    if (!lv.products.empty()) {
        const std::size_t n = lv.abs_degree;
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] == 0) continue;
                const std::uint64_t c = std::uint64_t{a[i]} * b[j] % ell_;
                const auto& e = lv.products[i * n + j];
                for (std::size_t k = 0; k < n; ++k) acc[k] += c * e[k];
            }
        }
        Coords out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % ell_);
        return out;
    }
    if (level == 1) {
        // direct product in F_l[y]/(f)
        const std::size_t d = lv.rel_degree;
        std::vector<std::uint64_t> acc(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % ell_;
        }
        for (std::size_t m = 2 * d - 1; m-- > d;) {
            const std::uint64_t c = acc[m];
            if (c == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                acc[m - d + j] = (acc[m - d + j] + (ell_ - lv.modulus_raw[j][0]) * c) % ell_;
        }
        return Coords(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(d));
    }
    const std::size_t block = levels_[level - 1].abs_degree;
    const std::size_t d = lv.rel_degree;
    std::vector<Coords> prod(2 * d - 1, Coords(block, 0));
    auto accumulate = [&](Coords& acc, const Coords& term, bool subtract) {
        for (std::size_t i = 0; i < block; ++i) {
            std::uint32_t t = term[i];
            if (subtract) t = t == 0 ? 0 : ell_ - t;
            std::uint32_t s = acc[i] + t;
            acc[i] = s >= ell_ ? s - ell_ : s;
        }
    };
    for (std::size_t i = 0; i < d; ++i) {
        auto ai = a.subspan(i * block, block);
        if (all_zero(ai)) continue;
        for (std::size_t j = 0; j < d; ++j) {
            auto bj = b.subspan(j * block, block);
            if (all_zero(bj)) continue;
            accumulate(prod[i + j], mul_raw(level - 1, ai, bj), false);
        }
    }
    for (std::size_t m = 2 * d - 1; m-- > d;) {
        if (all_zero(prod[m])) continue;
        for (std::size_t j = 0; j < d; ++j)
            accumulate(prod[m - d + j], mul_raw(level - 1, prod[m], lv.modulus_raw[j]), true);
    }
    Coords out;
    out.reserve(lv.abs_degree);
    for (std::size_t i = 0; i < d; ++i) out.insert(out.end(), prod[i].begin(), prod[i].end());
    return out;
}

FieldElem FieldCtx::random(std::size_t level, std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, ell_ - 1);
    Coords c(abs_degree(level));
    for (auto& x : c) x = dist(rng);
    return FieldElem(this, level, std::move(c));
}

FieldElem FieldCtx::random_nonzero(std::size_t level, std::mt19937_64& rng) const {
    for (;;) {
        FieldElem e = random(level, rng);
        if (!e.is_zero()) return e;
    }
}

bool FieldCtx::is_irreducible_over(const FieldPoly& f_in, std::size_t level) const {
    FieldPoly f = f_in;
    poly::trim(f);
    if (f.size() < 2) return false;
    for (const auto& c : f)
        if (c.level() > level) return false;
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    const mpz_class& q = order(level);
    const FieldPoly x{zero(), one()};
    std::vector<FieldPoly> frob{x};  // frob[i] = X^{q^i} mod f
    for (std::size_t i = 1; i <= d; ++i) frob.push_back(poly::powmod(frob.back(), q, f));
    if (poly::sub(frob[d], x).size() != 0) return false;
    for (std::uint64_t r : prime_divisors(d)) {
        FieldPoly g = poly::gcd(f, poly::sub(frob[d / r], x));
        if (g.size() != 1) return false;
    }
    return true;
}

std::size_t FieldCtx::append_level(const FieldPoly& monic) {
    const std::size_t below = top_level();
    Level lv;
    lv.rel_degree = monic.size() - 1;
    lv.abs_degree = levels_[below].abs_degree * lv.rel_degree;
    lv.order = pow_ui(ell_, lv.abs_degree);
    lv.modulus = monic;
    for (std::size_t j = 0; j < lv.rel_degree; ++j) lv.modulus_raw.push_back(monic[j].coords_at(below));
    const std::size_t n = lv.abs_degree;
    levels_.push_back(std::move(lv));
    // Tabulate when the accumulator in mul_raw cannot overflow: n^2 terms below ell^2 each.
    const auto bound = static_cast<double>(ell_) * ell_ * static_cast<double>(n) * static_cast<double>(n);
    if (top_level() >= 2 && n <= 64 && bound < 1e18) {
        std::vector<std::vector<std::uint32_t>> table(n * n);
        Coords ei(n, 0), ej(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ei.assign(n, 0);
            ei[i] = 1;
            for (std::size_t j = 0; j < n; ++j) {
                ej.assign(n, 0);
                ej[j] = 1;
                table[i * n + j] = mul_raw(top_level(), ei, ej);
            }
        }
        levels_.back().products = std::move(table);
    }
    return top_level();
}

std::size_t FieldCtx::adjoin(const FieldPoly& monic) {
    if (monic.size() < 3 || !monic.back().is_one())
        raise("Reducible", "tower step must be monic of degree >= 2");
    if (!is_irreducible_over(monic, top_level()))
        raise("Reducible", "tower step polynomial is not irreducible over the top level");
    return append_level(monic);
}

std::size_t FieldCtx::extend_by_degree(std::size_t degree) {
    if (degree < 2) throw std::invalid_argument("extend_by_degree: degree must be >= 2");
    const std::size_t base = top_level();
    for (;;) {
        FieldPoly f;
        for (std::size_t i = 0; i < degree; ++i) f.push_back(random(base, rng_));
        f.push_back(one());
        if (f.front().is_zero()) continue;
        if (is_irreducible_over(f, base)) return append_level(f);
    }
}

bool FieldCtx::is_power_at(const FieldElem& a, std::uint64_t r, std::size_t level) const {
    if (a.level() > level) return false;
    if (a.is_zero()) return true;
    const mpz_class qm1 = order(level) - 1;
    if (mpz_mod_ui(qm1, r) != 0) return true;
    return a.pow(mpz_class(qm1 / static_cast<unsigned long>(r))).is_one();
}

const FieldElem& FieldCtx::root_of_unity(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("root_of_unity: m must be >= 2");
    if (m % ell_ == 0) raise("InvalidParameters", "no primitive roots of unity of order divisible by l");
    if (auto it = roots_of_unity_.find(m); it != roots_of_unity_.end()) return it->second;

    std::size_t level = 0;
    while (level < num_levels() && mpz_mod_ui(order(level) - 1, m) != 0) ++level;
    if (level == num_levels()) {
        const std::uint64_t q_top = mpz_mod_ui(order(top_level()), m);
        std::size_t d = 1;
        for (std::uint64_t acc = q_top; acc % m != 1 % m; acc = acc * q_top % m) ++d;
        level = extend_by_degree(d);
    }
    const mpz_class cofactor = (order(level) - 1) / static_cast<unsigned long>(m);
    const auto primes = prime_divisors(m);
    FieldElem w;
    for (;;) {
        w = random_nonzero(level, rng_).pow(cofactor);
        bool primitive = true;
        for (std::uint64_t r : primes)
            if (w.pow(static_cast<std::int64_t>(m / r)).is_one()) primitive = false;
        if (primitive) break;
    }
    FieldElem best = w;
    FieldElem cur = w;
    for (std::uint64_t i = 2; i < m; ++i) {
        cur *= w;
        if (std::gcd(i, m) == 1 && lex_less(cur, best)) best = cur;
    }
    return roots_of_unity_.emplace(m, best).first->second;
}

const FieldElem& FieldCtx::ensure_zeta() { return root_of_unity(p_); }

const FieldElem& FieldCtx::zeta() const {
    auto it = roots_of_unity_.find(p_);
    if (it == roots_of_unity_.end()) throw std::logic_error("zeta requested before ensure_zeta");
    return it->second;
}

std::uint32_t FieldCtx::log_zeta(const FieldElem& w) {
    if (w.is_zero() || !w.pow(static_cast<std::int64_t>(p_)).is_one())
        raise("NotARootOfUnity", w.to_string() + " is not in mu_p");
    const FieldElem& z = ensure_zeta();
    FieldElem cur = one();
    for (std::uint32_t c = 0; c < p_; ++c) {
        if (cur == w) return c;
        cur *= z;
    }
    throw std::logic_error("log_zeta: mu_p exhausted");
}

FieldElem FieldCtx::root_at_level(const FieldElem& a_in, std::uint64_t r, std::size_t level) {
    // Generalised Tonelli-Shanks (Adleman-Manders-Miller), assuming r | q - 1
    // and a is an r-th power at this level.
    const FieldElem a = a_in;
    const mpz_class qm1 = order(level) - 1;
    mpz_class t = qm1;
    std::size_t s = 0;
    while (mpz_mod_ui(t, r) == 0) {
        t /= static_cast<unsigned long>(r);
        ++s;
    }
    mpz_class k = 0;
    if (t != 1) {
        mpz_class rr = static_cast<unsigned long>(r);
        mpz_invert(k.get_mpz_t(), rr.get_mpz_t(), t.get_mpz_t());
    }
    const mpz_class m = (mpz_class(static_cast<unsigned long>(r)) * k - 1) / t;  // exact, may be negative
    const FieldElem target = a.pow(t).pow(m);                                    // in the r-Sylow subgroup

    FieldElem gen;
    const mpz_class cofactor = qm1 / static_cast<unsigned long>(r);
    for (;;) {
        FieldElem n = random_nonzero(level, rng_);
        if (!n.pow(cofactor).is_one()) {
            gen = n.pow(t);
            break;
        }
    }
    // Pohlig-Hellman inside the cyclic group of order r^s.
    mpz_class r_pow_sm1 = pow_ui(r, s - 1);
    const FieldElem gamma = gen.pow(r_pow_sm1);
    const FieldElem gen_inv = gen.inverse();
    mpz_class e = 0;
    mpz_class r_i = 1;
    for (std::size_t i = 0; i < s; ++i) {
        const FieldElem hi = (target * gen_inv.pow(e)).pow(pow_ui(r, s - 1 - i));
        FieldElem cur = one();
        std::uint64_t digit = 0;
        while (!(cur == hi)) {
            cur *= gamma;
            if (++digit >= r) throw std::logic_error("root_at_level: discrete log failed");
        }
        e += r_i * static_cast<unsigned long>(digit);
        r_i *= static_cast<unsigned long>(r);
    }
    if (mpz_mod_ui(e, r) != 0) throw std::logic_error("root_at_level: input is not an r-th power");
    const FieldElem c = gen.pow(mpz_class(e / static_cast<unsigned long>(r)));
    return a.pow(k) * c.inverse();
}

FieldElem FieldCtx::prime_root(const FieldElem& a, std::uint64_t r) {
    if (a.is_zero()) raise("ZeroInput", "root of zero");
    if (!is_prime(r) || r == ell_) throw std::invalid_argument("prime_root: r must be a prime different from l");
    std::size_t level = a.level();
    for (;;) {
        for (; level < num_levels(); ++level) {
            if (!is_power_at(a, r, level)) continue;
            const mpz_class qm1 = order(level) - 1;
            if (mpz_mod_ui(qm1, r) != 0) {
                mpz_class inv;
                mpz_class rr = static_cast<unsigned long>(r);
                mpz_invert(inv.get_mpz_t(), rr.get_mpz_t(), qm1.get_mpz_t());
                return a.pow(inv);  // unique root
            }
            const FieldElem root = root_at_level(a, r, level);
            const FieldElem& w = root_of_unity(r);
            FieldElem best = root, cur = root;
            for (std::uint64_t i = 1; i < r; ++i) {
                cur *= w;
                if (lex_less(cur, best)) best = cur;
            }
            return best;
        }
        extend_by_degree(r);
    }
}

FieldElem FieldCtx::pth_root(const FieldElem& a) { return prime_root(a, p_); }

FieldElem FieldCtx::nth_root(const FieldElem& a, std::uint64_t n) {
    if (a.is_zero()) raise("ZeroInput", "root of zero");
    if (n == 0 || n % ell_ == 0) throw std::invalid_argument("nth_root: n must be prime to l");
    FieldElem x = a;
    for (std::uint64_t r = 2; n > 1; ++r) {
        while (n % r == 0) {
            x = prime_root(x, r);
            n /= r;
        }
    }
    return x;
}

}  // namespace adelic
