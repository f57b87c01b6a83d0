#include "adelic/local_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "adelic/errors.hpp"
#include "adelic/modular.hpp"

namespace adelic {

namespace {

// Running sum of series that treats the exact zero as the neutral element.
class SeriesSum {
public:
    explicit SeriesSum(const FieldCtx& ctx) : sum_(LaurentSeries::zero(ctx)) {}
    void add(const LaurentSeries& s) {
        if (s.is_zero()) return;
        sum_ = sum_.is_zero() ? s : sum_ + s;
    }
    const LaurentSeries& value() const { return sum_; }

private:
    LaurentSeries sum_;
};

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

// Subsets of {0..n-1} of size k, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

template <class T>
std::vector<std::vector<T>> principal(const std::vector<std::vector<T>>& m, const std::vector<std::size_t>& idx) {
    std::vector<std::vector<T>> out;
    for (auto i : idx) {
        std::vector<T> row;
        for (auto j : idx) row.push_back(m[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

FieldElem det_exact(const std::vector<std::vector<FieldElem>>& m, const FieldCtx& ctx) {
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    FieldElem acc = ctx.zero();
    do {
        FieldElem term = ctx.one();
        for (std::size_t i = 0; i < perm.size() && !term.is_zero(); ++i) term *= m[i][perm[i]];
        if (permutation_sign(perm) < 0) acc -= term;
        else acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------------

namespace perm {

Permutation identity(std::uint32_t p) {
    Permutation out(p);
    std::iota(out.begin(), out.end(), 1U);
    return out;
}

Permutation shift(std::uint32_t p, std::int64_t a) {
    Permutation out(p);
    for (std::uint32_t i = 0; i < p; ++i) out[i] = static_cast<std::uint32_t>(mod(i + a, p)) + 1;
    return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i] - 1];
    return out;
}

Permutation inverse(const Permutation& f) {
    Permutation out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[f[i] - 1] = static_cast<std::uint32_t>(i + 1);
    return out;
}

Permutation power(const Permutation& f, std::int64_t k) {
    const auto ord = static_cast<std::int64_t>(order(f));
    k = mod(k, ord);
    Permutation out = identity(static_cast<std::uint32_t>(f.size()));
    for (std::int64_t i = 0; i < k; ++i) out = compose(f, out);
    return out;
}

std::uint64_t order(const Permutation& f) {
    std::uint64_t result = 1;
    std::vector<bool> seen(f.size(), false);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = f[j] - 1) {
            seen[j] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

void validate(const Permutation& f, std::uint32_t p) {
    if (f.size() != p) throw ParseError("permutation must have " + std::to_string(p) + " entries");
    std::vector<bool> seen(p, false);
    for (auto v : f) {
        if (v < 1 || v > p || seen[v - 1]) throw ParseError("not a permutation of {1.." + std::to_string(p) + "}");
        seen[v - 1] = true;
    }
}

std::size_t orbit_size(const Permutation& f, std::uint32_t start) {
    std::size_t n = 1;
    for (std::uint32_t x = f[start - 1]; x != start; x = f[x - 1]) ++n;
    return n;
}

}  // namespace perm

// ---------------------------------------------------------------------------

LocalAutomorphism LocalAutomorphism::ramified(std::uint32_t p, std::int64_t a) {
    LocalAutomorphism g;
    g.p_ = p;
    g.a_ = static_cast<std::uint32_t>(mod(a, p));
    return g;
}

LocalAutomorphism LocalAutomorphism::unramified(Permutation sigma) {
    if (sigma.size() < 2) throw ParseError("permutation of at least two points expected");
    perm::validate(sigma, static_cast<std::uint32_t>(sigma.size()));
    LocalAutomorphism g;
    g.p_ = static_cast<std::uint32_t>(sigma.size());
    g.sigma_ = std::move(sigma);
    return g;
}

Permutation LocalAutomorphism::as_permutation() const {
    return is_ramified_kind() ? perm::shift(p_, a_) : sigma_;
}

std::uint64_t LocalAutomorphism::order() const {
    if (is_ramified_kind()) return a_ == 0 ? 1 : p_;
    return perm::order(sigma_);
}

bool LocalAutomorphism::is_identity() const { return order() == 1; }

LocalAutomorphism LocalAutomorphism::inverse() const {
    if (is_ramified_kind()) return ramified(p_, -static_cast<std::int64_t>(a_));
    return unramified(perm::inverse(sigma_));
}

LocalAutomorphism LocalAutomorphism::pow(std::int64_t k) const {
    if (is_ramified_kind()) return ramified(p_, k * a_);
    return unramified(perm::power(sigma_, k));
}

LocalAutomorphism compose(const LocalAutomorphism& h, const LocalAutomorphism& g) {
    if (h.p() != g.p()) throw std::invalid_argument("compose: mismatched p");
    if (h.is_ramified_kind() && g.is_ramified_kind())
        return LocalAutomorphism::ramified(h.p(), static_cast<std::int64_t>(h.a()) + g.a());
    // (σ·v)_i = v_{σ(i)}, so applying g then h permutes by σ_g ∘ σ_h
    const Permutation sigma = perm::compose(g.as_permutation(), h.as_permutation());
    // keep the ramified kind when the result is still T ↦ ζ^a T
    if ((h.is_ramified_kind() || g.is_ramified_kind()) && sigma == perm::shift(h.p(), sigma[0] - 1))
        return LocalAutomorphism::ramified(h.p(), sigma[0] - 1);
    return LocalAutomorphism::unramified(sigma);
}

bool same_action(const LocalAutomorphism& g, const LocalAutomorphism& h) {
    return g.as_permutation() == h.as_permutation();
}

// ---------------------------------------------------------------------------

bool TwistedMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && !m[i][j].is_zero()) return false;
    return true;
}

TwistedMatrix operator*(const TwistedMatrix& a, const TwistedMatrix& b) {
    const std::size_t n = a.size();
    const FieldCtx& ctx = a.m[0][0].ctx();
    TwistedMatrix out{std::vector(n, std::vector(n, ctx.zero()))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.m[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out.m[i][j] += a.m[i][k] * b.m[k][j];
        }
    return out;
}

TwistedMatrix operator+(const TwistedMatrix& a, const TwistedMatrix& b) {
    TwistedMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out.m[i][j] += b.m[i][j];
    return out;
}

TwistedMatrix TwistedMatrix::scaled(const FieldElem& c) const {
    TwistedMatrix out = *this;
    for (auto& row : out.m)
        for (auto& x : row) x *= c;
    return out;
}

// ---------------------------------------------------------------------------

const char* to_string(LocalKind kind) {
    switch (kind) {
        case LocalKind::Unramified: return "unramified";
        case LocalKind::TotallyRamified: return "totally_ramified";
        case LocalKind::Mixed: return "mixed";
    }
    return "?";
}

LocalStructure::LocalStructure(const LaurentSeries& t_x, std::uint64_t n, FieldCtx& ctx)
    : ctx_(&ctx), t_(t_x), n_(n) {
    if (t_x.is_zero()) raise("ZeroParameter", "local parameter is zero");
    if (n < 2) throw std::invalid_argument("LocalStructure: rank must be at least 2");
    const auto v = static_cast<std::uint64_t>(std::abs(static_cast<std::int64_t>(t_x.valuation())));
    m_ = std::gcd(n, v);
    e_ = n / m_;
    kind_ = e_ == 1 ? LocalKind::Unramified : e_ == n ? LocalKind::TotallyRamified : LocalKind::Mixed;
    tau_ = series_root(t_x, m_, ctx);
    xi_ = m_ >= 2 ? ctx.root_of_unity(m_) : ctx.one();
    if (n == ctx.p()) ctx.ensure_zeta();
    tau_powers_.resize(2 * n + 1);
}

std::vector<LaurentSeries> LocalStructure::factor_constants() const {
    std::vector<LaurentSeries> out;
    FieldElem w = ctx_->one();
    for (std::uint64_t i = 0; i < m_; ++i) {
        out.push_back(tau_.scaled(w));
        w *= xi_;
    }
    return out;
}

void LocalStructure::require_prime() const {
    if (n_ != ctx_->p()) throw std::logic_error("local algebra operations need rank p");
}

const LaurentSeries& LocalStructure::tau_power(long k) const {
    auto& slot = tau_powers_.at(static_cast<std::size_t>(k + static_cast<long>(n_)));
    if (!slot) slot = tau_.pow(k);
    return *slot;
}

LocalElement LocalStructure::zero() const {
    require_prime();
    return LocalElement{std::vector(n_, LaurentSeries::zero(*ctx_))};
}

LocalElement LocalStructure::one() const {
    return monomial(LaurentSeries::constant(ctx_->one(), precision()), 0);
}

LocalElement LocalStructure::monomial(const LaurentSeries& w, std::uint32_t b) const {
    LocalElement out = zero();
    out.c[b % n_] = w * t_.pow(b / n_);
    return out;
}

LocalElement LocalStructure::element(const LocalPrimitive& alpha) const {
    if (alpha.form == LocalPrimitive::Form::Monomial) return monomial(alpha.w, alpha.b);
    std::vector<FieldElem> v;
    for (auto ci : alpha.c) v.push_back(ctx_->zeta().pow(static_cast<std::int64_t>(ci)));
    return from_split(alpha.w, v);
}

LocalElement LocalStructure::multiply(const LocalElement& a, const LocalElement& b) const {
    require_prime();
    std::vector<SeriesSum> acc(n_, SeriesSum(*ctx_));
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b.c[j].is_zero()) continue;
            LaurentSeries term = a.c[i] * b.c[j];
            if (i + j >= n_) term = term * t_;
            acc[(i + j) % n_].add(term);
        }
    }
    LocalElement out;
    for (auto& s : acc) out.c.push_back(s.value());
    return out;
}

LocalElement LocalStructure::power(const LocalElement& a, std::uint64_t k) const {
    LocalElement result = one();
    LocalElement base = a;
    bool first = true;
    while (k > 0) {
        if (k & 1U) {
            result = first ? base : multiply(result, base);
            first = false;
        }
        k >>= 1U;
        if (k > 0) base = multiply(base, base);
    }
    return result;
}

LocalElement LocalStructure::scaled(const LocalElement& a, const FieldElem& c) const {
    LocalElement out = a;
    for (auto& s : out.c) s = s.scaled(c);
    return out;
}

TwistedMatrix LocalStructure::matrix(const LocalAutomorphism& g) const {
    require_prime();
    const std::uint32_t p = ctx_->p();
    if (g.p() != p) throw std::invalid_argument("automorphism rank does not match");
    const FieldElem& zeta = ctx_->zeta();
    TwistedMatrix out{std::vector(p, std::vector(p, ctx_->zero()))};
    if (g.is_ramified_kind()) {
        for (std::uint32_t j = 0; j < p; ++j) out.m[j][j] = zeta.pow(static_cast<std::int64_t>(g.a()) * j);
        return out;
    }
    if (ramified()) raise("InvalidAutomorphism", "a permutation automorphism needs an unramified point");
    // A[j][k] = (1/p) Σ_i ζ^{(σ(i)-1)k - (i-1)j}
    const FieldElem inv_p = ctx_->elem(p).inverse();
    const Permutation& sigma = g.sigma();
    for (std::uint32_t j = 0; j < p; ++j)
        for (std::uint32_t k = 0; k < p; ++k) {
            FieldElem acc = ctx_->zero();
            for (std::uint32_t i = 0; i < p; ++i) {
                const std::int64_t ex = static_cast<std::int64_t>(sigma[i] - 1) * k - static_cast<std::int64_t>(i) * j;
                acc += zeta.pow(mod(ex, p));
            }
            out.m[j][k] = acc * inv_p;
        }
    return out;
}

LocalElement LocalStructure::apply(const TwistedMatrix& m, const LocalElement& a) const {
    require_prime();
    if (ramified() && !m.is_diagonal()) throw std::logic_error("non-diagonal automorphism at a ramified point");
    LocalElement out;
    for (std::size_t j = 0; j < n_; ++j) {
        SeriesSum acc(*ctx_);
        for (std::size_t k = 0; k < n_; ++k) {
            if (m.m[j][k].is_zero() || a.c[k].is_zero()) continue;
            LaurentSeries term = a.c[k];
            if (k != j) term = term * tau_power(static_cast<long>(k) - static_cast<long>(j));
            acc.add(term.scaled(m.m[j][k]));
        }
        out.c.push_back(acc.value());
    }
    return out;
}

LocalElement LocalStructure::apply(const LocalAutomorphism& g, const LocalElement& a) const {
    return apply(matrix(g), a);
}

std::vector<LaurentSeries> LocalStructure::split(const LocalElement& a) const {
    require_prime();
    if (ramified()) raise("RamifiedPoint", "no split coordinates at a ramified point");
    std::vector<LaurentSeries> out;
    FieldElem root = ctx_->one();  // ζ^{i-1}
    for (std::size_t i = 0; i < n_; ++i) {
        SeriesSum acc(*ctx_);
        for (std::size_t j = 0; j < n_; ++j) {
            if (a.c[j].is_zero()) continue;
            acc.add((a.c[j] * tau_power(static_cast<long>(j))).scaled(root.pow(static_cast<std::int64_t>(j))));
        }
        out.push_back(acc.value());
        root *= ctx_->zeta();
    }
    return out;
}

std::vector<LaurentSeries> LocalStructure::split(const LocalPrimitive& alpha) const {
    require_prime();
    if (ramified()) raise("RamifiedPoint", "no split coordinates at a ramified point");
    const FieldElem& zeta = ctx_->zeta();
    std::vector<LaurentSeries> out;
    if (alpha.form == LocalPrimitive::Form::Split) {
        for (auto ci : alpha.c) out.push_back(alpha.w.scaled(zeta.pow(static_cast<std::int64_t>(ci))));
        return out;
    }
    const LaurentSeries base = alpha.w * tau_.pow(alpha.b);
    for (std::uint64_t i = 0; i < n_; ++i)
        out.push_back(base.scaled(zeta.pow(static_cast<std::int64_t>(i * alpha.b % n_))));
    return out;
}

LocalElement LocalStructure::from_split(const LaurentSeries& w, const std::vector<FieldElem>& v) const {
    require_prime();
    if (ramified()) raise("RamifiedPoint", "no split coordinates at a ramified point");
    // d = V^{-1} v with V[i][j] = ζ^{ij}; c_j = w d_j τ^{-j}
    const FieldElem inv_p = ctx_->elem(static_cast<std::int64_t>(n_)).inverse();
    const FieldElem& zeta = ctx_->zeta();
    LocalElement out = zero();
    for (std::size_t j = 0; j < n_; ++j) {
        FieldElem d = ctx_->zero();
        for (std::size_t i = 0; i < n_; ++i)
            d += v[i] * zeta.pow(mod(-static_cast<std::int64_t>(i * j), static_cast<std::int64_t>(n_)));
        d *= inv_p;
        if (!d.is_zero()) out.c[j] = (w * tau_power(-static_cast<long>(j))).scaled(d);
    }
    return out;
}

LaurentSeries LocalStructure::pth_power(const LocalPrimitive& alpha) const {
    require_prime();
    const LaurentSeries wp = alpha.w.pow(static_cast<long>(n_));
    if (alpha.form == LocalPrimitive::Form::Split) return wp;
    return wp * t_.pow(alpha.b);
}

bool equal_within(const LocalElement& a, const LocalElement& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!equal_within(a.c[i], b.c[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------

LocalIsomorphism local_isom(const LaurentSeries& t1, const LaurentSeries& t2, FieldCtx& ctx) {
    const std::int64_t p = ctx.p();
    if (t1.is_zero() || t2.is_zero()) raise("ZeroParameter", "local parameter is zero");
    const std::int64_t r1 = mod(t1.valuation(), p), r2 = mod(t2.valuation(), p);
    if ((r1 == 0) != (r2 == 0))
        raise("IncompatibleStructure", "ramification indices differ (" + std::to_string(r1 == 0 ? 1 : p) + " vs " +
                                           std::to_string(r2 == 0 ? 1 : p) + ")");
    LocalIsomorphism out;
    out.b = r1 == 0 ? 1 : static_cast<std::uint32_t>(mod(r1 * inv_mod(r2, p), p));
    out.tau = series_root(t1 / t2.pow(out.b), ctx.p(), ctx);
    return out;
}

FieldElem kummer_pair(std::int64_t a, std::int64_t lambda_val, std::int64_t t_val, FieldCtx& ctx) {
    const std::int64_t p = ctx.p();
    if (mod(t_val, p) == 0) raise("UnramifiedPoint", "p divides the valuation of t");
    const std::int64_t ex = mod(mod(a, p) * mod(lambda_val, p) % p * inv_mod(t_val, p), p);
    return ctx.ensure_zeta().pow(ex);
}

FieldElem oracle_pair(std::int64_t a, const LaurentSeries& lambda, const LaurentSeries& t, FieldCtx& ctx) {
    const std::int64_t p = ctx.p();
    if (lambda.is_zero()) raise("ZeroInput", "pairing with zero");
    if (t.is_zero() || mod(t.valuation(), p) == 0) raise("UnramifiedPoint", "p divides the valuation of t");
    // λ = t^c w^p, so λ^{1/p} = w T^c in K_x{t}
    const auto c = static_cast<std::uint32_t>(mod(lambda.valuation() * inv_mod(t.valuation(), p), p));
    const LaurentSeries w = series_root(lambda / t.pow(c), ctx.p(), ctx);
    const LocalStructure s(t, ctx.p(), ctx);
    const LocalElement root = s.monomial(w, c);
    const LocalElement check = s.power(root, ctx.p());
    if (!equal_within(check, s.monomial(lambda, 0))) throw std::logic_error("oracle_pair: root does not verify");

    const LocalElement image = s.apply(LocalAutomorphism::ramified(ctx.p(), a), root);
    const LaurentSeries ratio = image.c[c] / root.c[c];
    if (!ratio.is_constant()) throw std::logic_error("oracle_pair: quotient is not a constant");
    const FieldElem value = ratio.leading();
    if (!value.pow(p).is_one()) throw std::logic_error("oracle_pair: quotient is not a root of unity");
    return value;
}

// ---------------------------------------------------------------------------

LaurentSeries leibniz_det(const std::vector<std::vector<LaurentSeries>>& m, const FieldCtx& ctx) {
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    SeriesSum acc(ctx);
    do {
        bool zero = false;
        for (std::size_t i = 0; i < perm.size() && !zero; ++i) zero = m[i][perm[i]].is_zero();
        if (zero) continue;
        LaurentSeries term = m[0][perm[0]];
        for (std::size_t i = 1; i < perm.size(); ++i) term = term * m[i][perm[i]];
        acc.add(permutation_sign(perm) < 0 ? -term : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.value();
}

std::vector<FieldElem> char_poly(const std::vector<std::vector<FieldElem>>& m, const FieldCtx& ctx) {
    const std::size_t n = m.size();
    std::vector<FieldElem> out(n + 1, ctx.zero());
    out[n] = ctx.one();
    for (std::size_t k = 1; k <= n; ++k) {
        FieldElem e = ctx.zero();
        for (const auto& idx : subsets(n, k)) e += det_exact(principal(m, idx), ctx);
        out[n - k] = k % 2 == 1 ? -e : e;
    }
    return out;
}

std::vector<LaurentSeries> char_poly_primitive(const LocalPrimitive& alpha, const LocalStructure& s) {
    const FieldCtx& ctx = s.ctx();
    const std::size_t p = s.n();
    if (alpha.w.is_zero()) raise("NonInvertible", "primitive element has zero unit factor");
    std::vector<LaurentSeries> out(p + 1, LaurentSeries::zero(ctx));
    out[p] = LaurentSeries::constant(ctx.one(), alpha.w.precision());

    if (alpha.form == LocalPrimitive::Form::Split) {
        // multiplication by ψ^{-1}(w·v) in the basis (T/τ)^j is w · V^{-1} diag(v) V
        if (s.ramified()) raise("RamifiedPoint", "split eigenvector at a ramified point");
        const FieldElem& zeta = ctx.zeta();
        const FieldElem inv_p = ctx.elem(static_cast<std::int64_t>(p)).inverse();
        std::vector<std::vector<FieldElem>> c(p, std::vector(p, ctx.zero()));
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k)
                for (std::size_t i = 0; i < p; ++i) {
                    const auto ex = mod(static_cast<std::int64_t>(alpha.c[i]) + static_cast<std::int64_t>(i * k) -
                                            static_cast<std::int64_t>(i * j),
                                        static_cast<std::int64_t>(p));
                    c[j][k] += zeta.pow(ex) * inv_p;
                }
        const std::vector<FieldElem> cp = char_poly(c, ctx);
        for (std::size_t k = 1; k <= p; ++k)
            if (!cp[p - k].is_zero()) out[p - k] = alpha.w.pow(static_cast<long>(k)).scaled(cp[p - k]);
        return out;
    }

    // multiplication matrix on 1, T, ..., T^{p-1}: column k is α·T^k
    const LocalElement a = s.element(alpha);
    std::vector<std::vector<LaurentSeries>> m(p, std::vector(p, LaurentSeries::zero(ctx)));
    for (std::size_t k = 0; k < p; ++k) {
        const LocalElement col =
            s.multiply(a, s.monomial(LaurentSeries::constant(ctx.one(), alpha.w.precision()), static_cast<std::uint32_t>(k)));
        for (std::size_t i = 0; i < p; ++i) m[i][k] = col.c[i];
    }
    for (std::size_t k = 1; k <= p; ++k) {
        SeriesSum e(ctx);
        for (const auto& idx : subsets(p, k)) e.add(leibniz_det(principal(m, idx), ctx));
        out[p - k] = k % 2 == 1 ? -e.value() : e.value();
    }
    return out;
}

bool strongly_distinct(const LocalAutomorphism& g, const LocalAutomorphism& h, const LocalStructure& s) {
    if (s.ramified()) {
        // a field: the only nonzero idempotent is 1
        return !same_action(g, h);
    }
    const Permutation sg = g.as_permutation(), sh = h.as_permutation();
    const std::size_t p = sg.size();
    for (std::uint32_t mask = 1; mask < (1U << p); ++mask) {
        bool differ = false;
        for (std::uint32_t basis = 1; basis <= p && !differ; ++basis)
            for (std::size_t i = 0; i < p && !differ; ++i)
                if ((mask >> i) & 1U) differ = (sg[i] == basis) != (sh[i] == basis);
        if (!differ) return false;
    }
    return true;
}

}  // namespace adelic
