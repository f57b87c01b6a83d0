#include "adelic/json_io.hpp"

#include "adelic/errors.hpp"

namespace adelic::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::int64_t integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

Permutation permutation_from_json(std::uint32_t p, const Json& j) {
    if (!j.is_array()) throw ParseError("permutation must be an array");
    Permutation out;
    for (const auto& e : j) {
        const std::int64_t v = integer(e, "permutation entry");
        if (v < 1) throw ParseError("permutation entries are 1-based");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    perm::validate(out, p);
    return out;
}

}  // namespace

FieldElem field_from_json(const FieldCtx& ctx, const Json& j) {
    if (j.is_number_integer()) return ctx.elem(j.get<std::int64_t>());
    if (j.is_string()) return FieldElem::parse(ctx, j.get<std::string>());
    throw ParseError("field element must be an integer or a string like \"L0:[3]\"");
}

Json to_json(const FieldElem& a) { return a.to_string(); }

LaurentSeries series_from_json(const FieldCtx& ctx, const Json& j, std::size_t prec) {
    if (j.is_string()) return LaurentSeries::parse(ctx, j.get<std::string>(), prec);
    if (j.is_number_integer()) return LaurentSeries::constant(ctx.elem(j.get<std::int64_t>()), prec);
    const std::int64_t val = integer(field(j, "val"), "val");
    const Json& cs = field(j, "coeffs");
    if (!cs.is_array() || cs.empty()) throw ParseError("coeffs must be a nonempty array");
    std::size_t n = prec;
    if (j.contains("prec")) {
        const std::int64_t q = integer(j.at("prec"), "prec");
        if (q < 1) throw ParseError("prec must be positive");
        n = static_cast<std::size_t>(q);
    }
    std::vector<FieldElem> coeffs;
    for (const auto& c : cs) coeffs.push_back(field_from_json(ctx, c));
    coeffs.resize(n, ctx.zero());
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElem& c) { return c.is_zero(); }))
        return LaurentSeries::zero(ctx);
    return LaurentSeries::from_coeffs(static_cast<int>(val), std::move(coeffs));
}

Json to_json(const LaurentSeries& s) {
    Json out;
    if (s.is_zero()) {
        out["zero"] = true;
        return out;
    }
    out["val"] = s.valuation();
    Json cs = Json::array();
    std::size_t last = 0;
    for (std::size_t i = 0; i < s.precision(); ++i)
        if (!s.coeff(s.valuation() + static_cast<long>(i)).is_zero()) last = i;
    // trailing zeros are implied by "prec"
    for (std::size_t i = 0; i <= last; ++i) cs.push_back(s.coeff(s.valuation() + static_cast<long>(i)).to_string());
    out["coeffs"] = std::move(cs);
    out["prec"] = s.precision();
    return out;
}

Idele idele_from_json(const FieldCtx& ctx, const Json& j, std::uint32_t p, std::size_t prec) {
    if (!j.is_object()) throw ParseError("idele must be an object");
    if (j.contains("p") && integer(j.at("p"), "p") != static_cast<std::int64_t>(p))
        throw ParseError("idele was written for p = " + j.at("p").dump());
    Idele out = j.contains("default") ? Idele(series_from_json(ctx, j.at("default"), prec)) : Idele(ctx, prec);
    if (j.contains("points")) {
        if (!j.at("points").is_object()) throw ParseError("points must be an object");
        for (const auto& [label, v] : j.at("points").items()) out.set(Point(label), series_from_json(ctx, v, prec));
    }
    return out;
}

Json to_json(const Idele& t) {
    Json out;
    out["default"] = to_json(t.default_value());
    Json pts = Json::object();
    for (const auto& [x, v] : t.exceptions()) pts[x.label()] = to_json(v);
    out["points"] = std::move(pts);
    return out;
}

ValuationVector vector_from_json(std::uint32_t p, const Json& j) {
    if (!j.is_object()) throw ParseError("valuation vector must be an object");
    ValuationVector out(p);
    for (const auto& [label, v] : j.items()) out.set(Point(label), integer(v, "vector entry"));
    return out;
}

Json to_json(const ValuationVector& v) {
    Json out = Json::object();
    for (const auto& [x, r] : v.entries()) out[x.label()] = r;
    return out;
}

LocalAutomorphism local_aut_from_json(std::uint32_t p, const Json& j) {
    const Json& kind = field(j, "kind");
    if (kind == "ram") return LocalAutomorphism::ramified(p, integer(field(j, "a"), "a"));
    if (kind == "unram") return LocalAutomorphism::unramified(permutation_from_json(p, field(j, "sigma")));
    throw ParseError("kind must be \"ram\" or \"unram\"");
}

Json to_json(const LocalAutomorphism& g) {
    Json out;
    if (g.is_ramified_kind()) {
        out["kind"] = "ram";
        out["a"] = g.a();
    } else {
        out["kind"] = "unram";
        out["sigma"] = g.sigma();
    }
    return out;
}

GlobalAutomorphism global_aut_from_json(std::uint32_t p, const Json& j) {
    if (!j.is_object()) throw ParseError("automorphism must be an object");
    const Permutation dflt = permutation_from_json(p, field(j, "default_sigma"));
    std::map<Point, LocalAutomorphism> ex;
    if (j.contains("exceptions")) {
        if (!j.at("exceptions").is_object()) throw ParseError("exceptions must be an object");
        for (const auto& [label, v] : j.at("exceptions").items()) ex.emplace(Point(label), local_aut_from_json(p, v));
    }
    return GlobalAutomorphism(dflt, std::move(ex));
}

Json to_json(const GlobalAutomorphism& g) {
    Json out;
    out["default_sigma"] = g.default_sigma();
    Json ex = Json::object();
    for (const auto& [x, h] : g.exceptions()) ex[x.label()] = to_json(h);
    out["exceptions"] = std::move(ex);
    return out;
}

RationalFunction function_from_json(const FieldCtx& ctx, const Json& j) {
    const FieldElem c = j.contains("constant") ? field_from_json(ctx, j.at("constant")) : ctx.one();
    std::vector<std::pair<FieldElem, std::int64_t>> fs;
    const Json& factors = field(j, "factors");
    if (!factors.is_array()) throw ParseError("factors must be an array");
    for (const auto& f : factors) fs.emplace_back(field_from_json(ctx, field(f, "root")), integer(field(f, "exp"), "exp"));
    return RationalFunction(c, std::move(fs));
}

Json to_json(const RamTuple& r) {
    Json out = Json::object();
    for (const auto& [x, e] : r.entries) out[x.label()] = e;
    return out;
}

Json to_json(const std::set<Point>& pts) {
    Json out = Json::array();
    for (const auto& x : pts) out.push_back(x.label());
    return out;
}

}  // namespace adelic::json_io
