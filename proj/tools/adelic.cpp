// adelic: command-line front end. Every verb prints one JSON object on stdout.
// Exit codes: 0 success, 1 malformed input or usage, 2 domain error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "adelic/errors.hpp"
#include "adelic/json_io.hpp"
#include "adelic/modular.hpp"
#include "selftest.hpp"

using namespace adelic;
using json_io::Json;

namespace {

struct Config {
    std::uint32_t ell = 7;
    std::uint32_t p = 0;
    std::size_t prec = kDefaultPrecision;
};

std::string slurp(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A file name, "-" for stdin, or inline JSON.
Json load(const std::string& arg) {
    const bool inline_json = arg != "-" && !std::filesystem::exists(arg);
    try {
        return Json::parse(inline_json ? arg : slurp(arg));
    } catch (const Json::parse_error& e) {
        throw ParseError((inline_json ? std::string("no such file and not JSON: ") : "bad JSON in " + arg + ": ") +
                         (inline_json ? arg : e.what()));
    }
}

// Like load, but bare series text such as z*(2 + z) is accepted too.
Json load_series(const std::string& arg) {
    if (arg == "-" || std::filesystem::exists(arg)) return load(arg);
    try {
        return Json::parse(arg);
    } catch (const Json::parse_error&) {
        return Json(arg);
    }
}

Json class_json(const ValuationVector& v) {
    Json out;
    out["vec"] = json_io::to_json(v);
    out["class"] = json_io::to_json(ValuationClass(v).canonical());
    out["trivial"] = v.empty();
    return out;
}

Json profile_json(const RamProfile& r) {
    Json out = Json::object();
    for (const auto& [x, e] : r.e) out[x.label()] = e;
    return out;
}

Json unit_json(const std::optional<std::uint32_t>& b) {
    Json out;
    out["verdict"] = b.has_value();
    if (b) out["b"] = *b;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adelic Kummer theory over function fields: classification of p-cyclic extensions"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--ell", cfg.ell, "characteristic of the coefficient field")->capture_default_str();
    app.add_option("--p", cfg.p, "prime degree of the extensions");
    app.add_option("--prec", cfg.prec, "series precision (ADELIC_PREC overrides)")->capture_default_str();

    std::string t_arg, t1_arg, t2_arg, g_arg, g1_arg, g2_arg, a_arg, b_arg, f_arg, lambda_arg;
    std::int64_t s = 1, a_exp = 1;
    bool lenient = false;

    auto* classify_cmd = app.add_subcommand("classify", "valuation vector and class of A{t} under (G, chi)");
    classify_cmd->add_option("--t", t_arg, "idele JSON")->required();
    classify_cmd->add_option("--g", g_arg, "generator JSON (default: the Kummer action T -> zeta T)");
    classify_cmd->add_option("--s", s, "character: chi(generator) = zeta^s")->capture_default_str();

    auto* isom_cmd = app.add_subcommand("isom", "algebra and equivariant isomorphism of A{t1}, A{t2}");
    isom_cmd->add_option("--t1", t1_arg, "idele JSON")->required();
    isom_cmd->add_option("--t2", t2_arg, "idele JSON")->required();

    auto* conj_cmd = app.add_subcommand("conjugate", "are two valuation vectors (Z/p)^*-multiples");
    conj_cmd->add_option("--a", a_arg, "vector JSON")->required();
    conj_cmd->add_option("--b", b_arg, "vector JSON")->required();

    auto* product_cmd = app.add_subcommand("product", "Harrison product of two classes");
    product_cmd->add_option("--a", a_arg, "vector JSON")->required();
    product_cmd->add_option("--b", b_arg, "vector JSON")->required();

    auto* pairing_cmd = app.add_subcommand("pairing", "local Kummer pairing <T -> zeta^a T, lambda>");
    pairing_cmd->add_option("--a", a_exp, "exponent of the automorphism")->required();
    pairing_cmd->add_option("--t", t_arg, "local parameter t_x (series JSON or text)")->required();
    pairing_cmd->add_option("--lambda", lambda_arg, "series JSON or text")->required();

    auto* tuple_cmd = app.add_subcommand("tuple", "ramified tuple of a subgroup");
    tuple_cmd->add_option("--t", t_arg, "idele JSON")->required();
    tuple_cmd->add_option("--g", g_arg, "generator JSON")->required();

    auto* equiv_cmd = app.add_subcommand("equivalent", "Galois equivalence of two subgroups");
    equiv_cmd->add_option("--t", t_arg, "idele JSON")->required();
    equiv_cmd->add_option("--g1", g1_arg, "generator JSON")->required();
    equiv_cmd->add_option("--g2", g2_arg, "generator JSON")->required();

    auto* conjugation_cmd = app.add_subcommand("conjugation", "explicit conjugation between two subgroups");
    conjugation_cmd->add_option("--t", t_arg, "idele JSON")->required();
    conjugation_cmd->add_option("--g1", g1_arg, "generator JSON")->required();
    conjugation_cmd->add_option("--g2", g2_arg, "generator JSON")->required();
    conjugation_cmd->add_option("--s", s, "character of the first subgroup")->capture_default_str();

    auto* super_cmd = app.add_subcommand("superelliptic", "classify the cover y^p = f(x)");
    super_cmd->add_option("--f", f_arg, "factored function JSON")->required();
    super_cmd->add_flag("--lenient", lenient, "skip the admissibility conditions");

    auto* selftest_cmd = app.add_subcommand("selftest", "run randomized invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    }

    if (const char* env = std::getenv("ADELIC_PREC")) {
        try {
            cfg.prec = std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "ADELIC_PREC must be a positive integer\n";
            return 1;
        }
    }

    try {
        if (cfg.prec == 0) throw ParseError("precision must be positive");
        if (selftest_cmd->parsed()) {
            const Json r = tools::run_selftest(cfg.ell, cfg.prec);
            std::cout << r.dump() << "\n";
            return r.at("passed").get<bool>() ? 0 : 2;
        }
        if (cfg.p == 0) throw ParseError("--p is required");
        if (!is_prime(cfg.p)) throw ParseError("--p must be prime");
        if (!is_prime(cfg.ell) || cfg.ell == cfg.p) throw ParseError("--ell must be a prime different from p");
        const std::uint32_t p = cfg.p;
        FieldCtx ctx(cfg.ell, p);
        Json out;

        if (classify_cmd->parsed()) {
            const Idele t = json_io::idele_from_json(ctx, load(t_arg), p, cfg.prec);
            const GlobalAutomorphism g =
                g_arg.empty() ? GlobalAutomorphism::kummer(t, p) : json_io::global_aut_from_json(p, load(g_arg));
            out = class_json(classify(t, CyclicSubgroup(g), Character(p, s)).vec);
        } else if (isom_cmd->parsed()) {
            const Idele t1 = json_io::idele_from_json(ctx, load(t1_arg), p, cfg.prec);
            const Idele t2 = json_io::idele_from_json(ctx, load(t2_arg), p, cfg.prec);
            out["algebra"] = algebra_isomorphic(t1, t2, p);
            out["equivariant"] = equivariant_isomorphic(kummer_map(t1, p), kummer_map(t2, p));
            out["profile1"] = profile_json(ram_profile(Adele(t1), p));
            out["profile2"] = profile_json(ram_profile(Adele(t2), p));
        } else if (conj_cmd->parsed()) {
            const ExtensionClass a{json_io::vector_from_json(p, load(a_arg)), std::nullopt};
            const ExtensionClass b{json_io::vector_from_json(p, load(b_arg)), std::nullopt};
            out = unit_json(conjugating_unit(a, b));
        } else if (product_cmd->parsed()) {
            const ExtensionClass a{json_io::vector_from_json(p, load(a_arg)), std::nullopt};
            const ExtensionClass b{json_io::vector_from_json(p, load(b_arg)), std::nullopt};
            out = class_json(product(a, b).vec);
        } else if (pairing_cmd->parsed()) {
            const LaurentSeries t = json_io::series_from_json(ctx, load_series(t_arg), cfg.prec);
            const LaurentSeries lambda = json_io::series_from_json(ctx, load_series(lambda_arg), cfg.prec);
            if (t.is_zero() || lambda.is_zero()) raise("ZeroParameter", "pairing arguments must be nonzero");
            const FieldElem v = kummer_pair(a_exp, lambda.valuation(), t.valuation(), ctx);
            const FieldElem w = oracle_pair(a_exp, lambda, t, ctx);
            out["value"] = json_io::to_json(v);
            out["log"] = ctx.log_zeta(v);
            out["oracle_agrees"] = v == w;
        } else if (tuple_cmd->parsed()) {
            const Idele t = json_io::idele_from_json(ctx, load(t_arg), p, cfg.prec);
            const CyclicSubgroup g(json_io::global_aut_from_json(p, load(g_arg)));
            out["tuple"] = json_io::to_json(ram_tuple(g, t));
        } else if (equiv_cmd->parsed()) {
            const Idele t = json_io::idele_from_json(ctx, load(t_arg), p, cfg.prec);
            const CyclicSubgroup g1(json_io::global_aut_from_json(p, load(g1_arg)));
            const CyclicSubgroup g2(json_io::global_aut_from_json(p, load(g2_arg)));
            out = unit_json(galois_equivalent(g1, g2, t));
        } else if (conjugation_cmd->parsed()) {
            const Idele t = json_io::idele_from_json(ctx, load(t_arg), p, cfg.prec);
            const CyclicSubgroup g1(json_io::global_aut_from_json(p, load(g1_arg)));
            const CyclicSubgroup g2(json_io::global_aut_from_json(p, load(g2_arg)));
            const Conjugation c = construct_conjugation(g1, g2, t, Character(p, s), ctx);
            out["k"] = c.k;
            out["s2"] = c.chi2.s();
            out["phi"] = json_io::to_json(c.phi);
            out["u"] = json_io::to_json(c.u);
            out["verified"] = verify_conjugation(c, g1, g2, t, ctx);
        } else if (super_cmd->parsed()) {
            const RationalFunction f = json_io::function_from_json(ctx, load(f_arg));
            const SuperellipticClass c = classify_superelliptic(
                f, p, ctx, cfg.prec, lenient ? Admissibility::Lenient : Admissibility::Strict);
            out["vec"] = json_io::to_json(c.vec);
            out["ram"] = json_io::to_json(c.ram);
            out["class"] = json_io::to_json(c.cls.canonical());
            out["admissible"] = c.admissible;
            if (!c.warnings.empty()) out["warnings"] = c.warnings;
        }
        std::cout << out.dump() << "\n";
        return 0;
    } catch (const DomainError& e) {
        Json err;
        err["error"] = e.code();
        err["message"] = e.what();
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
