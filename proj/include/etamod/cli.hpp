#pragma once

// Command-line front end.  Subcommands: haupt, jmap, coeffs, cm, genus,
// kcurve, twists, verify.  Text output by default; --json emits a single
// document {"command", "level"?, "result", "warnings"}.  Exit codes:
// 0 success, 1 domain error (singular input, nonexistence, failed
// verification), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "etamod/verify.hpp"

namespace etamod {

using nlohmann::json;

// ---- literal parsing ----------------------------------------------------

// Parses "a", "a+b*sqrt(d)", "b*sqrt(d)", "sqrt(d)" and sign variants,
// with rational a, b.
inline QuadraticNumber parse_quadratic(std::string text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::domain_error("empty quadratic literal");
    size_t pos = s.find("sqrt(");
    if (pos == std::string::npos) return QuadraticNumber(parse_rational(s));
    if (s.back() != ')') throw std::domain_error("malformed quadratic literal: " + text);
    Integer d(s.substr(pos + 5, s.size() - 1 - (pos + 5)));
    std::string head = s.substr(0, pos);  // "", "-", "a+", "a-b*", "b*", ...
    if (!head.empty() && head.back() == '*') head.pop_back();
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '+' && head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    std::string a_part, b_part;
    if (split == std::string::npos) {
        b_part = head;
    } else {
        a_part = head.substr(0, split);
        b_part = head.substr(split);
    }
    auto parse_signed = [](std::string v) {
        if (!v.empty() && v.front() == '+') v.erase(v.begin());
        return parse_rational(v);
    };
    Rational a = a_part.empty() ? Rational(0) : parse_signed(a_part);
    Rational b;
    if (b_part.empty() || b_part == "+")
        b = 1;
    else if (b_part == "-")
        b = -1;
    else
        b = parse_signed(b_part);
    return QuadraticNumber(a, b, d);
}

// ---- serialization ------------------------------------------------------

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs) arr.push_back(c.get_str());
    return arr;
}

inline json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())},
                {"den", to_json(f.den())},
                {"display", to_string(f)}};
}

inline json to_json(const QuadraticNumber& q) {
    return json{{"a", to_string(q.a())}, {"b", to_string(q.b())}, {"d", q.d().get_str()}};
}

inline std::string eta_product_display(const EtaProduct& p) {
    std::string s;
    for (const auto& [delta, r] : p.exponents) {
        if (r == 0) continue;
        if (!s.empty()) s += " * ";
        s += "eta(" + (delta == 1 ? std::string("tau") : std::to_string(delta) + "*tau") +
             ")^" + std::to_string(r);
    }
    return s.empty() ? "1" : s;
}

namespace detail {

struct Emitter {
    std::ostream& out;
    bool as_json;
    json doc;

    Emitter(std::ostream& o, bool j, const std::string& command,
            std::optional<long> level = std::nullopt)
        : out(o), as_json(j) {
        doc["command"] = command;
        if (level) doc["level"] = *level;
        doc["result"] = json::object();
        doc["warnings"] = json::array();
    }
    void warn(const std::string& w) {
        doc["warnings"].push_back(w);
        if (!as_json) out << "warning: " << w << "\n";
    }
    void field(const std::string& key, const json& value, const std::string& text_line) {
        doc["result"][key] = value;
        if (!as_json) out << text_line << "\n";
    }
    void flush() {
        if (as_json) out << doc.dump(2) << "\n";
    }
};

}  // namespace detail

// ---- command runner -----------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for genus-zero modular curves X_0(N): eta-product "
                 "Hauptmoduln, j and isogeny coefficients as rational functions, CM special "
                 "values, and strict twist families over quadratic fields"};
    app.require_subcommand(1);

    long level = 0;
    long disc = 0;
    long prec = 0;
    long bound = 200;
    std::string t_text = "0";
    std::string alpha_text = "1";
    std::string suite = "all";
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd, bool needs_level) {
        auto* opt = cmd->add_option("--level", level, "level N");
        if (needs_level) opt->required();
        cmd->add_flag("--json", as_json, "emit a JSON document");
        return cmd;
    };

    auto* c_haupt = add_common(app.add_subcommand("haupt", "derive the Hauptmodul"), true);
    c_haupt->add_option("--prec", prec, "series precision override");
    auto* c_jmap = add_common(app.add_subcommand("jmap", "j as a rational function of h"), true);
    c_jmap->add_option("--prec", prec, "series precision override");
    auto* c_coeffs =
        add_common(app.add_subcommand("coeffs", "isogenous-pair coefficient functions"), true);
    c_coeffs->add_option("--prec", prec, "series precision override");
    add_common(app.add_subcommand("cm", "special value of j at the Fricke fixed point"), true);
    add_common(app.add_subcommand("genus", "level invariants and genus"), true);
    auto* c_kcurve =
        add_common(app.add_subcommand("kcurve", "decide strict twist existence"), true);
    c_kcurve->add_option("--disc", disc, "radicand D of the quadratic field")->required();
    c_kcurve->add_option("--bound", bound, "witness search bound");
    auto* c_twists = add_common(app.add_subcommand("twists", "strict twist family"), true);
    c_twists->add_option("--disc", disc, "radicand D of the quadratic field")->required();
    c_twists->add_option("--t", t_text, "conic parameter t (rational p/q)");
    c_twists->add_option("--alpha", alpha_text, "twist scalar, e.g. \"1+2*sqrt(-1)\"");
    auto* c_verify = add_common(app.add_subcommand("verify", "run verification suites"), false);
    c_verify->add_option("--suite", suite, "suite name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("haupt")) {
            detail::Emitter em(out, as_json, "haupt", level);
            HauptmodulRecord rec = solve_record(level);
            if (prec > 0 && !verify_hauptmodul(rec.product, prec))
                throw std::logic_error("expansion check failed at requested precision");
            json exps = json::object();
            std::string exp_text;
            for (long d : divisors(level)) {
                exps[std::to_string(d)] = rec.product.exponent(d);
                if (!exp_text.empty()) exp_text += ", ";
                exp_text += std::to_string(rec.product.exponent(d));
            }
            em.field("exponents", exps, "exponents (" + exp_text + ")");
            em.field("product", eta_product_display(rec.product),
                     "h = " + eta_product_display(rec.product));
            em.field("kappa", to_json(rec.kappa), "kappa = " + to_string(rec.kappa));
            em.field("kappaSqrt", to_json(rec.kappaSqrt),
                     "sqrt(kappa) = " + rec.kappaSqrt.str());
            em.flush();
            return 0;
        }
        if (app.got_subcommand("genus")) {
            detail::Emitter em(out, as_json, "genus", level);
            LevelInvariants inv = level_invariants(level);
            em.field("degree", inv.degree, "degree psi(N) = " + std::to_string(inv.degree));
            em.field("eps2", inv.eps2, "elliptic points of order 2: " + std::to_string(inv.eps2));
            em.field("eps3", inv.eps3, "elliptic points of order 3: " + std::to_string(inv.eps3));
            em.field("epsInf", inv.epsInf, "cusps: " + std::to_string(inv.epsInf));
            em.field("genus", inv.genus, "genus = " + std::to_string(inv.genus));
            em.field("isGenusZero", is_genus0_level(level),
                     std::string("genus zero: ") + (is_genus0_level(level) ? "yes" : "no"));
            em.flush();
            return 0;
        }
        if (app.got_subcommand("jmap")) {
            detail::Emitter em(out, as_json, "jmap", level);
            RationalFunction j, j1728;
            if (prec > 0) {
                HauptmodulRecord rec = solve_record(level);
                RecoveryWorkspace ws = make_workspace(rec, prec);
                j = express_in_hauptmodul(j_series(prec), ws, psi(level));
                j1728 = j - RationalFunction::constant(Rational(1728));
            } else {
                const LevelContext& ctx = level_context(level);
                j = ctx.jFunction;
                j1728 = ctx.j1728Function;
            }
            em.field("j", to_json(j), "j = " + to_string(j));
            em.field("jMinus1728", to_json(j1728), "j - 1728 = " + to_string(j1728));
            em.flush();
            return 0;
        }
        if (app.got_subcommand("coeffs")) {
            detail::Emitter em(out, as_json, "coeffs", level);
            IsogenousPairFunctions c;
            if (prec > 0) {
                HauptmodulRecord rec = solve_record(level);
                c = isogenous_pair_coeffs(make_workspace(rec, prec));
            } else {
                c = level_context(level).coeffs;
            }
            em.field("A4", to_json(c.A4), "A4 = " + to_string(c.A4));
            em.field("A6", to_json(c.A6), "A6 = " + to_string(c.A6));
            em.field("A4p", to_json(c.A4p), "A4' = " + to_string(c.A4p));
            em.field("A6p", to_json(c.A6p), "A6' = " + to_string(c.A6p));
            em.flush();
            return 0;
        }
        if (app.got_subcommand("cm")) {
            detail::Emitter em(out, as_json, "cm", level);
            CmSpecialValue v = cm_special_value(level);
            em.field("tau", v.fixedTau, "tau = " + v.fixedTau);
            em.field("h", to_json(v.hValue), "h = " + v.hValue.str());
            em.field("j", to_json(v.jValue), "j = " + v.jValue.str());
            em.flush();
            return 0;
        }
        if (app.got_subcommand("kcurve")) {
            detail::Emitter em(out, as_json, "kcurve", level);
            NormDecision dec = strict_kcurve_exists(level, Integer(disc), bound);
            em.field("exists", dec.exists,
                     dec.exists ? "a strict twist exists" : "no strict twist exists");
            em.field("plusIsNorm", dec.plusIsNorm,
                     std::string("+N is a norm: ") + (dec.plusIsNorm ? "yes" : "no"));
            em.field("minusIsNorm", dec.minusIsNorm,
                     std::string("-N is a norm: ") + (dec.minusIsNorm ? "yes" : "no"));
            if (dec.witness) {
                json w{{"x", to_string(dec.witness->x)},
                       {"y", to_string(dec.witness->y)},
                       {"sign", dec.witness->sign}};
                em.field("witness", w,
                         "witness: x = " + to_string(dec.witness->x) +
                             ", y = " + to_string(dec.witness->y) + " for " +
                             (dec.witness->sign > 0 ? "+" : "-") + std::to_string(level));
            }
            em.flush();
            return dec.exists ? 0 : 1;
        }
        if (app.got_subcommand("twists")) {
            detail::Emitter em(out, as_json, "twists", level);
            TwistSpec spec{level, Integer(disc), parse_rational(t_text),
                           parse_quadratic(alpha_text)};
            TwistFamily fam = strict_twist_family(spec);
            em.field("h", to_json(fam.h), "h = " + fam.h.str());
            json curve{{"a4", to_json(fam.curve.a4)}, {"a6", to_json(fam.curve.a6)}};
            json isog{{"a4", to_json(fam.isogenous.a4)}, {"a6", to_json(fam.isogenous.a6)}};
            em.field("curve", curve,
                     "E:  y^2 = x^3 + (" + fam.curve.a4.str() + ") x + (" +
                         fam.curve.a6.str() + ")");
            em.field("isogenous", isog,
                     "E': y^2 = x^3 + (" + fam.isogenous.a4.str() + ") x + (" +
                         fam.isogenous.a6.str() + ")");
            em.field("strict", fam.strict,
                     std::string("strict: ") + (fam.strict ? "yes" : "no"));
            em.flush();
            return 0;
        }
        if (app.got_subcommand("verify")) {
            detail::Emitter em(out, as_json, "verify");
            bool all_pass = true;
            json suites = json::array();
            for (const SuiteResult& r : run_suites(suite)) {
                all_pass = all_pass && r.pass;
                json s{{"name", r.name}, {"pass", r.pass}, {"detail", r.lines}};
                suites.push_back(s);
                if (!as_json) {
                    out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
                    for (const auto& line : r.lines) out << "  " << line << "\n";
                }
                for (const auto& w : r.warnings) em.warn(w);
            }
            em.doc["result"]["suites"] = suites;
            em.doc["result"]["pass"] = all_pass;
            if (!as_json) out << (all_pass ? "all suites passed" : "some suites failed") << "\n";
            em.flush();
            return all_pass ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "unknown subcommand\n";
    return 2;
}

}  // namespace etamod
