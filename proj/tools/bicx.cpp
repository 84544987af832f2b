// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
//
// bicx: command-line front end for the bicomplex library.
//
// Exit codes: 0 success, 1 verification failure or mathematical error
// (non-invertible, no exact root, float overflow), 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicx/bicx.hpp"

namespace {

using bicx::Bicomplex;
using bicx::OutputFormat;
using bicx::Rational;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct Globals {
    std::string mode = "exact";
    std::string format = "text";
    OutputFormat fmt = OutputFormat::Text;
};

template<class T>
std::string display(const bicx::expr::Evaluation<T>& ev)
{
    switch (ev.display) {
        case bicx::expr::Display::Idempotent: return bicx::to_string(bicx::to_idempotent(ev.value));
        case bicx::expr::Display::Vector: return bicx::to_string(bicx::to_vec4(ev.value));
        case bicx::expr::Display::Cartesian: break;
    }
    return bicx::to_string(ev.value);
}

template<class T>
void print_value(const Globals& g, const bicx::expr::Evaluation<T>& ev)
{
    if (g.fmt == OutputFormat::Json) {
        std::cout << bicx::to_json(ev.value).dump() << '\n';
    } else {
        std::cout << display(ev) << '\n';
    }
}

template<class T>
int cmd_eval(const Globals& g, const std::string& input)
{
    print_value(g, bicx::expr::evaluate<T>(input));
    return exit_ok;
}

template<class T>
int cmd_conj(const Globals& g, const std::string& tag_text, const std::string& input)
{
    const auto ev = bicx::expr::evaluate<T>(input);
    std::vector<bicx::ConjTag> tags;
    if (tag_text == "all") {
        tags.assign(bicx::all_tags.begin(), bicx::all_tags.end());
    } else if (auto t = bicx::parse_tag(tag_text)) {
        tags.push_back(*t);
    } else {
        std::cerr << "error: unknown conjugation '" << tag_text << "' (expected dag0..dag5, pdag6, pdag7, all)\n";
        return exit_usage;
    }
    json out = json::object();
    for (auto t : tags) {
        bicx::expr::Evaluation<T> image{bicx::conjugate(t, ev.value), ev.display};
        if (g.fmt == OutputFormat::Json) {
            out[std::string(bicx::tag_name(t))] = bicx::to_json(image.value);
        } else if (tags.size() == 1) {
            std::cout << display(image) << '\n';
        } else {
            std::cout << bicx::tag_name(t) << ": " << display(image) << '\n';
        }
    }
    if (g.fmt == OutputFormat::Json) {
        std::cout << out.dump() << '\n';
    }
    return exit_ok;
}

template<class T>
int cmd_inverse(const Globals& g, const std::string& input, const std::string& kind_text)
{
    const auto ev = bicx::expr::evaluate<T>(input);
    std::vector<std::pair<std::string, Bicomplex<T>>> rows;
    auto add_kind = [&](bicx::ConjugateProductKind k) {
        rows.emplace_back(std::string(bicx::kind_name(k)), bicx::inverse_via_conjugates(ev.value, k));
    };
    if (kind_text == "idempotent") {
        rows.emplace_back("idempotent", bicx::inverse_idempotent(ev.value));
    } else if (kind_text == "all") {
        rows.emplace_back("idempotent", bicx::inverse_idempotent(ev.value));
        for (auto k : bicx::all_product_kinds) {
            add_kind(k);
        }
    } else if (auto k = bicx::parse_kind(kind_text)) {
        add_kind(*k);
    } else {
        std::cerr << "error: unknown kind '" << kind_text << "'\n";
        return exit_usage;
    }
    if (g.fmt == OutputFormat::Json) {
        json out = json::object();
        for (const auto& [name, v] : rows) {
            out[name] = bicx::to_json(v);
        }
        std::cout << out.dump() << '\n';
        return exit_ok;
    }
    for (const auto& [name, v] : rows) {
        const std::string text = display(bicx::expr::Evaluation<T>{v, ev.display});
        std::cout << (rows.size() == 1 ? text : name + ": " + text) << '\n';
    }
    return exit_ok;
}

template<class T>
int cmd_roots(const Globals& g, const std::string& input)
{
    const auto ev = bicx::expr::evaluate<T>(input);
    const auto roots = bicx::square_roots(ev.value);
    if (g.fmt == OutputFormat::Json) {
        json out = json::array();
        for (const auto& r : roots) {
            out.push_back(bicx::to_json(r));
        }
        std::cout << out.dump() << '\n';
        return exit_ok;
    }
    for (const auto& r : roots) {
        std::cout << display(bicx::expr::Evaluation<T>{r, ev.display}) << '\n';
    }
    return exit_ok;
}

template<class T>
std::optional<bicx::Vec4<T>> parse_normal(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        parts.push_back(item);
    }
    if (parts.size() != 4) {
        return std::nullopt;
    }
    bicx::Vec4<T> v;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto value = bicx::expr::evaluate<T>(parts[k]).value;
        const auto coords = bicx::to_vec4(value);
        if (!bicx::scalar_traits<T>::is_zero(coords[1]) || !bicx::scalar_traits<T>::is_zero(coords[2])
            || !bicx::scalar_traits<T>::is_zero(coords[3])) {
            return std::nullopt;
        }
        v[k] = coords[0];
    }
    return v;
}

template<class T>
int cmd_reflect(const Globals& g, const std::string& input, const std::string& axis, const std::string& normal,
                const std::string& plane)
{
    const auto ev = bicx::expr::evaluate<T>(input);
    const auto v = bicx::to_vec4(ev.value);
    bicx::Vec4<T> out;
    if (!axis.empty()) {
        auto a = bicx::parse_axis(axis);
        if (!a) {
            std::cerr << "error: --axis must be i1, i2 or j1\n";
            return exit_usage;
        }
        out = bicx::reflect_axis(*a, v);
    } else if (!plane.empty()) {
        if (plane != "a4" && plane != "a5") {
            std::cerr << "error: --plane must be a4 or a5\n";
            return exit_usage;
        }
        out = bicx::reflect_hyperplane(plane == "a4" ? bicx::plane_a4<T>() : bicx::plane_a5<T>(), v);
    } else {
        auto n = parse_normal<T>(normal);
        if (!n) {
            std::cerr << "error: --normal expects four real components a,b,c,d\n";
            return exit_usage;
        }
        out = bicx::reflect_hyperplane(bicx::Hyperplane<T>(*n), v);
    }
    if (g.fmt == OutputFormat::Json) {
        std::cout << bicx::to_json(bicx::from_vec4(out)).dump() << '\n';
    } else {
        std::cout << bicx::to_string(out) << '\n';
    }
    return exit_ok;
}

int cmd_table(const Globals& g, const std::string& which)
{
    if (which == "conj") {
        std::cout << bicx::render(bicx::labelled(bicx::cayley_table()), g.fmt);
    } else if (which == "d8") {
        std::cout << bicx::render(bicx::labelled(bicx::d8_table()), g.fmt);
    } else {
        std::cerr << "error: --which must be conj or d8\n";
        return exit_usage;
    }
    return exit_ok;
}

int cmd_subgroups(const Globals& g)
{
    const auto groups = bicx::subgroups(bicx::cayley_table());
    json out = json::array();
    for (const auto& h : groups) {
        std::vector<std::string> tags;
        std::vector<std::string> images;
        for (auto t : h) {
            tags.emplace_back(bicx::tag_name(t));
            images.emplace_back(bicx::rho(t).name());
        }
        if (g.fmt == OutputFormat::Json) {
            out.push_back({{"order", h.size()}, {"members", tags}, {"d8", images}});
            continue;
        }
        std::string line = "order " + std::to_string(h.size()) + ": {";
        for (std::size_t k = 0; k < tags.size(); ++k) {
            line += (k ? ", " : "") + tags[k];
        }
        line += "} -> {";
        for (std::size_t k = 0; k < images.size(); ++k) {
            line += (k ? ", " : "") + images[k];
        }
        std::cout << line << "}\n";
    }
    if (g.fmt == OutputFormat::Json) {
        std::cout << out.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_verify(const Globals& g, bool all, const std::vector<std::string>& theorems, std::size_t samples)
{
    bicx::verify::Options options;
    options.seed = bicx::seed_from_env();
    options.samples = samples;

    std::vector<std::string> names = theorems;
    if (all || names.empty()) {
        names = bicx::verify::theorem_names();
    }
    const auto known = bicx::verify::theorem_names();
    for (const auto& n : names) {
        if (std::find(known.begin(), known.end(), n) == known.end()) {
            std::cerr << "error: unknown theorem '" << n << "'; known:";
            for (const auto& k : known) {
                std::cerr << ' ' << k;
            }
            std::cerr << '\n';
            return exit_usage;
        }
    }

    bool ok = true;
    std::optional<std::string> first_failure;
    json out = json::array();
    for (const auto& n : names) {
        const auto r = bicx::verify::run_check(n, options);
        ok = ok && r.passed;
        if (!r.passed && !first_failure) {
            first_failure = r.name;
        }
        if (g.fmt == OutputFormat::Json) {
            out.push_back({{"name", r.name}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << r.title << "\n      " << r.detail
                      << '\n';
        }
    }
    if (g.fmt == OutputFormat::Json) {
        std::cout << json{{"seed", options.seed}, {"passed", ok}, {"checks", out}}.dump(2) << '\n';
    } else {
        std::cout << (ok ? "all checks passed" : "first failing check: " + *first_failure) << '\n';
    }
    return ok ? exit_ok : exit_failure;
}

template<class T>
int dispatch_numeric(CLI::App& app, const Globals& g, const std::string& expr, const std::string& tag,
                     const std::string& kind, const std::string& axis, const std::string& normal,
                     const std::string& plane)
{
    if (app.got_subcommand("eval")) return cmd_eval<T>(g, expr);
    if (app.got_subcommand("conj")) return cmd_conj<T>(g, tag, expr);
    if (app.got_subcommand("inverse")) return cmd_inverse<T>(g, expr, kind);
    if (app.got_subcommand("roots")) return cmd_roots<T>(g, expr);
    if (app.got_subcommand("reflect")) return cmd_reflect<T>(g, expr, axis, normal, plane);
    return exit_usage;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bicx: exact bicomplex arithmetic, conjugations and their group structure"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--mode", g.mode, "Scalar mode")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "md", "csv"}));

    std::string expr;
    std::string tag;
    std::string kind = "all";
    std::string axis;
    std::string normal;
    std::string plane;

    auto* eval = app.add_subcommand("eval", "Evaluate an expression");
    eval->add_option("expr", expr, "Expression, e.g. \"(1+i2)*(1-i2)\"")->required();

    auto* conj = app.add_subcommand("conj", "Apply a conjugation (dag0..dag5, pdag6, pdag7, or all)");
    conj->add_option("tag", tag)->required();
    conj->add_option("expr", expr)->required();

    auto* inverse = app.add_subcommand("inverse", "Inverse via idempotent components and conjugate products");
    inverse->add_option("expr", expr)->required();
    inverse->add_option("--kind", kind, "idempotent, full, sub123, sub345, sub367 or all");

    auto* roots = app.add_subcommand("roots", "All square roots");
    roots->add_option("expr", expr)->required();

    auto* reflect = app.add_subcommand("reflect", "Reflect the real 4-vector of an expression");
    reflect->add_option("expr", expr)->required();
    auto* axis_opt = reflect->add_option("--axis", axis, "Coordinate plane: i1, i2 or j1");
    auto* normal_opt = reflect->add_option("--normal", normal, "Hyperplane normal a,b,c,d");
    auto* plane_opt = reflect->add_option("--plane", plane, "Named hyperplane: a4 or a5");
    axis_opt->excludes(normal_opt)->excludes(plane_opt);
    normal_opt->excludes(plane_opt);

    std::string which = "conj";
    auto* table = app.add_subcommand("table", "Print a Cayley table");
    table->add_option("--which", which, "conj or d8")->check(CLI::IsMember({"conj", "d8"}));

    app.add_subcommand("subgroups", "List the subgroups and their images in D8");

    bool all = false;
    std::vector<std::string> theorems;
    std::size_t samples = 1000;
    auto* verify = app.add_subcommand("verify", "Run the verification checks");
    verify->add_flag("--all", all, "Run every check");
    verify->add_option("--theorem", theorems, "Check name (repeatable)");
    verify->add_option("--samples", samples, "Random samples per property check")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    g.fmt = *bicx::parse_format(g.format);

    if (reflect->parsed() && axis.empty() && normal.empty() && plane.empty()) {
        std::cerr << "error: reflect needs one of --axis, --normal, --plane\n";
        return exit_usage;
    }

    try {
        if (table->parsed()) return cmd_table(g, which);
        if (app.got_subcommand("subgroups")) return cmd_subgroups(g);
        if (verify->parsed()) return cmd_verify(g, all, theorems, samples);
        if (g.mode == "float") {
            return dispatch_numeric<double>(app, g, expr, tag, kind, axis, normal, plane);
        }
        return dispatch_numeric<Rational>(app, g, expr, tag, kind, axis, normal, plane);
    } catch (const bicx::expr::SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const bicx::expr::EvalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const bicx::ZeroNormal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
}
