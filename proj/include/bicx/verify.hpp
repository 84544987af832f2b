// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/format.hpp"
#include "bicx/geometry.hpp"
#include "bicx/group.hpp"
#include "bicx/invert.hpp"
#include "bicx/involution.hpp"
#include "bicx/random.hpp"

/*!
 * \file
 * Named verification checks run by `bicx verify`.
 *
 * Published values (tables, subgroup lists, factorizations, displayed
 * reflection outputs) live in a Reference so that the checks can be
 * mutation-tested: perturbing any single reference entry must fail the
 * corresponding check.
 */
namespace bicx::verify {

using StringTable8 = std::array<std::array<std::string, 8>, 8>;

struct Reference {
    StringTable8 conj_table;
    std::array<std::array<std::string, 4>, 4> first_four;
    StringTable8 d8_table;
    //! Orders of dag0..pdag7.
    std::array<unsigned, 8> orders;
    //! Expected sizes of classify_n_involutions(n) keyed by n.
    std::map<unsigned, std::size_t> n_involution_counts;
    std::vector<std::string> roots_of_minus_one;
    std::vector<std::set<std::string>> subgroups;
    std::vector<std::set<std::string>> d8_subgroups;
    //! A pair whose composition fails to commute.
    std::pair<std::string, std::string> noncommuting_witness;
    //! First pair of the six conjugates whose composite leaves the set, and that composite.
    std::array<std::string, 3> closure_witness;
    std::vector<FactorizationClaim> factorizations;
    //! R_a4 and R_a5 applied to (1, 2, 3, 4).
    std::string a4_output;
    std::string a5_output;
};

inline Reference published_reference()
{
    Reference ref;
    ref.conj_table = {{
        {"dag0", "dag1", "dag2", "dag3", "dag4", "dag5", "pdag6", "pdag7"},
        {"dag1", "dag0", "dag3", "dag2", "pdag6", "pdag7", "dag4", "dag5"},
        {"dag2", "dag3", "dag0", "dag1", "pdag7", "pdag6", "dag5", "dag4"},
        {"dag3", "dag2", "dag1", "dag0", "dag5", "dag4", "pdag7", "pdag6"},
        {"dag4", "pdag7", "pdag6", "dag5", "dag0", "dag3", "dag2", "dag1"},
        {"dag5", "pdag6", "pdag7", "dag4", "dag3", "dag0", "dag1", "dag2"},
        {"pdag6", "dag5", "dag4", "pdag7", "dag1", "dag2", "dag3", "dag0"},
        {"pdag7", "dag4", "dag5", "pdag6", "dag2", "dag1", "dag0", "dag3"},
    }};
    ref.first_four = {{
        {"dag0", "dag1", "dag2", "dag3"},
        {"dag1", "dag0", "dag3", "dag2"},
        {"dag2", "dag3", "dag0", "dag1"},
        {"dag3", "dag2", "dag1", "dag0"},
    }};
    ref.d8_table = {{
        {"Id", "x", "a^2x", "a^2", "a^3x", "ax", "a", "a^3"},
        {"x", "Id", "a^2", "a^2x", "a", "a^3", "a^3x", "ax"},
        {"a^2x", "a^2", "Id", "x", "a^3", "a", "ax", "a^3x"},
        {"a^2", "a^2x", "x", "Id", "ax", "a^3x", "a^3", "a"},
        {"a^3x", "a^3", "a", "ax", "Id", "a^2", "a^2x", "x"},
        {"ax", "a", "a^3", "a^3x", "a^2", "Id", "x", "a^2x"},
        {"a", "ax", "a^3x", "a^3", "x", "a^2x", "a^2", "Id"},
        {"a^3", "a^3x", "ax", "a", "a^2x", "x", "Id", "a^2"},
    }};
    ref.orders = {1, 2, 2, 2, 2, 2, 4, 4};
    ref.n_involution_counts = {{2, 6}, {3, 1}, {4, 8}, {8, 8}};
    ref.roots_of_minus_one = {"i1", "-i1", "i2", "-i2"};
    ref.subgroups = {
        {"dag0"},
        {"dag0", "dag1"},
        {"dag0", "dag2"},
        {"dag0", "dag3"},
        {"dag0", "dag4"},
        {"dag0", "dag5"},
        {"dag0", "dag1", "dag2", "dag3"},
        {"dag0", "dag3", "dag4", "dag5"},
        {"dag0", "dag3", "pdag6", "pdag7"},
        {"dag0", "dag1", "dag2", "dag3", "dag4", "dag5", "pdag6", "pdag7"},
    };
    ref.d8_subgroups = {
        {"Id", "x", "a^2", "a^2x"},
        {"Id", "ax", "a^2", "a^3x"},
        {"Id", "a", "a^2", "a^3"},
        {"Id", "x"},
        {"Id", "a^2x"},
        {"Id", "a^2"},
        {"Id", "a^3x"},
        {"Id", "ax"},
        {"Id"},
        {"Id", "x", "a^2x", "a^2", "a^3x", "ax", "a", "a^3"},
    };
    ref.noncommuting_witness = {"dag1", "pdag6"};
    ref.closure_witness = {"dag1", "dag4", "pdag6"};
    ref.factorizations = standard_factorizations();
    ref.a4_output = "(1, -3, -2, 4)";
    ref.a5_output = "(1, 3, 2, 4)";
    return ref;
}

struct Options {
    std::uint64_t seed = default_seed;
    std::size_t samples = 1000;
    Reference reference = published_reference();
};

struct CheckResult {
    std::string name;
    std::string title;
    bool passed = false;
    std::string detail;
};

namespace detail {

class Failures {
  public:
    void add(const std::string& msg)
    {
        if (count_++ < 5) {
            messages_ += (messages_.empty() ? "" : "; ") + msg;
        }
    }
    bool empty() const { return count_ == 0; }
    std::string summary(const std::string& ok) const
    {
        if (count_ == 0) {
            return ok;
        }
        return std::to_string(count_) + " failure(s): " + messages_;
    }

  private:
    std::size_t count_ = 0;
    std::string messages_;
};

inline CheckResult finish(std::string name, std::string title, const Failures& f, const std::string& ok)
{
    return {std::move(name), std::move(title), f.empty(), f.summary(ok)};
}

inline std::set<std::string> tag_names(const std::vector<ConjTag>& tags)
{
    std::set<std::string> out;
    for (ConjTag t : tags) {
        out.emplace(tag_name(t));
    }
    return out;
}

inline CheckResult enumeration(const Options&)
{
    Failures f;
    const auto found = enumerate_unit_homomorphisms();
    if (found.size() != 8) {
        f.add("expected 8 unit homomorphisms, found " + std::to_string(found.size()));
    }
    std::set<ConjTag> matched;
    for (const auto& u : found) {
        auto t = tag_of(u);
        if (!t) {
            f.add("assignment (" + u.f_i1.name() + ", " + u.f_i2.name() + ") matches no conjugation");
            continue;
        }
        matched.insert(*t);
        if (!u.f_i1.is_imaginary() || !u.f_i2.is_imaginary() || !u.extend()[3].is_hyperbolic()) {
            f.add("assignment " + std::string(tag_name(*t)) + " does not preserve unit types");
        }
    }
    if (matched.size() != 8) {
        f.add("assignments cover " + std::to_string(matched.size()) + " of 8 tags");
    }
    return finish("enumeration", "64-candidate search yields exactly the 8 unit automorphisms", f,
                  "8 of 64 candidates accepted, one per tag");
}

inline CheckResult classification(const Options& opt)
{
    Failures f;
    for (ConjTag t : all_tags) {
        const unsigned n = order(t);
        if (n != opt.reference.orders[index(t)]) {
            f.add(std::string(tag_name(t)) + " has order " + std::to_string(n));
        }
    }
    for (const auto& [n, expected] : opt.reference.n_involution_counts) {
        const auto got = classify_n_involutions(n).size();
        if (got != expected) {
            f.add(std::to_string(n) + "-involutions: " + std::to_string(got) + " != " + std::to_string(expected));
        }
    }
    return finish("classification", "orders {1x1, 2x5, 4x2}; n-involution counts 6, 1, 8, 8 for n = 2, 3, 4, 8",
                  f, "orders and n-involution counts match");
}

inline CheckResult square_roots_of_minus_one(const Options& opt)
{
    Failures f;
    const auto roots = square_roots(Bicomplex<Rational>::real(-1));
    std::set<std::string> got;
    for (const auto& r : roots) {
        got.insert(to_string(r));
        if (!(r * r == Bicomplex<Rational>::real(-1))) {
            f.add(to_string(r) + " does not square to -1");
        }
    }
    const std::set<std::string> want(opt.reference.roots_of_minus_one.begin(), opt.reference.roots_of_minus_one.end());
    if (got != want || roots.size() != want.size()) {
        std::string list;
        for (const auto& s : got) {
            list += (list.empty() ? "" : ", ") + s;
        }
        f.add("roots are {" + list + "}");
    }
    return finish("square-roots-of-minus-one", "square roots of -1 are exactly {i1, -i1, i2, -i2}", f,
                  "{i1, -i1, i2, -i2}");
}

inline CheckResult cayley(const Options& opt)
{
    Failures f;
    const auto generated = labelled(cayley_table());
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (generated.cells[r][c] != opt.reference.conj_table[r][c]) {
                f.add("conjugation table [" + generated.order[r] + "][" + generated.order[c] + "] = " +
                      generated.cells[r][c]);
            }
        }
    }
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (generated.cells[r][c] != opt.reference.first_four[r][c]) {
                f.add("first-four table [" + generated.order[r] + "][" + generated.order[c] + "]");
            }
        }
    }
    const auto d8 = labelled(d8_table());
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (d8.cells[r][c] != opt.reference.d8_table[r][c]) {
                f.add("D8 table [" + d8.order[r] + "][" + d8.order[c] + "] = " + d8.cells[r][c]);
            }
        }
    }
    return finish("cayley-table", "conjugation, first-four and D8 Cayley tables match entry for entry", f,
                  "64 + 16 + 64 entries match");
}

inline CheckResult group_axioms(const Options& opt)
{
    Failures f;
    const auto table = cayley_table();
    const auto report = verify_group_axioms(table);
    if (!report.is_group()) {
        f.add("composition table is not a group");
    }
    const auto& w = opt.reference.noncommuting_witness;
    const auto a = parse_tag(w.first);
    const auto b = parse_tag(w.second);
    if (!a || !b || table[index(*a)][index(*b)] == table[index(*b)][index(*a)]) {
        f.add(w.first + ", " + w.second + " is not a noncommuting pair");
    }
    const std::array<ConjTag, 6> conjugates{ConjTag::D0, ConjTag::D1, ConjTag::D2,
                                            ConjTag::D3, ConjTag::D4, ConjTag::D5};
    const auto six = verify_group_axioms(table, conjugates);
    const auto& cw = opt.reference.closure_witness;
    if (six.closed || !six.closure_failure) {
        f.add("the six conjugates are closed under composition");
    } else {
        const auto [x, y] = *six.closure_failure;
        const std::string got = std::string(tag_name(x)) + "," + std::string(tag_name(y)) + "," +
                                std::string(tag_name(table[index(x)][index(y)]));
        if (got != cw[0] + "," + cw[1] + "," + cw[2]) {
            f.add("closure of the six conjugates first fails at " + got);
        }
    }
    return finish("group-axioms", "closure, identity, inverses and associativity over 512 triples; noncommutative",
                  f, "group of order 8, noncommutative, six conjugates not closed");
}

inline CheckResult subgroup_lattice(const Options& opt)
{
    Failures f;
    std::set<std::set<std::string>> got;
    for (const auto& h : subgroups(cayley_table())) {
        got.insert(tag_names(h));
    }
    const std::set<std::set<std::string>> want(opt.reference.subgroups.begin(), opt.reference.subgroups.end());
    if (got != want || opt.reference.subgroups.size() != got.size()) {
        f.add("found " + std::to_string(got.size()) + " subgroups differing from the reference list");
    }
    return finish("subgroups", "exactly 10 subgroups: trivial, five of order 2, three of order 4, whole group", f,
                  "10 subgroups match");
}

inline CheckResult d8_isomorphism(const Options& opt)
{
    Failures f;
    const auto table = cayley_table();
    const auto report = verify_isomorphism(table);
    if (!report.bijective) f.add("rho is not bijective");
    if (!report.homomorphism_failures.empty()) {
        f.add(std::to_string(report.homomorphism_failures.size()) + " pairs break rho(f o g) = rho(f) rho(g)");
    }
    if (!report.orders_preserved) f.add("element orders not preserved");
    if (report.order4_elements != 2) f.add("expected 2 elements of order 4");
    if (!report.subgroups_match) f.add("rho does not map subgroups onto D8 subgroups");

    std::set<std::set<std::string>> image;
    for (const auto& h : subgroups(table)) {
        std::set<std::string> s;
        for (ConjTag t : h) {
            s.emplace(rho(t).name());
        }
        image.insert(std::move(s));
    }
    const std::set<std::set<std::string>> want(opt.reference.d8_subgroups.begin(), opt.reference.d8_subgroups.end());
    if (image != want || opt.reference.d8_subgroups.size() != image.size()) {
        f.add("rho-image of the subgroup lattice differs from the reference D8 list");
    }
    return finish("d8-isomorphism", "rho is an isomorphism onto D8 preserving orders and subgroups", f,
                  "64 pairs, bijective, orders and subgroup lattice preserved");
}

inline CheckResult homomorphism(const Options& opt)
{
    Failures f;
    RationalSampler rng(opt.seed);
    // a half-order iterate must move at least one sample
    std::array<bool, 8> moved{};
    for (std::size_t k = 0; k < opt.samples; ++k) {
        const auto s = rng.bicomplex();
        const auto t = rng.bicomplex();
        const Rational lambda = rng.scalar();
        for (ConjTag tag : all_tags) {
            const std::string name(tag_name(tag));
            if (!(conjugate(tag, s + t) == conjugate(tag, s) + conjugate(tag, t))) f.add(name + " not additive");
            if (!(conjugate(tag, lambda * s) == lambda * conjugate(tag, s))) f.add(name + " not homogeneous");
            if (!(conjugate(tag, s * t) == conjugate(tag, s) * conjugate(tag, t))) f.add(name + " not multiplicative");
            const unsigned n = opt.reference.orders[index(tag)];
            auto x = s;
            for (unsigned i = 0; i < n; ++i) {
                x = conjugate(tag, x);
            }
            if (!(x == s)) f.add(name + "^" + std::to_string(n) + " is not the identity");
            auto y = s;
            for (unsigned i = 0; i < n / 2; ++i) {
                y = conjugate(tag, y);
            }
            moved[index(tag)] = moved[index(tag)] || !(y == s);
        }
    }
    for (ConjTag tag : all_tags) {
        if (opt.reference.orders[index(tag)] > 1 && !moved[index(tag)]) {
            f.add(std::string(tag_name(tag)) + " has smaller order than expected");
        }
    }
    return finish("homomorphism", "additive, real-homogeneous, multiplicative, correct order on random pairs", f,
                  std::to_string(opt.samples) + " random pairs x 8 maps");
}

inline CheckResult idempotent(const Options& opt)
{
    using B = Bicomplex<Rational>;
    Failures f;
    if (!(B::e1() * B::e1() == B::e1())) f.add("e1^2 != e1");
    if (!(B::e2() * B::e2() == B::e2())) f.add("e2^2 != e2");
    if (!(B::e1() * B::e2() == B::zero())) f.add("e1 e2 != 0");
    if (!(B::e1() + B::e2() == B::one())) f.add("e1 + e2 != 1");
    if (!(B::j1() * B::j1() == B::one())) f.add("j1^2 != 1");
    RationalSampler rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < opt.samples; ++k) {
        const auto s = rng.bicomplex();
        for (ConjTag tag : all_tags) {
            if (!(to_idempotent(conjugate(tag, s)) == conjugate_idempotent(tag, to_idempotent(s)))) {
                f.add(std::string(tag_name(tag)) + " Cartesian and idempotent actions disagree");
            }
        }
    }
    return finish("idempotent", "Cartesian and idempotent actions agree; e1, e2, j1 identities", f,
                  std::to_string(opt.samples) + " random inputs x 8 maps");
}

inline CheckResult inverse_formulas(const Options& opt)
{
    Failures f;
    RationalSampler rng(opt.seed + 1);
    for (std::size_t k = 0; k < opt.samples; ++k) {
        const auto s = rng.invertible();
        const auto conditions = invertibility_conditions(s);
        if (std::find(conditions.begin(), conditions.end(), false) != conditions.end()) {
            f.add("invertible " + to_string(s) + " has a vanishing conjugate product");
        }
        const auto oracle = inverse_idempotent(s);
        for (auto kind : all_product_kinds) {
            const auto inv = inverse_via_conjugates(s, kind);
            if (!(inv == oracle)) f.add(std::string(kind_name(kind)) + " inverse differs at " + to_string(s));
            if (!(s * inv == Bicomplex<Rational>::one())) f.add(std::string(kind_name(kind)) + " s*s^-1 != 1");
        }
        const auto zd = rng.zero_divisor();
        for (auto kind : all_product_kinds) {
            if (!conjugate_product(zd, kind).is_zero()) {
                f.add("zero divisor " + to_string(zd) + " has nonzero " + std::string(kind_name(kind)) + " product");
            }
        }
        if (is_invertible(zd)) f.add("zero divisor reported invertible");
    }
    return finish("inverse-formulas", "four conjugate-product inverse formulas agree with the idempotent inverse", f,
                  std::to_string(opt.samples) + " invertible samples and zero divisors");
}

inline CheckResult conjugate_products(const Options& opt)
{
    Failures f;
    RationalSampler rng(opt.seed + 2);
    for (std::size_t k = 0; k < opt.samples; ++k) {
        const auto s = rng.bicomplex();
        std::array<Bicomplex<Rational>, 4> p;
        for (std::size_t i = 0; i < 4; ++i) {
            p[i] = conjugate_product(s, all_product_kinds[i]);
            const auto v = to_vec4(p[i]);
            if (!v[1].is_zero() || !v[2].is_zero() || !v[3].is_zero()) {
                f.add(std::string(kind_name(all_product_kinds[i])) + " product is not real at " + to_string(s));
            }
            if (!(p[i] == conjugate_product_closed_form(s, all_product_kinds[i]))) {
                f.add(std::string(kind_name(all_product_kinds[i])) + " product differs from |ze1|, |ze2| form");
            }
        }
        if (!(p[0] == p[1] * p[1])) f.add("full != sub123^2");
        if (!(p[1] == p[2]) || !(p[1] == p[3])) f.add("subgroup products differ");
    }
    return finish("conjugate-products", "conjugate products are real; full = sub123^2; sub123 = sub345 = sub367", f,
                  std::to_string(opt.samples) + " random inputs");
}

inline CheckResult reflections(const Options& opt)
{
    Failures f;
    const auto report = factorization_check(opt.reference.factorizations);
    for (const auto& r : report.results) {
        if (!r.holds) f.add(r.claim.describe() + " does not hold");
        if (!r.parity_ok) f.add(r.claim.describe() + " has the wrong determinant parity");
    }
    if (report.results.empty()) f.add("no factorizations given");
    const Vec4<Rational> v{1, 2, 3, 4};
    const auto a4 = to_string(reflect_hyperplane(plane_a4(), v));
    const auto a5 = to_string(reflect_hyperplane(plane_a5(), v));
    if (a4 != opt.reference.a4_output) f.add("R_a4(1,2,3,4) = " + a4);
    if (a5 != opt.reference.a5_output) f.add("R_a5(1,2,3,4) = " + a5);
    return finish("reflections", "every conjugation factors into the stated reflections", f,
                  std::to_string(report.results.size()) + " factorizations hold as matrix identities");
}

using CheckFn = CheckResult (*)(const Options&);

inline const std::vector<std::pair<std::string_view, CheckFn>>& registry()
{
    static const std::vector<std::pair<std::string_view, CheckFn>> checks{
        {"enumeration", &enumeration},
        {"classification", &classification},
        {"square-roots-of-minus-one", &square_roots_of_minus_one},
        {"cayley-table", &cayley},
        {"group-axioms", &group_axioms},
        {"subgroups", &subgroup_lattice},
        {"d8-isomorphism", &d8_isomorphism},
        {"homomorphism", &homomorphism},
        {"idempotent", &idempotent},
        {"inverse-formulas", &inverse_formulas},
        {"conjugate-products", &conjugate_products},
        {"reflections", &reflections},
    };
    return checks;
}

}  // namespace detail

inline std::vector<std::string> theorem_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : detail::registry()) {
        out.emplace_back(name);
    }
    return out;
}

//! Runs one named check; throws std::invalid_argument for unknown names.
inline CheckResult run_check(std::string_view name, const Options& options = {})
{
    for (const auto& [n, fn] : detail::registry()) {
        if (n == name) {
            return fn(options);
        }
    }
    throw std::invalid_argument("unknown theorem: " + std::string(name));
}

inline std::vector<CheckResult> run_all(const Options& options = {})
{
    std::vector<CheckResult> out;
    for (const auto& [n, fn] : detail::registry()) {
        out.push_back(fn(options));
    }
    return out;
}

}  // namespace bicx::verify
