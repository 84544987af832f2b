// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "bicx/involution.hpp"

namespace bicx {

//---------------------------------------------------------------------------//
/*!
 * Composition table of the eight conjugations.
 *
 * entry[r][c] is the tag of (r o c): apply the column map first, then the
 * row map. This is the only convention under which composing D4 first and
 * D1 second yields P6 and lands in row D1, column D4.
 */
using CayleyTable = std::array<std::array<ConjTag, 8>, 8>;

inline CayleyTable cayley_table()
{
    CayleyTable table{};
    for (ConjTag r : all_tags) {
        for (ConjTag c : all_tags) {
            table[index(r)][index(c)] = compose(r, c);
        }
    }
    return table;
}

using TagPair = std::pair<ConjTag, ConjTag>;

struct GroupAxiomReport {
    bool closed = true;
    bool has_identity = true;
    bool has_inverses = true;
    bool associative = true;
    std::optional<TagPair> closure_failure;
    std::optional<std::tuple<ConjTag, ConjTag, ConjTag>> associativity_failure;
    //! Every ordered pair (r, c), r < c, with r o c != c o r.
    std::vector<TagPair> noncommuting;

    bool is_group() const { return closed && has_identity && has_inverses && associative; }
    bool commutative() const { return noncommuting.empty(); }
};

/*!
 * Check the group axioms of \p table restricted to \p elements.
 *
 * Closure failures report the first offending pair in row-major order.
 * Associativity is checked over all |elements|^3 triples.
 */
inline GroupAxiomReport verify_group_axioms(const CayleyTable& table, std::span<const ConjTag> elements = all_tags)
{
    GroupAxiomReport report;
    auto member = [&](ConjTag t) { return std::find(elements.begin(), elements.end(), t) != elements.end(); };
    auto op = [&](ConjTag a, ConjTag b) { return table[index(a)][index(b)]; };

    for (ConjTag a : elements) {
        for (ConjTag b : elements) {
            if (!member(op(a, b)) && report.closed) {
                report.closed = false;
                report.closure_failure = TagPair{a, b};
            }
        }
    }

    std::optional<ConjTag> identity;
    for (ConjTag e : elements) {
        bool ok = true;
        for (ConjTag a : elements) {
            ok = ok && op(e, a) == a && op(a, e) == a;
        }
        if (ok) {
            identity = e;
            break;
        }
    }
    report.has_identity = identity.has_value();

    if (identity) {
        for (ConjTag a : elements) {
            bool found = false;
            for (ConjTag b : elements) {
                found = found || (op(a, b) == *identity && op(b, a) == *identity);
            }
            report.has_inverses = report.has_inverses && found;
        }
    } else {
        report.has_inverses = false;
    }

    for (ConjTag a : elements) {
        for (ConjTag b : elements) {
            for (ConjTag c : elements) {
                if (op(op(a, b), c) != op(a, op(b, c)) && report.associative) {
                    report.associative = false;
                    report.associativity_failure = std::make_tuple(a, b, c);
                }
            }
        }
    }

    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (op(elements[i], elements[j]) != op(elements[j], elements[i])) {
                report.noncommuting.emplace_back(elements[i], elements[j]);
            }
        }
    }
    return report;
}

//! Every subgroup, found by testing all 256 subsets. Sorted by size, then members.
inline std::vector<std::vector<ConjTag>> subgroups(const CayleyTable& table)
{
    std::vector<std::vector<ConjTag>> result;
    for (unsigned mask = 1; mask < 256; ++mask) {
        std::vector<ConjTag> members;
        for (ConjTag t : all_tags) {
            if (mask & (1U << index(t))) {
                members.push_back(t);
            }
        }
        const auto report = verify_group_axioms(table, members);
        if (report.closed && report.has_identity && report.has_inverses) {
            result.push_back(std::move(members));
        }
    }
    std::stable_sort(result.begin(), result.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return result;
}

//---------------------------------------------------------------------------//
// DIHEDRAL GROUP OF ORDER 8
//---------------------------------------------------------------------------//
/*!
 * Element a^rot x^flip of D8, a the quarter turn and x a reflection.
 *
 * Relations: a^4 = x^2 = Id and x a = a^3 x.
 */
struct D8Element {
    std::uint8_t rot = 0;
    bool flip = false;

    friend bool operator==(const D8Element&, const D8Element&) = default;
    friend auto operator<=>(const D8Element&, const D8Element&) = default;

    std::string_view name() const
    {
        constexpr std::array<std::string_view, 4> rotations{"Id", "a", "a^2", "a^3"};
        constexpr std::array<std::string_view, 4> reflections{"x", "ax", "a^2x", "a^3x"};
        return flip ? reflections[rot] : rotations[rot];
    }
};

inline D8Element d8_multiply(D8Element g, D8Element h)
{
    // a^r1 x^f1 a^r2 x^f2 = a^(r1 +- r2) x^(f1 xor f2), since x a^k = a^-k x
    const int r2 = g.flip ? 4 - h.rot : h.rot;
    return {static_cast<std::uint8_t>((g.rot + r2) % 4), g.flip != h.flip};
}

inline unsigned d8_order(D8Element g)
{
    unsigned k = 1;
    for (D8Element p = g; p != D8Element{}; p = d8_multiply(p, g)) {
        ++k;
    }
    return k;
}

//! Row/column ordering of the reference D8 table: Id, x, a^2x, a^2, a^3x, ax, a, a^3.
inline constexpr std::array<D8Element, 8> d8_elements{D8Element{0, false}, D8Element{0, true}, D8Element{2, true},
                                                      D8Element{2, false}, D8Element{3, true}, D8Element{1, true},
                                                      D8Element{1, false}, D8Element{3, false}};

using D8Table = std::array<std::array<D8Element, 8>, 8>;

inline D8Table d8_table()
{
    D8Table table{};
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            table[r][c] = d8_multiply(d8_elements[r], d8_elements[c]);
        }
    }
    return table;
}

//! Subgroups of D8 by exhaustive subset search, as sets of elements.
inline std::vector<std::set<D8Element>> d8_subgroups()
{
    std::vector<std::set<D8Element>> result;
    for (unsigned mask = 1; mask < 256; ++mask) {
        std::set<D8Element> members;
        for (std::size_t k = 0; k < 8; ++k) {
            if (mask & (1U << k)) {
                members.insert(d8_elements[k]);
            }
        }
        bool closed = members.count(D8Element{}) > 0;
        for (const auto& g : members) {
            for (const auto& h : members) {
                closed = closed && members.count(d8_multiply(g, h)) > 0;
            }
        }
        // finite and closed with identity implies inverses
        if (closed) {
            result.push_back(std::move(members));
        }
    }
    return result;
}

//! rho: D0->Id, D1->x, D2->a^2x, D3->a^2, D4->a^3x, D5->ax, P6->a, P7->a^3.
inline D8Element rho(ConjTag tag)
{
    return d8_elements[index(tag)];
}

struct IsomorphismReport {
    bool bijective = true;
    std::vector<TagPair> homomorphism_failures;
    bool orders_preserved = true;
    //! rho maps the subgroup lattice onto the D8 subgroup lattice.
    bool subgroups_match = true;
    std::size_t order4_elements = 0;

    bool ok() const { return bijective && homomorphism_failures.empty() && orders_preserved && subgroups_match; }
};

inline IsomorphismReport verify_isomorphism(const CayleyTable& table)
{
    IsomorphismReport report;
    std::set<D8Element> image;
    for (ConjTag t : all_tags) {
        image.insert(rho(t));
    }
    report.bijective = image.size() == 8;

    for (ConjTag f : all_tags) {
        for (ConjTag g : all_tags) {
            if (rho(table[index(f)][index(g)]) != d8_multiply(rho(f), rho(g))) {
                report.homomorphism_failures.emplace_back(f, g);
            }
        }
    }

    for (ConjTag t : all_tags) {
        const unsigned n = order(t);
        report.orders_preserved = report.orders_preserved && n == d8_order(rho(t));
        report.order4_elements += n == 4 ? 1 : 0;
    }

    std::set<std::set<D8Element>> mapped;
    for (const auto& h : subgroups(table)) {
        std::set<D8Element> s;
        for (ConjTag t : h) {
            s.insert(rho(t));
        }
        mapped.insert(std::move(s));
    }
    const auto target = d8_subgroups();
    report.subgroups_match = mapped == std::set<std::set<D8Element>>(target.begin(), target.end())
                             && mapped.size() == target.size();
    return report;
}

}  // namespace bicx
