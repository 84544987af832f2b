// Copyright 2026 The bicx Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bicx/bicomplex.hpp"
#include "bicx/group.hpp"

namespace bicx {

enum class OutputFormat { Text, Json, Markdown, Csv };

inline std::optional<OutputFormat> parse_format(std::string_view text)
{
    if (text == "text") return OutputFormat::Text;
    if (text == "json") return OutputFormat::Json;
    if (text == "md") return OutputFormat::Markdown;
    if (text == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

namespace detail {
//! Joins coefficient*unit terms: "1 - 2*i1 + 1/2*j1". Zero terms are dropped.
template<Scalar T>
std::string format_terms(const std::vector<std::pair<T, std::string_view>>& terms)
{
    using traits = scalar_traits<T>;
    std::string out;
    for (const auto& [coef, unit] : terms) {
        if (traits::is_zero(coef)) {
            continue;
        }
        const bool negative = coef < T(0);
        const T mag = negative ? T(-coef) : coef;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (unit.empty()) {
            out += traits::to_string(mag);
        } else if (mag == T(1)) {
            out += unit;
        } else {
            out += traits::to_string(mag) + "*" + std::string(unit);
        }
    }
    return out.empty() ? "0" : out;
}
}  // namespace detail

template<Scalar T>
std::string to_string(const Complex<T>& z)
{
    return detail::format_terms<T>({{z.re, ""}, {z.im, "i1"}});
}

//! Cartesian normal form x1 + xi1*i1 + xi2*i2 + xj1*j1.
template<Scalar T>
std::string to_string(const Bicomplex<T>& s)
{
    const auto v = to_vec4(s);
    return detail::format_terms<T>({{v[0], ""}, {v[1], "i1"}, {v[2], "i2"}, {v[3], "j1"}});
}

template<Scalar T>
std::string to_string(const Vec4<T>& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < 4; ++k) {
        out += (k ? ", " : "") + scalar_traits<T>::to_string(v[k]);
    }
    return out + ")";
}

template<Scalar T>
std::string to_string(const IdempotentForm<T>& f)
{
    return "(" + to_string(f.ze1) + ")*e1 + (" + to_string(f.ze2) + ")*e2";
}

template<Scalar T>
nlohmann::json to_json(const Bicomplex<T>& s)
{
    const auto v = to_vec4(s);
    const auto f = to_idempotent(s);
    nlohmann::json vec = nlohmann::json::array();
    for (std::size_t k = 0; k < 4; ++k) {
        vec.push_back(scalar_traits<T>::to_string(v[k]));
    }
    return {{"cartesian", to_string(s)},
            {"vec4", vec},
            {"idempotent", {{"e1", to_string(f.ze1)}, {"e2", to_string(f.ze2)}}}};
}

//---------------------------------------------------------------------------//
// TABLES
//---------------------------------------------------------------------------//
//! Square operation table with labelled rows/columns in a fixed order.
struct LabelledTable {
    std::vector<std::string> order;
    std::vector<std::vector<std::string>> cells;
};

inline LabelledTable labelled(const CayleyTable& table)
{
    LabelledTable out;
    for (ConjTag t : all_tags) {
        out.order.emplace_back(tag_name(t));
    }
    for (const auto& row : table) {
        auto& cells = out.cells.emplace_back();
        for (ConjTag t : row) {
            cells.emplace_back(tag_name(t));
        }
    }
    return out;
}

inline LabelledTable labelled(const D8Table& table)
{
    LabelledTable out;
    for (const auto& g : d8_elements) {
        out.order.emplace_back(g.name());
    }
    for (const auto& row : table) {
        auto& cells = out.cells.emplace_back();
        for (const auto& g : row) {
            cells.emplace_back(g.name());
        }
    }
    return out;
}

inline nlohmann::json table_json(const LabelledTable& t)
{
    return {{"order", t.order}, {"table", t.cells}};
}

inline std::string render(const LabelledTable& t, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Json:
            os << table_json(t).dump(2) << '\n';
            break;
        case OutputFormat::Csv:
            os << "o";
            for (const auto& h : t.order) {
                os << ',' << h;
            }
            os << '\n';
            for (std::size_t r = 0; r < t.cells.size(); ++r) {
                os << t.order[r];
                for (const auto& c : t.cells[r]) {
                    os << ',' << c;
                }
                os << '\n';
            }
            break;
        case OutputFormat::Markdown:
            os << "| o |";
            for (const auto& h : t.order) {
                os << ' ' << h << " |";
            }
            os << "\n|---|";
            for (std::size_t k = 0; k < t.order.size(); ++k) {
                os << "---|";
            }
            os << '\n';
            for (std::size_t r = 0; r < t.cells.size(); ++r) {
                os << "| " << t.order[r] << " |";
                for (const auto& c : t.cells[r]) {
                    os << ' ' << c << " |";
                }
                os << '\n';
            }
            break;
        case OutputFormat::Text: {
            std::size_t width = 1;
            for (const auto& h : t.order) {
                width = std::max(width, h.size());
            }
            auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 1, ' '); };
            os << pad("o");
            for (const auto& h : t.order) {
                os << pad(h);
            }
            os << '\n';
            for (std::size_t r = 0; r < t.cells.size(); ++r) {
                os << pad(t.order[r]);
                for (const auto& c : t.cells[r]) {
                    os << pad(c);
                }
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

}  // namespace bicx
