/*
   Copyright 2026 The rankcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RANKCODES_IO_HPP
#define RANKCODES_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "channel.hpp"
#include "folded_gabidulin.hpp"
#include "recovery.hpp"
#include "subspace.hpp"

namespace rankcodes::io {

using json = nlohmann::json;

/// {p, e, m, modulus: [c0..cm]}; "base_modulus" (over GF(p)) is added when e > 1.
inline json field_to_json(const Field& f) {
    json j{{"p", f.p()}, {"e", f.e()}, {"m", f.m()}, {"modulus", f.modulus()}};
    if (f.e() > 1) j["base_modulus"] = f.base_modulus();
    return j;
}

inline FieldPtr field_from_json(const json& j) {
    std::optional<std::vector<std::uint32_t>> mod, base;
    if (j.contains("modulus") && !j.at("modulus").is_null()) mod = j.at("modulus").get<std::vector<std::uint32_t>>();
    if (j.contains("base_modulus") && !j.at("base_modulus").is_null())
        base = j.at("base_modulus").get<std::vector<std::uint32_t>>();
    return Field::create(j.at("p").get<std::uint32_t>(), j.value("e", 1u), j.at("m").get<std::uint32_t>(), mod, base);
}

inline json elem_to_json(const Field& f, Elem a) { return f.coords(a); }

inline Elem elem_from_json(const Field& f, const json& j) {
    return f.from_coords(j.get<std::vector<std::uint32_t>>());
}

inline json message_to_json(const Field& f, const Message& u) {
    json j = json::array();
    for (auto x : u) j.push_back(elem_to_json(f, x));
    return j;
}

inline Message message_from_json(const Field& f, const json& j) {
    Message u;
    for (const auto& x : j) u.push_back(elem_from_json(f, x));
    return u;
}

/// {ambient_dim, basis: [[GF(q) ints]]}, rows in RREF.
inline json subspace_to_json(const Subspace& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::vector<std::uint32_t> r;
        for (auto x : s.basis().row(i)) r.push_back(x.v);
        rows.push_back(r);
    }
    return json{{"ambient_dim", s.ambient_dim()}, {"basis", rows}};
}

/// Rows need not be reduced; the result is re-canonicalized.
inline Subspace subspace_from_json(const json& j, const FieldPtr& field) {
    const auto ground = field->subfield();
    const auto n = j.at("ambient_dim").get<std::size_t>();
    Matrix m(ground, 0, n);
    for (const auto& r : j.at("basis")) {
        std::vector<Elem> row;
        for (const auto& x : r) {
            const auto v = x.get<std::uint32_t>();
            row.push_back(ground->from_ground(v));
        }
        m.append_row(row);
    }
    return Subspace::span(m);
}

/// {g, h, entries: row-major coordinate arrays}.
inline json folded_to_json(const FoldedCodeword& c) {
    json entries = json::array();
    for (auto x : c.entries()) entries.push_back(elem_to_json(*c.field(), x));
    return json{{"g", c.g()}, {"h", c.h()}, {"entries", entries}};
}

inline FoldedCodeword folded_from_json(const json& j, const FieldPtr& field) {
    std::vector<Elem> e;
    for (const auto& x : j.at("entries")) e.push_back(elem_from_json(*field, x));
    return FoldedCodeword(field, j.at("g").get<std::size_t>(), j.at("h").get<std::size_t>(), std::move(e));
}

inline json channel_to_json(const ChannelSpec& c) {
    return json{{"mode", to_string(c.mode)}, {"rho", c.rho}, {"t", c.t}, {"seed", c.seed}};
}

inline ChannelSpec channel_from_json(const json& j) {
    ChannelSpec c;
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "subspace")
        c.mode = ChannelMode::subspace;
    else if (mode == "rank")
        c.mode = ChannelMode::rank;
    else
        throw error(errc::bad_params, "unknown channel mode '" + mode + "'");
    c.rho = j.value("rho", std::size_t{0});
    c.t = j.value("t", std::size_t{0});
    c.seed = j.value("seed", std::uint64_t{0});
    if (c.mode == ChannelMode::rank && c.rho != 0) throw error(errc::bad_params, "rank channel has no erasures");
    return c;
}

}  // namespace rankcodes::io

#endif
