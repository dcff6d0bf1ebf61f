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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rankcodes/io.hpp"
#include "rankcodes/rankcodes.hpp"

using namespace rankcodes;
using io::json;

TEST(Io, FieldRoundTrip) {
    for (auto [p, e, m] : {std::tuple{2u, 1u, 8u}, std::tuple{3u, 2u, 2u}, std::tuple{5u, 1u, 1u}, std::tuple{2u, 3u, 3u}}) {
        const auto f = Field::create(p, e, m);
        const auto j = io::field_to_json(*f);
        EXPECT_EQ(j.contains("base_modulus"), e > 1);
        const auto g = io::field_from_json(json::parse(j.dump()));
        EXPECT_EQ(g->modulus(), f->modulus());
        EXPECT_EQ(g->base_modulus(), f->base_modulus());
        EXPECT_EQ(g->size(), f->size());
    }
    EXPECT_EQ(io::field_from_json(json{{"p", 2}, {"m", 4}})->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
    EXPECT_THROW(io::field_from_json(json{{"p", 4}, {"m", 2}}), error);
    EXPECT_THROW(io::field_from_json(json{{"p", 2}, {"m", 2}, {"modulus", {1, 0, 1}}}), error);
}

TEST(Io, ElementsAndMessages) {
    const auto f = Field::create(3, 1, 4);
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const Elem a = oracle::random_elem(*f, rng);
        EXPECT_EQ(io::elem_from_json(*f, io::elem_to_json(*f, a)), a);
        const auto u = oracle::random_message(*f, 3, rng);
        EXPECT_EQ(io::message_from_json(*f, json::parse(io::message_to_json(*f, u).dump())), u);
    }
    EXPECT_EQ(io::elem_to_json(*f, f->element(5)), json::parse("[2,1,0,0]"));
}

TEST(Io, SubspaceRoundTripAndCanonicalization) {
    const auto f = Field::create(2, 1, 6);
    const auto p = SubspaceCodeParams::make(f, 4, 2, 2);
    Rng rng(2);
    const auto v = encode(p, oracle::random_message(*f, 2, rng));
    EXPECT_EQ(io::subspace_from_json(json::parse(io::subspace_to_json(v).dump()), f), v);
    const json loose{{"ambient_dim", 3}, {"basis", {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}}};
    const auto s = io::subspace_from_json(loose, f);
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_EQ(io::subspace_to_json(s)["basis"], json::parse("[[1,0,1],[0,1,1]]"));
}

TEST(Io, FoldedRoundTrip) {
    const auto p = FoldedParams::make(Field::create(2, 1, 8), 8, 2, 4, 2);
    Rng rng(3);
    const auto x = fg_encode(p, oracle::random_message(*p.field, 2, rng));
    const auto j = io::folded_to_json(x);
    EXPECT_EQ(j["g"], 2);
    EXPECT_EQ(j["h"], 4);
    EXPECT_EQ(j["entries"].size(), 8u);
    EXPECT_EQ(io::folded_from_json(json::parse(j.dump()), p.field), x);
    auto bad = j;
    bad["entries"].erase(0);
    EXPECT_THROW(io::folded_from_json(bad, p.field), error);
}

TEST(Io, ChannelSpec) {
    const ChannelSpec c{ChannelMode::subspace, 1, 3, 42};
    const auto d = io::channel_from_json(io::channel_to_json(c));
    EXPECT_EQ(d.mode, c.mode);
    EXPECT_EQ(d.rho, 1u);
    EXPECT_EQ(d.t, 3u);
    EXPECT_EQ(d.seed, 42u);
    EXPECT_THROW(io::channel_from_json(json{{"mode", "bogus"}}), error);
    EXPECT_THROW(io::channel_from_json(json{{"mode", "rank"}, {"rho", 1}}), error);
}
