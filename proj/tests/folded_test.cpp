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
#include "rankcodes/channel.hpp"
#include "rankcodes/folded_gabidulin.hpp"

using namespace rankcodes;

namespace {

FoldedParams params(std::uint32_t m, std::size_t n, std::size_t k, std::size_t h, std::size_t s) {
    return FoldedParams::make(Field::create(2, 1, m), n, k, h, s);
}

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    return errc{};
}

}  // namespace

TEST(Folded, EncodeIdentityExample) {
    const auto p = params(4, 4, 1, 2, 1);
    const auto& f = *p.field;
    const Elem g = f.element(2);
    ASSERT_EQ(p.gamma, g);
    const auto x = fg_encode(p, {f.one()});
    ASSERT_EQ(x.g(), 2u);
    ASSERT_EQ(x.h(), 2u);
    EXPECT_EQ(x(0, 0), f.one());
    EXPECT_EQ(x(0, 1), g);
    EXPECT_EQ(x(1, 0), f.pow(g, 2));
    EXPECT_EQ(x(1, 1), f.pow(g, 3));
}

TEST(Folded, ZeroMessage) {
    const auto p = params(8, 8, 3, 4, 2);
    EXPECT_EQ(fg_encode(p, Message(3, p.field->zero())), FoldedCodeword(p.field, 2, 4));
}

TEST(Folded, UnfoldingIsGabidulin) {
    Rng rng(1);
    for (std::size_t h : {1u, 2u, 3u, 6u}) {
        const auto p = params(6, 6, 2, h, 1);
        for (int i = 0; i < 10; ++i) {
            const auto u = oracle::random_message(*p.field, 2, rng);
            const auto fu = message_poly(p.field, u);
            const auto x = fg_encode(p, u);
            for (std::size_t r = 0; r < x.g(); ++r)
                for (std::size_t c = 0; c < h; ++c) EXPECT_EQ(x(r, c), fu(p.field->pow(p.gamma, r * h + c)));
        }
    }
}

TEST(Folded, Linearity) {
    const auto p = params(8, 8, 3, 2, 2);
    const auto& f = *p.field;
    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
        const auto u = oracle::random_message(f, 3, rng), v = oracle::random_message(f, 3, rng);
        Message w(3), cu(3);
        const Elem c = oracle::random_elem(f, rng);
        for (std::size_t j = 0; j < 3; ++j) {
            w[j] = f.add(u[j], v[j]);
            cu[j] = f.mul(c, u[j]);
        }
        EXPECT_EQ(fg_encode(p, w), fg_encode(p, u) + fg_encode(p, v));
        EXPECT_EQ(fg_encode(p, cu), c * fg_encode(p, u));
    }
}

TEST(Folded, ExpandCollapse) {
    const auto p = params(8, 8, 2, 4, 2);
    Rng rng(3);
    const auto x = fg_encode(p, oracle::random_message(*p.field, 2, rng));
    const auto e = x.expand();
    EXPECT_EQ(e.rows(), 2u);
    EXPECT_EQ(e.cols(), 32u);
    EXPECT_EQ(FoldedCodeword::collapse(p.field, e), x);
}

TEST(Folded, RankDistance) {
    const auto p = params(8, 8, 2, 4, 2);
    const auto& f = *p.field;
    Rng rng(4);
    const auto x = fg_encode(p, oracle::random_message(f, 2, rng));
    EXPECT_EQ(rank_distance(x, x), 0u);
    auto y = x;
    y(1, 2) = f.add(y(1, 2), f.one());
    y(1, 3) = f.add(y(1, 3), f.element(77));
    EXPECT_EQ(rank_distance(x, y), 1u);
    for (std::size_t t = 0; t <= 2; ++t) {
        const auto z = rank_error_channel(x, t, rng);
        EXPECT_EQ(rank((z - x).expand()), t);
        EXPECT_EQ(rank_distance(x, z), t);
    }
    EXPECT_EQ(code_of([&] { rank_distance(x, FoldedCodeword(p.field, 4, 2)); }), errc::shape_mismatch);
}

TEST(Folded, DecoderParameters) {
    EXPECT_EQ(fg_decoder_d(params(8, 8, 2, 4, 2)), 3u);
    EXPECT_EQ(fg_max_errors(params(8, 8, 2, 4, 2)), 1);
    EXPECT_EQ(fg_decoder_d(params(4, 4, 1, 2, 1)), 3u);
    EXPECT_EQ(fg_max_errors(params(4, 4, 1, 2, 1)), 0);
    EXPECT_EQ(fg_decoder_d(params(9, 9, 2, 3, 2)), 3u);
    EXPECT_EQ(fg_max_errors(params(9, 9, 2, 3, 2)), 1);
    // independent recomputation over a parameter grid
    for (std::size_t h = 1; h <= 6; ++h)
        for (std::size_t g = 1; g * h <= 12; ++g)
            for (std::size_t k = 1; k <= g * h; ++k)
                for (std::size_t s = 1; s <= h; ++s) {
                    const auto p = params(12, g * h, k, h, s);
                    const std::size_t eq = g * (h - s + 1);
                    std::size_t d = 0;
                    while (d * (s + 1) < eq + s * (k - 1) + 1) ++d;
                    if (d < k) {
                        EXPECT_EQ(code_of([&] { fg_decoder_d(p); }), errc::degenerate_params);
                        continue;
                    }
                    EXPECT_EQ(fg_decoder_d(p), d);
                    EXPECT_GT(interpolation_unknowns(d, k, s), eq);
                    long long best = -1;
                    for (long long t = 0; t <= static_cast<long long>(g); ++t)
                        if (d <= (g - t) * (h - s + 1)) best = t;
                    EXPECT_EQ(fg_max_errors(p), best);
                }
}

TEST(Folded, NormalizedRadius) {
    using R = boost::rational<long long>;
    // s/(s+1) (1 - h/(h-s+1) R)
    EXPECT_EQ(fg_normalized_radius(2, 4, R(1, 4)), R(2, 3) * (R(1) - R(4, 3) * R(1, 4)));
    EXPECT_EQ(fg_normalized_radius(1, 1, R(1, 2)), R(1, 4));
}

TEST(Folded, NoiselessRoundTrip) {
    Rng rng(5);
    for (auto [m, n, k, h, s] : {std::tuple{8u, 8u, 2u, 4u, 2u}, std::tuple{6u, 6u, 1u, 3u, 3u}, std::tuple{4u, 4u, 1u, 2u, 1u}}) {
        const auto p = params(m, n, k, h, s);
        for (int i = 0; i < 20; ++i) {
            const auto u = oracle::random_message(*p.field, k, rng);
            const auto sp = fg_list_decode(p, fg_encode(p, u));
            EXPECT_TRUE(sp.contains(u));
            EXPECT_LE(sp.dimension(), m * (s - 1));
        }
    }
}

TEST(Folded, CorruptedWithinRadius) {
    const auto p = params(8, 8, 2, 4, 2);
    Rng rng(6);
    for (int i = 0; i < 40; ++i) {
        const auto u = oracle::random_message(*p.field, 2, rng);
        const auto y = rank_error_channel(fg_encode(p, u), 1, rng);
        const auto q = fg_interpolate(p, y);
        for (const auto& pt : fg_interpolation_points(p, y)) EXPECT_EQ(q(pt), p.field->zero());
        EXPECT_TRUE(fg_list_decode(p, y).contains(u));
    }
}

TEST(Folded, SingleVariableIsUniqueOrEmpty) {
    const auto p = params(6, 6, 2, 3, 1);
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        const auto x = fg_encode(p, oracle::random_message(*p.field, 2, rng));
        const auto sp = fg_list_decode(p, rank_error_channel(x, i % 3, rng));
        if (sp.feasible()) {
            EXPECT_EQ(sp.dimension(), 0u);
        }
    }
}

TEST(Folded, ErrorErasureCorrespondence) {
    const auto p = params(8, 8, 2, 2, 2);
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        const auto x = fg_encode(p, oracle::random_message(*p.field, 2, rng));
        const std::size_t t = rng.below(5);
        const auto y = rank_error_channel(x, t, rng);
        const auto sx = Subspace::span(x.expand()), sy = Subspace::span(y.expand());
        EXPECT_GE(subspace_intersect(sx, sy).dim() + t, x.g());
        EXPECT_LE(sy.dim(), x.g());
    }
}

TEST(Folded, MinimumDistanceBruteForce) {
    EXPECT_EQ(gabidulin_min_distance_bruteforce(params(4, 3, 2, 1, 1)), 2u);
    EXPECT_EQ(gabidulin_min_distance_bruteforce(params(3, 3, 1, 1, 1)), 3u);
    EXPECT_EQ(gabidulin_min_distance_bruteforce(params(3, 2, 2, 1, 1)), 1u);
    EXPECT_EQ(code_of([] { gabidulin_min_distance_bruteforce(params(8, 4, 2, 1, 1)); }), errc::too_large);
    EXPECT_EQ(code_of([] { gabidulin_min_distance_bruteforce(params(4, 4, 2, 2, 1)); }), errc::bad_params);
}

TEST(Folded, ParamErrors) {
    EXPECT_EQ(code_of([] { params(8, 8, 2, 3, 1); }), errc::bad_params);  // h does not divide n
    EXPECT_EQ(code_of([] { params(8, 8, 2, 4, 5); }), errc::bad_params);  // s > h
    EXPECT_EQ(code_of([] { params(4, 8, 2, 4, 1); }), errc::bad_params);  // n > m
    EXPECT_EQ(code_of([] { params(8, 8, 9, 4, 1); }), errc::bad_params);
    const auto p = params(8, 8, 2, 4, 2);
    EXPECT_EQ(code_of([&] { fg_encode(p, {p.field->one()}); }), errc::wrong_message_length);
    EXPECT_EQ(code_of([&] { fg_list_decode(p, FoldedCodeword(p.field, 4, 2)); }), errc::shape_mismatch);
    auto bad = p;
    bad.gamma = p.field->one();
    EXPECT_EQ(code_of([&] { bad.validate(); }), errc::bad_params);
}
