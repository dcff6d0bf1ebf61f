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

#ifndef RANKCODES_CHANNEL_HPP
#define RANKCODES_CHANNEL_HPP

#include <cstdint>
#include <string>

#include "folded_gabidulin.hpp"
#include "random.hpp"
#include "subspace.hpp"

namespace rankcodes {

enum class ChannelMode { subspace, rank };

struct ChannelSpec {
    ChannelMode mode = ChannelMode::subspace;
    std::size_t rho = 0;  ///< erasures (subspace mode only)
    std::size_t t = 0;    ///< errors, or error rank
    std::uint64_t seed = 0;

    friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

inline const char* to_string(ChannelMode m) noexcept { return m == ChannelMode::subspace ? "subspace" : "rank"; }

/// Operator channel: keeps a uniform (dim V - rho)-dimensional subspace of V
/// and adjoins a uniform t-dimensional E with E ∩ V = {0}. The result has
/// dimension dim V - rho + t and meets V in exactly the kept subspace.
inline Subspace operator_channel(const Subspace& v, std::size_t rho, std::size_t t, Rng& rng) {
    if (rho > v.dim()) throw error(errc::dim_too_large, "more erasures than dim V");
    if (t > v.ambient_dim() - v.dim()) throw error(errc::dim_too_large, "error dimension exceeds N - dim V");
    const Subspace kept = random_subspace_of(v, v.dim() - rho, rng);
    const Subspace err = random_complement_error(v, t, rng);
    return subspace_sum(kept, err);
}

/// Y = X + A B with A (g x t) and B (t x hm) uniform full-rank over GF(q).
inline FoldedCodeword rank_error_channel(const FoldedCodeword& x, std::size_t t, Rng& rng) {
    const auto& f = *x.field();
    const std::size_t cols = x.h() * f.m();
    if (t > x.g() || t > cols) throw error(errc::rank_too_large, "error rank exceeds min(g, hm)");
    if (t == 0) return x;
    const auto ground = f.subfield();
    const Matrix a = detail::random_full_rank(ground, t, x.g(), rng).transpose();
    const Matrix b = detail::random_full_rank(ground, t, cols, rng);
    return x + FoldedCodeword::collapse(x.field(), a * b);
}

}  // namespace rankcodes

#endif
