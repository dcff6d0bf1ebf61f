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

#ifndef RANKCODES_RANDOM_HPP
#define RANKCODES_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rankcodes {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) noexcept {
    std::uint64_t s = mix64(seed);
    for (auto v : stream) s = mix64(s ^ mix64(v + 0x632be59bd9b4e019ULL));
    return s;
}

/// Seeded generator with a platform-independent bounded draw
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do v = engine_();
        while (v >= limit);
        return v % bound;
    }

    Rng split(std::uint64_t stream) { return Rng(derive_seed(engine_(), {stream})); }

   private:
    std::mt19937_64 engine_;
};

}  // namespace rankcodes

#endif
