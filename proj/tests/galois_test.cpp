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

#include <set>

#include "oracles.hpp"
#include "rankcodes/galois.hpp"

using namespace rankcodes;

namespace {

// GF(4) = GF(2)[w]/(w^2 + w + 1); w has index 2, w + 1 index 3.
constexpr Elem w{2}, w1{3};

std::uint64_t order_by_powers(const Field& f, Elem a) {
    Elem x = a;
    for (std::uint64_t i = 1;; ++i, x = f.mul(x, a))
        if (x == f.one()) return i;
}

void check_axioms_exhaustive(const Field& f) {
    const auto n = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t a = 0; a < n; ++a) {
        const Elem x{a};
        EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
        EXPECT_EQ(f.mul(x, f.one()), x);
        if (a) {
            EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
        }
        for (std::uint32_t b = 0; b < n; ++b) {
            const Elem y{b};
            ASSERT_EQ(f.add(x, y), f.add(y, x));
            ASSERT_EQ(f.mul(x, y), f.mul(y, x));
            for (std::uint32_t c = 0; c < n; c += (n > 64 ? 7 : 1)) {
                const Elem z{c};
                ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            }
        }
    }
}

}  // namespace

TEST(Field, Gf4WithGivenModulus) {
    const auto f = Field::create(2, 1, 2, std::vector<std::uint32_t>{1, 1, 1});
    EXPECT_EQ(f->size(), 4u);
    EXPECT_EQ(f->mul(w, w), w1);
    EXPECT_EQ(f->inv(w), w1);
    EXPECT_EQ(f->frobenius(w, 1), w1);
    EXPECT_EQ(f->frobenius(w, 0), w);
    for (std::uint32_t a = 1; a < 4; ++a) EXPECT_EQ(f->mul(Elem{a}, f->inv(Elem{a})), f->one());
}

TEST(Field, Gf2IsTrivialExtension) {
    const auto f = Field::create(2, 1, 1);
    EXPECT_EQ(f->size(), 2u);
    EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(f->primitive(), f->one());
    EXPECT_EQ(f->subfield().get(), f.get());
}

TEST(Field, DefaultModulusIsLexFirstIrreducible) {
    const auto f = Field::create(2, 1, 4);
    const std::vector<std::uint32_t> frozen{1, 1, 0, 0, 1};  // X^4 + X + 1
    EXPECT_EQ(f->modulus(), frozen);
    EXPECT_EQ(oracle::first_irreducible_by_products(2, 4), frozen);
    for (std::size_t m : {2, 3, 5, 6, 8}) {
        EXPECT_EQ(Field::create(2, 1, m)->modulus(), oracle::first_irreducible_by_products(2, m)) << "m=" << m;
    }
    EXPECT_EQ(Field::create(3, 1, 3)->modulus(), oracle::first_irreducible_by_products(3, 3));
    EXPECT_EQ(Field::create(2, 1, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, PrimitiveElement) {
    const auto gf4 = Field::create(2, 1, 2);
    EXPECT_EQ(gf4->primitive(), w);
    const auto gf16 = Field::create(2, 1, 4);
    EXPECT_EQ(order_by_powers(*gf16, gf16->primitive()), 15u);
    EXPECT_EQ(gf16->primitive(), Elem{2});
    // smaller indices really are not primitive
    const auto gf256 = Field::create(2, 1, 8);
    const Elem g = gf256->primitive();
    EXPECT_EQ(order_by_powers(*gf256, g), 255u);
    for (std::uint32_t a = 1; a < g.v; ++a) EXPECT_LT(order_by_powers(*gf256, Elem{a}), 255u);
    for (std::uint32_t a = 1; a < 256; ++a) EXPECT_EQ(gf256->order_of(Elem{a}), order_by_powers(*gf256, Elem{a}));
}

TEST(Field, AxiomsExhaustiveSmallFields) {
    check_axioms_exhaustive(*Field::create(2, 1, 2));
    check_axioms_exhaustive(*Field::create(2, 1, 3));
    check_axioms_exhaustive(*Field::create(2, 1, 4));
    check_axioms_exhaustive(*Field::create(3, 1, 2));
    check_axioms_exhaustive(*Field::create(3, 2, 1));  // GF(9) as a base field
    check_axioms_exhaustive(*Field::create(3, 2, 2));  // GF(81) over GF(9)
    check_axioms_exhaustive(*Field::create(5, 1, 3));
    check_axioms_exhaustive(*Field::create(2, 1, 8));
}

TEST(Field, AxiomsRandomLargeField) {
    // 2^20 > table cap: schoolbook multiplication path
    const auto f = Field::create(2, 1, 20);
    ASSERT_FALSE(f->table_mode());
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const Elem a = oracle::random_elem(*f, rng), b = oracle::random_elem(*f, rng), c = oracle::random_elem(*f, rng);
        ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
        ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        if (a != f->zero()) {
            ASSERT_EQ(f->mul(a, f->inv(a)), f->one());
        }
    }
    EXPECT_EQ(f->order_of(f->primitive()), f->size() - 1);
}

TEST(Field, MultiplicationMatchesCarrylessOracle) {
    // shift-and-xor product mod the modulus, for both the table and the schoolbook path
    auto clmul = [](const Field& f, std::uint64_t a, std::uint64_t b) {
        std::uint64_t mod = 0;
        for (std::size_t i = 0; i < f.modulus().size(); ++i) mod |= std::uint64_t(f.modulus()[i]) << i;
        std::uint64_t r = 0;
        for (std::uint32_t i = 0; i < f.m(); ++i)
            if (b >> i & 1) r ^= a << i;
        for (std::uint32_t i = 2 * f.m(); i-- > f.m();)
            if (r >> i & 1) r ^= mod << (i - f.m());
        return r;
    };
    Rng rng(3);
    for (auto f : {Field::create(2, 1, 8), Field::create(2, 1, 20)}) {
        for (int i = 0; i < 5000; ++i) {
            const Elem a = oracle::random_elem(*f, rng), b = oracle::random_elem(*f, rng);
            ASSERT_EQ(f->mul(a, b).v, clmul(*f, a.v, b.v));
        }
    }
}

TEST(Field, FrobeniusIsRingHomomorphism) {
    for (auto f : {Field::create(2, 1, 4), Field::create(3, 1, 3), Field::create(2, 2, 3)}) {
        const auto n = static_cast<std::uint32_t>(f->size());
        for (std::uint32_t i = 0; i <= f->m(); ++i)
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; b += 3) {
                    ASSERT_EQ(f->frobenius(f->add(Elem{a}, Elem{b}), i), f->add(f->frobenius(Elem{a}, i), f->frobenius(Elem{b}, i)));
                    ASSERT_EQ(f->frobenius(f->mul(Elem{a}, Elem{b}), i), f->mul(f->frobenius(Elem{a}, i), f->frobenius(Elem{b}, i)));
                }
        for (std::uint32_t a = 0; a < n; ++a) {
            EXPECT_EQ(f->frobenius(Elem{a}, f->m()), Elem{a});
            EXPECT_EQ(f->frobenius(Elem{a}, 1), f->pow(Elem{a}, f->q()));
        }
    }
}

TEST(Field, FrobeniusFixesExactlyGroundField) {
    for (auto f : {Field::create(2, 1, 4), Field::create(3, 1, 2), Field::create(2, 2, 2), Field::create(5, 1, 2)}) {
        std::set<std::uint32_t> fixed;
        for (std::uint32_t a = 0; a < f->size(); ++a)
            if (f->frobenius(Elem{a}, 1) == Elem{a}) fixed.insert(a);
        EXPECT_EQ(fixed.size(), f->q());
        for (auto a : fixed) EXPECT_TRUE(f->in_ground(Elem{a}));
    }
}

TEST(Field, Gf16FrobeniusOrderM) {
    const auto f = Field::create(2, 1, 4);
    for (std::uint32_t a = 0; a < 16; ++a) EXPECT_EQ(f->frobenius(Elem{a}, 4), Elem{a});
}

TEST(Field, CoordinatesRoundTrip) {
    const auto f = Field::create(3, 2, 2);
    for (std::uint32_t a = 0; a < f->size(); ++a) EXPECT_EQ(f->from_coords(f->coords(Elem{a})), Elem{a});
    EXPECT_EQ(f->to_string(Elem{1}), "[1,0]");
}

TEST(Field, NonMonicModulusIsNormalized) {
    // 2X^2 + 2 over GF(3) is 2(X^2 + 1), and X^2 + 1 is irreducible mod 3
    const auto f = Field::create(3, 1, 2, std::vector<std::uint32_t>{2, 0, 2});
    EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, Errors) {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const error& e) {
            return e.code();
        }
        return errc::too_large;  // sentinel: nothing thrown
    };
    EXPECT_EQ(code_of([] { Field::create(4, 1, 2); }), errc::not_prime);
    EXPECT_EQ(code_of([] { Field::create(2, 1, 2, std::vector<std::uint32_t>{1, 0, 1}); }), errc::reducible_modulus);
    EXPECT_EQ(code_of([] { Field::create(2, 1, 4, std::vector<std::uint32_t>{1, 0, 1, 0, 1}); }), errc::reducible_modulus);
    EXPECT_EQ(code_of([] { Field::create(2, 1, 3, std::vector<std::uint32_t>{1, 1, 1}); }), errc::bad_modulus);
    EXPECT_EQ(code_of([] { Field::create(2, 1, 33); }), errc::size_cap);
    EXPECT_EQ(code_of([] { Field::create(2, 17, 1); }), errc::size_cap);
    const auto f = Field::create(2, 1, 3);
    EXPECT_EQ(code_of([&] { f->inv(f->zero()); }), errc::division_by_zero);
    EXPECT_EQ(code_of([&] { f->div(f->one(), f->zero()); }), errc::division_by_zero);
}
