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

#ifndef RANKCODES_GALOIS_HPP
#define RANKCODES_GALOIS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace rankcodes {

/// Element of GF(q^m), stored as the integer sum_i c_i q^i of its coordinates
/// c_0..c_{m-1} in the polynomial basis 1, x, ..., x^{m-1}. Coordinates are
/// GF(q) elements, themselves packed the same way over GF(p).
struct Elem {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> res;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        res.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) res.push_back(n);
    return res;
}

/// Dense univariate polynomials over a small field, coefficients low to high.
/// `Ops` supplies add/sub/mul/inv on std::uint32_t and order().
using Coeffs = std::vector<std::uint32_t>;

inline void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class Ops>
Coeffs poly_mod(const Ops& ops, Coeffs a, const Coeffs& f) {
    // f monic
    const std::size_t df = f.size() - 1;
    trim(a);
    while (a.size() > df) {
        const std::uint32_t c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i < df; ++i) a[shift + i] = ops.sub(a[shift + i], ops.mul(c, f[i]));
        a.pop_back();
        trim(a);
    }
    return a;
}

template <class Ops>
Coeffs poly_mulmod(const Ops& ops, const Coeffs& a, const Coeffs& b, const Coeffs& f) {
    if (a.empty() || b.empty()) return {};
    Coeffs c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = ops.add(c[i + j], ops.mul(a[i], b[j]));
    }
    return poly_mod(ops, std::move(c), f);
}

template <class Ops>
Coeffs poly_powmod(const Ops& ops, Coeffs base, std::uint64_t e, const Coeffs& f) {
    Coeffs res{1};
    base = poly_mod(ops, std::move(base), f);
    while (e) {
        if (e & 1) res = poly_mulmod(ops, res, base, f);
        e >>= 1;
        if (e) base = poly_mulmod(ops, base, base, f);
    }
    return poly_mod(ops, std::move(res), f);
}

template <class Ops>
Coeffs poly_gcd(const Ops& ops, Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then a <- a mod b
        const std::uint32_t lc_inv = ops.inv(b.back());
        for (auto& c : b) c = ops.mul(c, lc_inv);
        a = poly_mod(ops, std::move(a), b);
        std::swap(a, b);
    }
    return a;
}

/// Ben-Or test: monic f of degree m is irreducible iff
/// gcd(X^{q^i} - X, f) = 1 for 1 <= i <= m/2.
template <class Ops>
bool is_irreducible(const Ops& ops, const Coeffs& f) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    Coeffs h{0, 1};
    for (std::size_t i = 1; i <= m / 2; ++i) {
        h = poly_powmod(ops, h, ops.order(), f);
        Coeffs diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ops.sub(diff[1], 1);
        trim(diff);
        if (diff.empty()) return false;  // f divides X^{q^i} - X
        if (poly_gcd(ops, f, diff).size() > 1) return false;
    }
    return true;
}

/// First monic irreducible polynomial of degree m, enumerating the lower
/// coefficients as base-q digits (c_0 least significant).
template <class Ops>
Coeffs first_irreducible(const Ops& ops, std::size_t m) {
    const std::uint64_t q = ops.order();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs f(m + 1, 0);
        f[m] = 1;
        std::uint64_t r = idx;
        for (std::size_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(r % q);
            r /= q;
        }
        if (is_irreducible(ops, f)) return f;
    }
    throw error(errc::reducible_modulus, "no irreducible polynomial found");  // unreachable
}

struct PrimeOps {
    std::uint32_t p;
    std::uint64_t order() const noexcept { return p; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw error(errc::division_by_zero, "inverse of zero in GF(p)");
        std::uint32_t r = 1;
        for (std::uint32_t x = a, e = p - 2; e; e >>= 1, x = mul(x, x))
            if (e & 1) r = mul(r, x);
        return r;
    }
};

/// GF(q), q = p^e, with elements packed as base-p digit strings. Always
/// table-driven (q is capped at 2^16).
class BaseField {
   public:
    BaseField() = default;
    BaseField(std::uint32_t p, std::uint32_t e, Coeffs modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
        q_ = 1;
        for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
        // discrete log tables from the first generator
        const PrimeOps prime{p};
        auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
            return pack(poly_mulmod(prime, unpack(a), unpack(b), modulus_));
        };
        const auto factors = prime_factors(q_ - 1);
        for (std::uint32_t cand = 1; cand < q_; ++cand) {
            auto pw = [&](std::uint64_t k) {
                std::uint32_t r = 1;
                for (std::uint32_t x = cand; k; k >>= 1, x = slow_mul(x, x))
                    if (k & 1) r = slow_mul(r, x);
                return r;
            };
            bool primitive = true;
            for (auto f : factors)
                if (pw((q_ - 1) / f) == 1) {
                    primitive = false;
                    break;
                }
            if (!primitive) continue;
            exp_.assign(2 * (q_ - 1) + 1, 0);
            log_.assign(q_, 0);
            std::uint32_t x = 1;
            for (std::uint32_t i = 0; i < q_ - 1; ++i) {
                exp_[i] = exp_[i + q_ - 1] = x;
                log_[x] = i;
                x = slow_mul(x, cand);
            }
            exp_[2 * (q_ - 1)] = 1;
            break;
        }
    }

    std::uint64_t order() const noexcept { return q_; }
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    const Coeffs& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (e_ == 1) return (a + b) % p_;
        std::uint32_t res = 0, scale = 1;
        for (std::uint32_t i = 0; i < e_; ++i, a /= p_, b /= p_, scale *= p_) res += ((a % p_ + b % p_) % p_) * scale;
        return res;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept {
        if (p_ == 2) return a;
        if (e_ == 1) return (p_ - a) % p_;
        std::uint32_t res = 0, scale = 1;
        for (std::uint32_t i = 0; i < e_; ++i, a /= p_, scale *= p_) res += ((p_ - a % p_) % p_) * scale;
        return res;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw error(errc::division_by_zero, "inverse of zero in GF(q)");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

   private:
    std::uint32_t p_ = 2, e_ = 1, q_ = 2;
    Coeffs modulus_;
    std::vector<std::uint32_t> exp_, log_;

    Coeffs unpack(std::uint32_t a) const {
        Coeffs c(e_);
        for (auto& x : c) {
            x = a % p_;
            a /= p_;
        }
        return c;
    }
    std::uint32_t pack(const Coeffs& c) const {
        std::uint32_t r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i];
        return r;
    }
};

}  // namespace detail

/// GF(q^m) over GF(q), q = p^e, in a polynomial basis. Immutable once built;
/// share it through FieldPtr. Fields of at most 2^16 elements use log/antilog
/// tables, larger ones (up to 2^32) fall back to schoolbook multiplication.
class Field : public std::enable_shared_from_this<Field> {
    struct private_tag {};

   public:
    static constexpr std::uint64_t max_size = std::uint64_t(1) << 32;
    static constexpr std::uint64_t table_cap = std::uint64_t(1) << 16;

    /// Builds GF((p^e)^m). Without a modulus the lex-first monic irreducible
    /// polynomial is taken; same for the GF(p^e) modulus when e > 1.
    static FieldPtr create(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                           std::optional<std::vector<std::uint32_t>> base_modulus = std::nullopt) {
        if (!detail::is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
        if (e == 0 || m == 0) throw error(errc::bad_params, "degrees must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > table_cap) throw error(errc::size_cap, "base field larger than 2^16");
        }
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            size *= q;
            if (size > max_size) throw error(errc::size_cap, "field larger than 2^32");
        }

        const detail::PrimeOps prime{p};
        detail::Coeffs bmod;
        if (e == 1) {
            bmod = {0, 1};
        } else if (base_modulus) {
            bmod = check_modulus(prime, *base_modulus, e, "base modulus");
        } else {
            bmod = detail::first_irreducible(prime, e);
        }
        detail::BaseField base(p, e, bmod);

        detail::Coeffs mod;
        if (modulus)
            mod = check_modulus(base, *modulus, m, "modulus");
        else
            mod = detail::first_irreducible(base, m);

        return std::make_shared<const Field>(private_tag{}, std::move(base), std::move(mod), size);
    }

    Field(private_tag, detail::BaseField base, detail::Coeffs modulus, std::uint64_t size)
        : base_(std::move(base)), modulus_(std::move(modulus)), size_(size) {
        p_ = base_.p();
        e_ = base_.e();
        q_ = static_cast<std::uint32_t>(base_.order());
        m_ = static_cast<std::uint32_t>(modulus_.size() - 1);
        factors_ = detail::prime_factors(size_ - 1);
        for (std::uint64_t i = 1; i < size_; ++i)
            if (order_of(Elem{static_cast<std::uint32_t>(i)}) == size_ - 1) {
                primitive_ = Elem{static_cast<std::uint32_t>(i)};
                break;
            }
        if (size_ <= table_cap) {
            const std::uint64_t n = size_ - 1;
            exp_.assign(2 * n + 1, 0);
            log_.assign(size_, 0);
            std::uint32_t x = 1;
            for (std::uint64_t i = 0; i < n; ++i) {
                exp_[i] = exp_[i + n] = x;
                log_[x] = static_cast<std::uint32_t>(i);
                x = slow_mul(Elem{x}, primitive_).v;
            }
            exp_[2 * n] = 1;
        }
        if (m_ > 1) subfield_ = std::make_shared<const Field>(private_tag{}, base_, detail::Coeffs{0, 1}, q_);
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t m() const noexcept { return m_; }
    /// Size of the ground field GF(q).
    std::uint32_t q() const noexcept { return q_; }
    /// Number of elements q^m.
    std::uint64_t size() const noexcept { return size_; }
    bool table_mode() const noexcept { return !exp_.empty(); }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    const std::vector<std::uint32_t>& base_modulus() const noexcept { return base_.modulus(); }
    const detail::BaseField& ground() const noexcept { return base_; }

    /// GF(q) as a Field of its own (m = 1); elements embed unchanged.
    FieldPtr subfield() const { return m_ == 1 ? shared_from_this() : subfield_; }

    bool same_as(const Field& o) const noexcept {
        return this == &o || (p_ == o.p_ && e_ == o.e_ && m_ == o.m_ && modulus_ == o.modulus_ &&
                              base_modulus() == o.base_modulus());
    }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    Elem element(std::uint64_t index) const {
        if (index >= size_) throw error(errc::bad_params, "element index out of range");
        return Elem{static_cast<std::uint32_t>(index)};
    }
    /// Embeds c in GF(q) as a constant.
    Elem from_ground(std::uint32_t c) const {
        if (c >= q_) throw error(errc::bad_params, "not a ground-field element");
        return Elem{c};
    }
    bool in_ground(Elem a) const noexcept { return a.v < q_; }
    /// Smallest element (by index) of multiplicative order q^m - 1.
    Elem primitive() const noexcept { return primitive_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return Elem{a.v ^ b.v};
        std::uint64_t res = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i, a.v /= q_, b.v /= q_, scale *= q_)
            res += base_.add(a.v % q_, b.v % q_) * scale;
        return Elem{static_cast<std::uint32_t>(res)};
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2) return a;
        std::uint64_t res = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i, a.v /= q_, scale *= q_) res += base_.neg(a.v % q_) * scale;
        return Elem{static_cast<std::uint32_t>(res)};
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a.v == 0 || b.v == 0) return Elem{0};
        if (!exp_.empty()) return Elem{exp_[std::uint64_t(log_[a.v]) + log_[b.v]]};
        return slow_mul(a, b);
    }
    Elem inv(Elem a) const {
        if (a.v == 0) throw error(errc::division_by_zero, "inverse of zero");
        if (!exp_.empty()) return Elem{exp_[(size_ - 1 - log_[a.v]) % (size_ - 1)]};
        return pow(a, size_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t k) const noexcept {
        if (k == 0) return one();
        if (a.v == 0) return zero();
        if (!exp_.empty()) {
            const std::uint64_t n = size_ - 1;
            const auto l = static_cast<unsigned __int128>(log_[a.v]) * (k % n) % n;
            return Elem{exp_[static_cast<std::uint64_t>(l)]};
        }
        Elem r = one();
        for (Elem x = a; k; k >>= 1, x = mul(x, x))
            if (k & 1) r = mul(r, x);
        return r;
    }

    /// a^{q^i}.
    Elem frobenius(Elem a, std::uint64_t i = 1) const noexcept {
        i %= m_;
        if (i == 0 || a.v == 0) return a;
        if (!exp_.empty()) {
            std::uint64_t k = 1;
            for (std::uint64_t j = 0; j < i; ++j) k = k * q_ % (size_ - 1);
            return pow(a, k == 0 ? size_ - 1 : k);
        }
        for (std::uint64_t j = 0; j < i; ++j) a = pow(a, q_);
        return a;
    }

    std::uint64_t order_of(Elem a) const {
        if (a.v == 0) throw error(errc::division_by_zero, "zero has no multiplicative order");
        std::uint64_t ord = size_ - 1;
        for (auto r : factors_)
            while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
        return ord;
    }

    /// Coordinates over GF(q) in the polynomial basis, length m.
    std::vector<std::uint32_t> coords(Elem a) const {
        std::vector<std::uint32_t> c(m_);
        for (auto& x : c) {
            x = a.v % q_;
            a.v /= q_;
        }
        return c;
    }
    Elem from_coords(std::span<const std::uint32_t> c) const {
        if (c.size() != m_) throw error(errc::shape_mismatch, "coordinate vector must have length m");
        std::uint64_t r = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= q_) throw error(errc::bad_params, "coordinate out of range");
            r = r * q_ + c[i];
        }
        return Elem{static_cast<std::uint32_t>(r)};
    }
    /// GF(q) coordinate i of a, without building the full vector.
    std::uint32_t coord(Elem a, std::uint32_t i) const noexcept {
        std::uint32_t v = a.v;
        for (std::uint32_t j = 0; j < i; ++j) v /= q_;
        return v % q_;
    }

    std::string to_string(Elem a) const {
        std::ostringstream os;
        os << '[';
        const auto c = coords(a);
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ']';
        return os.str();
    }

   private:
    detail::BaseField base_;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t size_;
    std::uint32_t p_ = 2, e_ = 1, q_ = 2, m_ = 1;
    std::vector<std::uint64_t> factors_;
    Elem primitive_{1};
    std::vector<std::uint32_t> exp_, log_;
    FieldPtr subfield_;

    template <class Ops>
    static detail::Coeffs check_modulus(const Ops& ops, std::vector<std::uint32_t> f, std::uint32_t degree,
                                        const char* what) {
        if (f.size() != degree + 1 || f.back() == 0)
            throw error(errc::bad_modulus, std::string(what) + " must have degree " + std::to_string(degree));
        for (auto c : f)
            if (c >= ops.order()) throw error(errc::bad_modulus, std::string(what) + " coefficient out of range");
        const std::uint32_t lc_inv = ops.inv(f.back());
        for (auto& c : f) c = ops.mul(c, lc_inv);
        if (!detail::is_irreducible(ops, f)) throw error(errc::reducible_modulus, std::string(what) + " is reducible");
        return f;
    }

    Elem slow_mul(Elem a, Elem b) const {
        auto c = detail::poly_mulmod(base_, coords(a), coords(b), modulus_);
        c.resize(m_, 0);
        return from_coords(c);
    }
};

inline Elem primitive_element(const Field& f) { return f.primitive(); }

}  // namespace rankcodes

#endif
