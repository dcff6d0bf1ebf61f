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

#ifndef RANKCODES_LINEARIZED_HPP
#define RANKCODES_LINEARIZED_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"

namespace rankcodes {

/// f(X) = sum_i a_i X^{q^i} over GF(q^m). Stored without trailing zeros, so
/// the zero polynomial has no coefficients and q-degree -1.
class LinearizedPoly {
   public:
    explicit LinearizedPoly(FieldPtr field) : field_(std::move(field)) {}
    LinearizedPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        prune();
    }

    /// c X^{q^i}
    static LinearizedPoly monomial(FieldPtr field, Elem c, std::size_t i) {
        std::vector<Elem> v(i + 1, field->zero());
        v[i] = c;
        return LinearizedPoly(std::move(field), std::move(v));
    }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }
    Elem coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
    int q_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Elem operator()(Elem x) const noexcept {
        const auto& f = *field_;
        Elem acc = f.zero();
        for (const Elem c : coeffs_) {
            acc = f.add(acc, f.mul(c, x));
            x = f.frobenius(x, 1);
        }
        return acc;
    }

    friend LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b) {
        check(a, b);
        const auto& f = *a.field_;
        std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coefficient(i), b.coefficient(i));
        return LinearizedPoly(a.field_, std::move(c));
    }

    friend LinearizedPoly operator-(const LinearizedPoly& a) {
        std::vector<Elem> c(a.coeffs_);
        for (auto& x : c) x = a.field_->neg(x);
        return LinearizedPoly(a.field_, std::move(c));
    }

    friend LinearizedPoly operator-(const LinearizedPoly& a, const LinearizedPoly& b) { return a + (-b); }

    friend LinearizedPoly operator*(Elem s, const LinearizedPoly& a) {
        std::vector<Elem> c(a.coeffs_);
        for (auto& x : c) x = a.field_->mul(s, x);
        return LinearizedPoly(a.field_, std::move(c));
    }

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) noexcept {
        return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
    }

    /// Symbolic composition (a ⊗ b)(X) = a(b(X)):
    /// (a ⊗ b)_k = sum_{i+j=k} a_i b_j^{q^i}.
    friend LinearizedPoly compose(const LinearizedPoly& a, const LinearizedPoly& b) {
        check(a, b);
        const auto& f = *a.field_;
        if (a.is_zero() || b.is_zero()) return LinearizedPoly(a.field_);
        std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == f.zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], f.frobenius(b.coeffs_[j], i)));
        }
        return LinearizedPoly(a.field_, std::move(c));
    }

    /// "a0 + a1 X^[1] + ..." with coefficients as coordinate vectors (the a0
    /// term multiplies X^[0] = X); zero terms are skipped.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == field_->zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << field_->to_string(coeffs_[i]);
            if (i > 0) os << " X^[" << i << ']';
        }
        return os.str();
    }

   private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;

    void prune() {
        while (!coeffs_.empty() && coeffs_.back() == field_->zero()) coeffs_.pop_back();
    }

    static void check(const LinearizedPoly& a, const LinearizedPoly& b) {
        if (!a.field_->same_as(*b.field_)) throw error(errc::field_mismatch, "linearized polynomials over different fields");
    }
};

inline LinearizedPoly scale(Elem c, const LinearizedPoly& f) { return c * f; }

}  // namespace rankcodes

#endif
