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

#ifndef RANKCODES_RECOVERY_HPP
#define RANKCODES_RECOVERY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "interpolation.hpp"

namespace rankcodes {

/// Message u = (u_0, ..., u_{k-1}) over GF(q^m).
using Message = std::vector<Elem>;

/// f_u(X) = sum_i u_i X^{q^i}.
inline LinearizedPoly message_poly(const FieldPtr& field, const Message& u) { return LinearizedPoly(field, u); }

/// Affine GF(q)-subspace of GF(q^m)^k: particular + span_GF(q)(basis), or
/// empty when there is no particular solution.
struct MessageSpace {
    FieldPtr field;
    std::size_t k = 0;
    std::optional<Message> particular;
    std::vector<Message> basis;

    bool feasible() const noexcept { return particular.has_value(); }
    std::size_t dimension() const noexcept { return basis.size(); }

    bool contains(const Message& u) const {
        if (!feasible() || u.size() != k) return false;
        const auto& f = *field;
        const auto ground = field->subfield();
        Matrix m(ground, 0, k * f.m());
        auto flatten = [&](const Message& w) {
            std::vector<Elem> v;
            v.reserve(k * f.m());
            for (auto x : w)
                for (auto c : f.coords(x)) v.push_back(Elem{c});
            return v;
        };
        for (const auto& b : basis) m.append_row(flatten(b));
        Message diff(k);
        for (std::size_t i = 0; i < k; ++i) diff[i] = f.sub(u[i], (*particular)[i]);
        m.append_row(flatten(diff));
        return rank(m) == basis.size();
    }
};

/// P(X) = Q_0(X) + sum_{i>=1} Q_i(f_u(gamma^{i-1} X)), computed symbolically.
inline LinearizedPoly recovery_residual(const InterpolationPolynomialSet& q, Elem gamma, const Message& u) {
    const auto& field = q.field();
    const auto fu = message_poly(field, u);
    LinearizedPoly p = q.polys[0];
    Elem shift = field->one();
    for (std::size_t i = 1; i < q.polys.size(); ++i) {
        p = p + compose(q.polys[i], compose(fu, LinearizedPoly::monomial(field, shift, 0)));
        shift = field->mul(shift, gamma);
    }
    return p;
}

/// While q_{0,0}, ..., q_{s,0} all vanish, replaces every Q_i by Q'_i with
/// Q_i = (Q'_i)^q, i.e. drops the constant layer and takes q-th roots of the
/// remaining coefficients. P(X) becomes P'(X) with P = (P')^q, so the set of
/// solutions u is unchanged.
inline InterpolationPolynomialSet normalize(InterpolationPolynomialSet q) {
    if (q.is_zero()) return q;
    const auto& f = *q.field();
    auto all_constant_zero = [&] {
        return std::all_of(q.polys.begin(), q.polys.end(), [&](const LinearizedPoly& p) { return p.coefficient(0) == f.zero(); });
    };
    while (all_constant_zero()) {
        for (auto& p : q.polys) {
            if (p.is_zero()) continue;
            std::vector<Elem> c(p.coefficients().begin() + 1, p.coefficients().end());
            for (auto& x : c) x = f.frobenius(x, f.m() - 1);
            p = LinearizedPoly(q.field(), std::move(c));
        }
    }
    return q;
}

/// All u of length k with P(X) = 0, where every coefficient of P is expanded
/// as a GF(q)-linear function of the km coordinates of u. Coefficient l of P
/// is q_{0,l} + sum_j A_{l-j}(gamma^{q^l}) u_j^{q^{l-j}}, with
/// A_t(X) = q_{1,t} + q_{2,t} X + ... + q_{s,t} X^{s-1}.
inline MessageSpace recover_messages(const InterpolationPolynomialSet& q_in, Elem gamma, std::size_t k) {
    if (q_in.polys.size() < 2) throw error(errc::bad_params, "need Q_0 and at least one Q_i");
    if (q_in.is_zero()) throw error(errc::bad_params, "interpolation polynomial is zero");
    const auto& field = q_in.field();
    const auto& f = *field;
    if (k == 0 || k > f.m()) throw error(errc::bad_params, "message length must satisfy 1 <= k <= m");
    const InterpolationPolynomialSet q = normalize(q_in);
    const std::size_t s = q.s();
    const std::size_t m = f.m();

    std::size_t positions = static_cast<std::size_t>(q.polys[0].q_degree() + 1);
    for (std::size_t i = 1; i <= s; ++i)
        if (!q.polys[i].is_zero()) positions = std::max(positions, static_cast<std::size_t>(q.polys[i].q_degree()) + k);

    // gamma^{q^l} and its powers 0..s-1
    std::vector<std::vector<Elem>> gpow(positions, std::vector<Elem>(s));
    for (std::size_t l = 0; l < positions; ++l) {
        const Elem g = f.frobenius(gamma, l);
        Elem acc = f.one();
        for (std::size_t i = 0; i < s; ++i, acc = f.mul(acc, g)) gpow[l][i] = acc;
    }
    auto a_coeff = [&](std::size_t t, std::size_t l) {
        Elem acc = f.zero();
        for (std::size_t i = 1; i <= s; ++i) acc = f.add(acc, f.mul(q.polys[i].coefficient(t), gpow[l][i - 1]));
        return acc;
    };

    std::vector<Elem> basis_elems(m);
    for (std::size_t b = 0; b < m; ++b) {
        std::vector<std::uint32_t> e(m, 0);
        e[b] = 1;
        basis_elems[b] = f.from_coords(e);
    }

    const auto ground = field->subfield();
    Matrix sys(ground, positions * m, k * m);
    std::vector<Elem> rhs(positions * m);
    for (std::size_t l = 0; l < positions; ++l) {
        const auto q0 = f.coords(f.neg(q.polys[0].coefficient(l)));
        for (std::size_t r = 0; r < m; ++r) rhs[l * m + r] = Elem{q0[r]};
        for (std::size_t j = 0; j < k && j <= l; ++j) {
            const Elem a = a_coeff(l - j, l);
            if (a == f.zero()) continue;
            for (std::size_t b = 0; b < m; ++b) {
                // unknown: coordinate b of u_j, i.e. the multiple of x^b
                const auto col = f.coords(f.mul(a, f.frobenius(basis_elems[b], l - j)));
                for (std::size_t r = 0; r < m; ++r) sys(l * m + r, j * m + b) = Elem{col[r]};
            }
        }
    }

    MessageSpace out;
    out.field = field;
    out.k = k;
    const auto sol = solve_affine(sys, rhs);
    if (!sol) return out;
    auto to_message = [&](std::span<const Elem> v) {
        Message u(k);
        std::vector<std::uint32_t> c(m);
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t b = 0; b < m; ++b) c[b] = v[j * m + b].v;
            u[j] = f.from_coords(c);
        }
        return u;
    };
    out.particular = to_message(sol->particular);
    for (std::size_t i = 0; i < sol->kernel.rows(); ++i) out.basis.push_back(to_message(sol->kernel.row(i)));

    // substitution re-check on the particular solution and each shifted basis vector
    if (!recovery_residual(q_in, gamma, *out.particular).is_zero())
        throw std::logic_error("recover_messages: particular solution fails substitution");
    for (const auto& b : out.basis) {
        Message w(k);
        for (std::size_t j = 0; j < k; ++j) w[j] = f.add((*out.particular)[j], b[j]);
        if (!recovery_residual(q_in, gamma, w).is_zero())
            throw std::logic_error("recover_messages: basis direction fails substitution");
    }
    return out;
}

/// Materializes the q^dim messages of `space`, in lex order of their GF(q)
/// coefficient vectors (last coefficient fastest). Infeasible gives [].
inline std::vector<Message> enumerate(const MessageSpace& space, std::size_t cap) {
    if (cap == 0) throw error(errc::bad_params, "cap must be at least 1");
    if (!space.feasible()) return {};
    const auto& f = *space.field;
    const std::size_t dim = space.dimension();
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > cap / f.q()) throw list_cap_exceeded(dim, "list of dimension " + std::to_string(dim) + " exceeds cap");
        total *= f.q();
    }
    if (total > cap) throw list_cap_exceeded(dim, "list of dimension " + std::to_string(dim) + " exceeds cap");
    std::vector<Message> out;
    out.reserve(total);
    std::vector<std::uint32_t> c(dim, 0);
    for (std::size_t n = 0; n < total; ++n) {
        Message u = *space.particular;
        for (std::size_t b = 0; b < dim; ++b) {
            if (c[b] == 0) continue;
            const Elem s = f.from_ground(c[b]);
            for (std::size_t j = 0; j < space.k; ++j) u[j] = f.add(u[j], f.mul(s, space.basis[b][j]));
        }
        out.push_back(std::move(u));
        for (std::size_t b = dim; b-- > 0;) {
            if (++c[b] < f.q()) break;
            c[b] = 0;
        }
    }
    return out;
}

}  // namespace rankcodes

#endif
