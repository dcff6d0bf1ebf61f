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

#ifndef RANKCODES_SUBSPACE_CODE_HPP
#define RANKCODES_SUBSPACE_CODE_HPP

#include <cstddef>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "recovery.hpp"
#include "subspace.hpp"

namespace rankcodes {

using Rational = boost::rational<long long>;

/// Parameters of the list-decodable subspace code: codewords are n-dimensional
/// subspaces of W = <alpha_1..alpha_n> ⊕ GF(q^m)^s, of GF(q)-dimension n + sm.
struct SubspaceCodeParams {
    FieldPtr field;
    std::size_t n = 0, k = 0, s = 0;
    std::vector<Elem> alphas;
    Elem gamma;

    /// Defaults: alpha_i = x^{i-1} (the first n polynomial-basis elements) and
    /// gamma the smallest primitive element.
    static SubspaceCodeParams make(FieldPtr field, std::size_t n, std::size_t k, std::size_t s) {
        SubspaceCodeParams p;
        p.field = std::move(field);
        p.n = n;
        p.k = k;
        p.s = s;
        if (n > p.field->m()) throw error(errc::bad_params, "need n <= m");
        std::uint64_t idx = 1;
        for (std::size_t i = 0; i < n; ++i, idx *= p.field->q()) p.alphas.push_back(p.field->element(idx));
        p.gamma = p.field->primitive();
        p.validate();
        return p;
    }

    std::size_t ambient_dim() const noexcept { return n + s * field->m(); }

    void validate() const {
        if (!field) throw error(errc::bad_params, "missing field");
        const auto& f = *field;
        if (k < 1 || k > n || n > f.m()) throw error(errc::bad_params, "need 1 <= k <= n <= m");
        if (s < 1) throw error(errc::bad_params, "need s >= 1");
        if (alphas.size() != n) throw error(errc::bad_params, "need exactly n evaluation points");
        Matrix coords(f.subfield(), 0, f.m());
        for (auto a : alphas) {
            std::vector<Elem> row;
            for (auto c : f.coords(a)) row.push_back(Elem{c});
            coords.append_row(row);
        }
        if (rank(coords) != n) throw error(errc::bad_params, "evaluation points are not GF(q)-independent");
        // gamma, gamma^q, ..., gamma^{q^{m-1}} distinct
        std::set<Elem> conj;
        for (std::uint32_t i = 0; i < f.m(); ++i) conj.insert(f.frobenius(gamma, i));
        if (conj.size() != f.m()) throw error(errc::bad_params, "gamma lies in a proper subfield");
    }
};

namespace detail {

inline void append_coords(const Field& f, Elem a, std::vector<Elem>& out) {
    for (auto c : f.coords(a)) out.push_back(Elem{c});
}

inline Elem read_block(const Field& f, std::span<const Elem> v, std::size_t offset) {
    std::vector<std::uint32_t> c(f.m());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = v[offset + i].v;
    return f.from_coords(c);
}

}  // namespace detail

/// Span over GF(q) of (alpha_i, f(alpha_i), f(gamma alpha_i), ..., f(gamma^{s-1} alpha_i)).
/// Vectors are laid out as n coordinates of x in the alpha basis followed by s
/// blocks of m polynomial-basis coordinates.
inline Subspace encode(const SubspaceCodeParams& params, const Message& u) {
    params.validate();
    if (u.size() != params.k) throw error(errc::wrong_message_length, "message must have k symbols");
    const auto& f = *params.field;
    const auto fu = message_poly(params.field, u);
    std::vector<std::vector<Elem>> gens;
    for (std::size_t i = 0; i < params.n; ++i) {
        std::vector<Elem> v(params.n, f.zero());
        v[i] = f.one();
        Elem point = params.alphas[i];
        for (std::size_t j = 0; j < params.s; ++j, point = f.mul(point, params.gamma)) detail::append_coords(f, fu(point), v);
        gens.push_back(std::move(v));
    }
    return Subspace::span(params.field, params.ambient_dim(), gens);
}

/// d = ceil((r + s(k-1) + 1) / (s+1)); rejects d < k.
inline std::size_t decoder_d(std::size_t r, std::size_t k, std::size_t s) {
    if (r < 1) throw error(errc::degenerate_received_space, "received space is zero");
    const std::size_t num = r + s * (k - 1) + 1;
    const std::size_t d = (num + s) / (s + 1);
    if (d < k) throw error(errc::degenerate_received_space, "d = " + std::to_string(d) + " < k");
    return d;
}

/// Interpolation points (x, y_1, ..., y_s) read off the RREF basis of u.
inline std::vector<std::vector<Elem>> interpolation_points(const SubspaceCodeParams& params, const Subspace& u) {
    const auto& f = *params.field;
    if (u.ambient_dim() != params.ambient_dim()) throw error(errc::ambient_mismatch, "received space is not in W");
    std::vector<std::vector<Elem>> pts;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        const auto row = u.basis().row(r);
        std::vector<Elem> pt;
        Elem x = f.zero();
        for (std::size_t j = 0; j < params.n; ++j) x = f.add(x, f.mul(f.from_ground(row[j].v), params.alphas[j]));
        pt.push_back(x);
        for (std::size_t i = 0; i < params.s; ++i) pt.push_back(detail::read_block(f, row, params.n + i * f.m()));
        pts.push_back(std::move(pt));
    }
    return pts;
}

inline InterpolationPolynomialSet interpolate(const SubspaceCodeParams& params, const Subspace& u) {
    params.validate();
    const auto pts = interpolation_points(params, u);
    const std::size_t d = decoder_d(u.dim(), params.k, params.s);
    return interpolate_points(params.field, pts, d, params.k, params.s);
}

/// Interpolation followed by message recovery with shifts gamma^0..gamma^{s-1}
/// on Q_1..Q_s. An empty (infeasible) space is a legal outcome.
inline MessageSpace list_decode(const SubspaceCodeParams& params, const Subspace& u) {
    return recover_messages(interpolate(params, u), params.gamma, params.k);
}

/// True iff s*rho + t < ns - s(k-1), the region where the transmitted message
/// is guaranteed to be in the output list.
constexpr bool within_guarantee(std::size_t n, std::size_t k, std::size_t s, std::size_t rho, std::size_t t) noexcept {
    return s * rho + t < n * s - s * (k - 1);
}

struct RadiusInfo {
    long long t_max = 0;  ///< negative: no guarantee at this erasure count
    Rational symbol_rate;
    Rational packet_rate;
    Rational normalized_radius;
};

inline RadiusInfo radius_info(const SubspaceCodeParams& params, std::size_t rho) {
    if (rho > params.n) throw error(errc::bad_params, "rho exceeds n");
    const auto n = static_cast<long long>(params.n), k = static_cast<long long>(params.k),
               s = static_cast<long long>(params.s), m = static_cast<long long>(params.field->m());
    RadiusInfo r;
    r.t_max = n * s - s * (k - 1) - s * static_cast<long long>(rho) - 1;
    r.symbol_rate = Rational(k * m, n * (n + s * m));
    r.packet_rate = Rational(k, n);
    r.normalized_radius = Rational(s) - Rational(s * (k - 1), n);
    return r;
}

}  // namespace rankcodes

#endif
