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

#ifndef RANKCODES_INTERPOLATION_HPP
#define RANKCODES_INTERPOLATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "linalg.hpp"
#include "linearized.hpp"

namespace rankcodes {

/// Q(X, Y_1, ..., Y_s) = Q_0(X) + Q_1(Y_1) + ... + Q_s(Y_s), with d the
/// degree parameter it was built for (qdeg Q_0 <= d-1, qdeg Q_i <= d-k).
struct InterpolationPolynomialSet {
    std::vector<LinearizedPoly> polys;
    std::size_t d = 0;

    std::size_t s() const noexcept { return polys.size() - 1; }
    const FieldPtr& field() const noexcept { return polys.front().field(); }

    bool is_zero() const noexcept {
        for (const auto& p : polys)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Q at a point (x, y_1, ..., y_s).
    Elem operator()(std::span<const Elem> point) const {
        if (point.size() != polys.size()) throw error(errc::shape_mismatch, "point must have s+1 components");
        const auto& f = *field();
        Elem acc = f.zero();
        for (std::size_t i = 0; i < polys.size(); ++i) acc = f.add(acc, polys[i](point[i]));
        return acc;
    }
};

/// Number of unknown coefficients, d(s+1) - s(k-1).
constexpr std::size_t interpolation_unknowns(std::size_t d, std::size_t k, std::size_t s) noexcept {
    return d + s * (d - k + 1);
}

/// Solves the homogeneous system Q(point) = 0 over GF(q^m) by elimination and
/// returns the first kernel basis vector. Unknowns are ordered q_{0,0..d-1},
/// then q_{1,0..d-k}, ..., q_{s,0..d-k}.
inline InterpolationPolynomialSet interpolate_points(const FieldPtr& field, const std::vector<std::vector<Elem>>& points,
                                                     std::size_t d, std::size_t k, std::size_t s) {
    if (d < k || d == 0) throw error(errc::bad_params, "interpolation needs d >= k >= 1");
    const auto& f = *field;
    const std::size_t y_terms = d - k + 1;
    Matrix sys(field, 0, interpolation_unknowns(d, k, s));
    std::vector<Elem> row(sys.cols());
    for (const auto& pt : points) {
        if (pt.size() != s + 1) throw error(errc::shape_mismatch, "point must have s+1 components");
        std::size_t col = 0;
        for (std::size_t i = 0; i <= s; ++i) {
            Elem power = pt[i];
            for (std::size_t j = 0; j < (i == 0 ? d : y_terms); ++j, power = f.frobenius(power, 1)) row[col++] = power;
        }
        sys.append_row(row);
    }
    const Matrix ker = kernel_basis(sys);
    if (ker.rows() == 0) throw error(errc::bad_params, "no nonzero interpolation polynomial exists");
    const auto v = ker.row(0);
    InterpolationPolynomialSet q;
    q.d = d;
    q.polys.emplace_back(field, std::vector<Elem>(v.begin(), v.begin() + d));
    for (std::size_t i = 0; i < s; ++i) {
        auto first = v.begin() + d + i * y_terms;
        q.polys.emplace_back(field, std::vector<Elem>(first, first + y_terms));
    }
    return q;
}

}  // namespace rankcodes

#endif
