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

#ifndef RANKCODES_SUBSPACE_HPP
#define RANKCODES_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "linalg.hpp"
#include "random.hpp"

namespace rankcodes {

/// Subspace of GF(q)^N held as its RREF basis (no zero rows), so two
/// subspaces are equal iff their basis matrices are.
class Subspace {
   public:
    /// The zero subspace of GF(q)^ambient.
    Subspace(FieldPtr field, std::size_t ambient) : basis_(ground(std::move(field)), 0, ambient) {}

    static Subspace span(const Matrix& rows) {
        Subspace s(rows.field(), rows.cols());
        if (rows.field()->m() != 1) throw error(errc::bad_params, "subspaces live over the ground field GF(q)");
        auto r = rref(rows);
        r.reduced.truncate_rows(r.rank);
        s.basis_ = std::move(r.reduced);
        return s;
    }

    static Subspace span(FieldPtr field, std::size_t ambient, const std::vector<std::vector<Elem>>& vectors) {
        return span(Matrix::from_rows(ground(std::move(field)), ambient, vectors));
    }

    const FieldPtr& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }

    bool contains(std::span<const Elem> v) const {
        if (v.size() != ambient_dim()) throw error(errc::ambient_mismatch, "vector length differs from ambient dimension");
        Matrix m = basis_;
        m.append_row(v);
        return rank(m) == dim();
    }

    bool is_subspace_of(const Subspace& other) const {
        for (std::size_t i = 0; i < dim(); ++i)
            if (!other.contains(basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }

   private:
    Matrix basis_;

    static FieldPtr ground(FieldPtr f) { return f->subfield(); }
};

namespace detail {

inline void same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw error(errc::ambient_mismatch, "subspaces of different ambient spaces");
    if (!a.field()->same_as(*b.field())) throw error(errc::field_mismatch, "subspaces over different fields");
}

inline Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
    return m;
}

inline std::vector<Elem> random_vector(const Field& f, std::size_t len, Rng& rng) {
    std::vector<Elem> v(len);
    for (auto& x : v) x = Elem{static_cast<std::uint32_t>(rng.below(f.size()))};
    return v;
}

inline Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, 0, cols);
    for (std::size_t i = 0; i < rows; ++i) m.append_row(random_vector(*f, cols, rng));
    return m;
}

/// Uniform full-rank rows x cols matrix (rows <= cols) by rejection.
inline Matrix random_full_rank(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng,
                               std::size_t max_attempts = 1000) {
    for (std::size_t a = 0; a < max_attempts; ++a) {
        Matrix m = random_matrix(f, rows, cols, rng);
        if (rank(m) == rows) return m;
    }
    throw error(errc::sampling_failed, "could not draw a full-rank matrix");
}

}  // namespace detail

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    detail::same_ambient(a, b);
    return Subspace::span(detail::stack(a.basis(), b.basis()));
}

/// Kernel method: (l, m) with l A + m B = 0 gives l A in the intersection.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    detail::same_ambient(a, b);
    const Matrix rel = kernel_basis(detail::stack(a.basis(), b.basis()).transpose());
    Matrix vecs(a.field(), 0, a.ambient_dim());
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        const auto lam = rel.row(i).first(a.dim());
        vecs.append_row(a.basis().combine_rows(lam));
    }
    return Subspace::span(vecs);
}

inline std::size_t subspace_distance(const Subspace& a, const Subspace& b) {
    return subspace_sum(a, b).dim() - subspace_intersect(a, b).dim();
}

/// Uniform t-dimensional subspace of v.
inline Subspace random_subspace_of(const Subspace& v, std::size_t t, Rng& rng) {
    if (t > v.dim()) throw error(errc::dim_too_large, "requested dimension exceeds dim V");
    if (t == 0) return Subspace(v.field(), v.ambient_dim());
    const Matrix coeffs = detail::random_full_rank(v.field(), t, v.dim(), rng);
    return Subspace::span(coeffs * v.basis());
}

/// Uniform t-dimensional E with E ∩ v = {0} (rejection sampling).
inline Subspace random_complement_error(const Subspace& v, std::size_t t, Rng& rng, std::size_t max_attempts = 1000) {
    if (t > v.ambient_dim() - v.dim()) throw error(errc::dim_too_large, "no room for an error space of that dimension");
    if (t == 0) return Subspace(v.field(), v.ambient_dim());
    for (std::size_t a = 0; a < max_attempts; ++a) {
        const Matrix e = detail::random_matrix(v.field(), t, v.ambient_dim(), rng);
        if (rank(detail::stack(v.basis(), e)) == v.dim() + t) return Subspace::span(e);
    }
    throw error(errc::sampling_failed, "could not draw an error space disjoint from V");
}

}  // namespace rankcodes

#endif
