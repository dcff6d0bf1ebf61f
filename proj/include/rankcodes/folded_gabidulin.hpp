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

#ifndef RANKCODES_FOLDED_GABIDULIN_HPP
#define RANKCODES_FOLDED_GABIDULIN_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include <boost/rational.hpp>

#include "recovery.hpp"
#include "subspace.hpp"

namespace rankcodes {

/// h-folded Gabidulin code of length n = g*h and dimension k over GF(q^m),
/// evaluated at gamma^0, ..., gamma^{n-1}; s is the decoder's interpolation
/// order (1 <= s <= h).
struct FoldedParams {
    FieldPtr field;
    std::size_t n = 0, k = 0, h = 1, s = 1;
    Elem gamma;

    static FoldedParams make(FieldPtr field, std::size_t n, std::size_t k, std::size_t h, std::size_t s) {
        FoldedParams p;
        p.field = std::move(field);
        p.n = n;
        p.k = k;
        p.h = h;
        p.s = s;
        p.gamma = p.field->primitive();
        p.validate();
        return p;
    }

    std::size_t g() const noexcept { return n / h; }

    void validate() const {
        if (!field) throw error(errc::bad_params, "missing field");
        if (k < 1 || k > n || n > field->m()) throw error(errc::bad_params, "need 1 <= k <= n <= m");
        if (h < 1 || n % h != 0) throw error(errc::bad_params, "h must divide n");
        if (s < 1 || s > h) throw error(errc::bad_params, "need 1 <= s <= h");
        if (gamma == field->zero() || field->order_of(gamma) != field->size() - 1)
            throw error(errc::bad_params, "gamma must be primitive");
    }
};

/// g x h matrix over GF(q^m); also viewed as g x hm over GF(q).
class FoldedCodeword {
   public:
    FoldedCodeword(FieldPtr field, std::size_t g, std::size_t h)
        : field_(std::move(field)), g_(g), h_(h), entries_(g * h, field_->zero()) {}
    FoldedCodeword(FieldPtr field, std::size_t g, std::size_t h, std::vector<Elem> entries)
        : field_(std::move(field)), g_(g), h_(h), entries_(std::move(entries)) {
        if (entries_.size() != g * h) throw error(errc::shape_mismatch, "entry count must be g*h");
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t g() const noexcept { return g_; }
    std::size_t h() const noexcept { return h_; }
    const std::vector<Elem>& entries() const noexcept { return entries_; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * h_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * h_ + j]; }

    /// Each entry replaced by its m coordinates: a g x hm matrix over GF(q).
    Matrix expand() const {
        const auto& f = *field_;
        Matrix m(f.subfield(), g_, h_ * f.m());
        for (std::size_t i = 0; i < g_; ++i)
            for (std::size_t j = 0; j < h_; ++j) {
                const auto c = f.coords((*this)(i, j));
                for (std::size_t b = 0; b < c.size(); ++b) m(i, j * f.m() + b) = Elem{c[b]};
            }
        return m;
    }

    static FoldedCodeword collapse(const FieldPtr& field, const Matrix& m) {
        const auto& f = *field;
        if (m.cols() % f.m() != 0) throw error(errc::shape_mismatch, "column count must be a multiple of m");
        FoldedCodeword c(field, m.rows(), m.cols() / f.m());
        std::vector<std::uint32_t> co(f.m());
        for (std::size_t i = 0; i < c.g_; ++i)
            for (std::size_t j = 0; j < c.h_; ++j) {
                for (std::size_t b = 0; b < co.size(); ++b) co[b] = m(i, j * f.m() + b).v;
                c(i, j) = f.from_coords(co);
            }
        return c;
    }

    friend FoldedCodeword operator+(const FoldedCodeword& a, const FoldedCodeword& b) {
        check_shape(a, b);
        FoldedCodeword c = a;
        for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.field_->add(a.entries_[i], b.entries_[i]);
        return c;
    }
    friend FoldedCodeword operator-(const FoldedCodeword& a, const FoldedCodeword& b) {
        check_shape(a, b);
        FoldedCodeword c = a;
        for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.field_->sub(a.entries_[i], b.entries_[i]);
        return c;
    }
    friend FoldedCodeword operator*(Elem s, const FoldedCodeword& a) {
        FoldedCodeword c = a;
        for (auto& x : c.entries_) x = a.field_->mul(s, x);
        return c;
    }
    friend bool operator==(const FoldedCodeword& a, const FoldedCodeword& b) noexcept {
        return a.g_ == b.g_ && a.h_ == b.h_ && a.entries_ == b.entries_;
    }

    static void check_shape(const FoldedCodeword& a, const FoldedCodeword& b) {
        if (a.g_ != b.g_ || a.h_ != b.h_) throw error(errc::shape_mismatch, "codewords of different shape");
        if (!a.field_->same_as(*b.field_)) throw error(errc::field_mismatch, "codewords over different fields");
    }

   private:
    FieldPtr field_;
    std::size_t g_, h_;
    std::vector<Elem> entries_;
};

/// Row i holds f_u(gamma^{ih}), ..., f_u(gamma^{(i+1)h-1}).
inline FoldedCodeword fg_encode(const FoldedParams& params, const Message& u) {
    params.validate();
    if (u.size() != params.k) throw error(errc::wrong_message_length, "message must have k symbols");
    const auto& f = *params.field;
    const auto fu = message_poly(params.field, u);
    FoldedCodeword c(params.field, params.g(), params.h);
    Elem point = f.one();
    for (std::size_t i = 0; i < params.g(); ++i)
        for (std::size_t j = 0; j < params.h; ++j, point = f.mul(point, params.gamma)) c(i, j) = fu(point);
    return c;
}

/// rank over GF(q) of the expansion of x - y.
inline std::size_t rank_distance(const FoldedCodeword& x, const FoldedCodeword& y) { return rank((x - y).expand()); }

/// d = ceil((g(h-s+1) + s(k-1) + 1) / (s+1)); DegenerateParams if d < k.
inline std::size_t fg_decoder_d(const FoldedParams& params) {
    params.validate();
    const std::size_t g = params.g(), h = params.h, s = params.s, k = params.k;
    const std::size_t num = g * (h - s + 1) + s * (k - 1) + 1;
    const std::size_t d = (num + s) / (s + 1);
    if (d < k) throw error(errc::degenerate_params, "d = " + std::to_string(d) + " < k");
    return d;
}

/// Largest t with d <= (g - t)(h - s + 1); -1 when even t = 0 fails.
inline long long fg_max_errors(const FoldedParams& params) {
    const std::size_t d = fg_decoder_d(params);
    const auto width = static_cast<long long>(params.h - params.s + 1);
    long long t = -1;
    for (long long cand = 0; cand <= static_cast<long long>(params.g()); ++cand)
        if (static_cast<long long>(d) <= (static_cast<long long>(params.g()) - cand) * width) t = cand;
    return t;
}

/// Normalized radius s/(s+1) * (1 - h/(h-s+1) * R).
inline boost::rational<long long> fg_normalized_radius(long long s, long long h, boost::rational<long long> rate) {
    using R = boost::rational<long long>;
    return R(s, s + 1) * (R(1) - R(h, h - s + 1) * rate);
}

/// Points (gamma^{ih+j}, y_{i,j}, ..., y_{i,j+s-1}) for j = 0..h-s.
inline std::vector<std::vector<Elem>> fg_interpolation_points(const FoldedParams& params, const FoldedCodeword& y) {
    const auto& f = *params.field;
    if (y.g() != params.g() || y.h() != params.h) throw error(errc::shape_mismatch, "received word has the wrong shape");
    std::vector<std::vector<Elem>> pts;
    for (std::size_t i = 0; i < params.g(); ++i)
        for (std::size_t j = 0; j + params.s <= params.h; ++j) {
            std::vector<Elem> pt{f.pow(params.gamma, i * params.h + j)};
            for (std::size_t l = 0; l < params.s; ++l) pt.push_back(y(i, j + l));
            pts.push_back(std::move(pt));
        }
    return pts;
}

inline InterpolationPolynomialSet fg_interpolate(const FoldedParams& params, const FoldedCodeword& y) {
    const std::size_t d = fg_decoder_d(params);
    return interpolate_points(params.field, fg_interpolation_points(params, y), d, params.k, params.s);
}

/// Total on any g x h input; the result may be infeasible.
inline MessageSpace fg_list_decode(const FoldedParams& params, const FoldedCodeword& y) {
    return recover_messages(fg_interpolate(params, y), params.gamma, params.k);
}

/// Minimum pairwise rank distance of the unfolded (h = 1) code by exhaustive
/// enumeration of all q^{mk} codewords; limited to 4096 codewords.
inline std::size_t gabidulin_min_distance_bruteforce(const FoldedParams& params) {
    params.validate();
    if (params.h != 1) throw error(errc::bad_params, "brute force expects the unfolded code (h = 1)");
    const auto& f = *params.field;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < params.k; ++i) {
        count *= f.size();
        if (count > 4096) throw error(errc::too_large, "too many codewords to enumerate");
    }
    std::vector<FoldedCodeword> words;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Message u(params.k);
        std::uint64_t r = idx;
        for (auto& x : u) {
            x = f.element(r % f.size());
            r /= f.size();
        }
        words.push_back(fg_encode(params, u));
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) best = std::min(best, rank_distance(words[a], words[b]));
    return best;
}

}  // namespace rankcodes

#endif
