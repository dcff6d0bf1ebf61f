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

#ifndef RANKCODES_ERRORS_HPP
#define RANKCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankcodes {

enum class errc {
    not_prime,
    reducible_modulus,
    bad_modulus,
    size_cap,
    division_by_zero,
    field_mismatch,
    ambient_mismatch,
    shape_mismatch,
    dim_too_large,
    rank_too_large,
    bad_params,
    wrong_message_length,
    degenerate_received_space,
    degenerate_params,
    list_cap_exceeded,
    too_large,
    sampling_failed,
};

inline const char* to_string(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::bad_modulus: return "BadModulus";
        case errc::size_cap: return "SizeCap";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::ambient_mismatch: return "AmbientMismatch";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::dim_too_large: return "DimTooLarge";
        case errc::rank_too_large: return "RankTooLarge";
        case errc::bad_params: return "BadParams";
        case errc::wrong_message_length: return "WrongMessageLength";
        case errc::degenerate_received_space: return "DegenerateReceivedSpace";
        case errc::degenerate_params: return "DegenerateParams";
        case errc::list_cap_exceeded: return "ListCapExceeded";
        case errc::too_large: return "TooLarge";
        case errc::sampling_failed: return "SamplingFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what) : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

/// Raised by enumerate() when q^dim exceeds the caller's cap.
class list_cap_exceeded : public error {
   public:
    list_cap_exceeded(std::size_t dim, const std::string& what) : error(errc::list_cap_exceeded, what), dim_(dim) {}
    std::size_t dimension() const noexcept { return dim_; }

   private:
    std::size_t dim_;
};

}  // namespace rankcodes

#endif
