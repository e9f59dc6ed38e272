#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "desix/scale.hpp"

namespace desix {

// Per-axis digit vectors in radix b, most significant digit first. All
// axes carry the same number of digits; that count is the level. The
// first-listed axis is the most significant one of each matrix digit.
struct CartesianIndex {
    std::vector<std::vector<std::int64_t>> coords;  // [axis][level position]

    Level level() const {
        return coords.empty() ? 0 : static_cast<Level>(coords.front().size());
    }
    int dim() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const CartesianIndex&, const CartesianIndex&) = default;
};

// Root-first list of matrix-digit values identifying a tree path. Leading
// zeros are significant: a level-3 index is not a level-2 index.
struct ScalarIndex {
    std::vector<std::int64_t> digits;  // values in [0, order), root first

    Level level() const { return static_cast<Level>(digits.size()); }

    friend bool operator==(const ScalarIndex&, const ScalarIndex&) = default;
    friend auto operator<=>(const ScalarIndex&, const ScalarIndex&) = default;
};

// Pairs the i-th digit of every axis into the i-th matrix digit.
ScalarIndex interleave(const CartesianIndex& c, const Scale& s);

// Inverse of interleave.
CartesianIndex deinterleave(const ScalarIndex& x, const Scale& s);

// Keeps the `target` most significant digits of every axis (level shift).
CartesianIndex cartesian_prefix(const CartesianIndex& c, Level target);

// Keeps the first `target` matrix digits.
ScalarIndex scalar_prefix(const ScalarIndex& x, Level target);

// Whole-axis values: (3, 1) for the level-3 pair (011, 001) in radix 2.
std::vector<std::int64_t> axis_values(const CartesianIndex& c, const Scale& s);
CartesianIndex cartesian_from_values(const std::vector<std::int64_t>& values, Level level,
                                     const Scale& s);

// Text forms.
//
// Scalar: matrix digits separated by single spaces, each digit written as
// dim radix-b axis characters ("00 10 11"). parse_scalar also accepts a
// digit given as its decimal value in brackets ("[61]"), or bare decimal
// when the token cannot be an axis-character group.
// Cartesian: axis digit-vectors joined by commas, first axis first
// ("011,001"); parse_cartesian with a non-negative `level` instead accepts
// the decimal form ("3,1").
std::string format_scalar(const ScalarIndex& x, const Scale& s);
ScalarIndex parse_scalar(const std::string& text, const Scale& s);
std::string format_cartesian(const CartesianIndex& c, const Scale& s);
CartesianIndex parse_cartesian(const std::string& text, const Scale& s, Level level = -1);

// Scalar index as space-separated decimal digit values, values above 9
// bracketed: "0 [61] [14]".
std::string format_scalar_values(const ScalarIndex& x);

}  // namespace desix
