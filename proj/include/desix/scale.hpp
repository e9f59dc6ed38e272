#pragma once

#include <cstdint>
#include <vector>

namespace desix {

// Level index within a scale: 0 is the root, larger is deeper.
using Level = std::int32_t;

// Geometry of a hierarchical discretization: `dim` axes, each axis split
// into `radix` parts per level step, `depth` levels below the root. One
// level step multiplies the point count by order() = radix^dim.
class Scale {
public:
    Scale(int dim, std::int64_t radix, Level depth);

    int dim() const { return dim_; }
    std::int64_t radix() const { return radix_; }
    Level depth() const { return depth_; }

    // Points a single point splits into per level step (radix^dim).
    std::int64_t order() const { return order_; }

    // Extent of one axis at level k, i.e. radix^k. Rejects overflow.
    std::int64_t side(Level k) const;

    bool same_geometry(const Scale& other) const {
        return dim_ == other.dim_ && radix_ == other.radix_;
    }

    friend bool operator==(const Scale&, const Scale&) = default;

private:
    int dim_;
    std::int64_t radix_;
    Level depth_;
    std::int64_t order_;
};

inline Scale make_scale(int dim, std::int64_t radix, Level depth) {
    return Scale(dim, radix, depth);
}

// Per-level tuple of axis digits, first-listed axis most significant
// (the (yx) of a 2D scale, the (zyx) of a 3D one).
struct MatrixDigit {
    std::vector<std::int64_t> axes;

    friend bool operator==(const MatrixDigit&, const MatrixDigit&) = default;
};

// Reads the axis tuple as one radix-b figure: first axis is the most
// significant position. Result lies in [0, order).
std::int64_t digit_value(const MatrixDigit& d, const Scale& s);

// Inverse of digit_value.
MatrixDigit digit_from_value(std::int64_t v, const Scale& s);

}  // namespace desix
