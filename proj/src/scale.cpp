#include "desix/scale.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace desix {

namespace {

// a*b with overflow check, for validating scale geometry.
std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
        throw std::invalid_argument(std::string(what) + " overflows 64-bit range");
    return a * b;
}

}  // namespace

Scale::Scale(int dim, std::int64_t radix, Level depth)
    : dim_(dim), radix_(radix), depth_(depth) {
    if (dim < 1) throw std::invalid_argument("scale dim must be >= 1");
    if (radix < 2) throw std::invalid_argument("scale radix must be >= 2");
    if (depth < 0) throw std::invalid_argument("scale depth must be >= 0");
    order_ = 1;
    for (int i = 0; i < dim; ++i) order_ = checked_mul(order_, radix, "scale order");
}

std::int64_t Scale::side(Level k) const {
    if (k < 0) throw std::invalid_argument("level must be >= 0");
    std::int64_t r = 1;
    for (Level i = 0; i < k; ++i) r = checked_mul(r, radix_, "axis extent");
    return r;
}

std::int64_t digit_value(const MatrixDigit& d, const Scale& s) {
    if (static_cast<int>(d.axes.size()) != s.dim())
        throw std::invalid_argument("matrix digit has " + std::to_string(d.axes.size()) +
                                    " axes, scale has " + std::to_string(s.dim()));
    std::int64_t v = 0;
    for (std::int64_t a : d.axes) {
        if (a < 0 || a >= s.radix())
            throw std::invalid_argument("axis digit " + std::to_string(a) +
                                        " out of range for radix " + std::to_string(s.radix()));
        v = v * s.radix() + a;
    }
    return v;
}

MatrixDigit digit_from_value(std::int64_t v, const Scale& s) {
    if (v < 0 || v >= s.order())
        throw std::invalid_argument("digit value " + std::to_string(v) +
                                    " out of range for scale order " + std::to_string(s.order()));
    MatrixDigit d;
    d.axes.assign(static_cast<std::size_t>(s.dim()), 0);
    for (int i = s.dim() - 1; i >= 0; --i) {
        d.axes[static_cast<std::size_t>(i)] = v % s.radix();
        v /= s.radix();
    }
    return d;
}

}  // namespace desix
