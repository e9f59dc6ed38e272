#include "desix/index.hpp"

#include <sstream>
#include <stdexcept>

namespace desix {

namespace {

void check_axis_digit(std::int64_t d, const Scale& s) {
    if (d < 0 || d >= s.radix())
        throw std::invalid_argument("axis digit " + std::to_string(d) +
                                    " out of range for radix " + std::to_string(s.radix()));
}

char axis_char(std::int64_t d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

std::int64_t axis_char_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    if (c >= 'A' && c <= 'Z') return 10 + (c - 'A');
    return -1;
}

std::vector<std::string> split_tokens(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

ScalarIndex interleave(const CartesianIndex& c, const Scale& s) {
    if (c.dim() != s.dim())
        throw std::invalid_argument("cartesian index has " + std::to_string(c.dim()) +
                                    " axes, scale has " + std::to_string(s.dim()));
    const Level level = c.level();
    for (const auto& axis : c.coords)
        if (static_cast<Level>(axis.size()) != level)
            throw std::invalid_argument("cartesian axes differ in digit count");

    ScalarIndex x;
    x.digits.reserve(static_cast<std::size_t>(level));
    for (Level i = 0; i < level; ++i) {
        std::int64_t v = 0;
        for (int a = 0; a < s.dim(); ++a) {
            const std::int64_t d = c.coords[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            check_axis_digit(d, s);
            v = v * s.radix() + d;
        }
        x.digits.push_back(v);
    }
    return x;
}

CartesianIndex deinterleave(const ScalarIndex& x, const Scale& s) {
    CartesianIndex c;
    c.coords.assign(static_cast<std::size_t>(s.dim()), {});
    for (auto& axis : c.coords) axis.reserve(x.digits.size());
    for (std::int64_t v : x.digits) {
        MatrixDigit d = digit_from_value(v, s);
        for (int a = 0; a < s.dim(); ++a)
            c.coords[static_cast<std::size_t>(a)].push_back(d.axes[static_cast<std::size_t>(a)]);
    }
    return c;
}

CartesianIndex cartesian_prefix(const CartesianIndex& c, Level target) {
    if (target < 0 || target > c.level())
        throw std::invalid_argument("prefix level " + std::to_string(target) +
                                    " exceeds index level " + std::to_string(c.level()));
    CartesianIndex out;
    out.coords.reserve(c.coords.size());
    for (const auto& axis : c.coords)
        out.coords.emplace_back(axis.begin(), axis.begin() + target);
    return out;
}

ScalarIndex scalar_prefix(const ScalarIndex& x, Level target) {
    if (target < 0 || target > x.level())
        throw std::invalid_argument("prefix level " + std::to_string(target) +
                                    " exceeds index level " + std::to_string(x.level()));
    ScalarIndex out;
    out.digits.assign(x.digits.begin(), x.digits.begin() + target);
    return out;
}

std::vector<std::int64_t> axis_values(const CartesianIndex& c, const Scale& s) {
    std::vector<std::int64_t> out;
    out.reserve(c.coords.size());
    for (const auto& axis : c.coords) {
        std::int64_t v = 0;
        for (std::int64_t d : axis) {
            check_axis_digit(d, s);
            v = v * s.radix() + d;
        }
        out.push_back(v);
    }
    return out;
}

CartesianIndex cartesian_from_values(const std::vector<std::int64_t>& values, Level level,
                                     const Scale& s) {
    if (static_cast<int>(values.size()) != s.dim())
        throw std::invalid_argument("expected " + std::to_string(s.dim()) + " axis values, got " +
                                    std::to_string(values.size()));
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    CartesianIndex c;
    c.coords.assign(values.size(), std::vector<std::int64_t>(static_cast<std::size_t>(level), 0));
    for (std::size_t a = 0; a < values.size(); ++a) {
        std::int64_t v = values[a];
        if (v < 0 || v >= s.side(level))
            throw std::invalid_argument("axis value " + std::to_string(v) +
                                        " out of range for level " + std::to_string(level));
        for (Level i = level - 1; i >= 0; --i) {
            c.coords[a][static_cast<std::size_t>(i)] = v % s.radix();
            v /= s.radix();
        }
    }
    return c;
}

std::string format_scalar(const ScalarIndex& x, const Scale& s) {
    std::string out;
    for (std::size_t i = 0; i < x.digits.size(); ++i) {
        if (i > 0) out += ' ';
        MatrixDigit d = digit_from_value(x.digits[i], s);
        for (std::int64_t a : d.axes) out += axis_char(a);
    }
    return out;
}

ScalarIndex parse_scalar(const std::string& text, const Scale& s) {
    ScalarIndex x;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '[') {
            if (tok.back() != ']' || tok.size() < 3)
                throw std::runtime_error("malformed bracketed digit '" + tok + "'");
            std::int64_t v;
            try {
                v = std::stoll(tok.substr(1, tok.size() - 2));
            } catch (const std::exception&) {
                throw std::runtime_error("malformed bracketed digit '" + tok + "'");
            }
            if (v < 0 || v >= s.order())
                throw std::runtime_error("digit value " + std::to_string(v) +
                                         " out of range for scale order " +
                                         std::to_string(s.order()));
            x.digits.push_back(v);
            continue;
        }
        if (static_cast<int>(tok.size()) == s.dim()) {
            // Axis-character group: one radix-b character per axis.
            std::int64_t v = 0;
            bool ok = true;
            for (char c : tok) {
                const std::int64_t a = axis_char_value(c);
                if (a < 0 || a >= s.radix()) {
                    ok = false;
                    break;
                }
                v = v * s.radix() + a;
            }
            if (ok) {
                x.digits.push_back(v);
                continue;
            }
            if (s.dim() > 1)
                throw std::runtime_error("invalid axis digit in '" + tok + "' for radix " +
                                         std::to_string(s.radix()));
        }
        // Fallback: bare decimal digit value.
        std::int64_t v;
        try {
            v = std::stoll(tok);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed scalar digit '" + tok + "'");
        }
        if (v < 0 || v >= s.order())
            throw std::runtime_error("digit value " + std::to_string(v) +
                                     " out of range for scale order " + std::to_string(s.order()));
        x.digits.push_back(v);
    }
    return x;
}

std::string format_cartesian(const CartesianIndex& c, const Scale& s) {
    std::string out;
    for (std::size_t a = 0; a < c.coords.size(); ++a) {
        if (a > 0) out += ',';
        for (std::int64_t d : c.coords[a]) {
            check_axis_digit(d, s);
            out += axis_char(d);
        }
    }
    return out;
}

CartesianIndex parse_cartesian(const std::string& text, const Scale& s, Level level) {
    const std::vector<std::string> parts = split_tokens(text, ',');
    if (static_cast<int>(parts.size()) != s.dim())
        throw std::runtime_error("expected " + std::to_string(s.dim()) + " axes, got " +
                                 std::to_string(parts.size()));

    if (level >= 0) {
        // Decimal axis values with the level supplied separately.
        std::vector<std::int64_t> values;
        for (const std::string& p : parts) {
            try {
                values.push_back(std::stoll(p));
            } catch (const std::exception&) {
                throw std::runtime_error("malformed axis value '" + p + "'");
            }
        }
        return cartesian_from_values(values, level, s);
    }

    CartesianIndex c;
    c.coords.reserve(parts.size());
    std::size_t digits = parts.front().size();
    for (const std::string& p : parts) {
        if (p.size() != digits)
            throw std::runtime_error("cartesian axes differ in digit count");
        std::vector<std::int64_t> axis;
        axis.reserve(p.size());
        for (char ch : p) {
            const std::int64_t a = axis_char_value(ch);
            if (a < 0 || a >= s.radix())
                throw std::runtime_error(std::string("invalid axis digit '") + ch +
                                         "' for radix " + std::to_string(s.radix()));
            axis.push_back(a);
        }
        c.coords.push_back(std::move(axis));
    }
    return c;
}

std::string format_scalar_values(const ScalarIndex& x) {
    std::string out;
    for (std::size_t i = 0; i < x.digits.size(); ++i) {
        if (i > 0) out += ' ';
        if (x.digits[i] > 9)
            out += '[' + std::to_string(x.digits[i]) + ']';
        else
            out += std::to_string(x.digits[i]);
    }
    return out;
}

}  // namespace desix
