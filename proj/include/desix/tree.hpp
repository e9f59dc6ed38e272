#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "desix/bigint.hpp"
#include "desix/index.hpp"
#include "desix/scale.hpp"

namespace desix {

// Cell content: a label, or absence of information (an empty point).
using Payload = std::optional<std::uint64_t>;

enum class Homogeneity {
    AbsoluteHomogeneous,   // whole subscale carries one identical payload
    RelativeHomogeneous,   // terminal-level point; deeper structure unrecorded
    Heterogeneous,         // subscale mixes payloads
};

// Payload per terminal-level point. Cells are stored row-major with the
// first-listed axis slowest; extent along every axis is radix^depth.
class DenseGrid {
public:
    explicit DenseGrid(const Scale& scale, Payload fill = std::nullopt);
    DenseGrid(const Scale& scale, std::vector<Payload> cells);

    const Scale& scale() const { return scale_; }
    std::int64_t side() const { return side_; }
    const std::vector<Payload>& cells() const { return cells_; }

    // Access by per-axis position at the terminal level.
    Payload& at(const std::vector<std::int64_t>& pos);
    const Payload& at(const std::vector<std::int64_t>& pos) const;

    friend bool operator==(const DenseGrid&, const DenseGrid&) = default;

private:
    std::size_t offset(const std::vector<std::int64_t>& pos) const;

    Scale scale_;
    std::int64_t side_;
    std::vector<Payload> cells_;
};

// Tree node: a leaf holding one payload, or an internal node with exactly
// order() children stored in ascending matrix-digit order.
struct Node {
    Payload payload;
    std::vector<Node> children;

    bool is_leaf() const { return children.empty(); }

    friend bool operator==(const Node&, const Node&) = default;
};

// Condensed hierarchical record of a payload grid. No internal node has
// all children equal leaves with identical payload.
struct DesTree {
    Scale scale;
    Node root;

    friend bool operator==(const DesTree&, const DesTree&) = default;
};

struct TreeStats {
    std::uint64_t absolute = 0;
    std::uint64_t relative = 0;
    std::uint64_t heterogeneous = 0;
    std::uint64_t leaves = 0;
    BigInt terminal_cells = 0;
    double ratio = 0.0;  // terminal cells per leaf
};

// Bottom-up arrangement of a dense grid; the result is condensed.
DesTree build_from_grid(const DenseGrid& g);

// Merges every internal node whose children are all equal-payload leaves.
// Idempotent; terminal-resolution content is unchanged.
DesTree condense(const DesTree& t);

// Homogeneity of the point addressed by x. The digit path may stop early
// inside a condensed leaf; the point itself is then classified by its own
// level. Rejects paths below the terminal level.
Homogeneity classify(const DesTree& t, const ScalarIndex& x);

// Payload of the leaf covering x, or nullopt when x addresses an internal
// node (mixed content). Rejects paths below the terminal level.
std::optional<Payload> query(const DesTree& t, const ScalarIndex& x);

TreeStats stats(const DesTree& t);

// Inverse of build_from_grid.
DenseGrid reconstruct_grid(const DesTree& t);

// Linear (leaf list) text form. Header "des <dim> <radix> <depth>", then
// one leaf per line: scalar-index text or "-" for the root path, a space,
// and the label ("." for empty). Records ascend by path digit values.
std::string to_linear(const DesTree& t);
DesTree from_linear(const std::string& text);

}  // namespace desix
