#pragma once

// Partitions of the character index set, the block data B^0 / B^H, and the
// join that yields the Rouquier blocks of a specialization.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rouquier/essential.hpp"

namespace rouquier {

/// Raised when the stored data does not cover what a query needs.
class IncompleteDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A set partition of {0, ..., universe-1}; blocks sorted internally and
/// ordered by their minimum element.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless blocks are nonempty, disjoint and cover the universe.
    Partition(std::size_t universe, std::vector<std::vector<std::size_t>> blocks);

    static Partition discrete(std::size_t universe);
    static Partition single_block(std::size_t universe);

    std::size_t universe() const { return block_of_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::size_t block_of(std::size_t element) const { return block_of_.at(element); }
    bool same_block(std::size_t a, std::size_t b) const { return block_of(a) == block_of(b); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

private:
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

/// Every block of p lies inside a block of q.
bool refines(const Partition& p, const Partition& q);

/// Finest common coarsening: components of the union of the equivalence relations.
Partition join(std::span<const Partition> ps);

struct HyperplaneBlocks {
    Hyperplane hyperplane;
    Partition partition;

    friend bool operator==(const HyperplaneBlocks&, const HyperplaneBlocks&) = default;
};

/// B^0 together with B^H for the stored essential hyperplanes.
class BlockData {
public:
    BlockData() = default;
    /// Throws std::invalid_argument on a universe mismatch, a repeated
    /// hyperplane, or a B^H that is not coarser than B^0 ("coarseness violation").
    BlockData(Partition no_hyperplane, std::vector<HyperplaneBlocks> per_hyperplane);

    const Partition& no_hyperplane() const { return none_; }
    const std::vector<HyperplaneBlocks>& per_hyperplane() const { return per_; }
    std::vector<Hyperplane> hyperplanes() const;
    /// nullptr if H has no stored partition.
    const Partition* find(const Hyperplane& h) const;

    friend bool operator==(const BlockData&, const BlockData&) = default;

private:
    Partition none_;
    std::vector<HyperplaneBlocks> per_;
};

struct RouquierBlocks {
    Partition partition;
    std::vector<Hyperplane> containing;  // essential hyperplanes through s
};

/// B^0 if s lies on none of hs; otherwise the join of B^H over the
/// hyperplanes H in hs that contain s. Throws IncompleteDataError when one of
/// them has no stored partition.
RouquierBlocks rouquier_blocks(const Specialization& s, const BlockData& data,
                               std::span<const Hyperplane> hs);

}  // namespace rouquier
