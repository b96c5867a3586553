#include "rouquier/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace rouquier {

namespace {

constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) x = std::exchange(parent_[x], root);
        return root;
    }

    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    Partition to_partition() {
        const std::size_t n = parent_.size();
        std::vector<std::vector<std::size_t>> by_root(n);
        for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
        std::vector<std::vector<std::size_t>> blocks;
        for (auto& b : by_root) {
            if (!b.empty()) blocks.push_back(std::move(b));
        }
        return Partition(n, std::move(blocks));
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace

Partition::Partition(std::size_t universe, std::vector<std::vector<std::size_t>> blocks)
    : block_of_(universe, unassigned) {
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition has an empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        for (auto e : blocks[bi]) {
            if (e >= universe) {
                throw std::invalid_argument("partition element " + std::to_string(e) +
                                            " outside universe of size " + std::to_string(universe));
            }
            if (block_of_[e] != unassigned) {
                throw std::invalid_argument("partition element " + std::to_string(e) +
                                            " occurs twice");
            }
            block_of_[e] = bi;
        }
    }
    for (std::size_t e = 0; e < universe; ++e) {
        if (block_of_[e] == unassigned) {
            throw std::invalid_argument("partition does not cover element " + std::to_string(e));
        }
    }
    blocks_ = std::move(blocks);
}

Partition Partition::discrete(std::size_t universe) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < universe; ++i) blocks.push_back({i});
    return Partition(universe, std::move(blocks));
}

Partition Partition::single_block(std::size_t universe) {
    if (universe == 0) return Partition(0, {});
    std::vector<std::size_t> all(universe);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return Partition(universe, {std::move(all)});
}

bool refines(const Partition& p, const Partition& q) {
    if (p.universe() != q.universe()) throw std::invalid_argument("refines: universe mismatch");
    return std::all_of(p.blocks().begin(), p.blocks().end(), [&](const auto& block) {
        return std::all_of(block.begin(), block.end(),
                           [&](std::size_t e) { return q.same_block(e, block.front()); });
    });
}

Partition join(std::span<const Partition> ps) {
    if (ps.empty()) throw std::invalid_argument("join: empty list of partitions");
    const std::size_t n = ps.front().universe();
    UnionFind uf(n);
    for (const auto& p : ps) {
        if (p.universe() != n) throw std::invalid_argument("join: universe mismatch");
        for (const auto& block : p.blocks()) {
            for (auto e : block) uf.merge(block.front(), e);
        }
    }
    return uf.to_partition();
}

BlockData::BlockData(Partition no_hyperplane, std::vector<HyperplaneBlocks> per_hyperplane)
    : none_(std::move(no_hyperplane)), per_(std::move(per_hyperplane)) {
    for (std::size_t i = 0; i < per_.size(); ++i) {
        const auto& hb = per_[i];
        if (hb.partition.universe() != none_.universe()) {
            throw std::invalid_argument("block data: universe mismatch for " + hb.hyperplane.label);
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (per_[j].hyperplane == hb.hyperplane) {
                throw std::invalid_argument("block data: hyperplane " + hb.hyperplane.label +
                                            " listed twice");
            }
        }
        if (!refines(none_, hb.partition)) {
            throw std::invalid_argument("coarseness violation: B^H for " + hb.hyperplane.label +
                                        " is not coarser than B^0");
        }
    }
}

std::vector<Hyperplane> BlockData::hyperplanes() const {
    std::vector<Hyperplane> out;
    for (const auto& hb : per_) out.push_back(hb.hyperplane);
    return out;
}

const Partition* BlockData::find(const Hyperplane& h) const {
    for (const auto& hb : per_) {
        if (hb.hyperplane == h) return &hb.partition;
    }
    return nullptr;
}

RouquierBlocks rouquier_blocks(const Specialization& s, const BlockData& data,
                               std::span<const Hyperplane> hs) {
    RouquierBlocks out{data.no_hyperplane(), hyperplanes_containing(s, hs)};
    if (out.containing.empty()) return out;
    std::vector<Partition> parts;
    for (const auto& h : out.containing) {
        const Partition* p = data.find(h);
        if (p == nullptr) {
            throw IncompleteDataError("no stored blocks for essential hyperplane " + h.label);
        }
        parts.push_back(*p);
    }
    out.partition = join(parts);
    return out;
}

}  // namespace rouquier
