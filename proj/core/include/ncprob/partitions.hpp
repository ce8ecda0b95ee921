#pragma once

#include <compare>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ncprob {

using Block = std::vector<int>;

/// Non-crossing partition of a finite set of integers together with a linear
/// order on its blocks. Blocks are kept sorted by their minimum; order[i] is the
/// 1-based position of blocks[i] in the linear order (V_1, ..., V_k).
class OrderedNCPartition {
public:
    OrderedNCPartition() = default;
    /// Throws std::invalid_argument unless the blocks form a non-crossing
    /// partition of their union and `order` is a permutation of 1..k.
    OrderedNCPartition(std::vector<Block> blocks, std::vector<int> order);

    /// Blocks listed in their linear order V_1, ..., V_k.
    static OrderedNCPartition from_ordered(const std::vector<Block>& ordered);

    [[nodiscard]] const std::vector<int>& ground() const { return ground_; }
    [[nodiscard]] int ground_size() const { return static_cast<int>(ground_.size()); }
    [[nodiscard]] int size() const { return static_cast<int>(blocks_.size()); }
    [[nodiscard]] bool empty() const { return blocks_.empty(); }
    [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
    [[nodiscard]] const std::vector<int>& order() const { return order_; }

    /// V_position, 1-based.
    [[nodiscard]] const Block& block_at(int position) const;
    [[nodiscard]] std::vector<Block> ordered_blocks() const;

    /// For each position i (1-based, index i-1) the position of the innermost
    /// block enclosing V_i, or 0 when V_i is outer.
    [[nodiscard]] std::vector<int> parents() const;

    friend bool operator==(const OrderedNCPartition&, const OrderedNCPartition&) = default;
    friend auto operator<=>(const OrderedNCPartition& a, const OrderedNCPartition& b) {
        if (auto c = a.blocks_ <=> b.blocks_; c != 0) {
            return c;
        }
        return a.order_ <=> b.order_;
    }

private:
    std::vector<int> ground_;
    std::vector<Block> blocks_;
    std::vector<int> order_;
};

/// True when `inner` lies strictly between two elements of `outer`.
bool nested_in(const Block& inner, const Block& outer);
bool is_noncrossing(const std::vector<Block>& blocks);

struct PeaksBottoms {
    std::set<int> peaks;
    std::set<int> bottoms;
};

/// 1-based positions of local maxima and minima, endpoints compared with their
/// single neighbour. A sequence of length one has neither. Throws InvalidSequence.
PeaksBottoms peaks_bottoms(const std::vector<int>& seq);

enum class PartitionClass { NC, LNC, M, AM, I, LNCO, NCIO };

PartitionClass parse_partition_class(const std::string& name);
std::string to_string(PartitionClass c);

/// Streams every partition of the class over `ground` (sorted, distinct) in
/// canonical order. An empty ground set yields the empty partition once.
void for_each_partition(PartitionClass cls, const std::vector<int>& ground,
                        const std::function<void(const OrderedNCPartition&)>& visit);
std::vector<OrderedNCPartition> enumerate(PartitionClass cls, const std::vector<int>& ground);
std::vector<OrderedNCPartition> enumerate(PartitionClass cls, int n);

/// Unordered non-crossing partitions, blocks sorted by minimum, in lexicographic order.
std::vector<std::vector<Block>> noncrossing_partitions(const std::vector<int>& ground);

/// Block sets are 1-based positions V_i in the linear order.
struct BlockClassification {
    std::set<int> s1, s2, t1, t2, outer, inner;
};

BlockClassification classify(const OrderedNCPartition& p);

bool is_monotone(const OrderedNCPartition& p);
bool is_antimonotone(const OrderedNCPartition& p);

/// sigma: the last block together with all blocks nested inside it (in the
/// order of p, last block last); sigma_c: the remaining blocks in the order of p.
std::pair<OrderedNCPartition, OrderedNCPartition> lnco_decompose(const OrderedNCPartition& p);
/// All partitions with the given decomposition.
std::vector<OrderedNCPartition> lnco_fiber(const OrderedNCPartition& sigma, const OrderedNCPartition& sigma_c);

/// Interval blocks {e_k, ..., e_{k+m}} of a sorted ground set.
std::vector<Block> interval_blocks(const std::vector<int>& ground);

/// Partition in NCIO(ground) whose outermost block is v. Throws InvalidOutermost.
OrderedNCPartition ncio_structure(const Block& v, const std::vector<int>& ground);
/// (V_1, ..., V_{2k+1}) interval blocks from left to right -> (V_2, V_4, ..., V_1 u V_3 u ...).
OrderedNCPartition oi_to_ncio(const std::vector<Block>& intervals);

/// One text row per block in linear order, e.g. "V2  . o - - o ." .
std::string render_ascii(const OrderedNCPartition& p);

}  // namespace ncprob
