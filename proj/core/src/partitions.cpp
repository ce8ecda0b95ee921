#include "ncprob/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

using IndexPartition = std::vector<Block>;

// NC partitions of {0..n-1} as index blocks, memoized by n.
const std::vector<IndexPartition>& nc_indices(int n) {
    static std::map<int, std::vector<IndexPartition>> memo;
    static std::recursive_mutex mutex;
    const std::lock_guard<std::recursive_mutex> lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) {
        return it->second;
    }
    std::vector<IndexPartition> out;
    if (n == 0) {
        out.emplace_back();
        return memo.emplace(n, std::move(out)).first->second;
    }
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        Block first{0};
        for (int i = 1; i < n; ++i) {
            if ((mask >> (i - 1)) & 1U) {
                first.push_back(i);
            }
        }
        // Segments strictly between chosen elements, and after the last one.
        std::vector<std::pair<int, int>> segments;
        for (std::size_t j = 0; j < first.size(); ++j) {
            const int lo = first[j] + 1;
            const int hi = j + 1 < first.size() ? first[j + 1] : n;
            if (hi > lo) {
                segments.emplace_back(lo, hi);
            }
        }
        std::vector<IndexPartition> partial{IndexPartition{first}};
        for (auto [lo, hi] : segments) {
            const auto& sub = nc_indices(hi - lo);
            std::vector<IndexPartition> next;
            next.reserve(partial.size() * sub.size());
            for (const auto& base : partial) {
                for (const auto& s : sub) {
                    IndexPartition p = base;
                    for (const auto& b : s) {
                        Block shifted = b;
                        for (auto& x : shifted) {
                            x += lo;
                        }
                        p.push_back(std::move(shifted));
                    }
                    next.push_back(std::move(p));
                }
            }
            partial = std::move(next);
        }
        for (auto& p : partial) {
            std::sort(p.begin(), p.end());
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(n, std::move(out)).first->second;
}

std::vector<int> identity_order(std::size_t k) {
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 1);
    return order;
}

// parent[i] = index (into blocks) of the innermost enclosing block, or -1.
std::vector<int> parent_indices(const std::vector<Block>& blocks) {
    std::vector<int> parent(blocks.size(), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j || !nested_in(blocks[i], blocks[j])) {
                continue;
            }
            if (parent[i] < 0 || blocks[j].front() > blocks[static_cast<std::size_t>(parent[i])].front()) {
                parent[i] = static_cast<int>(j);
            }
        }
    }
    return parent;
}

bool is_interval_partition(const std::vector<Block>& blocks, const std::vector<int>& ground) {
    for (const auto& b : blocks) {
        const auto first = std::lower_bound(ground.begin(), ground.end(), b.front());
        if (static_cast<std::size_t>(ground.end() - first) < b.size() || !std::equal(b.begin(), b.end(), first)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool nested_in(const Block& inner, const Block& outer) {
    return outer.front() < inner.front() && inner.back() < outer.back();
}

bool is_noncrossing(const std::vector<Block>& blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            std::vector<std::pair<int, int>> merged;
            for (int x : blocks[i]) {
                merged.emplace_back(x, 0);
            }
            for (int x : blocks[j]) {
                merged.emplace_back(x, 1);
            }
            std::sort(merged.begin(), merged.end());
            int changes = 0;
            for (std::size_t k = 1; k < merged.size(); ++k) {
                if (merged[k].second != merged[k - 1].second) {
                    ++changes;
                }
            }
            if (changes >= 3) {
                return false;
            }
        }
    }
    return true;
}

OrderedNCPartition::OrderedNCPartition(std::vector<Block> blocks, std::vector<int> order) {
    if (blocks.size() != order.size()) {
        throw std::invalid_argument("order must rank every block");
    }
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    if (check != identity_order(order.size())) {
        throw std::invalid_argument("order must be a permutation of 1..k");
    }
    std::vector<std::pair<Block, int>> tagged;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) {
            throw std::invalid_argument("empty block");
        }
        std::sort(blocks[i].begin(), blocks[i].end());
        ground_.insert(ground_.end(), blocks[i].begin(), blocks[i].end());
        tagged.emplace_back(std::move(blocks[i]), order[i]);
    }
    std::sort(ground_.begin(), ground_.end());
    if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
        throw std::invalid_argument("blocks are not disjoint");
    }
    std::sort(tagged.begin(), tagged.end());
    for (auto& [b, o] : tagged) {
        blocks_.push_back(std::move(b));
        order_.push_back(o);
    }
    if (!is_noncrossing(blocks_)) {
        throw std::invalid_argument("partition is crossing");
    }
}

OrderedNCPartition OrderedNCPartition::from_ordered(const std::vector<Block>& ordered) {
    return {ordered, identity_order(ordered.size())};
}

const Block& OrderedNCPartition::block_at(int position) const {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (order_[i] == position) {
            return blocks_[i];
        }
    }
    throw std::out_of_range("block position out of range");
}

std::vector<Block> OrderedNCPartition::ordered_blocks() const {
    std::vector<Block> out(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        out[static_cast<std::size_t>(order_[i] - 1)] = blocks_[i];
    }
    return out;
}

std::vector<int> OrderedNCPartition::parents() const {
    const std::vector<int> idx = parent_indices(blocks_);
    std::vector<int> out(blocks_.size(), 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (idx[i] >= 0) {
            out[static_cast<std::size_t>(order_[i] - 1)] = order_[static_cast<std::size_t>(idx[i])];
        }
    }
    return out;
}

PeaksBottoms peaks_bottoms(const std::vector<int>& seq) {
    const std::size_t n = seq.size();
    for (std::size_t k = 1; k < n; ++k) {
        if (seq[k] == seq[k - 1]) {
            throw InvalidSequence("neighbouring indices must differ");
        }
    }
    PeaksBottoms out;
    if (n < 2) {
        return out;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const bool left_lower = k == 0 || seq[k - 1] < seq[k];
        const bool right_lower = k + 1 == n || seq[k + 1] < seq[k];
        const bool left_higher = k == 0 || seq[k - 1] > seq[k];
        const bool right_higher = k + 1 == n || seq[k + 1] > seq[k];
        if (left_lower && right_lower) {
            out.peaks.insert(static_cast<int>(k) + 1);
        } else if (left_higher && right_higher) {
            out.bottoms.insert(static_cast<int>(k) + 1);
        }
    }
    return out;
}

PartitionClass parse_partition_class(const std::string& name) {
    std::string up = name;
    for (auto& c : up) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    static const std::map<std::string, PartitionClass> table{
        {"NC", PartitionClass::NC}, {"LNC", PartitionClass::LNC},   {"M", PartitionClass::M},
        {"AM", PartitionClass::AM}, {"I", PartitionClass::I},       {"LNCO", PartitionClass::LNCO},
        {"NCIO", PartitionClass::NCIO}};
    if (auto it = table.find(up); it != table.end()) {
        return it->second;
    }
    throw ParseError("unknown partition class '" + name + "'");
}

std::string to_string(PartitionClass c) {
    switch (c) {
        case PartitionClass::NC: return "NC";
        case PartitionClass::LNC: return "LNC";
        case PartitionClass::M: return "M";
        case PartitionClass::AM: return "AM";
        case PartitionClass::I: return "I";
        case PartitionClass::LNCO: return "LNCO";
        case PartitionClass::NCIO: return "NCIO";
    }
    return "?";
}

std::vector<std::vector<Block>> noncrossing_partitions(const std::vector<int>& ground) {
    std::vector<std::vector<Block>> out;
    for (const auto& p : nc_indices(static_cast<int>(ground.size()))) {
        std::vector<Block> blocks;
        for (const auto& b : p) {
            Block mapped;
            for (int i : b) {
                mapped.push_back(ground[static_cast<std::size_t>(i)]);
            }
            blocks.push_back(std::move(mapped));
        }
        out.push_back(std::move(blocks));
    }
    return out;
}

void for_each_partition(PartitionClass cls, const std::vector<int>& ground,
                        const std::function<void(const OrderedNCPartition&)>& visit) {
    if (!std::is_sorted(ground.begin(), ground.end()) ||
        std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
        throw std::invalid_argument("ground set must be sorted and duplicate-free");
    }
    if (ground.empty()) {
        visit(OrderedNCPartition{});
        return;
    }
    if (cls == PartitionClass::NCIO) {
        std::vector<OrderedNCPartition> all;
        const std::size_t n = ground.size();
        if (n == 1) {
            all.push_back(ncio_structure(ground, ground));
        } else {
            for (unsigned mask = 0; mask < (1U << (n - 2)); ++mask) {
                Block v{ground.front()};
                for (std::size_t i = 1; i + 1 < n; ++i) {
                    if ((mask >> (i - 1)) & 1U) {
                        v.push_back(ground[i]);
                    }
                }
                v.push_back(ground.back());
                all.push_back(ncio_structure(v, ground));
            }
        }
        std::sort(all.begin(), all.end());
        for (const auto& p : all) {
            visit(p);
        }
        return;
    }
    for (auto& blocks : noncrossing_partitions(ground)) {
        const std::size_t k = blocks.size();
        switch (cls) {
            case PartitionClass::NC:
                visit(OrderedNCPartition(blocks, identity_order(k)));
                break;
            case PartitionClass::I:
                if (is_interval_partition(blocks, ground)) {
                    visit(OrderedNCPartition(blocks, identity_order(k)));
                }
                break;
            case PartitionClass::LNCO: {
                if (blocks.front().back() != ground.back()) {
                    break;
                }
                std::vector<int> rest = identity_order(k - 1);
                do {
                    std::vector<int> order{static_cast<int>(k)};
                    order.insert(order.end(), rest.begin(), rest.end());
                    visit(OrderedNCPartition(blocks, order));
                } while (std::next_permutation(rest.begin(), rest.end()));
                break;
            }
            default: {
                const std::vector<int> parent = parent_indices(blocks);
                std::vector<int> order = identity_order(k);
                do {
                    bool ok = true;
                    for (std::size_t i = 0; i < k && ok; ++i) {
                        if (parent[i] < 0) {
                            continue;
                        }
                        const int own = order[i];
                        const int par = order[static_cast<std::size_t>(parent[i])];
                        if (cls == PartitionClass::M) {
                            ok = own > par;
                        } else if (cls == PartitionClass::AM) {
                            ok = own < par;
                        }
                    }
                    if (ok) {
                        visit(OrderedNCPartition(blocks, order));
                    }
                } while (std::next_permutation(order.begin(), order.end()));
                break;
            }
        }
    }
}

std::vector<OrderedNCPartition> enumerate(PartitionClass cls, const std::vector<int>& ground) {
    std::vector<OrderedNCPartition> out;
    for_each_partition(cls, ground, [&](const OrderedNCPartition& p) { out.push_back(p); });
    return out;
}

std::vector<OrderedNCPartition> enumerate(PartitionClass cls, int n) {
    std::vector<int> ground(static_cast<std::size_t>(n));
    std::iota(ground.begin(), ground.end(), 1);
    return enumerate(cls, ground);
}

BlockClassification classify(const OrderedNCPartition& p) {
    BlockClassification c;
    const std::vector<int> parent = p.parents();
    for (int i = 1; i <= p.size(); ++i) {
        const int par = parent[static_cast<std::size_t>(i - 1)];
        if (par == 0) {
            c.outer.insert(i);
        } else {
            c.inner.insert(i);
        }
        (par == 0 || par < i ? c.s1 : c.s2).insert(i);
        (par == 0 || par > i ? c.t2 : c.t1).insert(i);
    }
    return c;
}

bool is_monotone(const OrderedNCPartition& p) {
    const std::vector<int> parent = p.parents();
    for (int i = 1; i <= p.size(); ++i) {
        if (parent[static_cast<std::size_t>(i - 1)] > i) {
            return false;
        }
    }
    return true;
}

bool is_antimonotone(const OrderedNCPartition& p) {
    const std::vector<int> parent = p.parents();
    for (int i = 1; i <= p.size(); ++i) {
        const int par = parent[static_cast<std::size_t>(i - 1)];
        if (par != 0 && par < i) {
            return false;
        }
    }
    return true;
}

std::pair<OrderedNCPartition, OrderedNCPartition> lnco_decompose(const OrderedNCPartition& p) {
    if (p.empty()) {
        return {};
    }
    const std::vector<Block> ordered = p.ordered_blocks();
    const Block& last = ordered.back();
    std::vector<Block> sigma;
    std::vector<Block> rest;
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
        (nested_in(ordered[i], last) ? sigma : rest).push_back(ordered[i]);
    }
    sigma.push_back(last);
    return {OrderedNCPartition::from_ordered(sigma), OrderedNCPartition::from_ordered(rest)};
}

std::vector<OrderedNCPartition> lnco_fiber(const OrderedNCPartition& sigma, const OrderedNCPartition& sigma_c) {
    std::vector<Block> a = sigma.ordered_blocks();
    if (a.empty()) {
        throw std::invalid_argument("sigma must contain an outermost block");
    }
    const Block last = a.back();
    a.pop_back();
    const std::vector<Block> b = sigma_c.ordered_blocks();
    std::vector<OrderedNCPartition> out;
    std::vector<Block> current;
    std::function<void(std::size_t, std::size_t)> shuffle = [&](std::size_t i, std::size_t j) {
        if (i == a.size() && j == b.size()) {
            current.push_back(last);
            out.push_back(OrderedNCPartition::from_ordered(current));
            current.pop_back();
            return;
        }
        if (i < a.size()) {
            current.push_back(a[i]);
            shuffle(i + 1, j);
            current.pop_back();
        }
        if (j < b.size()) {
            current.push_back(b[j]);
            shuffle(i, j + 1);
            current.pop_back();
        }
    };
    shuffle(0, 0);
    return out;
}

std::vector<Block> interval_blocks(const std::vector<int>& ground) {
    std::vector<Block> out;
    for (std::size_t k = 0; k < ground.size(); ++k) {
        for (std::size_t e = k; e < ground.size(); ++e) {
            out.emplace_back(ground.begin() + static_cast<std::ptrdiff_t>(k),
                             ground.begin() + static_cast<std::ptrdiff_t>(e) + 1);
        }
    }
    return out;
}

OrderedNCPartition ncio_structure(const Block& v, const std::vector<int>& ground) {
    if (ground.empty() || v.empty() || v.front() != ground.front() || v.back() != ground.back()) {
        throw InvalidOutermost("outermost block must contain both endpoints of the ground set");
    }
    std::vector<std::size_t> pos;
    for (int x : v) {
        const auto it = std::lower_bound(ground.begin(), ground.end(), x);
        if (it == ground.end() || *it != x) {
            throw InvalidOutermost("outermost block is not a subset of the ground set");
        }
        pos.push_back(static_cast<std::size_t>(it - ground.begin()));
    }
    std::vector<Block> ordered;
    for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
        if (pos[j + 1] <= pos[j]) {
            throw InvalidOutermost("outermost block must be sorted and duplicate-free");
        }
        if (pos[j + 1] > pos[j] + 1) {
            ordered.emplace_back(ground.begin() + static_cast<std::ptrdiff_t>(pos[j]) + 1,
                                 ground.begin() + static_cast<std::ptrdiff_t>(pos[j + 1]));
        }
    }
    ordered.push_back(v);
    return OrderedNCPartition::from_ordered(ordered);
}

OrderedNCPartition oi_to_ncio(const std::vector<Block>& intervals) {
    if (intervals.size() % 2 == 0) {
        throw std::invalid_argument("expected an odd number of interval blocks");
    }
    std::vector<Block> ordered;
    Block outer;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (i % 2 == 1) {
            ordered.push_back(intervals[i]);
        } else {
            outer.insert(outer.end(), intervals[i].begin(), intervals[i].end());
        }
    }
    std::sort(outer.begin(), outer.end());
    ordered.push_back(outer);
    return OrderedNCPartition::from_ordered(ordered);
}

std::string render_ascii(const OrderedNCPartition& p) {
    std::ostringstream os;
    const std::vector<Block> ordered = p.ordered_blocks();
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        const Block& b = ordered[i];
        os << 'V' << i + 1 << (i + 1 < 10 ? "  " : " ");
        for (int x : p.ground()) {
            char c = '.';
            if (std::binary_search(b.begin(), b.end(), x)) {
                c = 'o';
            } else if (b.front() < x && x < b.back()) {
                c = '-';
            }
            os << ' ' << c;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace ncprob
