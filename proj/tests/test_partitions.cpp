#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ncprob/errors.hpp"
#include "ncprob/json_io.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/rational.hpp"
#include "support.hpp"

using namespace ncprob;

namespace {

using Ordered = std::pair<std::vector<Block>, std::vector<int>>;

// All set partitions of {1..n} via restricted growth strings, blocks sorted by minimum.
std::vector<std::vector<Block>> set_partitions(int n) {
    std::vector<std::vector<Block>> out;
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            std::vector<Block> blocks(static_cast<std::size_t>(used));
            for (int e = 0; e < n; ++e) {
                blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(e)])].push_back(e + 1);
            }
            out.push_back(blocks);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

bool crossing(const Block& a, const Block& b) {
    for (int x1 : a) {
        for (int x2 : a) {
            for (int y1 : b) {
                for (int y2 : b) {
                    if (x1 < y1 && y1 < x2 && x2 < y2) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

bool naive_nc(const std::vector<Block>& bs) {
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (i != j && crossing(bs[i], bs[j])) {
                return false;
            }
        }
    }
    return true;
}

bool inside(const Block& w, const Block& v) {
    for (int x : w) {
        bool between = false;
        for (int f : v) {
            for (int g : v) {
                between = between || (f < x && x < g);
            }
        }
        if (!between) {
            return false;
        }
    }
    return true;
}

std::vector<Ordered> naive(PartitionClass cls, int n) {
    std::vector<Ordered> out;
    for (const auto& bs : set_partitions(n)) {
        if (!naive_nc(bs)) {
            continue;
        }
        const int k = static_cast<int>(bs.size());
        std::vector<int> order(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 1);
        const std::vector<int> identity = order;
        do {
            bool keep = true;
            for (int i = 0; i < k && keep; ++i) {
                for (int j = 0; j < k && keep; ++j) {
                    if (i == j || !inside(bs[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(j)])) {
                        continue;
                    }
                    const int oi = order[static_cast<std::size_t>(i)];
                    const int oj = order[static_cast<std::size_t>(j)];
                    if ((cls == PartitionClass::M && oi < oj) || (cls == PartitionClass::AM && oi > oj)) {
                        keep = false;
                    }
                }
            }
            if (cls == PartitionClass::NC || cls == PartitionClass::I) {
                keep = order == identity;
            }
            if (cls == PartitionClass::I) {
                for (const auto& b : bs) {
                    keep = keep && b.back() - b.front() + 1 == static_cast<int>(b.size());
                }
            }
            if (cls == PartitionClass::LNCO || cls == PartitionClass::NCIO) {
                const auto last = std::find(order.begin(), order.end(), k) - order.begin();
                const Block& v = bs[static_cast<std::size_t>(last)];
                for (int i = 0; i < k && keep; ++i) {
                    keep = i == last || inside(bs[static_cast<std::size_t>(i)], v);
                }
                if (cls == PartitionClass::NCIO && keep) {
                    // the other blocks are the gaps of v, listed left to right
                    std::vector<Block> gaps;
                    for (std::size_t t = 0; t + 1 < v.size(); ++t) {
                        if (v[t + 1] > v[t] + 1) {
                            Block g(static_cast<std::size_t>(v[t + 1] - v[t] - 1));
                            std::iota(g.begin(), g.end(), v[t] + 1);
                            gaps.push_back(g);
                        }
                    }
                    std::vector<Block> others;
                    for (int p = 1; p < k; ++p) {
                        others.push_back(bs[static_cast<std::size_t>(std::find(order.begin(), order.end(), p) -
                                                                     order.begin())]);
                    }
                    keep = others == gaps;
                }
            }
            if (keep) {
                out.emplace_back(bs, order);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ordered> library(PartitionClass cls, int n) {
    std::vector<Ordered> out;
    for (const auto& p : enumerate(cls, n)) {
        out.emplace_back(p.blocks(), p.order());
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long catalan(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
}

}  // namespace

TEST_CASE("small counts") {
    CHECK(enumerate(PartitionClass::NC, 3).size() == 5);
    CHECK(enumerate(PartitionClass::LNC, 3).size() == 13);
    for (int n = 1; n <= 8; ++n) {
        CHECK(enumerate(PartitionClass::NC, n).size() == static_cast<std::size_t>(catalan(n)));
        CHECK(enumerate(PartitionClass::I, n).size() == (std::size_t{1} << (n - 1)));
    }
}

TEST_CASE("LNC size is the NC sum of block-count factorials") {
    for (int n = 1; n <= 7; ++n) {
        Rational total;
        for (const auto& bs : noncrossing_partitions([&] {
                 std::vector<int> g(static_cast<std::size_t>(n));
                 std::iota(g.begin(), g.end(), 1);
                 return g;
             }())) {
            total += factorial(static_cast<std::int64_t>(bs.size()));
        }
        CHECK(Rational(static_cast<long long>(enumerate(PartitionClass::LNC, n).size())) == total);
    }
}

TEST_CASE("enumeration matches a naive filter of ordered set partitions") {
    for (PartitionClass cls : {PartitionClass::NC, PartitionClass::LNC, PartitionClass::M, PartitionClass::AM,
                               PartitionClass::I, PartitionClass::LNCO, PartitionClass::NCIO}) {
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(to_string(cls));
            CAPTURE(n);
            const auto lib = library(cls, n);
            CHECK(std::adjacent_find(lib.begin(), lib.end()) == lib.end());
            CHECK(lib == naive(cls, n));
        }
    }
}

TEST_CASE("empty ground set yields the empty partition once") {
    const auto ps = enumerate(PartitionClass::LNC, std::vector<int>{});
    REQUIRE(ps.size() == 1);
    CHECK(ps.front().empty());
}

TEST_CASE("monotone and anti-monotone partitions mirror each other") {
    for (int n = 1; n <= 6; ++n) {
        std::set<Ordered> reversed;
        for (const auto& p : enumerate(PartitionClass::M, n)) {
            std::vector<int> order = p.order();
            for (int& o : order) {
                o = p.size() + 1 - o;
            }
            reversed.emplace(p.blocks(), order);
        }
        const auto am = library(PartitionClass::AM, n);
        CHECK(std::set<Ordered>(am.begin(), am.end()) == reversed);
    }
}

TEST_CASE("outer blocks lie in S1 and T2") {
    for (const auto& p : enumerate(PartitionClass::LNC, 5)) {
        const BlockClassification c = classify(p);
        for (int v : c.outer) {
            CHECK(c.s1.count(v) == 1);
            CHECK(c.t2.count(v) == 1);
        }
        CHECK(c.s1.size() + c.s2.size() == static_cast<std::size_t>(p.size()));
        CHECK(c.t1.size() + c.t2.size() == static_cast<std::size_t>(p.size()));
    }
}

TEST_CASE("classification of the seven-block example") {
    const OrderedNCPartition p = partition_from_json(testing_support::fixture("classified_partition.json"));
    const BlockClassification c = classify(p);
    CHECK(c.s1 == std::set<int>{3, 4, 5, 7});
    CHECK(c.s2 == std::set<int>{1, 2, 6});
    CHECK(c.t2 == std::set<int>{1, 2, 3, 4, 6});
    CHECK(c.t1 == std::set<int>{5, 7});

    const auto [sigma, sigma_c] = lnco_decompose(p);
    CHECK(sigma.ordered_blocks() ==
          std::vector<Block>{p.block_at(1), p.block_at(2), p.block_at(5), p.block_at(6), p.block_at(7)});
    CHECK(sigma_c.ordered_blocks() == std::vector<Block>{p.block_at(3), p.block_at(4)});
}

TEST_CASE("lnco fibers reconstruct the decomposition") {
    for (int n = 1; n <= 5; ++n) {
        std::map<std::pair<OrderedNCPartition, OrderedNCPartition>, std::set<OrderedNCPartition>> fibers;
        for (const auto& p : enumerate(PartitionClass::LNC, n)) {
            fibers[lnco_decompose(p)].insert(p);
        }
        for (const auto& [key, members] : fibers) {
            const auto fiber = lnco_fiber(key.first, key.second);
            CHECK(std::set<OrderedNCPartition>(fiber.begin(), fiber.end()) == members);
            CHECK(fiber.size() == members.size());
        }
    }
}

TEST_CASE("peaks and bottoms") {
    const PeaksBottoms pb = peaks_bottoms({1, 2, 6, 5, 4, 1, 3, 2, 4, 1, 3, 2, 5});
    CHECK(pb.peaks == std::set<int>{3, 7, 9, 11, 13});
    CHECK(pb.bottoms == std::set<int>{1, 6, 8, 10, 12});
    CHECK(peaks_bottoms({2, 1}).peaks == std::set<int>{1});
    CHECK(peaks_bottoms({2, 1}).bottoms == std::set<int>{2});
    CHECK(peaks_bottoms({4}).peaks.empty());
    CHECK_THROWS_AS(peaks_bottoms({1, 1}), InvalidSequence);
}

TEST_CASE("outermost structures") {
    const OrderedNCPartition whole = ncio_structure({1, 2, 3}, {1, 2, 3});
    CHECK(whole.size() == 1);
    const OrderedNCPartition gap = ncio_structure({1, 2, 5}, {1, 2, 3, 4, 5});
    CHECK(gap.ordered_blocks() == std::vector<Block>{{3, 4}, {1, 2, 5}});
    CHECK_THROWS_AS(ncio_structure({1, 2}, {1, 2, 3}), InvalidOutermost);

    const OrderedNCPartition img = oi_to_ncio({{1}, {2}, {3, 4}, {5}, {6}});
    CHECK(img.ordered_blocks() == std::vector<Block>{{2}, {5}, {1, 3, 4, 6}});
}

TEST_CASE("partition validation and rendering") {
    CHECK_THROWS(OrderedNCPartition({{1, 3}, {2, 4}}, {1, 2}));
    CHECK_THROWS(OrderedNCPartition({{1}, {2}}, {1, 1}));
    const OrderedNCPartition p({{1, 4}, {2, 3}}, {2, 1});
    CHECK(is_antimonotone(p));
    CHECK_FALSE(is_monotone(p));
    CHECK(render_ascii(p).find("o - - o") != std::string::npos);
}
