#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "peerlens/metrics.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/oracle_check.hpp"

using namespace peerlens;
namespace t = peerlens::fixtures;

namespace {

/// Same structure with node ids permuted; labels follow their nodes.
SocialGraph permuted(const SocialGraph& g, const std::vector<NodeId>& perm) {
    SocialGraph out(g.name(), g.directed() ? Directedness::Directed : Directedness::Undirected,
                    g.weighted() ? Weighting::Weighted : Weighting::Unweighted);
    std::vector<NodeId> inverse(perm.size());
    for (NodeId i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
    for (NodeId i = 0; i < perm.size(); ++i) out.add_node(g.label(inverse[i]));
    for (const auto& tie : g.ties()) out.add_tie(perm[tie.src], perm[tie.dst], tie.weight);
    return out;
}

SocialGraph random_tree(std::mt19937_64& rng, std::size_t n) {
    SocialGraph g("tree", Directedness::Undirected, Weighting::Unweighted);
    for (std::size_t i = 0; i < n; ++i) g.add_node("t" + std::to_string(i));
    for (NodeId v = 1; v < n; ++v) {
        std::uniform_int_distribution<NodeId> parent(0, v - 1);
        g.add_tie(parent(rng), v);
    }
    return g;
}

}  // namespace

TEST(MetricsOracleTest, SmallCorpusAgreesWithBruteForce) {
    for (const auto& g : t::oracle_corpus(2024, 150, 6)) {
        const auto issues = t::oracle_mismatches(g);
        EXPECT_TRUE(issues.empty()) << issues.front();
    }
}

TEST(MetricsOracleTest, TreeBetweennessSumsInteriorPathNodes) {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 50; ++round) {
        const auto g = random_tree(rng, 2 + round % 8);
        const auto dist = sna::geodesic_matrix(g);
        double interior = 0.0;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            for (NodeId v = u + 1; v < g.node_count(); ++v) interior += static_cast<double>(*dist.at(u, v) - 1);
        }
        const auto b = sna::betweenness_all(g);
        EXPECT_NEAR(std::accumulate(b.begin(), b.end(), 0.0), interior, 1e-9);
    }
}

TEST(MetricsOracleTest, MetricsInvariantUnderRelabeling) {
    std::mt19937_64 rng(5);
    for (const auto& g : t::oracle_corpus(77, 80, 7)) {
        std::vector<NodeId> perm(g.node_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = permuted(g, perm);
        const auto bg = sna::betweenness_all(g);
        const auto bh = sna::betweenness_all(h);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            EXPECT_NEAR(bg[v], bh[perm[v]], 1e-9);
            EXPECT_EQ(sna::degrees(g, v), sna::degrees(h, perm[v]));
            EXPECT_EQ(sna::n_degree(g, v, 2), sna::n_degree(h, perm[v], 2));
            if (g.node_count() >= 2) {
                EXPECT_NEAR(sna::closeness(g, v, sna::Direction::Out), sna::closeness(h, perm[v], sna::Direction::Out),
                            1e-12);
            }
        }
        if (g.node_count() >= 2) {
            EXPECT_DOUBLE_EQ(sna::density(g), sna::density(h));
            EXPECT_EQ(sna::diameter(g), sna::diameter(h));
        }
        EXPECT_EQ(sna::components(g).size(), sna::components(h).size());
        // Community splits are excluded: equal-betweenness cuts are broken by node id.
    }
}

TEST(MetricsOracleTest, CommunitiesPartitionNodeSet) {
    for (const auto& g : t::oracle_corpus(31, 120, 7)) {
        const auto result = sna::communities(g);
        std::vector<NodeId> all;
        for (const auto& c : result.communities) all.insert(all.end(), c.members.begin(), c.members.end());
        std::sort(all.begin(), all.end());
        std::vector<NodeId> expected(g.node_count());
        std::iota(expected.begin(), expected.end(), 0);
        EXPECT_EQ(all, expected);
        std::vector<std::vector<NodeId>> blocks;
        for (const auto& c : result.communities) blocks.push_back(c.members);
        EXPECT_NEAR(result.modularity, oracle::BruteForce(g).modularity(blocks), 1e-9);
    }
}

TEST(MetricsOracleTest, RelaxedCliquesReduceToCliques) {
    for (const auto& g : t::oracle_corpus(8, 100, 7)) {
        if (g.directed()) continue;
        auto ids = [](const std::vector<sna::GroupStructure>& gs) {
            std::vector<std::vector<NodeId>> out;
            for (const auto& x : gs) out.push_back(x.members);
            return out;
        };
        for (std::size_t s : {3u, 4u}) {
            EXPECT_EQ(ids(sna::n_cliques(g, 1, s)), ids(sna::cliques(g, s)));
            EXPECT_EQ(ids(sna::k_plexes(g, 1, s)), ids(sna::cliques(g, s)));
        }
    }
}
