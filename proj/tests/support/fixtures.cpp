#include "support/fixtures.hpp"

#include <string>

namespace peerlens::fixtures {

namespace {

std::string letter(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

SocialGraph cyc3() {
    SocialGraph g("cyc3", Directedness::Directed, Weighting::Unweighted);
    for (auto l : {"a", "b", "c"}) g.add_node(l);
    g.add_tie(0, 1);
    g.add_tie(1, 2);
    g.add_tie(2, 0);
    return g;
}

SocialGraph line4() { return undirected(4, {{0, 1}, {1, 2}, {2, 3}}); }

SocialGraph star4() {
    SocialGraph g("star4", Directedness::Undirected, Weighting::Unweighted);
    for (auto l : {"s", "x", "y", "z"}) g.add_node(l);
    g.add_tie(0, 1);
    g.add_tie(0, 2);
    g.add_tie(0, 3);
    return g;
}

SocialGraph k3d() {
    SocialGraph g("k3d", Directedness::Directed, Weighting::Unweighted);
    for (auto l : {"a", "b", "c"}) g.add_node(l);
    for (NodeId u = 0; u < 3; ++u) {
        for (NodeId v = 0; v < 3; ++v) {
            if (u != v) g.add_tie(u, v);
        }
    }
    return g;
}

SocialGraph undirected(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges) {
    SocialGraph g("undirected", Directedness::Undirected, Weighting::Unweighted);
    for (std::size_t i = 0; i < n; ++i) g.add_node(letter(i));
    for (auto [u, v] : edges) g.add_tie(u, v);
    return g;
}

SocialGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
    SocialGraph g("random", spec.directed ? Directedness::Directed : Directedness::Undirected,
                  spec.weighted ? Weighting::Weighted : Weighting::Unweighted);
    for (std::size_t i = 0; i < spec.nodes; ++i) g.add_node("n" + std::to_string(i));
    std::bernoulli_distribution coin(spec.tie_probability);
    std::uniform_int_distribution<int> weight(kMinTieWeight, kMaxTieWeight);
    for (NodeId u = 0; u < spec.nodes; ++u) {
        for (NodeId v = 0; v < spec.nodes; ++v) {
            if (u == v || (!spec.directed && v < u)) continue;
            if (!coin(rng)) continue;
            if (spec.weighted) {
                g.add_tie(u, v, weight(rng));
            } else {
                g.add_tie(u, v);
            }
        }
    }
    return g;
}

std::vector<SocialGraph> oracle_corpus(std::uint64_t seed, std::size_t count, std::size_t max_nodes) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> nodes(1, max_nodes);
    std::uniform_real_distribution<double> p(0.0, 0.9);
    std::vector<SocialGraph> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RandomGraphSpec spec;
        spec.nodes = nodes(rng);
        spec.directed = (i % 2) == 0;
        spec.weighted = (i % 4) >= 2;
        spec.tie_probability = p(rng);
        corpus.push_back(random_graph(rng, spec));
    }
    return corpus;
}

}  // namespace peerlens::fixtures
