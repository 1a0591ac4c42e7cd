#pragma once

#include <cstdint>
#include <random>

#include "peerlens/graph.hpp"

namespace peerlens::fixtures {

/// a->b->c->a, unweighted.
SocialGraph cyc3();
/// a-b-c-d, undirected.
SocialGraph line4();
/// Star centered at s with leaves x, y, z, undirected.
SocialGraph star4();
/// Complete directed graph on a, b, c.
SocialGraph k3d();
/// Undirected graph from an edge list over labels "a".."z".
SocialGraph undirected(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges);

struct RandomGraphSpec {
    std::size_t nodes = 5;
    bool directed = true;
    bool weighted = false;
    double tie_probability = 0.4;
};

SocialGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);

/// Corpus of mixed directed/undirected, weighted/unweighted graphs with 1..max_nodes nodes.
std::vector<SocialGraph> oracle_corpus(std::uint64_t seed, std::size_t count, std::size_t max_nodes);

}  // namespace peerlens::fixtures
