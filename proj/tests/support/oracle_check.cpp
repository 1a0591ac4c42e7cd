#include "support/oracle_check.hpp"

#include <cmath>
#include <sstream>

#include "peerlens/metrics.hpp"
#include "support/brute_force.hpp"

namespace peerlens::fixtures {

namespace {

std::vector<std::vector<NodeId>> members(const std::vector<sna::GroupStructure>& groups) {
    std::vector<std::vector<NodeId>> out;
    for (const auto& g : groups) out.push_back(g.members);
    return out;
}

}  // namespace

std::vector<std::string> oracle_mismatches(const SocialGraph& g, double tolerance) {
    std::vector<std::string> issues;
    auto report = [&](const std::string& what) {
        std::ostringstream os;
        os << (g.directed() ? "directed" : "undirected") << " n=" << g.node_count() << " m=" << g.tie_count()
           << ": " << what;
        issues.push_back(os.str());
    };
    const oracle::BruteForce bf(g);
    const auto n = static_cast<NodeId>(g.node_count());

    if (n >= 2) {
        if (std::abs(sna::density(g) - bf.density()->value()) > tolerance) report("density");
        const auto d = sna::diameter(g);
        if (std::pair{d.diameter, d.unreachable_pairs} != bf.diameter()) report("diameter");
    }

    const auto dist = sna::geodesic_matrix(g);
    const auto between = sna::betweenness_all(g);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (dist.at(u, v) != bf.distance(u, v)) report("geodesic " + std::to_string(u) + "->" + std::to_string(v));
        }
        const auto deg = sna::degrees(g, u);
        if (std::tuple{deg.in, deg.out, deg.total} != bf.degrees(u)) report("degrees of " + std::to_string(u));
        if (sna::n_degree(g, u, 1) != bf.n_degree(u, 1)) report("1-degree of " + std::to_string(u));
        if (sna::n_degree(g, u, 2) != bf.n_degree(u, 2)) report("reach of " + std::to_string(u));
        if (n >= 2) {
            if (std::abs(sna::closeness(g, u, sna::Direction::Out) - bf.closeness(u, true).value()) > tolerance) {
                report("closeness_out of " + std::to_string(u));
            }
            if (std::abs(sna::closeness(g, u, sna::Direction::In) - bf.closeness(u, false).value()) > tolerance) {
                report("closeness_in of " + std::to_string(u));
            }
        }
        if (std::abs(between[u] - bf.betweenness(u).value()) > tolerance) {
            report("betweenness of " + std::to_string(u));
        }
    }

    if (members(sna::components(g)) != bf.components()) report("components");

    if (g.directed()) {
        if (members(sna::triads(g)) != bf.triads()) report("triads");
        // Subgroup measures run on the symmetric projection, as callers do for directed data.
        const auto projected = undirected_projection(g);
        const oracle::BruteForce pbf(projected);
        if (members(sna::cliques(projected, 3)) != pbf.cliques(3)) report("cliques (projected)");
        if (members(sna::n_cliques(projected, 2, 2)) != pbf.n_cliques(2, 2)) report("2-cliques (projected)");
        if (members(sna::k_plexes(projected, 2, 3)) != pbf.k_plexes(2, 3)) report("2-plexes (projected)");
    } else {
        for (std::size_t min_size : {3u, 4u}) {
            if (members(sna::cliques(g, min_size)) != bf.cliques(min_size)) report("cliques");
        }
        for (int nn : {1, 2, 3}) {
            for (std::size_t min_size : {2u, 3u}) {
                if (members(sna::n_cliques(g, nn, min_size)) != bf.n_cliques(nn, min_size)) {
                    report(std::to_string(nn) + "-cliques");
                }
            }
        }
        for (int k : {1, 2, 3}) {
            const auto min_size = static_cast<std::size_t>(k) + 1;
            if (members(sna::k_plexes(g, k, min_size)) != bf.k_plexes(k, min_size)) {
                report(std::to_string(k) + "-plexes");
            }
        }
    }
    return issues;
}

}  // namespace peerlens::fixtures
