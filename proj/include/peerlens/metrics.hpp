#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "peerlens/graph.hpp"

namespace peerlens::sna {

class MetricError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Direction { Out, In };

struct Degrees {
    std::size_t in = 0;
    std::size_t out = 0;
    /// Distinct neighbors regardless of direction.
    std::size_t total = 0;

    friend bool operator==(const Degrees&, const Degrees&) = default;
};

struct NodeMetrics {
    std::size_t in_degree = 0;
    std::size_t out_degree = 0;
    std::size_t total_degree = 0;
    std::size_t reach = 0;
    double closeness_out = 0.0;
    double closeness_in = 0.0;
    double betweenness = 0.0;
};

struct GraphMetrics {
    double density = 0.0;
    std::size_t diameter = 0;
    std::size_t unreachable_pairs = 0;
    std::size_t component_count = 0;
    std::size_t community_count = 0;
    double modularity = 0.0;
};

struct DiameterResult {
    std::size_t diameter = 0;
    std::size_t unreachable_pairs = 0;

    friend bool operator==(const DiameterResult&, const DiameterResult&) = default;
};

enum class GroupKind { Component, Clique, NClique, KPlex, Triad, Community };

struct GroupStructure {
    GroupKind kind = GroupKind::Component;
    std::vector<NodeId> members;  // ascending
    std::optional<int> parameter;
};

struct CommunityResult {
    std::vector<GroupStructure> communities;
    double modularity = 0.0;
    /// Edges {u,v} (u < v) in the order they were cut.
    std::vector<std::pair<NodeId, NodeId>> removal_order;
};

/// Guard against exponential subset enumeration on large graphs.
struct EnumerationLimits {
    std::size_t max_nodes = 128;
};

/// All-pairs hop distances. Absent entries are unreachable pairs.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::optional<std::size_t> at(NodeId from, NodeId to) const;
    void set(NodeId from, NodeId to, std::size_t hops);

private:
    std::size_t n_;
    std::vector<long> cells_;
};

double density(const SocialGraph& g);
DistanceMatrix geodesic_matrix(const SocialGraph& g);
DiameterResult diameter(const SocialGraph& g);
Degrees degrees(const SocialGraph& g, NodeId v);
/// Actors reachable in n or fewer hops (out-direction); n must be 1 or 2.
std::size_t n_degree(const SocialGraph& g, NodeId v, int n);
/// Component-adjusted closeness: (r / (n-1)) * (r / sum of distances), 0 when nothing is reachable.
double closeness(const SocialGraph& g, NodeId v, Direction direction);
/// Raw pair-dependency sum. Undirected graphs count each unordered pair once.
double betweenness(const SocialGraph& g, NodeId v);
std::vector<double> betweenness_all(const SocialGraph& g);
/// Raw betweenness divided by (n-1)(n-2), or by (n-1)(n-2)/2 when undirected.
double normalized_betweenness(const SocialGraph& g, NodeId v);

/// Weakly connected components.
std::vector<GroupStructure> components(const SocialGraph& g);
std::vector<GroupStructure> cliques(const SocialGraph& g, std::size_t min_size, EnumerationLimits limits = {});
/// Maximal sets whose pairwise full-graph distance is at most n.
std::vector<GroupStructure> n_cliques(const SocialGraph& g, int n, std::size_t min_size,
                                      EnumerationLimits limits = {});
/// Maximal sets in which each member is adjacent to at least |S| - k members.
std::vector<GroupStructure> k_plexes(const SocialGraph& g, int k, std::size_t min_size,
                                     EnumerationLimits limits = {});
/// Directed 3-cycles, each node triple once.
std::vector<GroupStructure> triads(const SocialGraph& g);

/// Newman modularity of a partition, evaluated on the undirected projection of g.
double modularity(const SocialGraph& g, const std::vector<std::vector<NodeId>>& partition);
/// Divisive edge-betweenness clustering; keeps the removal step with the highest modularity.
CommunityResult communities(const SocialGraph& g);

/// Precomputes distances and betweenness once; read-only afterwards.
class GraphAnalysis {
public:
    explicit GraphAnalysis(const SocialGraph& g);

    [[nodiscard]] const DistanceMatrix& distances() const noexcept { return distances_; }
    [[nodiscard]] NodeMetrics node(NodeId v) const;
    [[nodiscard]] GraphMetrics graph() const;
    [[nodiscard]] const CommunityResult& community_structure() const noexcept { return communities_; }

private:
    const SocialGraph& g_;
    DistanceMatrix distances_;
    std::vector<double> betweenness_;
    std::size_t component_count_ = 0;
    CommunityResult communities_;
};

/// Copy of g with graph- and node-level metric annotations. Density and diameter
/// are only written for graphs with at least two nodes.
SocialGraph annotate(const SocialGraph& g);

const char* to_string(GroupKind kind);

}  // namespace peerlens::sna
