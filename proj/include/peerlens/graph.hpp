#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace peerlens {

/// Dense node handle. Ids are assigned in insertion order starting at 0.
using NodeId = std::uint32_t;

using AttributeValue = std::variant<std::int64_t, double, std::string>;
using AttributeMap = std::map<std::string, AttributeValue, std::less<>>;
using AnnotationMap = std::map<std::string, double, std::less<>>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Directedness { Directed, Undirected };
enum class Weighting { Weighted, Unweighted };

/// Tie strengths of the contact question: 1 = "never together" .. 5 = "always together".
inline constexpr int kMinTieWeight = 1;
inline constexpr int kMaxTieWeight = 5;

struct NodeRef {
    NodeId id = 0;
    std::string label;
};

struct Tie {
    NodeId src = 0;
    NodeId dst = 0;
    std::optional<int> weight;

    friend bool operator==(const Tie&, const Tie&) = default;
};

std::string to_string(const AttributeValue& value);

/// Directed or undirected, optionally weighted graph of persons.
///
/// Ties are unique per ordered pair (directed) or per unordered pair
/// (undirected, stored with src < dst). Self-ties are rejected.
class SocialGraph {
public:
    SocialGraph(std::string name, Directedness directedness, Weighting weighting);

    NodeRef add_node(std::string label, AttributeMap attrs = {});

    /// Adds or replaces the tie src->dst. Weight is required iff the graph is weighted.
    void add_tie(NodeId src, NodeId dst, std::optional<int> weight = std::nullopt);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    [[nodiscard]] bool directed() const noexcept { return directed_; }
    [[nodiscard]] bool weighted() const noexcept { return weighted_; }

    [[nodiscard]] std::size_t node_count() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t tie_count() const noexcept { return ties_.size(); }
    [[nodiscard]] bool contains(NodeId v) const noexcept { return v < labels_.size(); }
    [[nodiscard]] const std::string& label(NodeId v) const;
    [[nodiscard]] std::optional<NodeId> find(std::string_view label) const;

    [[nodiscard]] const AttributeMap& attributes(NodeId v) const;
    void set_attribute(NodeId v, std::string key, AttributeValue value);
    [[nodiscard]] std::optional<AttributeValue> attribute(NodeId v, std::string_view key) const;

    /// True if src->dst exists; for undirected graphs the order is irrelevant.
    [[nodiscard]] bool has_tie(NodeId src, NodeId dst) const;
    [[nodiscard]] std::optional<int> weight(NodeId src, NodeId dst) const;

    /// Ties in ascending (src, dst) order.
    [[nodiscard]] std::vector<Tie> ties() const;

    /// Out-neighbors (directed) or neighbors (undirected), ascending.
    [[nodiscard]] const std::vector<NodeId>& successors(NodeId v) const;
    /// In-neighbors (directed) or neighbors (undirected), ascending.
    [[nodiscard]] const std::vector<NodeId>& predecessors(NodeId v) const;

    [[nodiscard]] const AnnotationMap& graph_annotations() const noexcept { return graph_annotations_; }
    [[nodiscard]] const AnnotationMap& node_annotations(NodeId v) const;
    void set_graph_annotation(std::string_view key, double value);
    void set_node_annotation(NodeId v, std::string_view key, double value);

private:
    void check_node(NodeId v) const;
    [[nodiscard]] std::pair<NodeId, NodeId> key(NodeId src, NodeId dst) const;

    std::string name_;
    bool directed_;
    bool weighted_;
    std::vector<std::string> labels_;
    std::vector<AttributeMap> attrs_;
    std::vector<AnnotationMap> node_annotations_;
    AnnotationMap graph_annotations_;
    std::map<std::pair<NodeId, NodeId>, std::optional<int>> ties_;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
};

/// Same node set, keeping ties with weight >= min_weight.
SocialGraph filter_min_weight(const SocialGraph& g, int min_weight);

/// Undirected, unweighted graph with {u,v} iff u->v and v->u both have weight >= min_weight.
SocialGraph mutual_projection(const SocialGraph& g, int min_weight);

/// Undirected, unweighted graph with {u,v} iff u->v or v->u exists.
SocialGraph undirected_projection(const SocialGraph& g);

/// Fixed annotation vocabulary written by the metrics module.
const std::vector<std::string_view>& graph_metric_names();
const std::vector<std::string_view>& node_metric_names();

}  // namespace peerlens
