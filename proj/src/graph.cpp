#include "peerlens/graph.hpp"

#include <algorithm>
#include <sstream>

namespace peerlens {

namespace {

void insert_sorted(std::vector<NodeId>& list, NodeId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
}

bool in_vocabulary(const std::vector<std::string_view>& vocab, std::string_view key) {
    return std::find(vocab.begin(), vocab.end(), key) != vocab.end();
}

SocialGraph copy_nodes(const SocialGraph& g, std::string name, Directedness d, Weighting w) {
    SocialGraph out(std::move(name), d, w);
    for (NodeId v = 0; v < g.node_count(); ++v) out.add_node(g.label(v), g.attributes(v));
    return out;
}

}  // namespace

std::string to_string(const AttributeValue& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, double>) {
                std::ostringstream os;
                os << v;
                return os.str();
            } else {
                return std::to_string(v);
            }
        },
        value);
}

SocialGraph::SocialGraph(std::string name, Directedness directedness, Weighting weighting)
    : name_(std::move(name)),
      directed_(directedness == Directedness::Directed),
      weighted_(weighting == Weighting::Weighted) {}

NodeRef SocialGraph::add_node(std::string label, AttributeMap attrs) {
    if (label.empty()) throw GraphError("node label must not be empty");
    if (find(label)) throw GraphError("duplicate node label '" + label + "'");
    const auto id = static_cast<NodeId>(labels_.size());
    labels_.push_back(label);
    attrs_.push_back(std::move(attrs));
    node_annotations_.emplace_back();
    out_.emplace_back();
    in_.emplace_back();
    return NodeRef{id, std::move(label)};
}

void SocialGraph::check_node(NodeId v) const {
    if (!contains(v)) throw GraphError("unknown node id " + std::to_string(v));
}

std::pair<NodeId, NodeId> SocialGraph::key(NodeId src, NodeId dst) const {
    if (directed_) return {src, dst};
    return {std::min(src, dst), std::max(src, dst)};
}

void SocialGraph::add_tie(NodeId src, NodeId dst, std::optional<int> weight) {
    check_node(src);
    check_node(dst);
    if (src == dst) throw GraphError("self-tie on node '" + labels_[src] + "'");
    if (weighted_ && !weight) throw GraphError("weighted graph requires a tie weight");
    if (!weighted_ && weight) throw GraphError("unweighted graph does not accept tie weights");
    if (weight && (*weight < kMinTieWeight || *weight > kMaxTieWeight)) {
        throw GraphError("tie weight " + std::to_string(*weight) + " outside 1..5");
    }
    ties_[key(src, dst)] = weight;
    insert_sorted(out_[src], dst);
    insert_sorted(in_[dst], src);
    if (!directed_) {
        insert_sorted(out_[dst], src);
        insert_sorted(in_[src], dst);
    }
}

const std::string& SocialGraph::label(NodeId v) const {
    check_node(v);
    return labels_[v];
}

std::optional<NodeId> SocialGraph::find(std::string_view label) const {
    for (NodeId v = 0; v < labels_.size(); ++v) {
        if (labels_[v] == label) return v;
    }
    return std::nullopt;
}

const AttributeMap& SocialGraph::attributes(NodeId v) const {
    check_node(v);
    return attrs_[v];
}

void SocialGraph::set_attribute(NodeId v, std::string key, AttributeValue value) {
    check_node(v);
    attrs_[v].insert_or_assign(std::move(key), std::move(value));
}

std::optional<AttributeValue> SocialGraph::attribute(NodeId v, std::string_view key) const {
    const auto& attrs = attributes(v);
    auto it = attrs.find(key);
    if (it == attrs.end()) return std::nullopt;
    return it->second;
}

bool SocialGraph::has_tie(NodeId src, NodeId dst) const {
    if (!contains(src) || !contains(dst) || src == dst) return false;
    return ties_.count(key(src, dst)) != 0;
}

std::optional<int> SocialGraph::weight(NodeId src, NodeId dst) const {
    if (!contains(src) || !contains(dst) || src == dst) return std::nullopt;
    auto it = ties_.find(key(src, dst));
    if (it == ties_.end()) return std::nullopt;
    return it->second;
}

std::vector<Tie> SocialGraph::ties() const {
    std::vector<Tie> out;
    out.reserve(ties_.size());
    for (const auto& [pair, w] : ties_) out.push_back(Tie{pair.first, pair.second, w});
    return out;
}

const std::vector<NodeId>& SocialGraph::successors(NodeId v) const {
    check_node(v);
    return out_[v];
}

const std::vector<NodeId>& SocialGraph::predecessors(NodeId v) const {
    check_node(v);
    return in_[v];
}

const AnnotationMap& SocialGraph::node_annotations(NodeId v) const {
    check_node(v);
    return node_annotations_[v];
}

void SocialGraph::set_graph_annotation(std::string_view key, double value) {
    if (!in_vocabulary(graph_metric_names(), key)) {
        throw GraphError("'" + std::string(key) + "' is not a graph metric");
    }
    graph_annotations_.insert_or_assign(std::string(key), value);
}

void SocialGraph::set_node_annotation(NodeId v, std::string_view key, double value) {
    check_node(v);
    if (!in_vocabulary(node_metric_names(), key)) {
        throw GraphError("'" + std::string(key) + "' is not a node metric");
    }
    node_annotations_[v].insert_or_assign(std::string(key), value);
}

SocialGraph filter_min_weight(const SocialGraph& g, int min_weight) {
    if (!g.weighted()) throw GraphError("filter_min_weight requires a weighted graph");
    if (min_weight < kMinTieWeight || min_weight > kMaxTieWeight) {
        throw GraphError("minimum weight outside 1..5");
    }
    auto out = copy_nodes(g, g.name(), g.directed() ? Directedness::Directed : Directedness::Undirected,
                          Weighting::Weighted);
    for (const auto& t : g.ties()) {
        if (*t.weight >= min_weight) out.add_tie(t.src, t.dst, t.weight);
    }
    return out;
}

SocialGraph mutual_projection(const SocialGraph& g, int min_weight) {
    if (!g.directed() || !g.weighted()) {
        throw GraphError("mutual_projection requires a directed weighted graph");
    }
    if (min_weight < kMinTieWeight || min_weight > kMaxTieWeight) {
        throw GraphError("minimum weight outside 1..5");
    }
    auto out = copy_nodes(g, g.name(), Directedness::Undirected, Weighting::Unweighted);
    for (const auto& t : g.ties()) {
        if (t.src > t.dst || *t.weight < min_weight) continue;
        auto back = g.weight(t.dst, t.src);
        if (back && *back >= min_weight) out.add_tie(t.src, t.dst);
    }
    return out;
}

SocialGraph undirected_projection(const SocialGraph& g) {
    auto out = copy_nodes(g, g.name(), Directedness::Undirected, Weighting::Unweighted);
    for (const auto& t : g.ties()) out.add_tie(t.src, t.dst);
    return out;
}

const std::vector<std::string_view>& graph_metric_names() {
    static const std::vector<std::string_view> names{
        "density", "diameter", "unreachable_pairs", "component_count", "community_count", "modularity"};
    return names;
}

const std::vector<std::string_view>& node_metric_names() {
    static const std::vector<std::string_view> names{"in_degree",     "out_degree",    "total_degree", "reach",
                                                     "closeness_out", "closeness_in", "betweenness"};
    return names;
}

}  // namespace peerlens
