#include "peerlens/metrics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace peerlens::sna {

namespace {

constexpr double kTieTolerance = 1e-9;

using Adjacency = std::vector<std::vector<NodeId>>;

void require_node(const SocialGraph& g, NodeId v) {
    if (!g.contains(v)) throw MetricError("unknown node id " + std::to_string(v));
}

void require_within_limit(const SocialGraph& g, const EnumerationLimits& limits) {
    if (g.node_count() > limits.max_nodes) {
        throw MetricError("subgroup enumeration refused: " + std::to_string(g.node_count()) +
                          " nodes exceeds limit of " + std::to_string(limits.max_nodes));
    }
}

void require_undirected(const SocialGraph& g, const char* op) {
    if (g.directed()) throw MetricError(std::string(op) + " requires an undirected graph");
}

std::vector<std::size_t> bfs_hops(const Adjacency& adj, NodeId source) {
    constexpr auto kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(adj.size(), kUnseen);
    std::deque<NodeId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : adj[u]) {
            if (dist[w] == kUnseen) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Adjacency successor_lists(const SocialGraph& g) {
    Adjacency adj(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) adj[v] = g.successors(v);
    return adj;
}

Adjacency neighbor_lists(const SocialGraph& g) {
    Adjacency adj(g.node_count());
    for (const auto& t : g.ties()) {
        adj[t.src].push_back(t.dst);
        adj[t.dst].push_back(t.src);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

std::vector<std::vector<NodeId>> connected_blocks(const Adjacency& adj) {
    std::vector<std::vector<NodeId>> blocks;
    std::vector<bool> seen(adj.size(), false);
    for (NodeId s = 0; s < adj.size(); ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> block;
        std::deque<NodeId> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            block.push_back(u);
            for (auto w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

/// Single-source shortest-path DAG used by the accumulation algorithms.
struct ShortestPathDag {
    std::vector<NodeId> order;  // non-decreasing distance from the source
    std::vector<std::vector<NodeId>> preds;
    std::vector<double> sigma;
};

ShortestPathDag shortest_path_dag(const Adjacency& adj, NodeId source) {
    const auto n = adj.size();
    ShortestPathDag dag;
    dag.preds.assign(n, {});
    dag.sigma.assign(n, 0.0);
    std::vector<long> dist(n, -1);
    dist[source] = 0;
    dag.sigma[source] = 1.0;
    std::deque<NodeId> queue{source};
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        dag.order.push_back(u);
        for (auto w : adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
            if (dist[w] == dist[u] + 1) {
                dag.sigma[w] += dag.sigma[u];
                dag.preds[w].push_back(u);
            }
        }
    }
    return dag;
}

std::vector<double> accumulate_betweenness(const Adjacency& adj) {
    const auto n = adj.size();
    std::vector<double> score(n, 0.0);
    for (NodeId s = 0; s < n; ++s) {
        auto dag = shortest_path_dag(adj, s);
        std::vector<double> delta(n, 0.0);
        for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
            auto w = *it;
            for (auto v : dag.preds[w]) delta[v] += dag.sigma[v] / dag.sigma[w] * (1.0 + delta[w]);
            if (w != s) score[w] += delta[w];
        }
    }
    return score;
}

/// Adds the edge dependencies of the geodesics leaving each source to `score`, a dense
/// n*n matrix indexed by (min, max) endpoint.
void accumulate_edge_betweenness(const Adjacency& adj, const std::vector<NodeId>& sources, std::vector<double>& score) {
    const auto n = adj.size();
    std::vector<long> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<NodeId> order;
    order.reserve(n);
    for (auto s : sources) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.assign(1, s);
        dist[s] = 0;
        sigma[s] = 1.0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const auto u = order[head];
            for (auto w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
            }
        }
        // Each (v, w) pair contributes once per source, so scanning neighbors instead of a
        // predecessor list leaves every floating-point sum unchanged.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto w = *it;
            for (auto v : adj[w]) {
                if (dist[v] != dist[w] - 1) continue;
                const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                score[std::min(v, w) * n + std::max(v, w)] += c;
                delta[v] += c;
            }
        }
    }
}

/// Bron-Kerbosch with Tomita pivoting over a symmetric adjacency matrix.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<NodeId>& r, std::vector<NodeId> p,
                   std::vector<NodeId> x, std::size_t min_size, std::vector<std::vector<NodeId>>& out) {
    if (p.empty() && x.empty()) {
        if (r.size() >= min_size) {
            auto clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
        }
        return;
    }
    if (r.size() + p.size() < min_size) return;

    NodeId pivot = !p.empty() ? p.front() : x.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (auto u : *set) {
            std::size_t count = 0;
            for (auto v : p) count += adj[u][v] ? 1 : 0;
            if (count > best || (count == best && u < pivot)) {
                best = count;
                pivot = u;
            }
        }
    }

    std::vector<NodeId> branch;
    for (auto v : p) {
        if (!adj[pivot][v]) branch.push_back(v);
    }
    for (auto v : branch) {
        std::vector<NodeId> p2, x2;
        for (auto u : p) {
            if (adj[v][u]) p2.push_back(u);
        }
        for (auto u : x) {
            if (adj[v][u]) x2.push_back(u);
        }
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(p2), std::move(x2), min_size, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

std::vector<std::vector<NodeId>> maximal_cliques(const std::vector<std::vector<char>>& adj, std::size_t min_size) {
    std::vector<NodeId> r;
    std::vector<NodeId> p(adj.size());
    for (NodeId v = 0; v < adj.size(); ++v) p[v] = v;
    std::vector<std::vector<NodeId>> out;
    bron_kerbosch(adj, r, std::move(p), {}, min_size, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<char>> adjacency_matrix(const SocialGraph& g) {
    std::vector<std::vector<char>> m(g.node_count(), std::vector<char>(g.node_count(), 0));
    for (const auto& t : g.ties()) {
        m[t.src][t.dst] = 1;
        m[t.dst][t.src] = 1;
    }
    return m;
}

std::vector<GroupStructure> to_groups(std::vector<std::vector<NodeId>> sets, GroupKind kind,
                                      std::optional<int> parameter = std::nullopt) {
    std::sort(sets.begin(), sets.end());
    std::vector<GroupStructure> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.push_back(GroupStructure{kind, std::move(s), parameter});
    return out;
}

/// Maximal k-plex enumeration. The k-plex property is hereditary, so the
/// candidate/excluded scheme of Bron-Kerbosch carries over with a membership test.
class KPlexEnumerator {
public:
    KPlexEnumerator(std::vector<std::vector<char>> adj, std::size_t k, std::size_t min_size)
        : adj_(std::move(adj)), k_(k), min_size_(min_size) {}

    std::vector<std::vector<NodeId>> run() {
        std::vector<NodeId> p(adj_.size());
        for (NodeId v = 0; v < adj_.size(); ++v) p[v] = v;
        std::vector<NodeId> r;
        recurse(r, p, {});
        return std::move(out_);
    }

private:
    bool extends(const std::vector<NodeId>& r, NodeId u) const {
        const auto size = r.size() + 1;
        std::size_t u_links = 0;
        for (auto w : r) {
            u_links += adj_[u][w] ? 1 : 0;
            std::size_t w_links = adj_[w][u] ? 1 : 0;
            for (auto z : r) w_links += adj_[w][z] ? 1 : 0;
            if (w_links + k_ < size) return false;
        }
        return u_links + k_ >= size;
    }

    void recurse(std::vector<NodeId>& r, std::vector<NodeId> p, std::vector<NodeId> x) {
        if (p.empty() && x.empty()) {
            if (r.size() >= min_size_) {
                auto s = r;
                std::sort(s.begin(), s.end());
                out_.push_back(std::move(s));
            }
            return;
        }
        while (!p.empty()) {
            if (r.size() + p.size() < min_size_) return;
            const auto v = p.front();
            p.erase(p.begin());
            r.push_back(v);
            std::vector<NodeId> p2, x2;
            for (auto u : p) {
                if (extends(r, u)) p2.push_back(u);
            }
            for (auto u : x) {
                if (extends(r, u)) x2.push_back(u);
            }
            recurse(r, std::move(p2), std::move(x2));
            r.pop_back();
            x.push_back(v);
        }
    }

    std::vector<std::vector<char>> adj_;
    std::size_t k_;
    std::size_t min_size_;
    std::vector<std::vector<NodeId>> out_;
};

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), cells_(n * n, -1) {
    for (std::size_t v = 0; v < n; ++v) cells_[v * n + v] = 0;
}

std::optional<std::size_t> DistanceMatrix::at(NodeId from, NodeId to) const {
    if (from >= n_ || to >= n_) throw MetricError("distance lookup outside matrix");
    const auto d = cells_[static_cast<std::size_t>(from) * n_ + to];
    if (d < 0) return std::nullopt;
    return static_cast<std::size_t>(d);
}

void DistanceMatrix::set(NodeId from, NodeId to, std::size_t hops) {
    cells_[static_cast<std::size_t>(from) * n_ + to] = static_cast<long>(hops);
}

double density(const SocialGraph& g) {
    const auto n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) throw MetricError("density is undefined for fewer than two nodes");
    const double possible = g.directed() ? n * (n - 1) : n * (n - 1) / 2.0;
    return static_cast<double>(g.tie_count()) / possible;
}

DistanceMatrix geodesic_matrix(const SocialGraph& g) {
    DistanceMatrix m(g.node_count());
    const auto adj = successor_lists(g);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        const auto dist = bfs_hops(adj, s);
        for (NodeId t = 0; t < g.node_count(); ++t) {
            if (dist[t] != static_cast<std::size_t>(-1)) m.set(s, t, dist[t]);
        }
    }
    return m;
}

namespace {

DiameterResult diameter_of(const DistanceMatrix& m) {
    if (m.size() < 2) throw MetricError("diameter is undefined for fewer than two nodes");
    DiameterResult r;
    for (NodeId u = 0; u < m.size(); ++u) {
        for (NodeId v = 0; v < m.size(); ++v) {
            if (u == v) continue;
            if (auto d = m.at(u, v)) {
                r.diameter = std::max(r.diameter, *d);
            } else {
                ++r.unreachable_pairs;
            }
        }
    }
    return r;
}

double closeness_of(const DistanceMatrix& m, NodeId v, Direction direction) {
    const auto n = m.size();
    if (n < 2) throw MetricError("closeness is undefined for fewer than two nodes");
    std::size_t reached = 0;
    std::size_t total = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (u == v) continue;
        auto d = direction == Direction::Out ? m.at(v, u) : m.at(u, v);
        if (d) {
            ++reached;
            total += *d;
        }
    }
    if (reached == 0) return 0.0;
    const double r = static_cast<double>(reached);
    return (r / static_cast<double>(n - 1)) * (r / static_cast<double>(total));
}

std::size_t n_degree_of(const DistanceMatrix& m, NodeId v, int n) {
    if (n != 1 && n != 2) throw MetricError("n-degree is only defined for n = 1 or n = 2");
    std::size_t count = 0;
    for (NodeId u = 0; u < m.size(); ++u) {
        if (u == v) continue;
        auto d = m.at(v, u);
        if (d && *d <= static_cast<std::size_t>(n)) ++count;
    }
    return count;
}

}  // namespace

DiameterResult diameter(const SocialGraph& g) { return diameter_of(geodesic_matrix(g)); }

Degrees degrees(const SocialGraph& g, NodeId v) {
    require_node(g, v);
    const auto& out = g.successors(v);
    const auto& in = g.predecessors(v);
    std::vector<NodeId> all;
    std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(all));
    return Degrees{in.size(), out.size(), all.size()};
}

std::size_t n_degree(const SocialGraph& g, NodeId v, int n) {
    require_node(g, v);
    return n_degree_of(geodesic_matrix(g), v, n);
}

double closeness(const SocialGraph& g, NodeId v, Direction direction) {
    require_node(g, v);
    return closeness_of(geodesic_matrix(g), v, direction);
}

std::vector<double> betweenness_all(const SocialGraph& g) {
    auto score = accumulate_betweenness(successor_lists(g));
    if (!g.directed()) {
        for (auto& s : score) s /= 2.0;
    }
    return score;
}

double betweenness(const SocialGraph& g, NodeId v) {
    require_node(g, v);
    return betweenness_all(g)[v];
}

double normalized_betweenness(const SocialGraph& g, NodeId v) {
    const double raw = betweenness(g, v);
    const auto n = static_cast<double>(g.node_count());
    if (g.node_count() < 3) return 0.0;
    double pairs = (n - 1) * (n - 2);
    if (!g.directed()) pairs /= 2.0;
    return raw / pairs;
}

std::vector<GroupStructure> components(const SocialGraph& g) {
    return to_groups(connected_blocks(neighbor_lists(g)), GroupKind::Component);
}

std::vector<GroupStructure> cliques(const SocialGraph& g, std::size_t min_size, EnumerationLimits limits) {
    require_undirected(g, "clique enumeration");
    if (min_size < 3) throw MetricError("clique minimum size must be at least 3");
    require_within_limit(g, limits);
    return to_groups(maximal_cliques(adjacency_matrix(g), min_size), GroupKind::Clique);
}

std::vector<GroupStructure> n_cliques(const SocialGraph& g, int n, std::size_t min_size,
                                      EnumerationLimits limits) {
    require_undirected(g, "n-clique enumeration");
    if (n < 1) throw MetricError("n-clique distance must be at least 1");
    if (min_size < 2) throw MetricError("n-clique minimum size must be at least 2");
    require_within_limit(g, limits);
    const auto dist = geodesic_matrix(g);
    std::vector<std::vector<char>> power(g.node_count(), std::vector<char>(g.node_count(), 0));
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            auto d = dist.at(u, v);
            power[u][v] = (u != v && d && *d <= static_cast<std::size_t>(n)) ? 1 : 0;
        }
    }
    return to_groups(maximal_cliques(power, min_size), GroupKind::NClique, n);
}

std::vector<GroupStructure> k_plexes(const SocialGraph& g, int k, std::size_t min_size, EnumerationLimits limits) {
    require_undirected(g, "k-plex enumeration");
    if (k < 1) throw MetricError("k-plex k must be at least 1");
    if (min_size <= static_cast<std::size_t>(k)) throw MetricError("k-plex minimum size must exceed k");
    require_within_limit(g, limits);
    KPlexEnumerator enumerator(adjacency_matrix(g), static_cast<std::size_t>(k), min_size);
    return to_groups(enumerator.run(), GroupKind::KPlex, k);
}

std::vector<GroupStructure> triads(const SocialGraph& g) {
    if (!g.directed()) throw MetricError("triads are defined on directed graphs");
    std::vector<std::vector<NodeId>> found;
    const auto n = static_cast<NodeId>(g.node_count());
    for (NodeId a = 0; a < n; ++a) {
        for (auto b : g.successors(a)) {
            for (auto c : g.successors(b)) {
                if (c == a || !g.has_tie(c, a)) continue;
                // Each cycle is discovered once per rotation; keep the one starting at its minimum.
                if (a < b && a < c) {
                    std::vector<NodeId> triple{a, b, c};
                    std::sort(triple.begin(), triple.end());
                    found.push_back(std::move(triple));
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return to_groups(std::move(found), GroupKind::Triad);
}

double modularity(const SocialGraph& g, const std::vector<std::vector<NodeId>>& partition) {
    const auto adj = neighbor_lists(g);
    std::size_t m2 = 0;
    for (const auto& list : adj) m2 += list.size();
    if (m2 == 0) return 0.0;
    std::vector<long> block_of(g.node_count(), -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        for (auto v : partition[b]) {
            if (v >= g.node_count() || block_of[v] >= 0) throw MetricError("modularity requires a partition");
            block_of[v] = static_cast<long>(b);
        }
    }
    std::vector<double> internal(partition.size(), 0.0);
    std::vector<double> degree_sum(partition.size(), 0.0);
    for (NodeId u = 0; u < adj.size(); ++u) {
        if (block_of[u] < 0) throw MetricError("modularity requires a partition");
        degree_sum[block_of[u]] += static_cast<double>(adj[u].size());
        for (auto w : adj[u]) {
            if (block_of[w] == block_of[u]) internal[block_of[u]] += 1.0;
        }
    }
    const double two_m = static_cast<double>(m2);
    double q = 0.0;
    for (std::size_t b = 0; b < partition.size(); ++b) {
        // internal counts each edge twice
        q += internal[b] / two_m - (degree_sum[b] / two_m) * (degree_sum[b] / two_m);
    }
    return q;
}

CommunityResult communities(const SocialGraph& g) {
    CommunityResult result;
    if (g.node_count() == 0) return result;

    auto adj = neighbor_lists(g);
    auto blocks = connected_blocks(adj);
    auto best_blocks = blocks;
    double best_q = modularity(g, blocks);
    std::size_t block_count = blocks.size();

    const auto n = adj.size();
    std::vector<double> score(n * n, 0.0);
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), NodeId{0});
    accumulate_edge_betweenness(adj, all, score);

    while (true) {
        bool any = false;
        double top = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            for (auto w : adj[u]) {
                if (u < w) {
                    any = true;
                    top = std::max(top, score[u * n + w]);
                }
            }
        }
        if (!any) break;
        std::optional<std::pair<NodeId, NodeId>> cut;
        for (NodeId u = 0; u < n && !cut; ++u) {
            for (auto w : adj[u]) {
                if (u < w && score[u * n + w] >= top - kTieTolerance) {
                    cut = std::pair{u, w};
                    break;
                }
            }
        }
        auto& a = adj[cut->first];
        auto& b = adj[cut->second];
        a.erase(std::find(a.begin(), a.end(), cut->second));
        b.erase(std::find(b.begin(), b.end(), cut->first));
        result.removal_order.push_back(*cut);

        blocks = connected_blocks(adj);
        // Only geodesics inside the component that lost the edge change.
        std::vector<NodeId> affected;
        for (const auto& block : blocks) {
            if (std::binary_search(block.begin(), block.end(), cut->first) ||
                std::binary_search(block.begin(), block.end(), cut->second)) {
                affected.insert(affected.end(), block.begin(), block.end());
            }
        }
        std::sort(affected.begin(), affected.end());
        for (auto u : affected) {
            for (auto w : affected) score[u * n + w] = 0.0;
        }
        accumulate_edge_betweenness(adj, affected, score);

        if (blocks.size() == block_count) continue;
        block_count = blocks.size();
        const double q = modularity(g, blocks);
        if (q > best_q + kTieTolerance) {
            best_q = q;
            best_blocks = blocks;
        }
    }

    result.communities = to_groups(std::move(best_blocks), GroupKind::Community);
    result.modularity = best_q;
    return result;
}

GraphAnalysis::GraphAnalysis(const SocialGraph& g)
    : g_(g),
      distances_(geodesic_matrix(g)),
      betweenness_(betweenness_all(g)),
      component_count_(components(g).size()),
      communities_(communities(g)) {}

NodeMetrics GraphAnalysis::node(NodeId v) const {
    require_node(g_, v);
    const auto deg = degrees(g_, v);
    NodeMetrics m;
    m.in_degree = deg.in;
    m.out_degree = deg.out;
    m.total_degree = deg.total;
    m.reach = n_degree_of(distances_, v, 2);
    if (g_.node_count() >= 2) {
        m.closeness_out = closeness_of(distances_, v, Direction::Out);
        m.closeness_in = closeness_of(distances_, v, Direction::In);
    }
    m.betweenness = betweenness_[v];
    return m;
}

GraphMetrics GraphAnalysis::graph() const {
    GraphMetrics m;
    if (g_.node_count() >= 2) {
        m.density = density(g_);
        const auto d = diameter_of(distances_);
        m.diameter = d.diameter;
        m.unreachable_pairs = d.unreachable_pairs;
    }
    m.component_count = component_count_;
    m.community_count = communities_.communities.size();
    m.modularity = communities_.modularity;
    return m;
}

SocialGraph annotate(const SocialGraph& g) {
    SocialGraph out = g;
    const GraphAnalysis analysis(g);
    const auto gm = analysis.graph();
    if (g.node_count() >= 2) {
        out.set_graph_annotation("density", gm.density);
        out.set_graph_annotation("diameter", static_cast<double>(gm.diameter));
        out.set_graph_annotation("unreachable_pairs", static_cast<double>(gm.unreachable_pairs));
    }
    out.set_graph_annotation("component_count", static_cast<double>(gm.component_count));
    out.set_graph_annotation("community_count", static_cast<double>(gm.community_count));
    out.set_graph_annotation("modularity", gm.modularity);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto nm = analysis.node(v);
        out.set_node_annotation(v, "in_degree", static_cast<double>(nm.in_degree));
        out.set_node_annotation(v, "out_degree", static_cast<double>(nm.out_degree));
        out.set_node_annotation(v, "total_degree", static_cast<double>(nm.total_degree));
        out.set_node_annotation(v, "reach", static_cast<double>(nm.reach));
        out.set_node_annotation(v, "closeness_out", nm.closeness_out);
        out.set_node_annotation(v, "closeness_in", nm.closeness_in);
        out.set_node_annotation(v, "betweenness", nm.betweenness);
    }
    return out;
}

const char* to_string(GroupKind kind) {
    switch (kind) {
        case GroupKind::Component: return "component";
        case GroupKind::Clique: return "clique";
        case GroupKind::NClique: return "n_clique";
        case GroupKind::KPlex: return "k_plex";
        case GroupKind::Triad: return "triad";
        case GroupKind::Community: return "community";
    }
    return "unknown";
}

}  // namespace peerlens::sna
