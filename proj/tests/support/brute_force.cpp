#include "support/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace peerlens::oracle {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

BruteForce::BruteForce(const SocialGraph& g)
    : n_(g.node_count()),
      directed_(g.directed()),
      tie_count_(g.tie_count()),
      arc_(n_, std::vector<bool>(n_, false)) {
    for (const auto& t : g.ties()) {
        arc_[t.src][t.dst] = true;
        if (!directed_) arc_[t.dst][t.src] = true;
    }
}

bool BruteForce::arc(NodeId u, NodeId v) const { return arc_[u][v]; }
bool BruteForce::linked(NodeId u, NodeId v) const { return arc_[u][v] || arc_[v][u]; }

std::vector<NodeSet> BruteForce::simple_paths(NodeId s, NodeId t) const {
    std::vector<NodeSet> paths;
    NodeSet current{s};
    std::vector<bool> used(n_, false);
    used[s] = true;
    std::function<void(NodeId)> walk = [&](NodeId u) {
        if (u == t) {
            paths.push_back(current);
            return;
        }
        for (NodeId w = 0; w < n_; ++w) {
            if (!used[w] && arc(u, w)) {
                used[w] = true;
                current.push_back(w);
                walk(w);
                current.pop_back();
                used[w] = false;
            }
        }
    };
    walk(s);
    return paths;
}

std::optional<std::size_t> BruteForce::distance(NodeId s, NodeId t) const {
    if (s == t) return 0;
    std::optional<std::size_t> best;
    for (const auto& p : simple_paths(s, t)) {
        const auto hops = p.size() - 1;
        if (!best || hops < *best) best = hops;
    }
    return best;
}

std::optional<Rational> BruteForce::density() const {
    if (n_ < 2) return std::nullopt;
    const auto possible = static_cast<std::int64_t>(directed_ ? n_ * (n_ - 1) : n_ * (n_ - 1) / 2);
    return Rational(static_cast<std::int64_t>(tie_count_), possible);
}

std::pair<std::size_t, std::size_t> BruteForce::diameter() const {
    std::size_t diam = 0;
    std::size_t unreachable = 0;
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v = 0; v < n_; ++v) {
            if (u == v) continue;
            if (auto d = distance(u, v)) {
                diam = std::max(diam, *d);
            } else {
                ++unreachable;
            }
        }
    }
    return {diam, unreachable};
}

std::tuple<std::size_t, std::size_t, std::size_t> BruteForce::degrees(NodeId v) const {
    std::size_t in = 0, out = 0, total = 0;
    for (NodeId u = 0; u < n_; ++u) {
        if (u == v) continue;
        in += arc(u, v) ? 1 : 0;
        out += arc(v, u) ? 1 : 0;
        total += linked(u, v) ? 1 : 0;
    }
    return {in, out, total};
}

std::size_t BruteForce::n_degree(NodeId v, std::size_t n) const {
    std::size_t count = 0;
    for (NodeId u = 0; u < n_; ++u) {
        if (u == v) continue;
        auto d = distance(v, u);
        if (d && *d <= n) ++count;
    }
    return count;
}

Rational BruteForce::closeness(NodeId v, bool outward) const {
    std::int64_t reached = 0;
    std::int64_t total = 0;
    for (NodeId u = 0; u < n_; ++u) {
        if (u == v) continue;
        auto d = outward ? distance(v, u) : distance(u, v);
        if (d) {
            ++reached;
            total += static_cast<std::int64_t>(*d);
        }
    }
    if (reached == 0) return Rational(0);
    return Rational(reached * reached, static_cast<std::int64_t>(n_ - 1) * total);
}

Rational BruteForce::betweenness(NodeId v) const {
    Rational sum(0);
    for (NodeId s = 0; s < n_; ++s) {
        for (NodeId t = 0; t < n_; ++t) {
            if (s == t || s == v || t == v) continue;
            if (!directed_ && t < s) continue;
            auto paths = simple_paths(s, t);
            if (paths.empty()) continue;
            std::size_t shortest = paths.front().size();
            for (const auto& p : paths) shortest = std::min(shortest, p.size());
            std::int64_t all = 0, through = 0;
            for (const auto& p : paths) {
                if (p.size() != shortest) continue;
                ++all;
                if (std::find(p.begin() + 1, p.end() - 1, v) != p.end() - 1) ++through;
            }
            sum = sum + Rational(through, all);
        }
    }
    return sum;
}

std::vector<NodeSet> BruteForce::components() const {
    // Warshall closure of the symmetric link relation.
    std::vector<std::vector<bool>> reach(n_, std::vector<bool>(n_, false));
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v = 0; v < n_; ++v) reach[u][v] = (u == v) || linked(u, v);
    }
    for (NodeId k = 0; k < n_; ++k) {
        for (NodeId i = 0; i < n_; ++i) {
            for (NodeId j = 0; j < n_; ++j) {
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
            }
        }
    }
    std::vector<NodeSet> out;
    std::vector<bool> placed(n_, false);
    for (NodeId u = 0; u < n_; ++u) {
        if (placed[u]) continue;
        NodeSet block;
        for (NodeId v = 0; v < n_; ++v) {
            if (reach[u][v]) {
                block.push_back(v);
                placed[v] = true;
            }
        }
        out.push_back(block);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <typename Pred>
std::vector<NodeSet> BruteForce::maximal_subsets(std::size_t min_size, Pred qualifies) const {
    std::vector<std::uint32_t> good;
    const std::uint32_t limit = 1u << n_;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        NodeSet s;
        for (NodeId v = 0; v < n_; ++v) {
            if (mask & (1u << v)) s.push_back(v);
        }
        if (qualifies(s)) good.push_back(mask);
    }
    std::vector<NodeSet> out;
    for (auto mask : good) {
        bool maximal = true;
        for (auto other : good) {
            if (other != mask && (other & mask) == mask) {
                maximal = false;
                break;
            }
        }
        if (!maximal || static_cast<std::size_t>(__builtin_popcount(mask)) < min_size) continue;
        NodeSet s;
        for (NodeId v = 0; v < n_; ++v) {
            if (mask & (1u << v)) s.push_back(v);
        }
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeSet> BruteForce::cliques(std::size_t min_size) const {
    return maximal_subsets(min_size, [&](const NodeSet& s) {
        for (auto u : s) {
            for (auto v : s) {
                if (u != v && !linked(u, v)) return false;
            }
        }
        return true;
    });
}

std::vector<NodeSet> BruteForce::n_cliques(std::size_t n, std::size_t min_size) const {
    return maximal_subsets(min_size, [&](const NodeSet& s) {
        for (auto u : s) {
            for (auto v : s) {
                if (u == v) continue;
                auto d = distance(u, v);
                if (!d || *d > n) return false;
            }
        }
        return true;
    });
}

std::vector<NodeSet> BruteForce::k_plexes(std::size_t k, std::size_t min_size) const {
    return maximal_subsets(min_size, [&](const NodeSet& s) {
        for (auto u : s) {
            std::size_t inside = 0;
            for (auto v : s) inside += (u != v && linked(u, v)) ? 1 : 0;
            if (inside + k < s.size()) return false;
        }
        return true;
    });
}

std::vector<NodeSet> BruteForce::triads() const {
    std::vector<NodeSet> out;
    for (NodeId a = 0; a < n_; ++a) {
        for (NodeId b = a + 1; b < n_; ++b) {
            for (NodeId c = b + 1; c < n_; ++c) {
                const bool forward = arc(a, b) && arc(b, c) && arc(c, a);
                const bool backward = arc(a, c) && arc(c, b) && arc(b, a);
                if (forward || backward) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

double BruteForce::modularity(const std::vector<NodeSet>& partition) const {
    std::vector<std::size_t> block(n_, 0);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        for (auto v : partition[b]) block[v] = b;
    }
    double m = 0.0;
    std::vector<double> deg(n_, 0.0);
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v = u + 1; v < n_; ++v) {
            if (linked(u, v)) {
                m += 1.0;
                deg[u] += 1.0;
                deg[v] += 1.0;
            }
        }
    }
    if (m == 0.0) return 0.0;
    double q = 0.0;
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v = 0; v < n_; ++v) {
            if (block[u] != block[v]) continue;
            const double a = (u != v && linked(u, v)) ? 1.0 : 0.0;
            q += a - deg[u] * deg[v] / (2.0 * m);
        }
    }
    return q / (2.0 * m);
}

double BruteForce::best_bipartition_modularity() const {
    double best = modularity({[&] {
        NodeSet all(n_);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }()});
    for (std::uint32_t mask = 1; mask + 1 < (1u << n_); ++mask) {
        NodeSet a, b;
        for (NodeId v = 0; v < n_; ++v) ((mask & (1u << v)) ? a : b).push_back(v);
        best = std::max(best, modularity({a, b}));
    }
    return best;
}

}  // namespace peerlens::oracle
