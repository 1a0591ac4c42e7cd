#include "peerlens/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace peerlens {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        auto j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

std::optional<long long> parse_int(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) != std::tolower(static_cast<unsigned char>(prefix[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

PajekParseError::PajekParseError(std::size_t line, const std::string& what)
    : std::runtime_error("pajek line " + std::to_string(line) + ": " + what), line_(line) {}

std::string export_pajek(const SocialGraph& g) {
    std::ostringstream os;
    os << "*Vertices " << g.node_count() << '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) os << (v + 1) << " \"" << g.label(v) << "\"\n";
    os << (g.directed() ? "*Arcs" : "*Edges") << '\n';
    for (const auto& t : g.ties()) {
        os << (t.src + 1) << ' ' << (t.dst + 1);
        if (t.weight) os << ' ' << *t.weight;
        os << '\n';
    }
    return os.str();
}

SocialGraph import_pajek(std::string_view text, std::string name) {
    const auto lines = split_lines(text);
    std::size_t ln = 0;
    auto next = [&]() -> std::optional<std::string_view> {
        while (ln < lines.size()) {
            auto l = lines[ln++];
            if (!split_fields(l).empty()) return l;
        }
        return std::nullopt;
    };

    auto header = next();
    if (!header || !starts_with_ci(*header, "*vertices")) {
        throw PajekParseError(ln == 0 ? 1 : ln, "expected '*Vertices N'");
    }
    auto hf = split_fields(*header);
    std::optional<long long> n = hf.size() == 2 ? parse_int(hf[1]) : std::nullopt;
    if (!n || *n < 0) throw PajekParseError(ln, "malformed vertex count");

    std::vector<std::string> labels(static_cast<std::size_t>(*n));
    std::vector<bool> seen(labels.size(), false);
    for (long long k = 0; k < *n; ++k) {
        auto line = next();
        if (!line) throw PajekParseError(ln + 1, "missing vertex line");
        auto fields = split_fields(*line);
        auto idx = parse_int(fields[0]);
        if (!idx) throw PajekParseError(ln, "malformed vertex index");
        if (*idx < 1 || *idx > *n) throw PajekParseError(ln, "vertex index out of range");
        auto open = line->find('"');
        auto close = line->rfind('"');
        if (open == std::string_view::npos || close == open) throw PajekParseError(ln, "vertex label must be quoted");
        auto i = static_cast<std::size_t>(*idx - 1);
        if (seen[i]) throw PajekParseError(ln, "duplicate vertex index");
        seen[i] = true;
        labels[i] = std::string(line->substr(open + 1, close - open - 1));
        if (labels[i].empty()) throw PajekParseError(ln, "empty vertex label");
    }

    auto section = next();
    bool directed = false;
    if (section && starts_with_ci(*section, "*arcs")) {
        directed = true;
    } else if (!section || !starts_with_ci(*section, "*edges")) {
        throw PajekParseError(ln == 0 ? 1 : ln, "expected '*Arcs' or '*Edges'");
    }

    std::vector<std::tuple<std::size_t, NodeId, NodeId, std::optional<int>>> ties;
    std::optional<bool> weighted;
    while (auto line = next()) {
        auto fields = split_fields(*line);
        if (fields.size() != 2 && fields.size() != 3) throw PajekParseError(ln, "expected 'i j [w]'");
        auto a = parse_int(fields[0]);
        auto b = parse_int(fields[1]);
        if (!a || !b) throw PajekParseError(ln, "malformed tie endpoint");
        if (*a < 1 || *a > *n || *b < 1 || *b > *n) throw PajekParseError(ln, "tie endpoint out of range");
        std::optional<int> w;
        if (fields.size() == 3) {
            auto wv = parse_int(fields[2]);
            if (!wv) throw PajekParseError(ln, "non-integer tie weight");
            w = static_cast<int>(*wv);
        }
        bool has_w = w.has_value();
        if (weighted && *weighted != has_w) throw PajekParseError(ln, "mixed weighted and unweighted ties");
        weighted = has_w;
        ties.emplace_back(ln, static_cast<NodeId>(*a - 1), static_cast<NodeId>(*b - 1), w);
    }

    SocialGraph g(std::move(name), directed ? Directedness::Directed : Directedness::Undirected,
                  weighted.value_or(false) ? Weighting::Weighted : Weighting::Unweighted);
    try {
        for (auto& label : labels) g.add_node(label);
    } catch (const GraphError& e) {
        throw PajekParseError(1, e.what());
    }
    for (const auto& [line_no, src, dst, w] : ties) {
        try {
            g.add_tie(src, dst, w);
        } catch (const GraphError& e) {
            throw PajekParseError(line_no, e.what());
        }
    }
    return g;
}

std::string export_edge_csv(const SocialGraph& g) {
    std::ostringstream os;
    os << "src_label,dst_label,weight\n";
    for (const auto& t : g.ties()) {
        os << g.label(t.src) << ',' << g.label(t.dst) << ',';
        if (t.weight) os << *t.weight;
        os << '\n';
    }
    return os.str();
}

bool label_isomorphic(const SocialGraph& a, const SocialGraph& b) {
    if (a.directed() != b.directed() || a.node_count() != b.node_count() || a.tie_count() != b.tie_count()) {
        return false;
    }
    using LabeledTie = std::tuple<std::string, std::string, std::optional<int>>;
    auto collect = [](const SocialGraph& g) {
        std::set<std::string> labels;
        std::set<LabeledTie> ties;
        for (NodeId v = 0; v < g.node_count(); ++v) labels.insert(g.label(v));
        for (const auto& t : g.ties()) {
            auto s = g.label(t.src);
            auto d = g.label(t.dst);
            if (!g.directed() && d < s) std::swap(s, d);
            ties.emplace(s, d, t.weight);
        }
        return std::pair{labels, ties};
    };
    return collect(a) == collect(b);
}

}  // namespace peerlens
