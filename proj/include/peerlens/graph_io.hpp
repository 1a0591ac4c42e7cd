#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "peerlens/graph.hpp"

namespace peerlens {

class PajekParseError : public std::runtime_error {
public:
    PajekParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Pajek NET text. Vertices are numbered id + 1; ties follow in (src, dst) order.
///
///   *Vertices N
///   i "label"
///   *Arcs | *Edges
///   i j [w]
std::string export_pajek(const SocialGraph& g);

/// Inverse of export_pajek. The graph is weighted iff tie lines carry a third field.
SocialGraph import_pajek(std::string_view text, std::string name = "imported");

/// `src_label,dst_label,weight` with a header row; weight column empty when unweighted.
std::string export_edge_csv(const SocialGraph& g);

/// Label-preserving isomorphism: same labels, directedness, and ties (with weights) between labels.
bool label_isomorphic(const SocialGraph& a, const SocialGraph& b);

}  // namespace peerlens
