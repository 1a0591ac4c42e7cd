#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "peerlens/networks.hpp"
#include "peerlens/survey.hpp"

namespace peerlens::fixtures {

/// Hand-built classroom: people P0..P(n-1) with pseudonyms S0.., contact weights and
/// drinking answers given per ordered pair, and an AUDIT score per person.
struct ClassroomSpec {
    std::size_t people = 0;
    std::map<std::pair<std::size_t, std::size_t>, int> contact;
    std::vector<std::pair<std::size_t, std::size_t>> drinks;
    std::vector<std::string> genders;  // defaults to "F"
    std::vector<int> audit_scores;     // defaults to 0
};

struct Classroom {
    survey::Roster roster;
    std::vector<survey::PersonProfile> profiles;
    networks::StudyNetworks networks;  // annotated
};

Classroom make_classroom(const ClassroomSpec& spec);

/// Mutual contact of the given weight on every listed pair.
void mutual(ClassroomSpec& spec, std::size_t a, std::size_t b, int weight);

}  // namespace peerlens::fixtures
