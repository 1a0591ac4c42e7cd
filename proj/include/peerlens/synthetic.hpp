#pragma once

#include <cstdint>
#include <vector>

#include "peerlens/survey.hpp"

namespace peerlens::synthetic {

/// Roster with ids P001.. and invented full names; pseudonyms left empty for anonymization.
survey::Roster make_roster(std::size_t students, std::uint64_t seed);

/// A complete, valid response set for the given roster: every item answered,
/// network answers for every ordered pair. Students fall into friend groups
/// with shared drinking habits so the networks have visible structure.
std::vector<survey::AnswerRecord> make_answers(const survey::Roster& roster, const survey::Questionnaire& questionnaire,
                                               std::uint64_t seed, const survey::QuestionnaireEvent& event);

}  // namespace peerlens::synthetic
