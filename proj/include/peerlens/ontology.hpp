#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peerlens/graph.hpp"
#include "peerlens/knowledge.hpp"
#include "peerlens/survey.hpp"

namespace peerlens::knowledge {

/// The closed relation set of the study schema (see docs/vocabulary.md).
Vocabulary standard_vocabulary();

/// The seven rule behaviors: network membership, relationship instances, risk zone
/// assignment, characteristic creation, answer provenance, and concept linking for
/// persons and networks. Some behaviors need more than one rule.
std::vector<Rule> standard_rules();

namespace ids {
std::string person(std::string_view person_id);
std::string network(std::string_view name);
std::string questionnaire(std::string_view id);
std::string question(std::string_view id);
std::string event(const survey::QuestionnaireEvent& event);
std::string person_concept(std::string_view person_id, std::string_view network, std::string_view metric);
std::string network_concept(std::string_view network, std::string_view metric);
}  // namespace ids

/// Asserts the people, questionnaire, and answer domains: one Person per roster entry with
/// its profile scores, one AnswerOfPersonToQuestion and Answer per record, and the study networks.
void populate(Store& store, const survey::Questionnaire& questionnaire, const survey::Roster& roster,
              std::span<const survey::AnswerRecord> answers, std::span<const survey::PersonProfile> profiles);

/// Stores the annotations of g as SNAConcept entities: one per (person, network, metric) for the
/// node metrics and one per (network, metric) for the graph metrics. Values are replaced on rerun.
/// Every node must carry a person_id attribute naming an existing Person.
void write_back_metrics(Store& store, const SocialGraph& g);

/// Value stored by write_back_metrics for a node metric, if any.
std::optional<double> person_metric(const Store& store, std::string_view person_id, std::string_view network,
                                    std::string_view metric);

}  // namespace peerlens::knowledge
