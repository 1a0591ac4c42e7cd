#pragma once

#include <json.hpp>

#include "peerlens/graph.hpp"
#include "peerlens/profile_report.hpp"
#include "peerlens/survey.hpp"

/// JSON forms shared by the study bundle, the HTTP API and the CLI.
namespace peerlens::codec {

using nlohmann::json;

class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json encode(const survey::Date& d);
survey::Date decode_date(const json& j);

json encode(const survey::Questionnaire& q);
survey::Questionnaire decode_questionnaire(const json& j);

/// Full names are written only when `with_names` is set.
json encode(const survey::RosterEntry& r, bool with_names = false);
survey::RosterEntry decode_roster_entry(const json& j);

json encode(const survey::AnswerRecord& a);
survey::AnswerRecord decode_answer(const json& j);
std::vector<survey::AnswerRecord> decode_answers(const json& j);

json encode(const survey::ItemRef& r);
survey::ItemRef decode_item_ref(const json& j);
json encode(const survey::ValidationReport& r);

json encode(const survey::PersonProfile& p);
survey::PersonProfile decode_profile(const json& j);

json encode(const sna::NodeMetrics& m);
sna::NodeMetrics decode_node_metrics(const json& j);

json encode(const report::SocialProfile& s);
report::SocialProfile decode_social_profile(const json& j);

json encode(const report::ReportText& t);
report::ReportText decode_report_text(const json& j);

json encode(const report::Influencer& i);
report::Influencer decode_influencer(const json& j);
json encode(const report::Mediator& m);
report::Mediator decode_mediator(const json& j);

/// Nodes carry their index, label, attributes and metric annotations.
json encode(const SocialGraph& g);
SocialGraph decode_graph(const json& j);

}  // namespace peerlens::codec
