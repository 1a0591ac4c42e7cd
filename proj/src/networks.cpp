#include "peerlens/networks.hpp"

#include <map>

#include "peerlens/metrics.hpp"

namespace peerlens::networks {

namespace {

SocialGraph roster_graph(std::string_view name, const survey::Roster& roster, Weighting weighting) {
    SocialGraph g(std::string(name), Directedness::Directed, weighting);
    for (const auto& member : roster) {
        g.add_node(member.pseudonym, {{std::string(kPersonIdAttr), member.id}});
    }
    return g;
}

/// Latest network answer per (person, target) for one question.
std::map<std::pair<NodeId, NodeId>, std::int64_t> network_answers(std::span<const survey::AnswerRecord> answers,
                                                                  const survey::Roster& roster,
                                                                  std::string_view question) {
    std::map<std::string_view, NodeId> index;
    for (NodeId i = 0; i < roster.size(); ++i) index.emplace(roster[i].id, i);
    std::map<std::pair<NodeId, NodeId>, std::pair<survey::QuestionnaireEvent, std::int64_t>> latest;
    for (const auto& a : answers) {
        if (a.question != question) continue;
        if (!a.target) throw NetworkError("network answer by " + a.person + " has no target");
        auto src = index.find(a.person);
        auto dst = index.find(*a.target);
        if (src == index.end()) throw NetworkError("answer by non-roster person " + a.person);
        if (dst == index.end()) throw NetworkError("answer by " + a.person + " targets non-roster person " + *a.target);
        const auto* value = std::get_if<std::int64_t>(&a.value);
        if (value == nullptr) throw NetworkError("non-integer network answer by " + a.person);
        auto key = std::pair{src->second, dst->second};
        auto it = latest.find(key);
        if (it == latest.end() || it->second.first < a.event) latest[key] = {a.event, *value};
    }
    std::map<std::pair<NodeId, NodeId>, std::int64_t> out;
    for (const auto& [key, entry] : latest) out.emplace(key, entry.second);
    return out;
}

}  // namespace

SocialGraph build_friendship(std::span<const survey::AnswerRecord> answers, const survey::Roster& roster,
                             std::string_view question) {
    auto g = roster_graph(kFriendshipName, roster, Weighting::Weighted);
    for (const auto& [pair, weight] : network_answers(answers, roster, question)) {
        if (weight < kMinTieWeight || weight > kMaxTieWeight) {
            throw NetworkError("contact weight " + std::to_string(weight) + " outside 1..5");
        }
        if (weight > kMinTieWeight) g.add_tie(pair.first, pair.second, static_cast<int>(weight));
    }
    return g;
}

TieLevels derive_tie_levels(const SocialGraph& friendship) {
    TieLevels levels{filter_min_weight(friendship, kAcquaintanceMinWeight),
                     filter_min_weight(friendship, kPartnerMinWeight),
                     mutual_projection(friendship, kFriendMinWeight)};
    levels.acquaintances.set_name(std::string(kAcquaintancesName));
    levels.partners.set_name(std::string(kPartnersName));
    levels.friends.set_name(std::string(kFriendsName));
    return levels;
}

SocialGraph build_consumption(std::span<const survey::AnswerRecord> answers, const survey::Roster& roster,
                              std::string_view question) {
    auto g = roster_graph(kConsumptionName, roster, Weighting::Unweighted);
    for (const auto& [pair, value] : network_answers(answers, roster, question)) {
        if (value != 0 && value != 1) {
            throw NetworkError("drinking-companion answer must be 0 or 1, got " + std::to_string(value));
        }
        if (value == 1) g.add_tie(pair.first, pair.second);
    }
    return g;
}

SocialGraph attach_attributes(SocialGraph g, std::span<const survey::PersonProfile> profiles) {
    std::map<std::string_view, const survey::PersonProfile*> by_id;
    for (const auto& p : profiles) by_id.emplace(p.id, &p);
    // Resolve every node first so a missing profile leaves g untouched.
    std::vector<const survey::PersonProfile*> resolved;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto it = by_id.find(person_of(g, v));
        if (it == by_id.end()) throw NetworkError("no profile for node '" + g.label(v) + "'");
        resolved.push_back(it->second);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& p = *resolved[v];
        g.set_attribute(v, "gender", p.gender);
        if (p.audit) {
            g.set_attribute(v, "audit_zone", std::string(survey::roman(p.audit->zone)));
            g.set_attribute(v, "audit_score", std::int64_t{p.audit->score});
        }
        if (p.fas) g.set_attribute(v, "fas_band", std::string(survey::to_string(p.fas->band)));
    }
    return g;
}

std::optional<NodeId> node_for_person(const SocialGraph& g, std::string_view person) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto attr = g.attribute(v, kPersonIdAttr);
        if (attr && to_string(*attr) == person) return v;
    }
    return std::nullopt;
}

std::string person_of(const SocialGraph& g, NodeId v) {
    auto attr = g.attribute(v, kPersonIdAttr);
    return attr ? to_string(*attr) : g.label(v);
}

std::vector<const SocialGraph*> StudyNetworks::all() const {
    return {&friendship, &acquaintances, &partners, &friends, &consumption};
}

const SocialGraph* StudyNetworks::find(std::string_view name) const {
    for (const auto* g : all()) {
        if (g->name() == name) return g;
    }
    return nullptr;
}

StudyNetworks build_networks(std::span<const survey::AnswerRecord> answers, const survey::Roster& roster,
                             std::span<const survey::PersonProfile> profiles) {
    auto friendship = attach_attributes(build_friendship(answers, roster), profiles);
    auto levels = derive_tie_levels(friendship);
    return StudyNetworks{std::move(friendship), std::move(levels.acquaintances), std::move(levels.partners),
                         std::move(levels.friends), attach_attributes(build_consumption(answers, roster), profiles)};
}

StudyNetworks annotate_all(const StudyNetworks& n) {
    return StudyNetworks{sna::annotate(n.friendship), sna::annotate(n.acquaintances), sna::annotate(n.partners),
                         sna::annotate(n.friends), sna::annotate(n.consumption)};
}

}  // namespace peerlens::networks
