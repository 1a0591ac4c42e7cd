#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "peerlens/graph.hpp"
#include "peerlens/survey.hpp"

namespace peerlens::networks {

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tie-level thresholds on the 1..5 contact scale.
inline constexpr int kAcquaintanceMinWeight = 2;
inline constexpr int kPartnerMinWeight = 3;
inline constexpr int kFriendMinWeight = 4;

inline constexpr std::string_view kFriendshipName = "friendship";
inline constexpr std::string_view kAcquaintancesName = "acquaintances";
inline constexpr std::string_view kPartnersName = "partners";
inline constexpr std::string_view kFriendsName = "friends";
inline constexpr std::string_view kConsumptionName = "consumption";

/// Node attribute holding the roster person id.
inline constexpr std::string_view kPersonIdAttr = "person_id";

/// Directed, weighted; one node per roster member in roster order. Weight-1 and
/// missing answers produce no tie.
SocialGraph build_friendship(std::span<const survey::AnswerRecord> answers, const survey::Roster& roster,
                             std::string_view question = survey::items::kFriendship);

struct TieLevels {
    SocialGraph acquaintances;
    SocialGraph partners;
    SocialGraph friends;
};

TieLevels derive_tie_levels(const SocialGraph& friendship);

/// Directed, unweighted; u->v iff u answered yes (1) about v.
SocialGraph build_consumption(std::span<const survey::AnswerRecord> answers, const survey::Roster& roster,
                              std::string_view question = survey::items::kConsumption);

/// Sets gender, audit_zone, audit_score and fas_band on every node.
SocialGraph attach_attributes(SocialGraph g, std::span<const survey::PersonProfile> profiles);

std::optional<NodeId> node_for_person(const SocialGraph& g, std::string_view person);
std::string person_of(const SocialGraph& g, NodeId v);

struct StudyNetworks {
    SocialGraph friendship;
    SocialGraph acquaintances;
    SocialGraph partners;
    SocialGraph friends;
    SocialGraph consumption;

    /// In the fixed order friendship, acquaintances, partners, friends, consumption.
    [[nodiscard]] std::vector<const SocialGraph*> all() const;
    [[nodiscard]] const SocialGraph* find(std::string_view name) const;
};

/// Builds all five networks with person attributes attached (not yet annotated).
StudyNetworks build_networks(std::span<const survey::AnswerRecord> answers, const survey::Roster& roster,
                             std::span<const survey::PersonProfile> profiles);

/// Same networks with metric annotations written.
StudyNetworks annotate_all(const StudyNetworks& networks);

}  // namespace peerlens::networks
