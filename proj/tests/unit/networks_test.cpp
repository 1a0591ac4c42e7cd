#include <gtest/gtest.h>

#include "peerlens/networks.hpp"
#include "peerlens/synthetic.hpp"
#include "support/network_check.hpp"

using namespace peerlens;
using namespace peerlens::networks;
using survey::AnswerRecord;

namespace {

const survey::QuestionnaireEvent kEvent{"q", survey::Date{2017, 3, 1}};

survey::Roster roster_abc() {
    return {{"PA", "A", "", 16, "F", "1A"}, {"PB", "B", "", 17, "M", "1A"}, {"PC", "C", "", 16, "F", "1A"}};
}

AnswerRecord contact(const char* from, const char* to, std::int64_t w) {
    return AnswerRecord{from, kEvent, "friendship", w, survey::PersonId(to)};
}

AnswerRecord drink(const char* from, const char* to, std::int64_t yes) {
    return AnswerRecord{from, kEvent, "consumption", yes, survey::PersonId(to)};
}

survey::PersonProfile profile(const char* id, const char* gender, int audit_score) {
    survey::PersonProfile p;
    p.id = id;
    p.gender = gender;
    p.audit = survey::AuditResult{audit_score, survey::audit_zone_for(audit_score),
                                  std::string(survey::audit_intervention(survey::audit_zone_for(audit_score)))};
    p.fas = survey::FasResult{4, survey::FasBand::MediumLow};
    return p;
}

}  // namespace

TEST(BuildFriendshipTest, WeightsAndMissingAnswers) {
    std::vector<AnswerRecord> answers{contact("PA", "PB", 4), contact("PB", "PA", 1)};
    auto g = build_friendship(answers, roster_abc());
    EXPECT_EQ(g.name(), "friendship");
    EXPECT_TRUE(g.directed());
    EXPECT_TRUE(g.weighted());
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.weight(0, 1), 4);
    EXPECT_FALSE(g.has_tie(1, 0));  // weight 1 = never together
    EXPECT_FALSE(g.has_tie(0, 2));  // unanswered
    EXPECT_EQ(g.label(0), "A");
    EXPECT_EQ(person_of(g, 0), "PA");
}

TEST(BuildFriendshipTest, NonRosterTargetRejected) {
    std::vector<AnswerRecord> answers{contact("PA", "PZ", 4)};
    EXPECT_THROW(build_friendship(answers, roster_abc()), NetworkError);
}

TEST(TieLevelTest, Examples) {
    auto roster = roster_abc();
    {
        std::vector<AnswerRecord> answers{contact("PA", "PB", 4), contact("PB", "PA", 5)};
        auto levels = derive_tie_levels(build_friendship(answers, roster));
        EXPECT_TRUE(levels.friends.has_tie(0, 1));
        EXPECT_FALSE(levels.friends.directed());
        EXPECT_EQ(levels.friends.name(), "friends");
    }
    {
        std::vector<AnswerRecord> answers{contact("PA", "PB", 3), contact("PB", "PA", 3)};
        auto levels = derive_tie_levels(build_friendship(answers, roster));
        EXPECT_TRUE(levels.partners.has_tie(0, 1));
        EXPECT_TRUE(levels.partners.has_tie(1, 0));
        EXPECT_EQ(levels.friends.tie_count(), 0u);
    }
    {
        std::vector<AnswerRecord> answers{contact("PA", "PB", 2)};
        auto levels = derive_tie_levels(build_friendship(answers, roster));
        EXPECT_TRUE(levels.acquaintances.has_tie(0, 1));
        EXPECT_FALSE(levels.acquaintances.has_tie(1, 0));
        EXPECT_EQ(levels.partners.tie_count(), 0u);
        EXPECT_EQ(levels.acquaintances.name(), "acquaintances");
    }
}

TEST(TieLevelTest, FriendRuleProperty) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto set = fixtures::random_contact_answers(seed, 7);
        auto issues = fixtures::tie_level_violations(set);
        EXPECT_TRUE(issues.empty()) << "seed " << seed << ": " << issues.front();
    }
}

TEST(BuildConsumptionTest, YesNo) {
    auto roster = roster_abc();
    std::vector<AnswerRecord> answers{drink("PA", "PB", 1), drink("PB", "PA", 0)};
    auto g = build_consumption(answers, roster);
    EXPECT_EQ(g.name(), "consumption");
    EXPECT_FALSE(g.weighted());
    EXPECT_TRUE(g.has_tie(0, 1));
    EXPECT_FALSE(g.has_tie(1, 0));

    std::vector<AnswerRecord> nobody{drink("PA", "PB", 0)};
    auto empty = build_consumption(nobody, roster);
    EXPECT_EQ(empty.node_count(), 3u);
    EXPECT_EQ(empty.tie_count(), 0u);

    std::vector<AnswerRecord> bad{drink("PA", "PB", 3)};
    EXPECT_THROW(build_consumption(bad, roster), NetworkError);
}

TEST(BuildConsumptionTest, SameNodeSetAsFriendship) {
    auto roster = synthetic::make_roster(12, 1);
    for (std::size_t i = 0; i < roster.size(); ++i) roster[i].pseudonym = "S" + std::to_string(i);
    auto answers = synthetic::make_answers(roster, survey::standard_questionnaire(), 2, kEvent);
    auto f = build_friendship(answers, roster);
    auto c = build_consumption(answers, roster);
    ASSERT_EQ(f.node_count(), c.node_count());
    for (NodeId v = 0; v < f.node_count(); ++v) EXPECT_EQ(f.label(v), c.label(v));
}

TEST(AttachAttributesTest, SetsEveryNode) {
    auto roster = roster_abc();
    auto g = build_friendship({}, roster);
    std::vector<survey::PersonProfile> profiles{profile("PA", "F", 10), profile("PB", "M", 3), profile("PC", "F", 22)};
    auto attributed = attach_attributes(g, profiles);
    EXPECT_EQ(to_string(*attributed.attribute(0, "audit_zone")), "II");
    EXPECT_EQ(to_string(*attributed.attribute(0, "audit_score")), "10");
    EXPECT_EQ(to_string(*attributed.attribute(2, "audit_zone")), "IV");
    EXPECT_EQ(to_string(*attributed.attribute(1, "gender")), "M");
    for (NodeId v = 0; v < 3; ++v) {
        EXPECT_TRUE(attributed.attribute(v, "gender"));
        EXPECT_TRUE(attributed.attribute(v, "fas_band"));
        EXPECT_EQ(to_string(*attributed.attribute(v, "audit_zone")),
                  survey::roman(profiles[v].audit->zone));
    }
}

TEST(AttachAttributesTest, MissingProfileNamesNode) {
    auto g = build_friendship({}, roster_abc());
    std::vector<survey::PersonProfile> profiles{profile("PA", "F", 10), profile("PB", "M", 3)};
    try {
        attach_attributes(g, profiles);
        FAIL() << "expected NetworkError";
    } catch (const NetworkError& e) {
        EXPECT_NE(std::string(e.what()).find("'C'"), std::string::npos);
    }
}

TEST(BuildNetworksTest, FiveNamedNetworksOverRoster) {
    auto roster = synthetic::make_roster(10, 3);
    for (std::size_t i = 0; i < roster.size(); ++i) roster[i].pseudonym = "S" + std::to_string(i);
    const auto qn = survey::standard_questionnaire();
    auto answers = synthetic::make_answers(roster, qn, 4, kEvent);
    auto profiles = survey::build_profiles(answers, roster, qn);
    auto nets = build_networks(answers, roster, profiles);
    std::vector<std::string> names;
    for (const auto* g : nets.all()) {
        names.push_back(g->name());
        EXPECT_EQ(g->node_count(), roster.size());
    }
    EXPECT_EQ(names, (std::vector<std::string>{"friendship", "acquaintances", "partners", "friends", "consumption"}));
    EXPECT_NE(nets.find("partners"), nullptr);
    EXPECT_EQ(nets.find("family"), nullptr);
}
