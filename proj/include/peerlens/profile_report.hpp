#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "peerlens/metrics.hpp"
#include "peerlens/networks.hpp"
#include "peerlens/survey.hpp"

namespace peerlens::report {

class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Level { Low, Medium, High };

std::string_view to_string(Level level);

/// Classroom-relative tertile of `value`: rank is the number of population values strictly
/// below it (1e-9 tolerance), so ties fall to the lower band.
Level tertile_band(double value, std::span<const double> population);

struct SocialProfile {
    survey::PersonId person;
    Level popularity = Level::Low;
    Level mediator = Level::Low;
    Level influence = Level::Low;
    /// Out- and in-degree on the friendship ties of weight 4 or more.
    std::size_t declared_friends = 0;
    std::size_t named_by = 0;
    /// Raw values behind the three levels.
    double popularity_score = 0.0;
    double mediator_score = 0.0;
    double influence_score = 0.0;
    /// Node metrics of the person in each network, keyed by network name.
    std::map<std::string, sna::NodeMetrics> underlying;
};

/// Node metrics as annotated on g; throws when g has not been annotated.
sna::NodeMetrics stored_metrics(const SocialGraph& g, NodeId v);

/// Profiles for every node, in friendship node order. Networks must be annotated.
std::vector<SocialProfile> compute_social_profiles(const networks::StudyNetworks& nets);

SocialProfile compute_social_profile(std::string_view person, const networks::StudyNetworks& nets);

struct Influencer {
    survey::PersonId person;
    std::string pseudonym;
    int zone_difference = 0;
    /// Strongest friendship weight between the two in either direction; 0 when only a drinking tie exists.
    int tie_weight = 0;
    bool drinking_tie = false;
};

/// Alters tied to ego (friendship weight >= 3 either way, or a consumption tie either way)
/// whose AUDIT zone is strictly higher. Empty when the ego has no AUDIT result.
std::vector<Influencer> find_influencers(std::string_view ego, const networks::StudyNetworks& nets,
                                         std::span<const survey::PersonProfile> profiles,
                                         std::span<const SocialProfile> social);

struct Mediator {
    survey::PersonId person;
    std::string pseudonym;
    /// Share of the sources reaching ego whose geodesics to ego pass through this person.
    double fraction = 0.0;
    double betweenness = 0.0;
};

/// Nodes at most two hops from ego on the partners graph that lie inside geodesics towards ego.
std::vector<Mediator> find_mediators(std::string_view ego, const networks::StudyNetworks& nets);

/// Sentence templates. Placeholders are written {key}; see english_templates() for the keys.
struct ReportTemplates {
    std::string age_gender;
    std::string popularity;
    std::vector<std::string> popularity_phrases;  // Low, Medium, High
    std::string majority_gender;
    std::string balanced_gender;
    std::string friends;
    std::string levels;
    std::string consumption_level;
    std::vector<std::string> zone_phrases;  // zones I..IV
    std::string first_drink;
    std::string never_drinks;
    std::string frequency;
    std::string quantity;
    std::vector<std::string> frequency_phrases;  // AUDIT item 1 values 0..4
    std::vector<std::string> quantity_phrases;   // AUDIT item 2 values 0..4
    std::string usual_places;
    std::string drinking_mates;
    std::string influence_exposure;
};

const ReportTemplates& english_templates();

/// "1 friend", "4 persons".
std::string plural(std::size_t n, std::string_view singular, std::string_view plural_form);

struct ReportText {
    std::string friendship_paragraph;
    std::string consumption_paragraph;
};

/// Fills the templates from the person's answers and network position. Sentences whose
/// data is missing are left out.
ReportText render_report(const survey::PersonProfile& person, const SocialProfile& social,
                         const networks::StudyNetworks& nets, std::span<const Influencer> influencers,
                         const ReportTemplates& templates = english_templates());

}  // namespace peerlens::report
