#include "peerlens/profile_report.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace peerlens::report {

namespace {

constexpr double kRankTolerance = 1e-9;
constexpr int kInfluenceMinWeight = 3;
constexpr std::size_t kMediatorRadius = 2;

using Vars = std::map<std::string, std::string, std::less<>>;

std::string fill(std::string_view text, const Vars& vars) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        auto open = text.find('{', i);
        if (open == std::string_view::npos) {
            out.append(text.substr(i));
            break;
        }
        auto close = text.find('}', open);
        if (close == std::string_view::npos) throw ReportError("unterminated placeholder in template");
        out.append(text.substr(i, open - i));
        auto key = text.substr(open + 1, close - open - 1);
        auto it = vars.find(key);
        if (it == vars.end()) throw ReportError("template placeholder {" + std::string(key) + "} has no value");
        out += it->second;
        i = close + 1;
    }
    return out;
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

NodeId require_node(const SocialGraph& g, std::string_view person) {
    auto v = networks::node_for_person(g, person);
    if (!v) throw ReportError("person '" + std::string(person) + "' is not in the " + g.name() + " network");
    return *v;
}

double annotation(const SocialGraph& g, NodeId v, std::string_view key) {
    const auto& a = g.node_annotations(v);
    auto it = a.find(key);
    if (it == a.end()) throw ReportError(g.name() + " network is not annotated (missing " + std::string(key) + ")");
    return it->second;
}

/// Hop distances and geodesic counts from every node.
struct PathCounts {
    std::vector<std::vector<std::size_t>> dist;
    std::vector<std::vector<double>> sigma;
    static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
};

PathCounts count_paths(const SocialGraph& g) {
    const auto n = g.node_count();
    PathCounts pc;
    pc.dist.assign(n, std::vector<std::size_t>(n, PathCounts::kUnreached));
    pc.sigma.assign(n, std::vector<double>(n, 0.0));
    for (NodeId s = 0; s < n; ++s) {
        auto& d = pc.dist[s];
        auto& sg = pc.sigma[s];
        d[s] = 0;
        sg[s] = 1.0;
        std::deque<NodeId> queue{s};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto w : g.successors(u)) {
                if (d[w] == PathCounts::kUnreached) {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
                if (d[w] == d[u] + 1) sg[w] += sg[u];
            }
        }
    }
    return pc;
}

struct Pronouns {
    std::string subject;
    std::string object;
    std::string possessive;
    std::string be;
    std::string was;
    std::string have;
    std::string s;
    std::string noun;
};

Pronouns pronouns_for(std::string_view gender) {
    if (gender == "F") return {"she", "her", "her", "is", "was", "has", "s", "girl"};
    if (gender == "M") return {"he", "him", "his", "is", "was", "has", "s", "boy"};
    return {"they", "them", "their", "are", "were", "have", "", "student"};
}

}  // namespace

std::string_view to_string(Level level) {
    switch (level) {
        case Level::Low: return "Low";
        case Level::Medium: return "Medium";
        case Level::High: return "High";
    }
    return "?";
}

Level tertile_band(double value, std::span<const double> population) {
    if (population.empty()) return Level::Low;
    std::size_t rank = 0;
    for (double p : population) rank += p < value - kRankTolerance;
    const auto n = population.size();
    if (3 * rank < n) return Level::Low;
    if (3 * rank < 2 * n) return Level::Medium;
    return Level::High;
}

sna::NodeMetrics stored_metrics(const SocialGraph& g, NodeId v) {
    sna::NodeMetrics m;
    m.in_degree = static_cast<std::size_t>(annotation(g, v, "in_degree"));
    m.out_degree = static_cast<std::size_t>(annotation(g, v, "out_degree"));
    m.total_degree = static_cast<std::size_t>(annotation(g, v, "total_degree"));
    m.reach = static_cast<std::size_t>(annotation(g, v, "reach"));
    m.closeness_out = annotation(g, v, "closeness_out");
    m.closeness_in = annotation(g, v, "closeness_in");
    m.betweenness = annotation(g, v, "betweenness");
    return m;
}

std::vector<SocialProfile> compute_social_profiles(const networks::StudyNetworks& nets) {
    const auto& friendship = nets.friendship;
    const auto n = friendship.node_count();
    for (const auto* g : nets.all()) {
        if (g->node_count() != n) throw ReportError("networks do not share one node set");
    }
    const auto naming = filter_min_weight(friendship, networks::kFriendMinWeight);

    std::vector<SocialProfile> out(n);
    std::vector<double> popularity(n), mediator(n), influence(n);
    for (NodeId v = 0; v < n; ++v) {
        auto& p = out[v];
        p.person = networks::person_of(friendship, v);
        p.declared_friends = naming.successors(v).size();
        p.named_by = naming.predecessors(v).size();
        p.popularity_score = static_cast<double>(p.named_by);
        p.mediator_score = annotation(nets.partners, v, "betweenness");
        int weight_sum = 0;
        for (auto w : friendship.successors(v)) weight_sum += friendship.weight(v, w).value_or(0);
        p.influence_score = weight_sum;
        for (const auto* g : nets.all()) p.underlying[g->name()] = stored_metrics(*g, v);
        popularity[v] = p.popularity_score;
        mediator[v] = p.mediator_score;
        influence[v] = p.influence_score;
    }
    for (auto& p : out) {
        p.popularity = tertile_band(p.popularity_score, popularity);
        p.mediator = tertile_band(p.mediator_score, mediator);
        p.influence = tertile_band(p.influence_score, influence);
    }
    return out;
}

SocialProfile compute_social_profile(std::string_view person, const networks::StudyNetworks& nets) {
    auto v = require_node(nets.friendship, person);
    return compute_social_profiles(nets)[v];
}

std::vector<Influencer> find_influencers(std::string_view ego, const networks::StudyNetworks& nets,
                                         std::span<const survey::PersonProfile> profiles,
                                         std::span<const SocialProfile> social) {
    const auto& friendship = nets.friendship;
    const auto& consumption = nets.consumption;
    const auto e = require_node(friendship, ego);

    std::map<std::string, const survey::PersonProfile*, std::less<>> by_id;
    for (const auto& p : profiles) by_id[p.id] = &p;
    std::map<std::string, double, std::less<>> popularity;
    for (const auto& s : social) popularity[s.person] = s.popularity_score;

    auto zone_of = [&](std::string_view person) -> std::optional<int> {
        auto it = by_id.find(person);
        if (it == by_id.end() || !it->second->audit) return std::nullopt;
        return static_cast<int>(it->second->audit->zone);
    };
    auto ego_zone = zone_of(ego);
    if (!ego_zone) return {};

    std::vector<Influencer> out;
    for (NodeId a = 0; a < friendship.node_count(); ++a) {
        if (a == e) continue;
        const int w = std::max(friendship.weight(e, a).value_or(0), friendship.weight(a, e).value_or(0));
        const bool drink = consumption.has_tie(e, a) || consumption.has_tie(a, e);
        if (w < kInfluenceMinWeight && !drink) continue;
        auto person = networks::person_of(friendship, a);
        auto zone = zone_of(person);
        if (!zone || *zone <= *ego_zone) continue;
        out.push_back({person, friendship.label(a), *zone - *ego_zone, w, drink});
    }
    auto pop = [&](const Influencer& i) {
        auto it = popularity.find(i.person);
        return it == popularity.end() ? 0.0 : it->second;
    };
    std::sort(out.begin(), out.end(), [&](const Influencer& a, const Influencer& b) {
        if (a.zone_difference != b.zone_difference) return a.zone_difference > b.zone_difference;
        if (a.tie_weight != b.tie_weight) return a.tie_weight > b.tie_weight;
        if (pop(a) != pop(b)) return pop(a) > pop(b);
        return a.person < b.person;
    });
    return out;
}

std::vector<Mediator> find_mediators(std::string_view ego, const networks::StudyNetworks& nets) {
    const auto& g = nets.partners;
    const auto e = require_node(g, ego);
    const auto pc = count_paths(g);
    constexpr auto kUnreached = PathCounts::kUnreached;

    std::vector<Mediator> out;
    for (NodeId c = 0; c < g.node_count(); ++c) {
        if (c == e || pc.dist[c][e] > kMediatorRadius) continue;
        double dependency = 0.0;
        std::size_t sources = 0;
        for (NodeId s = 0; s < g.node_count(); ++s) {
            if (s == e || s == c || pc.dist[s][e] == kUnreached) continue;
            ++sources;
            if (pc.dist[s][c] != kUnreached && pc.dist[s][c] + pc.dist[c][e] == pc.dist[s][e]) {
                dependency += pc.sigma[s][c] * pc.sigma[c][e] / pc.sigma[s][e];
            }
        }
        if (dependency <= 0.0) continue;
        out.push_back({networks::person_of(g, c), g.label(c), dependency / static_cast<double>(sources),
                       annotation(g, c, "betweenness")});
    }
    std::sort(out.begin(), out.end(), [](const Mediator& a, const Mediator& b) {
        if (a.fraction != b.fraction) return a.fraction > b.fraction;
        if (a.betweenness != b.betweenness) return a.betweenness > b.betweenness;
        return a.person < b.person;
    });
    return out;
}

std::string plural(std::size_t n, std::string_view singular, std::string_view plural_form) {
    return std::to_string(n) + " " + std::string(n == 1 ? singular : plural_form);
}

const ReportTemplates& english_templates() {
    static const ReportTemplates templates = [] {
        ReportTemplates t;
        t.age_gender = "{name} is {age_article} {age}-year-old {noun}.";
        t.popularity = "{Pronoun} {be} {popularity_phrase} among {possessive} classmates.";
        t.popularity_phrases = {"not a popular {noun}", "a moderately popular {noun}", "a popular {noun}"};
        t.majority_gender = "Most of the classmates close to {object} are {group}.";
        t.balanced_gender = "The classmates close to {object} are as many girls as boys.";
        t.friends = "{name} declares to have {declared} and {pronoun} {be} considered friend by {named_by}.";
        t.levels = "Popularity: {popularity}. Role as mediator: {mediator}. Level of influence: {influence}.";
        t.consumption_level = "{name} has a {zone_phrase} level of alcohol consumption (AUDIT score {score}, zone {zone}).";
        t.zone_phrases = {"low", "medium", "high", "very high"};
        t.first_drink = "{Pronoun} {was} {first_age} when {pronoun} tried an alcoholic drink for the first time.";
        t.never_drinks = "{Pronoun} never drink{s} alcohol.";
        t.frequency = "{Pronoun} drink{s} alcohol {frequency_phrase}.";
        t.quantity = "On a typical drinking day {pronoun} {have} {quantity_phrase} drinks.";
        const auto qn = survey::standard_questionnaire();
        for (const auto& o : qn.find(survey::items::kAuditFrequency)->options) t.frequency_phrases.push_back(o.label);
        for (const auto& o : qn.find(survey::items::kAuditQuantity)->options) t.quantity_phrases.push_back(o.label);
        t.usual_places = "Usual place for drinking: {places}.";
        t.drinking_mates = "{Pronoun} would go out for a drink with {mates}.";
        t.influence_exposure = "{Pronoun} could be influenced by {count} with a higher level of consumption: {names}.";
        return t;
    }();
    return templates;
}

ReportText render_report(const survey::PersonProfile& person, const SocialProfile& social,
                         const networks::StudyNetworks& nets, std::span<const Influencer> influencers,
                         const ReportTemplates& t) {
    const auto pr = pronouns_for(person.gender);
    Vars vars{{"name", person.pseudonym.empty() ? person.id : person.pseudonym},
              {"pronoun", pr.subject},
              {"Pronoun", capitalize(pr.subject)},
              {"object", pr.object},
              {"possessive", pr.possessive},
              {"be", pr.be},
              {"was", pr.was},
              {"have", pr.have},
              {"s", pr.s},
              {"noun", pr.noun},
              {"declared", plural(social.declared_friends, "friend", "friends")},
              {"named_by", plural(social.named_by, "person", "persons")},
              {"popularity", std::string(to_string(social.popularity))},
              {"mediator", std::string(to_string(social.mediator))},
              {"influence", std::string(to_string(social.influence))}};
    auto sentence = [&](std::string& paragraph, std::string_view text) {
        if (!paragraph.empty()) paragraph += ' ';
        paragraph += fill(text, vars);
    };

    ReportText out;
    auto& f = out.friendship_paragraph;
    if (person.age) {
        vars["age"] = std::to_string(*person.age);
        // Spoken numbers starting with a vowel sound: eight, eleven, eighteen, eighty...
        const auto& a = vars["age"];
        vars["age_article"] = a.starts_with('8') || a == "11" || a == "18" ? "an" : "a";
        sentence(f, t.age_gender);
    }
    vars["popularity_phrase"] = fill(t.popularity_phrases.at(static_cast<std::size_t>(social.popularity)), vars);
    sentence(f, t.popularity);

    const auto& acquaintances = nets.acquaintances;
    const auto v = require_node(acquaintances, person.id);
    std::set<NodeId> alters;
    for (auto w : acquaintances.successors(v)) alters.insert(w);
    for (auto w : acquaintances.predecessors(v)) alters.insert(w);
    std::size_t girls = 0;
    std::size_t boys = 0;
    for (auto w : alters) {
        auto g = acquaintances.attribute(w, "gender");
        if (!g) continue;
        auto code = peerlens::to_string(*g);
        girls += code == "F";
        boys += code == "M";
    }
    if (girls != boys) {
        vars["group"] = girls > boys ? "girls" : "boys";
        sentence(f, t.majority_gender);
    } else if (girls > 0) {
        sentence(f, t.balanced_gender);
    }
    sentence(f, t.friends);
    sentence(f, t.levels);

    auto& c = out.consumption_paragraph;
    if (person.audit) {
        vars["zone_phrase"] = t.zone_phrases.at(static_cast<std::size_t>(person.audit->zone) - 1);
        vars["score"] = std::to_string(person.audit->score);
        vars["zone"] = std::string(survey::roman(person.audit->zone));
        sentence(c, t.consumption_level);
    }
    if (person.first_drink_age) {
        vars["first_age"] = std::to_string(*person.first_drink_age);
        sentence(c, t.first_drink);
    }
    if (person.audit_frequency) {
        if (*person.audit_frequency == 0) {
            sentence(c, t.never_drinks);
        } else {
            vars["frequency_phrase"] = t.frequency_phrases.at(static_cast<std::size_t>(*person.audit_frequency));
            sentence(c, t.frequency);
            if (person.audit_quantity) {
                vars["quantity_phrase"] = t.quantity_phrases.at(static_cast<std::size_t>(*person.audit_quantity));
                sentence(c, t.quantity);
            }
        }
    }
    if (person.usual_places && person.audit_frequency.value_or(1) != 0) {
        vars["places"] = *person.usual_places;
        sentence(c, t.usual_places);
    }
    const auto& consumption = nets.consumption;
    vars["mates"] = plural(consumption.successors(require_node(consumption, person.id)).size(), "classmate", "classmates");
    sentence(c, t.drinking_mates);
    if (!influencers.empty()) {
        std::string names;
        for (const auto& i : influencers) {
            if (!names.empty()) names += ", ";
            names += i.pseudonym.empty() ? i.person : i.pseudonym;
        }
        vars["count"] = plural(influencers.size(), "classmate", "classmates");
        vars["names"] = names;
        sentence(c, t.influence_exposure);
    }
    return out;
}

}  // namespace peerlens::report
