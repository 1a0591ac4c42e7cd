#include "peerlens/ontology.hpp"

#include <initializer_list>

#include "peerlens/networks.hpp"

namespace peerlens::knowledge {

namespace {

using K = EntityKind;
using T = ValueType;

PredicateDecl relation(std::string name, std::set<K> subjects, std::set<K> objects, std::string comment) {
    return PredicateDecl{std::move(name), std::move(subjects), true, std::move(objects), {}, std::move(comment)};
}

PredicateDecl attribute(std::string name, std::set<K> subjects, std::set<T> types, std::string comment) {
    return PredicateDecl{std::move(name), std::move(subjects), false, {}, std::move(types), std::move(comment)};
}

Pattern pat(Term s, std::string p, Term o) { return Pattern{std::move(s), std::move(p), std::move(o)}; }
HeadTemplate head(HeadTerm s, std::string p, HeadTerm o) { return HeadTemplate{std::move(s), std::move(p), std::move(o)}; }
HeadTerm hv(std::string name) { return Variable{std::move(name)}; }

/// Relationship instance from a contact answer at or above a weight.
Rule contact_rule(std::string name, std::string predicate, std::int64_t min_weight) {
    return Rule{std::move(name),
                {pat(var("p"), "answered", var("a")), pat(var("a"), "toQuestion", var("q")),
                 pat(var("q"), "definesNetwork", ent(ids::network(networks::kFriendshipName))),
                 pat(var("a"), "aboutPerson", var("t")), pat(var("a"), "hasAnswer", var("ans")),
                 pat(var("ans"), "answerValue", var("w"))},
                {Filter{"w", Comparison::Ge, std::int64_t{min_weight}}},
                {head(hv("p"), std::move(predicate), hv("t"))}};
}

Rule zone_rule(survey::AuditZone zone, std::int64_t low, std::int64_t high) {
    auto numeral = std::string(survey::roman(zone));
    return Rule{"risk-zone-" + numeral,
                {pat(var("c"), "characteristicOf", var("p")), pat(var("p"), "auditScore", var("s"))},
                {Filter{"s", Comparison::Ge, low}, Filter{"s", Comparison::Le, high}},
                {head(hv("c"), "riskZone", Value{numeral})}};
}

void replace_value(Store& store, const std::string& concept_id, double value) {
    const Assertion fresh{concept_id, "metricValue", value};
    for (const auto& old : store.objects(concept_id, "metricValue")) {
        if (old != fresh.object) store.retract({concept_id, "metricValue", old});
    }
    store.assert_fact(fresh);
}

}  // namespace

namespace ids {
std::string person(std::string_view person_id) { return "person:" + std::string(person_id); }
std::string network(std::string_view name) { return "network:" + std::string(name); }
std::string questionnaire(std::string_view id) { return "questionnaire:" + std::string(id); }
std::string question(std::string_view id) { return "question:" + std::string(id); }
std::string event(const survey::QuestionnaireEvent& e) { return "event:" + e.questionnaire_id + ":" + e.date.iso(); }
std::string person_concept(std::string_view person_id, std::string_view network_name, std::string_view metric) {
    return "concept:" + person(person_id) + ":" + network(network_name) + ":" + std::string(metric);
}
std::string network_concept(std::string_view network_name, std::string_view metric) {
    return "concept:" + network(network_name) + ":" + std::string(metric);
}
}  // namespace ids

Vocabulary standard_vocabulary() {
    Vocabulary v;
    const std::set<K> questions{K::Question, K::QuestionSNA};
    const std::set<K> classes{K::ClassOnSchool};
    for (auto&& d : std::initializer_list<PredicateDecl>{
             // People
             attribute("name", {}, {T::String}, "Display name of a school, class, course, network or questionnaire"),
             attribute("pseudonym", {K::Person}, {T::String}, "Anonymized surname shown in every output"),
             attribute("age", {K::Person}, {T::Integer}, "Age in years"),
             attribute("gender", {K::Person}, {T::String}, "Gender code as given in the roster"),
             attribute("placeOfBirth", {K::Person}, {T::String}, "Free-text place of birth"),
             relation("memberOf", {K::Person}, classes, "Person belongs to a class"),
             relation("atSchool", classes, {K::School}, "Class is held at a school"),
             relation("ofCourse", classes, {K::Course}, "Course the class follows"),
             relation("ofCourseLevel", classes, {K::CourseLevel}, "Level of the course"),
             relation("ofGroup", classes, {K::GroupOfClass}, "Group letter of the class"),
             relation("ofAcademicCategory", classes, {K::AcademicCategory}, "Academic category of the class"),
             attribute("auditScore", {K::Person}, {T::Integer}, "AUDIT total 0..40"),
             attribute("fasScore", {K::Person}, {T::Integer}, "FAS II total 0..9"),
             attribute("fasBand", {K::Person}, {T::String}, "FAS II band"),
             attribute("kidscreenTotal", {K::Person}, {T::Integer}, "KIDSCREEN-27 raw total"),
             attribute("selfEfficacy", {K::Person}, {T::Integer}, "Self-efficacy raw total"),
             // Questionnaire
             relation("hasQuestion", {K::Questionnaire}, questions, "Questionnaire contains a question"),
             attribute("questionText", questions, {T::String}, "Wording of a question"),
             attribute("ofInstrument", questions, {T::String}, "Instrument tag (audit, fas, kidscreen, ...)"),
             relation("generatesNetwork", {K::Questionnaire}, {K::Network}, "Answering the questionnaire places the respondent in the network"),
             relation("definesNetwork", {K::QuestionSNA}, {K::Network}, "Roster-repeated question whose answers are the network ties"),
             relation("ofQuestionnaire", {K::QuestionnairePastEvent}, {K::Questionnaire}, "Questionnaire administered at the event"),
             attribute("eventDate", {K::QuestionnairePastEvent}, {T::Date}, "Date the questionnaire was completed"),
             relation("answeredAt", {K::Person}, {K::QuestionnairePastEvent}, "Person took part in the event"),
             relation("answered", {K::Person}, {K::AnswerOfPersonToQuestion}, "Person gave the answer"),
             relation("atEvent", {K::AnswerOfPersonToQuestion}, {K::QuestionnairePastEvent}, "Event the answer belongs to"),
             relation("toQuestion", {K::AnswerOfPersonToQuestion}, questions, "Question being answered"),
             relation("aboutPerson", {K::AnswerOfPersonToQuestion}, {K::Person}, "Classmate a roster-repeated answer refers to"),
             relation("hasAnswer", {K::AnswerOfPersonToQuestion}, {K::Answer}, "Answer value node"),
             attribute("answerValue", {K::Answer}, {T::Integer, T::String}, "Raw coded value"),
             attribute("answerLabel", {K::Answer}, {T::String}, "Option label of a coded value"),
             // Social network analysis
             relation("memberOfNetwork", {K::Person}, {K::Network}, "Person is an actor of the network"),
             relation("derivedFrom", {K::Network}, {K::Network}, "Network computed from another network"),
             relation("acquaintanceOf", {K::Person}, {K::Person}, "Contact answer of at least 2"),
             relation("partnerOf", {K::Person}, {K::Person}, "Contact answer of at least 3"),
             relation("closeContactOf", {K::Person}, {K::Person}, "Contact answer of at least 4"),
             relation("friendOf", {K::Person}, {K::Person}, "Reciprocated close contact"),
             relation("drinksWith", {K::Person}, {K::Person}, "Would go out for a drink with"),
             relation("hasCharacteristic", {K::Person}, {K::SNACharacteristic}, "Characteristic of the person in one network"),
             relation("characteristicOf", {K::SNACharacteristic}, {K::Person}, "Person the characteristic describes"),
             relation("inNetwork", {K::SNACharacteristic}, {K::Network}, "Network the characteristic refers to"),
             attribute("riskZone", {K::SNACharacteristic}, {T::String}, "AUDIT risk zone I..IV"),
             relation("derivedFromAnswer", {K::SNACharacteristic}, {K::AnswerOfPersonToQuestion}, "Answer the characteristic was computed from"),
             relation("conceptOfPerson", {K::SNAConcept}, {K::Person}, "Person a node-level measure belongs to"),
             relation("conceptInNetwork", {K::SNAConcept}, {K::Network}, "Network a node-level measure was computed on"),
             relation("conceptOfNetwork", {K::SNAConcept}, {K::Network}, "Network a graph-level measure describes"),
             attribute("metricName", {K::SNAConcept}, {T::String}, "Measure name from the annotation vocabulary"),
             attribute("metricValue", {K::SNAConcept}, {T::Number}, "Measure value"),
             relation("hasConcept", {K::SNACharacteristic, K::Network}, {K::SNAConcept}, "Measure attached to a characteristic or a network"),
         }) {
        v.declare(d);
    }
    return v;
}

std::vector<Rule> standard_rules() {
    using survey::AuditZone;
    std::vector<Rule> rules;
    rules.push_back(Rule{"network-membership",
                         {pat(var("p"), "answeredAt", var("ev")), pat(var("ev"), "ofQuestionnaire", var("qn")),
                          pat(var("qn"), "generatesNetwork", var("net"))},
                         {},
                         {head(hv("p"), "memberOfNetwork", hv("net"))}});
    rules.push_back(contact_rule("acquaintance-tie", "acquaintanceOf", networks::kAcquaintanceMinWeight));
    rules.push_back(contact_rule("partner-tie", "partnerOf", networks::kPartnerMinWeight));
    rules.push_back(contact_rule("close-contact-tie", "closeContactOf", networks::kFriendMinWeight));
    rules.push_back(Rule{"friend-tie",
                         {pat(var("p"), "closeContactOf", var("t")), pat(var("t"), "closeContactOf", var("p"))},
                         {},
                         {head(hv("p"), "friendOf", hv("t"))}});
    rules.push_back(Rule{"drinking-tie",
                         {pat(var("p"), "answered", var("a")), pat(var("a"), "toQuestion", var("q")),
                          pat(var("q"), "definesNetwork", ent(ids::network(networks::kConsumptionName))),
                          pat(var("a"), "aboutPerson", var("t")), pat(var("a"), "hasAnswer", var("ans")),
                          pat(var("ans"), "answerValue", lit(std::int64_t{1}))},
                         {},
                         {head(hv("p"), "drinksWith", hv("t"))}});
    rules.push_back(zone_rule(AuditZone::I, 0, 7));
    rules.push_back(zone_rule(AuditZone::II, 8, 15));
    rules.push_back(zone_rule(AuditZone::III, 16, 19));
    rules.push_back(zone_rule(AuditZone::IV, 20, 40));
    rules.push_back(Rule{"person-characteristic",
                         {pat(var("p"), "memberOfNetwork", var("net"))},
                         {},
                         {head(hv("p"), "hasCharacteristic", Mint{K::SNACharacteristic, "characteristic", {"p", "net"}}),
                          head(Mint{K::SNACharacteristic, "characteristic", {"p", "net"}}, "characteristicOf", hv("p")),
                          head(Mint{K::SNACharacteristic, "characteristic", {"p", "net"}}, "inNetwork", hv("net"))}});
    rules.push_back(Rule{"characteristic-answers",
                         {pat(var("c"), "characteristicOf", var("p")), pat(var("p"), "answered", var("a")),
                          pat(var("a"), "toQuestion", var("q")), pat(var("q"), "ofInstrument", lit(std::string("audit")))},
                         {},
                         {head(hv("c"), "derivedFromAnswer", hv("a"))}});
    rules.push_back(Rule{"person-concepts",
                         {pat(var("m"), "conceptOfPerson", var("p")), pat(var("m"), "conceptInNetwork", var("net")),
                          pat(var("c"), "characteristicOf", var("p")), pat(var("c"), "inNetwork", var("net"))},
                         {},
                         {head(hv("c"), "hasConcept", hv("m"))}});
    rules.push_back(Rule{"network-concepts",
                         {pat(var("m"), "conceptOfNetwork", var("net"))},
                         {},
                         {head(hv("net"), "hasConcept", hv("m"))}});
    return rules;
}

void populate(Store& store, const survey::Questionnaire& questionnaire, const survey::Roster& roster,
              std::span<const survey::AnswerRecord> answers, std::span<const survey::PersonProfile> profiles) {
    const auto qn = ids::questionnaire(questionnaire.id);
    store.add_entity(qn, K::Questionnaire);
    store.assert_fact({qn, "name", questionnaire.title});

    const std::string friendship = ids::network(networks::kFriendshipName);
    for (auto name : {networks::kFriendshipName, networks::kAcquaintancesName, networks::kPartnersName,
                      networks::kFriendsName, networks::kConsumptionName}) {
        auto id = ids::network(name);
        store.add_entity(id, K::Network);
        store.assert_fact({id, "name", std::string(name)});
        store.assert_fact({qn, "generatesNetwork", EntityRef{id}});
        if (name != networks::kFriendshipName && name != networks::kConsumptionName) {
            store.assert_fact({id, "derivedFrom", EntityRef{friendship}});
        }
    }

    for (const auto& q : questionnaire.questions) {
        auto id = ids::question(q.id);
        store.add_entity(id, q.repeat_over_roster() ? K::QuestionSNA : K::Question);
        store.assert_fact({qn, "hasQuestion", EntityRef{id}});
        store.assert_fact({id, "questionText", q.text});
        if (!q.instrument.empty()) store.assert_fact({id, "ofInstrument", q.instrument});
        if (q.id == survey::items::kFriendship) store.assert_fact({id, "definesNetwork", EntityRef{friendship}});
        if (q.id == survey::items::kConsumption) {
            store.assert_fact({id, "definesNetwork", EntityRef{ids::network(networks::kConsumptionName)}});
        }
    }

    for (const auto& r : roster) {
        auto id = ids::person(r.id);
        store.add_entity(id, K::Person);
        if (!r.pseudonym.empty()) store.assert_fact({id, "pseudonym", r.pseudonym});
        if (r.age) store.assert_fact({id, "age", std::int64_t{*r.age}});
        if (!r.gender.empty()) store.assert_fact({id, "gender", r.gender});
        if (!r.class_name.empty()) {
            auto cls = "class:" + r.class_name;
            store.add_entity(cls, K::ClassOnSchool);
            store.assert_fact({cls, "name", r.class_name});
            store.assert_fact({id, "memberOf", EntityRef{cls}});
        }
    }

    for (const auto& p : profiles) {
        auto id = ids::person(p.id);
        if (!store.kind_of(id)) continue;
        if (p.place_of_birth) store.assert_fact({id, "placeOfBirth", *p.place_of_birth});
        if (p.audit) store.assert_fact({id, "auditScore", std::int64_t{p.audit->score}});
        if (p.fas) {
            store.assert_fact({id, "fasScore", std::int64_t{p.fas->score}});
            store.assert_fact({id, "fasBand", std::string(survey::to_string(p.fas->band))});
        }
        if (p.kidscreen) store.assert_fact({id, "kidscreenTotal", std::int64_t{p.kidscreen->total}});
        if (p.self_efficacy) store.assert_fact({id, "selfEfficacy", std::int64_t{*p.self_efficacy}});
    }

    for (const auto& a : answers) {
        const auto* q = questionnaire.find(a.question);
        if (!q) throw KnowledgeError(KnowledgeError::Code::DanglingReference, "unknown question '" + a.question + "'");
        auto person = ids::person(a.person);
        auto event = ids::event(a.event);
        store.add_entity(event, K::QuestionnairePastEvent);
        store.assert_fact({event, "ofQuestionnaire", EntityRef{ids::questionnaire(a.event.questionnaire_id)}});
        store.assert_fact({event, "eventDate", a.event.date});
        store.assert_fact({person, "answeredAt", EntityRef{event}});

        auto key = a.person + ":" + a.question + (a.target ? ":" + *a.target : std::string()) + ":" + a.event.date.iso();
        auto given = "aopq:" + key;
        auto value = "answer:" + key;
        store.add_entity(given, K::AnswerOfPersonToQuestion);
        store.add_entity(value, K::Answer);
        store.assert_fact({person, "answered", EntityRef{given}});
        store.assert_fact({given, "atEvent", EntityRef{event}});
        store.assert_fact({given, "toQuestion", EntityRef{ids::question(a.question)}});
        store.assert_fact({given, "hasAnswer", EntityRef{value}});
        if (a.target) store.assert_fact({given, "aboutPerson", EntityRef{ids::person(*a.target)}});
        if (const auto* i = std::get_if<std::int64_t>(&a.value)) {
            store.assert_fact({value, "answerValue", *i});
            if (const auto* opt = q->option(*i)) store.assert_fact({value, "answerLabel", opt->label});
        } else {
            store.assert_fact({value, "answerValue", std::get<std::string>(a.value)});
        }
    }
}

void write_back_metrics(Store& store, const SocialGraph& g) {
    const auto net_name = g.name();
    const auto net = ids::network(net_name);

    std::vector<std::string> persons(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto attr = g.attribute(v, networks::kPersonIdAttr);
        if (!attr) {
            throw KnowledgeError(KnowledgeError::Code::DanglingReference,
                                 "node '" + g.label(v) + "' of " + net_name + " has no person mapping");
        }
        persons[v] = peerlens::to_string(*attr);
        if (store.kind_of(ids::person(persons[v])) != K::Person) {
            throw KnowledgeError(KnowledgeError::Code::DanglingReference,
                                 "node '" + g.label(v) + "' maps to unknown person '" + persons[v] + "'");
        }
    }

    store.add_entity(net, K::Network);
    for (const auto& [metric, value] : g.graph_annotations()) {
        auto id = ids::network_concept(net_name, metric);
        store.add_entity(id, K::SNAConcept);
        store.assert_fact({id, "conceptOfNetwork", EntityRef{net}});
        store.assert_fact({id, "metricName", metric});
        replace_value(store, id, value);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const auto& [metric, value] : g.node_annotations(v)) {
            auto id = ids::person_concept(persons[v], net_name, metric);
            store.add_entity(id, K::SNAConcept);
            store.assert_fact({id, "conceptOfPerson", EntityRef{ids::person(persons[v])}});
            store.assert_fact({id, "conceptInNetwork", EntityRef{net}});
            store.assert_fact({id, "metricName", metric});
            replace_value(store, id, value);
        }
    }
}

std::optional<double> person_metric(const Store& store, std::string_view person_id, std::string_view network,
                                    std::string_view metric) {
    auto id = ids::person_concept(person_id, network, metric);
    if (!store.kind_of(id)) return std::nullopt;
    auto values = store.objects(id, "metricValue");
    if (values.empty()) return std::nullopt;
    return numeric(values.front());
}

}  // namespace peerlens::knowledge
