#include "peerlens/codec.hpp"

#include <array>

namespace peerlens::codec {

namespace {

constexpr std::array<std::pair<survey::QuestionKind, const char*>, 5> kKinds{{
    {survey::QuestionKind::Choice, "choice"},
    {survey::QuestionKind::Likert, "likert"},
    {survey::QuestionKind::Numeric, "numeric"},
    {survey::QuestionKind::Text, "text"},
    {survey::QuestionKind::NetworkGenerating, "network"},
}};

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <typename T>
std::optional<T> take(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->get<T>();
}

survey::AnswerValue decode_value(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) return j.get<std::string>();
    throw CodecError("answer value must be an integer or a string");
}

json encode_value(const survey::AnswerValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    return std::get<std::string>(v);
}

report::Level decode_level(const json& j) {
    auto s = j.get<std::string>();
    for (auto l : {report::Level::Low, report::Level::Medium, report::Level::High}) {
        if (report::to_string(l) == s) return l;
    }
    throw CodecError("unknown level '" + s + "'");
}

survey::FasBand decode_band(const std::string& s) {
    for (auto b : {survey::FasBand::Low, survey::FasBand::MediumLow, survey::FasBand::High}) {
        if (survey::to_string(b) == s) return b;
    }
    throw CodecError("unknown FAS band '" + s + "'");
}

/// Runs f and turns library JSON errors into CodecError.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw CodecError(std::string(what) + ": " + e.what());
    } catch (const survey::SurveyError& e) {
        throw CodecError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json encode(const survey::Date& d) { return d.iso(); }

survey::Date decode_date(const json& j) {
    return guarded("date", [&] { return survey::Date::parse(j.get<std::string>()); });
}

json encode(const survey::Questionnaire& q) {
    json questions = json::array();
    for (const auto& item : q.questions) {
        json o{{"id", item.id}, {"text", item.text}};
        for (const auto& [kind, name] : kKinds) {
            if (kind == item.kind) o["kind"] = name;
        }
        if (!item.options.empty()) {
            json opts = json::array();
            for (const auto& opt : item.options) opts.push_back({{"label", opt.label}, {"value", opt.value}});
            o["options"] = std::move(opts);
        }
        if (item.kind == survey::QuestionKind::Numeric) {
            o["min"] = item.min_value;
            o["max"] = item.max_value;
        }
        if (item.kind == survey::QuestionKind::NetworkGenerating) {
            o["network_scale"] = item.network_scale == survey::NetworkScale::YesNo ? "yes_no" : "contact_strength";
        }
        if (!item.instrument.empty()) o["instrument"] = item.instrument;
        questions.push_back(std::move(o));
    }
    return {{"id", q.id}, {"title", q.title}, {"questions", std::move(questions)}};
}

survey::Questionnaire decode_questionnaire(const json& j) {
    return guarded("questionnaire", [&] {
        survey::Questionnaire q;
        q.id = j.at("id").get<std::string>();
        q.title = j.at("title").get<std::string>();
        for (const auto& o : j.at("questions")) {
            survey::Question item;
            item.id = o.at("id").get<std::string>();
            item.text = o.at("text").get<std::string>();
            auto kind = o.at("kind").get<std::string>();
            bool known = false;
            for (const auto& [k, name] : kKinds) {
                if (kind == name) {
                    item.kind = k;
                    known = true;
                }
            }
            if (!known) throw CodecError("unknown question kind '" + kind + "'");
            if (auto it = o.find("options"); it != o.end()) {
                for (const auto& opt : *it) item.options.push_back({opt.at("label").get<std::string>(), opt.at("value").get<std::int64_t>()});
            }
            item.min_value = o.value("min", std::int64_t{0});
            item.max_value = o.value("max", std::int64_t{0});
            if (o.value("network_scale", std::string()) == "yes_no") item.network_scale = survey::NetworkScale::YesNo;
            item.instrument = o.value("instrument", std::string());
            q.questions.push_back(std::move(item));
        }
        return q;
    });
}

json encode(const survey::RosterEntry& r, bool with_names) {
    json j{{"id", r.id}, {"pseudonym", r.pseudonym}, {"gender", r.gender}, {"class", r.class_name}};
    put(j, "age", r.age);
    if (with_names && !r.full_name.empty()) j["full_name"] = r.full_name;
    return j;
}

survey::RosterEntry decode_roster_entry(const json& j) {
    return guarded("roster entry", [&] {
        survey::RosterEntry r;
        r.id = j.at("id").get<std::string>();
        r.pseudonym = j.value("pseudonym", std::string());
        r.full_name = j.value("full_name", std::string());
        r.age = take<int>(j, "age");
        r.gender = j.value("gender", std::string());
        r.class_name = j.value("class", std::string());
        return r;
    });
}

json encode(const survey::AnswerRecord& a) {
    json j{{"person", a.person},
           {"questionnaire", a.event.questionnaire_id},
           {"date", encode(a.event.date)},
           {"question", a.question},
           {"value", encode_value(a.value)}};
    put(j, "target", a.target);
    return j;
}

survey::AnswerRecord decode_answer(const json& j) {
    return guarded("answer", [&] {
        survey::AnswerRecord a;
        a.person = j.at("person").get<std::string>();
        a.event.questionnaire_id = j.at("questionnaire").get<std::string>();
        a.event.date = decode_date(j.at("date"));
        a.question = j.at("question").get<std::string>();
        a.value = decode_value(j.at("value"));
        a.target = take<std::string>(j, "target");
        return a;
    });
}

std::vector<survey::AnswerRecord> decode_answers(const json& j) {
    const json& list = j.is_object() && j.contains("answers") ? j.at("answers") : j;
    if (!list.is_array()) throw CodecError("answers must be a JSON array");
    std::vector<survey::AnswerRecord> out;
    out.reserve(list.size());
    for (const auto& a : list) out.push_back(decode_answer(a));
    return out;
}

json encode(const survey::ItemRef& r) {
    json j{{"person", r.person}, {"question", r.question}};
    put(j, "target", r.target);
    return j;
}

survey::ItemRef decode_item_ref(const json& j) {
    return guarded("item", [&] {
        return survey::ItemRef{j.at("person").get<std::string>(), j.at("question").get<std::string>(),
                               take<std::string>(j, "target")};
    });
}

json encode(const survey::ValidationReport& r) {
    auto items = [](const std::vector<survey::ItemRef>& refs) {
        json a = json::array();
        for (const auto& ref : refs) a.push_back(encode(ref));
        return a;
    };
    json duplicates = json::array();
    for (const auto& d : r.duplicates) {
        json dates = json::array();
        for (const auto& date : d.dates) dates.push_back(encode(date));
        duplicates.push_back({{"item", encode(d.item)}, {"dates", std::move(dates)}});
    }
    return {{"has_errors", r.has_errors()},
            {"missing_respondents", r.missing_respondents},
            {"missing_items", items(r.missing_items)},
            {"unknown_targets", items(r.unknown_targets)},
            {"unknown_respondents", items(r.unknown_respondents)},
            {"unknown_questions", items(r.unknown_questions)},
            {"invalid_values", items(r.invalid_values)},
            {"self_targets", items(r.self_targets)},
            {"target_mismatches", items(r.target_mismatches)},
            {"duplicates", std::move(duplicates)}};
}

json encode(const survey::PersonProfile& p) {
    json j{{"id", p.id}, {"pseudonym", p.pseudonym}, {"gender", p.gender}, {"class", p.class_name}};
    put(j, "age", p.age);
    put(j, "place_of_birth", p.place_of_birth);
    put(j, "friends_outside", p.friends_outside);
    put(j, "drinking_mates_outside", p.drinking_mates_outside);
    put(j, "family_drinking_frequency", p.family_drinking_frequency);
    if (p.audit) {
        j["audit"] = {{"score", p.audit->score},
                      {"zone", std::string(survey::roman(p.audit->zone))},
                      {"intervention", p.audit->intervention}};
    }
    put(j, "audit_frequency", p.audit_frequency);
    put(j, "audit_quantity", p.audit_quantity);
    if (p.fas) j["fas"] = {{"score", p.fas->score}, {"band", std::string(survey::to_string(p.fas->band))}};
    if (p.kidscreen) {
        json scales = json::object();
        for (std::size_t i = 0; i < p.kidscreen->scales.size(); ++i) {
            scales[std::string(survey::to_string(static_cast<survey::KidscreenScale>(i)))] = p.kidscreen->scales[i];
        }
        j["kidscreen"] = {{"total", p.kidscreen->total}, {"scales", std::move(scales)}};
    }
    put(j, "self_efficacy", p.self_efficacy);
    put(j, "first_drink_age", p.first_drink_age);
    put(j, "usual_places", p.usual_places);
    if (!p.estudes_flags.empty()) j["estudes"] = p.estudes_flags;
    return j;
}

survey::PersonProfile decode_profile(const json& j) {
    return guarded("profile", [&] {
        survey::PersonProfile p;
        p.id = j.at("id").get<std::string>();
        p.pseudonym = j.value("pseudonym", std::string());
        p.gender = j.value("gender", std::string());
        p.class_name = j.value("class", std::string());
        p.age = take<int>(j, "age");
        p.place_of_birth = take<std::string>(j, "place_of_birth");
        p.friends_outside = take<int>(j, "friends_outside");
        p.drinking_mates_outside = take<int>(j, "drinking_mates_outside");
        p.family_drinking_frequency = take<int>(j, "family_drinking_frequency");
        if (auto it = j.find("audit"); it != j.end()) {
            auto zone = survey::parse_audit_zone(it->at("zone").get<std::string>());
            if (!zone) throw CodecError("unknown AUDIT zone");
            p.audit = survey::AuditResult{it->at("score").get<int>(), *zone, it->at("intervention").get<std::string>()};
        }
        p.audit_frequency = take<int>(j, "audit_frequency");
        p.audit_quantity = take<int>(j, "audit_quantity");
        if (auto it = j.find("fas"); it != j.end()) {
            p.fas = survey::FasResult{it->at("score").get<int>(), decode_band(it->at("band").get<std::string>())};
        }
        if (auto it = j.find("kidscreen"); it != j.end()) {
            survey::KidscreenResult k;
            k.total = it->at("total").get<int>();
            for (std::size_t i = 0; i < k.scales.size(); ++i) {
                k.scales[i] = it->at("scales").at(std::string(survey::to_string(static_cast<survey::KidscreenScale>(i)))).get<int>();
            }
            p.kidscreen = k;
        }
        p.self_efficacy = take<int>(j, "self_efficacy");
        p.first_drink_age = take<int>(j, "first_drink_age");
        p.usual_places = take<std::string>(j, "usual_places");
        if (auto it = j.find("estudes"); it != j.end()) p.estudes_flags = it->get<std::map<std::string, std::int64_t>>();
        return p;
    });
}

json encode(const sna::NodeMetrics& m) {
    return {{"in_degree", m.in_degree},         {"out_degree", m.out_degree},     {"total_degree", m.total_degree},
            {"reach", m.reach},                 {"closeness_out", m.closeness_out}, {"closeness_in", m.closeness_in},
            {"betweenness", m.betweenness}};
}

sna::NodeMetrics decode_node_metrics(const json& j) {
    return guarded("node metrics", [&] {
        sna::NodeMetrics m;
        m.in_degree = j.at("in_degree").get<std::size_t>();
        m.out_degree = j.at("out_degree").get<std::size_t>();
        m.total_degree = j.at("total_degree").get<std::size_t>();
        m.reach = j.at("reach").get<std::size_t>();
        m.closeness_out = j.at("closeness_out").get<double>();
        m.closeness_in = j.at("closeness_in").get<double>();
        m.betweenness = j.at("betweenness").get<double>();
        return m;
    });
}

json encode(const report::SocialProfile& s) {
    json underlying = json::object();
    for (const auto& [name, m] : s.underlying) underlying[name] = encode(m);
    return {{"person", s.person},
            {"popularity", std::string(report::to_string(s.popularity))},
            {"mediator", std::string(report::to_string(s.mediator))},
            {"influence", std::string(report::to_string(s.influence))},
            {"declared_friends", s.declared_friends},
            {"named_by", s.named_by},
            {"popularity_score", s.popularity_score},
            {"mediator_score", s.mediator_score},
            {"influence_score", s.influence_score},
            {"underlying", std::move(underlying)}};
}

report::SocialProfile decode_social_profile(const json& j) {
    return guarded("social profile", [&] {
        report::SocialProfile s;
        s.person = j.at("person").get<std::string>();
        s.popularity = decode_level(j.at("popularity"));
        s.mediator = decode_level(j.at("mediator"));
        s.influence = decode_level(j.at("influence"));
        s.declared_friends = j.at("declared_friends").get<std::size_t>();
        s.named_by = j.at("named_by").get<std::size_t>();
        s.popularity_score = j.at("popularity_score").get<double>();
        s.mediator_score = j.at("mediator_score").get<double>();
        s.influence_score = j.at("influence_score").get<double>();
        for (const auto& [name, m] : j.at("underlying").items()) s.underlying[name] = decode_node_metrics(m);
        return s;
    });
}

json encode(const report::ReportText& t) {
    return {{"friendship", t.friendship_paragraph}, {"consumption", t.consumption_paragraph}};
}

report::ReportText decode_report_text(const json& j) {
    return guarded("report", [&] {
        return report::ReportText{j.at("friendship").get<std::string>(), j.at("consumption").get<std::string>()};
    });
}

json encode(const report::Influencer& i) {
    return {{"person", i.person},
            {"pseudonym", i.pseudonym},
            {"zone_difference", i.zone_difference},
            {"tie_weight", i.tie_weight},
            {"drinking_tie", i.drinking_tie}};
}

report::Influencer decode_influencer(const json& j) {
    return guarded("influencer", [&] {
        return report::Influencer{j.at("person").get<std::string>(), j.at("pseudonym").get<std::string>(),
                                  j.at("zone_difference").get<int>(), j.at("tie_weight").get<int>(),
                                  j.at("drinking_tie").get<bool>()};
    });
}

json encode(const report::Mediator& m) {
    return {{"person", m.person}, {"pseudonym", m.pseudonym}, {"fraction", m.fraction}, {"betweenness", m.betweenness}};
}

report::Mediator decode_mediator(const json& j) {
    return guarded("mediator", [&] {
        return report::Mediator{j.at("person").get<std::string>(), j.at("pseudonym").get<std::string>(),
                                j.at("fraction").get<double>(), j.at("betweenness").get<double>()};
    });
}

json encode(const SocialGraph& g) {
    json nodes = json::array();
    for (NodeId v = 0; v < g.node_count(); ++v) {
        json attrs = json::object();
        for (const auto& [key, value] : g.attributes(v)) {
            std::visit([&](const auto& x) { attrs[key] = x; }, value);
        }
        nodes.push_back({{"id", v}, {"label", g.label(v)}, {"attributes", std::move(attrs)}, {"metrics", g.node_annotations(v)}});
    }
    json ties = json::array();
    for (const auto& t : g.ties()) {
        json o{{"src", t.src}, {"dst", t.dst}};
        put(o, "weight", t.weight);
        ties.push_back(std::move(o));
    }
    return {{"name", g.name()},           {"directed", g.directed()}, {"weighted", g.weighted()},
            {"annotations", g.graph_annotations()}, {"nodes", std::move(nodes)}, {"ties", std::move(ties)}};
}

SocialGraph decode_graph(const json& j) {
    return guarded("graph", [&] {
        SocialGraph g(j.at("name").get<std::string>(),
                      j.at("directed").get<bool>() ? Directedness::Directed : Directedness::Undirected,
                      j.at("weighted").get<bool>() ? Weighting::Weighted : Weighting::Unweighted);
        for (const auto& n : j.at("nodes")) {
            AttributeMap attrs;
            for (const auto& [key, value] : n.at("attributes").items()) {
                if (value.is_number_integer()) {
                    attrs[key] = value.get<std::int64_t>();
                } else if (value.is_number()) {
                    attrs[key] = value.get<double>();
                } else {
                    attrs[key] = value.get<std::string>();
                }
            }
            auto ref = g.add_node(n.at("label").get<std::string>(), std::move(attrs));
            for (const auto& [key, value] : n.at("metrics").items()) g.set_node_annotation(ref.id, key, value.get<double>());
        }
        for (const auto& t : j.at("ties")) {
            g.add_tie(t.at("src").get<NodeId>(), t.at("dst").get<NodeId>(), take<int>(t, "weight"));
        }
        for (const auto& [key, value] : j.at("annotations").items()) g.set_graph_annotation(key, value.get<double>());
        return g;
    });
}

}  // namespace peerlens::codec
