// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit when any fails.

#include <httplib.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "peerlens/graph_io.hpp"
#include "peerlens/knowledge.hpp"
#include "peerlens/ontology.hpp"
#include "peerlens/service.hpp"
#include "peerlens/synthetic.hpp"
#include "support/fixtures.hpp"
#include "support/knowledge_check.hpp"
#include "support/network_check.hpp"
#include "support/oracle_check.hpp"
#include "support/report_check.hpp"
#include "support/study_fixture.hpp"

using namespace peerlens;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned thresholds.
constexpr std::size_t kOracleGraphs = 600;
constexpr std::size_t kOracleMaxNodes = 7;
constexpr double kOracleTolerance = 1e-9;
constexpr double kOracleBudgetSeconds = 60.0;
constexpr std::size_t kFriendRuleSets = 1000;
constexpr std::size_t kRuleStores = 100;
constexpr std::size_t kClassroom = 38;
constexpr double kPipelineBudgetSeconds = 1.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string first(const std::vector<std::string>& issues) {
    return issues.empty() ? std::string() : issues.front();
}

Outcome metric_oracle_suite() {
    const auto start = Clock::now();
    const auto corpus = fixtures::oracle_corpus(20240301, kOracleGraphs, kOracleMaxNodes);
    std::size_t directed = 0, weighted = 0, failing = 0;
    std::string example;
    for (const auto& g : corpus) {
        directed += g.directed();
        weighted += g.weighted();
        auto issues = fixtures::oracle_mismatches(g, kOracleTolerance);
        if (!issues.empty()) {
            ++failing;
            if (example.empty()) example = g.name() + ": " + issues.front();
        }
    }
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = corpus.size() >= 500 && failing == 0 && elapsed < kOracleBudgetSeconds && directed > 0 &&
             directed < corpus.size() && weighted > 0 && weighted < corpus.size();
    std::ostringstream d;
    d << corpus.size() << " graphs (" << directed << " directed, " << weighted << " weighted), " << failing
      << " disagree, " << elapsed << " s";
    if (!example.empty()) d << "; " << example;
    o.detail = d.str();
    return o;
}

Outcome audit_table() {
    // Zone limits of the screening table, written out independently of the scorer.
    auto expected_zone = [](int score) { return score <= 7 ? 1 : score <= 15 ? 2 : score <= 19 ? 3 : 4; };
    Outcome o;
    int previous = 1;
    std::vector<int> jumps;
    for (int score = 0; score <= 40; ++score) {
        std::vector<int> items(survey::kAuditItems, 0);
        for (int left = score, i = 0; left > 0; ++i) {
            items[static_cast<std::size_t>(i)] = std::min(left, 4);
            left -= items[static_cast<std::size_t>(i)];
        }
        const auto r = survey::score_audit(items);
        const int zone = static_cast<int>(r.zone);
        if (r.score != score || zone != expected_zone(score)) {
            o.pass = false;
            o.detail = "score " + std::to_string(score) + " gave zone " + std::to_string(zone);
        }
        if (zone != previous) jumps.push_back(score);
        previous = zone;
    }
    const std::array<int, 10> ten_points{4, 3, 1, 0, 0, 0, 0, 0, 2, 0};
    const auto ten = survey::score_audit(ten_points);
    if (jumps != std::vector<int>{8, 16, 20}) o.pass = false;
    if (ten.score != 10 || ten.zone != survey::AuditZone::II) o.pass = false;
    if (o.detail.empty()) {
        o.detail = "41 scores, zone jumps at 8, 16, 20; score 10 -> zone " + std::string(survey::roman(ten.zone));
    }
    return o;
}

Outcome friend_rule() {
    std::size_t bad = 0;
    std::string example;
    for (std::size_t seed = 1; seed <= kFriendRuleSets; ++seed) {
        auto issues = fixtures::tie_level_violations(fixtures::random_contact_answers(seed, 12));
        if (!issues.empty()) {
            ++bad;
            if (example.empty()) example = "seed " + std::to_string(seed) + ": " + issues.front();
        }
    }
    return {bad == 0, std::to_string(kFriendRuleSets) + " answer sets, " + std::to_string(bad) + " violating" +
                          (example.empty() ? "" : "; " + example)};
}

Outcome rule_engine() {
    std::size_t bad = 0, count_mismatch = 0;
    std::string example;
    for (std::size_t seed = 1; seed <= kRuleStores; ++seed) {
        auto issues = fixtures::rule_engine_issues(seed);
        if (!issues.empty()) {
            ++bad;
            if (example.empty()) example = "seed " + std::to_string(seed) + ": " + issues.front();
        }
        // Every network is written back: seven node metrics per person, six graph metrics.
        const auto store = fixtures::random_study_store(seed);
        std::size_t persons = 0, concepts = 0;
        for (const auto& [id, kind] : store.entities()) {
            persons += kind == knowledge::EntityKind::Person;
            concepts += kind == knowledge::EntityKind::SNAConcept;
        }
        const std::size_t expected = 5 * (7 * persons + 6);
        if (concepts != expected || store.with_predicate("metricValue").size() != expected) {
            ++count_mismatch;
            if (example.empty()) {
                example = "seed " + std::to_string(seed) + ": " + std::to_string(concepts) + " concepts, expected " +
                          std::to_string(expected);
            }
        }
    }
    return {bad == 0 && count_mismatch == 0,
            std::to_string(kRuleStores) + " stores, " + std::to_string(bad) + " with rule issues, " +
                std::to_string(count_mismatch) + " with write-back count != 5(7n+6)" +
                (example.empty() ? "" : "; " + example)};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(PEERLENS_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Outcome pajek_round_trip() {
    const auto corpus = fixtures::oracle_corpus(20240301, kOracleGraphs, kOracleMaxNodes);
    std::size_t bad = 0;
    for (const auto& g : corpus) {
        try {
            if (!label_isomorphic(g, import_pajek(export_pajek(g), g.name()))) ++bad;
        } catch (const std::exception&) {
            ++bad;
        }
    }
    std::size_t golden_bad = 0;
    const std::vector<std::pair<std::string, SocialGraph>> fixtures{{"cyc3.net", fixtures::cyc3()},
                                                                    {"line4.net", fixtures::line4()},
                                                                    {"star4.net", fixtures::star4()},
                                                                    {"k3d.net", fixtures::k3d()}};
    for (const auto& [file, g] : fixtures) {
        const auto expected = golden(file);
        if (expected.empty() || export_pajek(g) != expected) ++golden_bad;
    }
    return {bad == 0 && golden_bad == 0, std::to_string(corpus.size()) + " round trips, " + std::to_string(bad) +
                                             " not isomorphic; " + std::to_string(golden_bad) + "/4 golden files differ"};
}

/// A started API server on an ephemeral port over a fresh data directory.
class LiveServer {
public:
    LiveServer() {
        dir_ = std::filesystem::temp_directory_path() / ("peerlens-acceptance-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(dir_);
        svc_ = std::make_unique<service::StudyService>(dir_, [] { return survey::Date{2024, 3, 1}; });
        service::mount_api(server_, *svc_);
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~LiveServer() {
        server_.stop();
        thread_.join();
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    service::StudyService& service() { return *svc_; }
    httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

private:
    std::filesystem::path dir_;
    std::unique_ptr<service::StudyService> svc_;
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

Outcome end_to_end() {
    LiveServer live;
    auto& svc = live.service();
    auto s = svc.create("Synthetic classroom", 7);
    std::string csv = "full_name,age,gender,class\n";
    for (const auto& r : synthetic::make_roster(kClassroom, 7)) {
        csv += "\"" + r.full_name + "\"," + std::to_string(*r.age) + "," + r.gender + "," + r.class_name + "\n";
    }
    s = svc.import_roster(s->id, csv);
    svc.add_responses(s->id, synthetic::make_answers(s->roster, s->questionnaire, 7, {s->questionnaire.id, {2024, 3, 4}}));
    const auto ready = svc.get(s->id);

    double best = 1e9;
    std::string first_run;
    bool identical = true;
    for (int run = 0; run < 3; ++run) {
        const auto start = Clock::now();
        const auto results = study::analyze(*ready, 1);
        best = std::min(best, seconds_since(start));
        auto bytes = study::encode(results).dump();
        if (run == 0) {
            first_run = std::move(bytes);
        } else if (bytes != first_run) {
            identical = false;
        }
    }

    auto client = live.client();
    auto analyzed = client.Post("/studies/" + s->id + "/analyze", "{}", "application/json");
    auto graphs = client.Get("/studies/" + s->id + "/graphs");
    bool listed = false;
    std::string names;
    if (analyzed && analyzed->status == 200 && graphs && graphs->status == 200) {
        const auto list = study::json::parse(graphs->body).at("graphs");
        names = list.dump();
        listed = list == study::json({"friendship", "acquaintances", "partners", "friends", "consumption"});
    }
    const bool served_same = svc.get(s->id)->latest() != nullptr &&
                             study::encode(*svc.get(s->id)->latest()).dump() == first_run;

    std::ostringstream d;
    d << kClassroom << " students, analyze " << best * 1000 << " ms, runs " << (identical ? "identical" : "DIFFER")
      << ", service result " << (served_same ? "identical" : "DIFFERS") << ", graphs " << names;
    return {best < kPipelineBudgetSeconds && identical && served_same && listed && ready->roster.size() == kClassroom,
            d.str()};
}

Outcome report_rendering() {
    // Nine classmates naming each other at weight 4; P0 names only P1 and is named by P1..P4.
    fixtures::ClassroomSpec spec;
    spec.people = 9;
    for (std::size_t a = 1; a < 9; ++a) {
        for (std::size_t b = 1; b < 9; ++b) {
            if (a != b) spec.contact[{a, b}] = 4;
        }
    }
    spec.contact[{0, 1}] = 4;
    for (std::size_t a = 1; a <= 4; ++a) spec.contact[{a, 0}] = 4;
    spec.audit_scores = {10, 0, 0, 0, 0, 0, 0, 0, 0};
    const auto c = fixtures::make_classroom(spec);
    const auto social = report::compute_social_profile("P0", c.networks);
    const auto text = report::render_report(c.profiles[0], social, c.networks, {});
    const std::string sentence = "S0 declares to have 1 friend and she is considered friend by 4 persons.";
    bool pass = social.declared_friends == 1 && social.named_by == 4 &&
                text.friendship_paragraph.find(sentence) != std::string::npos &&
                fixtures::report_number_issues(text, c.profiles[0], social, c.networks, {}).empty();

    // Parse-back over a whole synthetic classroom.
    auto roster = synthetic::make_roster(kClassroom, 11);
    study::anonymize(roster, 11);
    const auto q = survey::standard_questionnaire();
    const auto answers = synthetic::make_answers(roster, q, 11, {q.id, {2024, 3, 4}});
    const auto profiles = survey::build_profiles(answers, roster, q);
    const auto nets = networks::annotate_all(networks::build_networks(answers, roster, profiles));
    const auto all = report::compute_social_profiles(nets);
    std::size_t bad = 0;
    std::string example;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const auto influencers = report::find_influencers(profiles[i].id, nets, profiles, all);
        const auto t = report::render_report(profiles[i], all[i], nets, influencers);
        const auto issues = fixtures::report_number_issues(t, profiles[i], all[i], nets, influencers);
        if (!issues.empty()) {
            ++bad;
            if (example.empty()) example = profiles[i].id + ": " + first(issues);
        }
    }
    pass = pass && bad == 0;
    return {pass, "\"" + sentence + "\" " + (text.friendship_paragraph.find(sentence) != std::string::npos ? "found" : "MISSING") +
                      "; " + std::to_string(profiles.size()) + " reports parsed back, " + std::to_string(bad) +
                      " with unmatched numbers" + (example.empty() ? "" : "; " + example)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"metric oracle suite", metric_oracle_suite},
        {"AUDIT zone table", audit_table},
        {"friend rule and tie-level containment", friend_rule},
        {"rule engine fixpoint, order invariance, write-back counts", rule_engine},
        {"Pajek round trip and golden files", pajek_round_trip},
        {"38-student end-to-end determinism and scale", end_to_end},
        {"report rendering and parse-back", report_rendering},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail << ")\n" << std::flush;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
