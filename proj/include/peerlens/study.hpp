#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "peerlens/codec.hpp"
#include "peerlens/graph.hpp"
#include "peerlens/networks.hpp"
#include "peerlens/profile_report.hpp"
#include "peerlens/survey.hpp"

namespace peerlens::study {

using codec::json;

inline constexpr std::string_view kBundleSchema = "peerlens.study/1";

enum class Status { Draft, Collecting, Analyzed };

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view name);

struct IndividualResult {
    survey::PersonProfile profile;
    report::SocialProfile social;
    report::ReportText report;
    std::vector<report::Influencer> influencers;
    std::vector<report::Mediator> mediators;
};

/// One immutable analysis run. Graphs are annotated and listed in network order.
struct AnalysisResults {
    int version = 1;
    std::vector<SocialGraph> graphs;
    std::vector<IndividualResult> individuals;
    /// Items left unanswered; the affected instruments are not scored.
    std::vector<survey::ItemRef> missing_items;
    /// Fact store after rules and metric write-back, in fact-file form.
    std::string facts;
    std::size_t fact_count = 0;
    std::size_t derived_count = 0;

    [[nodiscard]] const SocialGraph* graph(std::string_view name) const;
    /// Looks a person up by roster id or pseudonym.
    [[nodiscard]] const IndividualResult* individual(std::string_view id_or_pseudonym) const;
};

/// Roster entries never carry full names here; those live in the identity file.
struct Study {
    std::string id;
    std::string title;
    survey::Date created;
    std::uint64_t seed = 0;
    Status status = Status::Draft;
    survey::Roster roster;
    survey::Questionnaire questionnaire;
    std::vector<survey::QuestionnaireEvent> events;
    std::vector<survey::AnswerRecord> answers;
    std::vector<AnalysisResults> results;

    [[nodiscard]] const AnalysisResults* latest() const { return results.empty() ? nullptr : &results.back(); }
};

class ValidationFailed : public std::runtime_error {
public:
    explicit ValidationFailed(survey::ValidationReport report);
    [[nodiscard]] const survey::ValidationReport& report() const noexcept { return report_; }

private:
    survey::ValidationReport report_;
};

/// Validate, score, build and annotate networks, derive facts, write metrics back, profile
/// and report every student. Depends only on the roster, questionnaire and answers.
AnalysisResults analyze(const Study& study, int version);

/// Per-graph density and diameter with study totals; shared by the API and the CLI.
json summary(const Study& study, const AnalysisResults& results);

json encode(const AnalysisResults& r);
AnalysisResults decode_results(const json& j);
json encode(const IndividualResult& r);

json encode_bundle(const Study& study);
Study decode_bundle(const json& j);

/// Questionnaire with each roster-repeated question listing its targets by id and pseudonym.
json expanded_questionnaire(const Study& study);

// ---------------------------------------------------------------------------
// Roster import and anonymization

class RosterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Header-named columns: full_name (required), age, gender, class, pseudonym. Ids P001.. follow row order.
survey::Roster parse_roster_csv(std::string_view text);

const std::vector<std::string>& surname_pool();

/// Distinct pseudonyms for the entries without one, drawn from a shuffled pool seeded per study.
/// Throws RosterError when the pool has fewer free names than the roster needs.
void anonymize(survey::Roster& roster, std::uint64_t seed, std::span<const std::string> pool = surname_pool());

/// FNV-1a of the study id; the default seed of a new study.
std::uint64_t seed_for(std::string_view study_id);

// ---------------------------------------------------------------------------
// Persistence

/// Bundles live in `<dir>/<id>.study.json`, real names in `<dir>/<id>.identity.json`.
class Repository {
public:
    explicit Repository(std::filesystem::path dir);

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
    [[nodiscard]] std::filesystem::path bundle_path(std::string_view id) const;
    [[nodiscard]] std::filesystem::path identity_path(std::string_view id) const;

    void save(const Study& study) const;
    [[nodiscard]] Study load(std::string_view id) const;
    [[nodiscard]] std::vector<std::string> ids() const;

    void save_identity(std::string_view id, const std::map<std::string, std::string>& names) const;
    [[nodiscard]] std::map<std::string, std::string> load_identity(std::string_view id) const;

private:
    std::filesystem::path dir_;
};

/// Writes through a temporary sibling and renames it over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view content);

/// `PEERLENS_DATA_DIR` when set, otherwise ./peerlens-data.
std::filesystem::path default_data_dir();

}  // namespace peerlens::study
