#include "peerlens/service.hpp"

#include <chrono>
#include <cstdio>

namespace peerlens::service {

ServiceError::ServiceError(ErrorKind kind, const std::string& message, json detail)
    : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

int ServiceError::http_status() const noexcept {
    switch (kind_) {
        case ErrorKind::NotFound: return 404;
        case ErrorKind::Conflict: return 409;
        case ErrorKind::Unprocessable: return 422;
        case ErrorKind::BadRequest: return 400;
    }
    return 500;
}

survey::Date today() {
    const std::chrono::year_month_day ymd{std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())};
    return {static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
            static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

const study::AnalysisResults& require_results(const study::Study& s) {
    const auto* r = s.latest();
    if (r == nullptr) throw ServiceError(ErrorKind::Conflict, "study " + s.id + " has not been analyzed");
    return *r;
}

StudyService::StudyService(std::filesystem::path data_dir, Clock clock)
    : repo_(std::move(data_dir)), clock_(std::move(clock)) {
    for (const auto& id : repo_.ids()) {
        auto slot = std::make_shared<Slot>();
        slot->snapshot = std::make_shared<const study::Study>(repo_.load(id));
        slots_.emplace(id, std::move(slot));
    }
}

std::shared_ptr<StudyService::Slot> StudyService::slot(std::string_view id) const {
    std::shared_lock lock(registry_mutex_);
    auto it = slots_.find(id);
    if (it == slots_.end()) throw ServiceError(ErrorKind::NotFound, "unknown study '" + std::string(id) + "'");
    return it->second;
}

void StudyService::commit(Slot& slot, study::Study next) {
    repo_.save(next);
    auto snapshot = std::make_shared<const study::Study>(std::move(next));
    std::lock_guard lock(slot.pointer);
    slot.snapshot = std::move(snapshot);
}

std::shared_ptr<const study::Study> StudyService::create(std::string title, std::optional<std::uint64_t> seed) {
    if (title.empty()) throw ServiceError(ErrorKind::BadRequest, "a study needs a title");
    std::lock_guard create_lock(create_mutex_);
    int last = 0;
    {
        std::shared_lock lock(registry_mutex_);
        for (const auto& [id, _] : slots_) {
            int n = 0;
            if (std::sscanf(id.c_str(), "study-%d", &n) == 1) last = std::max(last, n);
        }
    }
    char id[32];
    std::snprintf(id, sizeof id, "study-%04d", last + 1);

    study::Study s;
    s.id = id;
    s.title = std::move(title);
    s.created = clock_();
    s.seed = seed.value_or(study::seed_for(s.id));
    s.questionnaire = survey::standard_questionnaire();

    auto slot = std::make_shared<Slot>();
    commit(*slot, std::move(s));
    auto snapshot = slot->current();
    std::unique_lock lock(registry_mutex_);
    slots_.emplace(snapshot->id, std::move(slot));
    return snapshot;
}

std::vector<std::shared_ptr<const study::Study>> StudyService::list() const {
    std::vector<std::shared_ptr<const study::Study>> out;
    std::shared_lock lock(registry_mutex_);
    for (const auto& [_, slot] : slots_) out.push_back(slot->current());
    return out;
}

std::shared_ptr<const study::Study> StudyService::get(std::string_view id) const { return slot(id)->current(); }

std::shared_ptr<const study::Study> StudyService::import_roster(std::string_view id, std::string_view csv) {
    auto s = slot(id);
    std::lock_guard writer(s->writer);
    study::Study next = *s->current();
    if (!next.answers.empty()) {
        throw ServiceError(ErrorKind::Conflict, "study " + next.id + " already has answers; the roster is fixed");
    }
    survey::Roster roster;
    try {
        roster = study::parse_roster_csv(csv);
        study::anonymize(roster, next.seed);
    } catch (const study::RosterError& e) {
        throw ServiceError(ErrorKind::Unprocessable, e.what());
    }
    std::map<std::string, std::string> names;
    for (auto& e : roster) {
        names[e.id] = e.full_name;
        e.full_name.clear();
    }
    repo_.save_identity(next.id, names);
    next.roster = std::move(roster);
    next.status = study::Status::Collecting;
    commit(*s, std::move(next));
    return s->current();
}

survey::ValidationReport StudyService::add_responses(std::string_view id, std::vector<survey::AnswerRecord> answers) {
    auto s = slot(id);
    std::lock_guard writer(s->writer);
    study::Study next = *s->current();
    if (next.status == study::Status::Draft) {
        throw ServiceError(ErrorKind::Conflict, "study " + next.id + " has no roster yet");
    }
    auto batch = survey::validate_records(answers, next.roster, next.questionnaire);
    if (batch.has_errors()) {
        throw ServiceError(ErrorKind::Unprocessable, "the response batch was rejected", codec::encode(batch));
    }
    auto same_item = [](const survey::AnswerRecord& a, const survey::AnswerRecord& b) {
        return a.person == b.person && a.question == b.question && a.target == b.target && a.event == b.event;
    };
    for (auto& a : answers) {
        auto it = std::find_if(next.answers.begin(), next.answers.end(), [&](const auto& old) { return same_item(old, a); });
        if (std::find(next.events.begin(), next.events.end(), a.event) == next.events.end()) {
            next.events.push_back(a.event);
            std::sort(next.events.begin(), next.events.end());
        }
        if (it != next.answers.end()) {
            *it = std::move(a);
        } else {
            next.answers.push_back(std::move(a));
        }
    }
    next.status = study::Status::Collecting;
    auto report = survey::validate_response_set(next.answers, next.roster, next.questionnaire);
    commit(*s, std::move(next));
    return report;
}

std::shared_ptr<const study::Study> StudyService::analyze(std::string_view id) {
    auto s = slot(id);
    std::lock_guard writer(s->writer);
    study::Study next = *s->current();
    if (next.status == study::Status::Draft) {
        throw ServiceError(ErrorKind::Conflict, "study " + next.id + " is a draft; import a roster and responses first");
    }
    try {
        next.results.push_back(study::analyze(next, static_cast<int>(next.results.size()) + 1));
    } catch (const study::ValidationFailed& e) {
        throw ServiceError(ErrorKind::Unprocessable, e.what(), codec::encode(e.report()));
    }
    next.status = study::Status::Analyzed;
    commit(*s, std::move(next));
    return s->current();
}

}  // namespace peerlens::service
