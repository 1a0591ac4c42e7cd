#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "peerlens/study.hpp"

namespace httplib {
class Server;
}

namespace peerlens::service {

using study::json;

enum class ErrorKind { NotFound, Conflict, Unprocessable, BadRequest };

/// Carries the HTTP status and an optional JSON detail (the validation report for 422).
class ServiceError : public std::runtime_error {
public:
    ServiceError(ErrorKind kind, const std::string& message, json detail = nullptr);
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] int http_status() const noexcept;
    [[nodiscard]] const json& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    json detail_;
};

using Clock = std::function<survey::Date()>;

survey::Date today();

/// Study lifecycle over a Repository. Writers to one study are serialized by a per-study
/// mutex; readers get the last committed immutable snapshot without taking that lock.
class StudyService {
public:
    explicit StudyService(std::filesystem::path data_dir, Clock clock = today);

    std::shared_ptr<const study::Study> create(std::string title, std::optional<std::uint64_t> seed = std::nullopt);
    [[nodiscard]] std::vector<std::shared_ptr<const study::Study>> list() const;
    /// Throws NotFound.
    [[nodiscard]] std::shared_ptr<const study::Study> get(std::string_view id) const;

    /// Only while no answers exist. Real names go to the identity file, pseudonyms to the bundle.
    std::shared_ptr<const study::Study> import_roster(std::string_view id, std::string_view csv);

    /// Record-level errors reject the whole batch (422). Accepted records replace earlier answers to
    /// the same item at the same event. Returns the report for the full response set.
    survey::ValidationReport add_responses(std::string_view id, std::vector<survey::AnswerRecord> answers);

    /// Runs the pipeline and commits a new results version.
    std::shared_ptr<const study::Study> analyze(std::string_view id);

    [[nodiscard]] const study::Repository& repository() const noexcept { return repo_; }

private:
    struct Slot {
        std::mutex writer;
        /// Held only to copy or swap the pointer, never during a write.
        mutable std::mutex pointer;
        std::shared_ptr<const study::Study> snapshot;

        [[nodiscard]] std::shared_ptr<const study::Study> current() const {
            std::lock_guard lock(pointer);
            return snapshot;
        }
    };

    [[nodiscard]] std::shared_ptr<Slot> slot(std::string_view id) const;
    void commit(Slot& slot, study::Study next);

    study::Repository repo_;
    Clock clock_;
    mutable std::shared_mutex registry_mutex_;
    std::map<std::string, std::shared_ptr<Slot>, std::less<>> slots_;
    std::mutex create_mutex_;
};

/// The latest results of a study, or Conflict when it has not been analyzed.
const study::AnalysisResults& require_results(const study::Study& s);

/// Registers every API route on `server`.
void mount_api(httplib::Server& server, StudyService& service);

/// Serves the API, plus the UI assets under `/` when `ui_dir` exists. Blocks until stopped.
bool serve(StudyService& service, const std::string& host, int port,
           const std::optional<std::filesystem::path>& ui_dir = std::nullopt);

}  // namespace peerlens::service
