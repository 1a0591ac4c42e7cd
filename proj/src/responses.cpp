#include <algorithm>
#include <map>
#include <set>

#include "peerlens/survey.hpp"

namespace peerlens::survey {

namespace {

ItemRef ref_of(const AnswerRecord& a) { return ItemRef{a.person, a.question, a.target}; }

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Latest answer per (person, question, target).
std::map<ItemRef, const AnswerRecord*> latest_answers(std::span<const AnswerRecord> answers) {
    std::map<ItemRef, const AnswerRecord*> latest;
    for (const auto& a : answers) {
        auto& slot = latest[ref_of(a)];
        if (slot == nullptr || slot->event < a.event) slot = &a;
    }
    return latest;
}

}  // namespace

bool ValidationReport::has_errors() const {
    return !missing_respondents.empty() || !unknown_targets.empty() || !unknown_respondents.empty() ||
           !unknown_questions.empty() || !invalid_values.empty() || !self_targets.empty() ||
           !target_mismatches.empty() || !duplicates.empty();
}

bool ValidationReport::empty() const { return !has_errors() && missing_items.empty(); }

ValidationReport validate_records(std::span<const AnswerRecord> answers, const Roster& roster,
                                  const Questionnaire& questionnaire) {
    std::set<PersonId> members;
    for (const auto& r : roster) members.insert(r.id);

    ValidationReport report;
    for (const auto& a : answers) {
        const auto ref = ref_of(a);
        if (!members.count(a.person)) report.unknown_respondents.push_back(ref);
        const auto* q = questionnaire.find(a.question);
        if (q == nullptr) {
            report.unknown_questions.push_back(ref);
            continue;
        }
        if (q->repeat_over_roster() != a.target.has_value()) {
            report.target_mismatches.push_back(ref);
        } else if (a.target) {
            if (*a.target == a.person) {
                report.self_targets.push_back(ref);
            } else if (!members.count(*a.target)) {
                report.unknown_targets.push_back(ref);
            }
        }
        if (!q->accepts(a.value)) report.invalid_values.push_back(ref);
    }
    sort_unique(report.unknown_respondents);
    sort_unique(report.unknown_questions);
    sort_unique(report.target_mismatches);
    sort_unique(report.self_targets);
    sort_unique(report.unknown_targets);
    sort_unique(report.invalid_values);
    return report;
}

ValidationReport validate_response_set(std::span<const AnswerRecord> answers, const Roster& roster,
                                       const Questionnaire& questionnaire) {
    auto report = validate_records(answers, roster, questionnaire);

    std::map<ItemRef, std::vector<Date>> occurrences;
    std::set<PersonId> respondents;
    for (const auto& a : answers) {
        occurrences[ref_of(a)].push_back(a.event.date);
        respondents.insert(a.person);
    }
    for (auto& [ref, dates] : occurrences) {
        if (dates.size() > 1) {
            std::sort(dates.begin(), dates.end());
            report.duplicates.push_back(Duplicate{ref, dates});
        }
    }

    for (const auto& member : roster) {
        if (!respondents.count(member.id)) {
            report.missing_respondents.push_back(member.id);
            continue;
        }
        for (const auto& q : questionnaire.questions) {
            if (q.repeat_over_roster()) continue;  // unanswered targets mean "no contact"
            ItemRef ref{member.id, q.id, std::nullopt};
            if (!occurrences.count(ref)) report.missing_items.push_back(ref);
        }
    }
    return report;
}

std::vector<PersonProfile> build_profiles(std::span<const AnswerRecord> answers, const Roster& roster,
                                          const Questionnaire& questionnaire) {
    const auto latest = latest_answers(answers);
    auto int_answer = [&](const PersonId& p, std::string_view question) -> std::optional<int> {
        auto it = latest.find(ItemRef{p, std::string(question), std::nullopt});
        if (it == latest.end()) return std::nullopt;
        const auto* v = std::get_if<std::int64_t>(&it->second->value);
        if (v == nullptr) return std::nullopt;
        return static_cast<int>(*v);
    };
    auto instrument_items = [&](const PersonId& p, std::string_view name) -> std::optional<std::vector<int>> {
        std::vector<int> values;
        for (const auto* q : questionnaire.instrument(name)) {
            auto v = int_answer(p, q->id);
            if (!v || !q->accepts(static_cast<std::int64_t>(*v))) return std::nullopt;
            values.push_back(*v);
        }
        return values;
    };

    std::vector<PersonProfile> profiles;
    profiles.reserve(roster.size());
    for (const auto& member : roster) {
        PersonProfile p;
        p.id = member.id;
        p.pseudonym = member.pseudonym;
        p.age = member.age;
        p.gender = member.gender;
        p.class_name = member.class_name;

        if (auto it = latest.find(ItemRef{member.id, std::string(items::kPlaceOfBirth), std::nullopt}); it != latest.end()) {
            p.place_of_birth = to_string(it->second->value);
        }
        p.friends_outside = int_answer(member.id, items::kFriendsOutside);
        p.drinking_mates_outside = int_answer(member.id, items::kDrinkingMatesOutside);
        p.family_drinking_frequency = int_answer(member.id, items::kFamilyDrinking);

        if (auto audit = instrument_items(member.id, "audit"); audit && audit->size() == kAuditItems) {
            p.audit = score_audit(*audit);
            p.audit_frequency = (*audit)[0];
            p.audit_quantity = (*audit)[1];
        }
        if (auto fas = instrument_items(member.id, "fas"); fas && fas->size() == kFasItems) p.fas = score_fas(*fas);
        if (auto ks = instrument_items(member.id, "kidscreen"); ks && ks->size() == kKidscreenItems) {
            p.kidscreen = score_kidscreen(*ks);
        }
        if (auto se = instrument_items(member.id, "self_efficacy"); se && !se->empty()) {
            int sum = 0;
            for (int v : *se) sum += v;
            p.self_efficacy = sum;
        }

        p.first_drink_age = int_answer(member.id, items::kFirstDrinkAge);
        if (auto place = int_answer(member.id, items::kUsualPlaces)) {
            if (const auto* q = questionnaire.find(items::kUsualPlaces)) {
                if (const auto* opt = q->option(*place)) p.usual_places = opt->label;
            }
        }
        for (const auto* q : questionnaire.instrument("estudes")) {
            if (q->id == items::kFirstDrinkAge || q->id == items::kUsualPlaces) continue;
            if (auto v = int_answer(member.id, q->id)) p.estudes_flags[q->id] = *v;
        }
        profiles.push_back(std::move(p));
    }
    return profiles;
}

}  // namespace peerlens::survey
