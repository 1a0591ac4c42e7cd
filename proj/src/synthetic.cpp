#include "peerlens/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

namespace peerlens::synthetic {

namespace {

/// Portable draws: mt19937_64 output is fully specified, the std distributions are not.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(rng_() % span);
    }
    double unit() { return static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0); }

private:
    std::mt19937_64 rng_;
};

const char* const kGiven[] = {"Ana",   "Luis",  "Marta", "Pablo", "Lucía", "Javier", "Elena", "Diego",
                              "Sara",  "Hugo",  "Irene", "Adrián", "Nerea", "Álvaro", "Paula", "Mario"};
const char* const kFamily[] = {"García", "Fernández", "González", "Rodríguez", "López",  "Martínez",
                               "Sánchez", "Pérez",     "Álvarez",  "Gómez",     "Díaz",   "Moreno",
                               "Muñoz",   "Romero",    "Alonso",   "Gutiérrez", "Navarro", "Torres"};

}  // namespace

survey::Roster make_roster(std::size_t students, std::uint64_t seed) {
    Draw draw(seed);
    survey::Roster roster;
    roster.reserve(students);
    for (std::size_t i = 0; i < students; ++i) {
        char id[24];
        std::snprintf(id, sizeof id, "P%03zu", i + 1);
        survey::RosterEntry e;
        e.id = id;
        e.full_name = std::string(kGiven[draw.between(0, 15)]) + " " + kFamily[draw.between(0, 17)] + " " +
                      kFamily[draw.between(0, 17)] + " " + std::to_string(i + 1);
        e.age = static_cast<int>(draw.between(16, 19));
        e.gender = draw.between(0, 1) == 0 ? "F" : "M";
        e.class_name = "1A";
        roster.push_back(std::move(e));
    }
    return roster;
}

std::vector<survey::AnswerRecord> make_answers(const survey::Roster& roster, const survey::Questionnaire& questionnaire,
                                               std::uint64_t seed, const survey::QuestionnaireEvent& event) {
    Draw draw(seed);
    const auto n = roster.size();
    const std::int64_t groups = std::max<std::int64_t>(1, static_cast<std::int64_t>(n) / 6);
    std::vector<std::int64_t> group(n);
    std::vector<double> risk(n);
    for (std::size_t i = 0; i < n; ++i) group[i] = draw.between(0, groups - 1);
    std::vector<double> group_risk(static_cast<std::size_t>(groups));
    for (auto& r : group_risk) r = draw.unit();
    for (std::size_t i = 0; i < n; ++i) risk[i] = std::clamp(group_risk[group[i]] + 0.3 * (draw.unit() - 0.5), 0.0, 1.0);

    std::vector<survey::AnswerRecord> out;
    auto emit = [&](std::size_t person, const std::string& question, survey::AnswerValue value,
                    std::optional<survey::PersonId> target = std::nullopt) {
        out.push_back(survey::AnswerRecord{roster[person].id, event, question, std::move(value), std::move(target)});
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& q : questionnaire.questions) {
            if (q.repeat_over_roster()) continue;
            survey::AnswerValue value;
            if (q.kind == survey::QuestionKind::Text) {
                value = std::string(draw.between(0, 3) == 0 ? "Madrid" : "Ponferrada");
            } else if (q.kind == survey::QuestionKind::Numeric) {
                if (q.id == survey::items::kFirstDrinkAge) {
                    value = draw.between(12, 16);
                } else {
                    value = draw.between(q.min_value, std::min<std::int64_t>(q.max_value, q.min_value + 8));
                }
            } else if (q.instrument == "audit") {
                // Skew item choice toward the student's risk level.
                const auto k = q.options.size();
                auto idx = static_cast<std::size_t>(std::clamp(risk[i] * static_cast<double>(k) + draw.unit() - 0.7, 0.0,
                                                               static_cast<double>(k - 1)));
                value = q.options[idx].value;
            } else {
                value = q.options[static_cast<std::size_t>(draw.between(0, static_cast<std::int64_t>(q.options.size()) - 1))].value;
            }
            emit(i, q.id, std::move(value));
        }
    }

    const auto* friendship = questionnaire.find(survey::items::kFriendship);
    const auto* consumption = questionnaire.find(survey::items::kConsumption);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const bool same = group[i] == group[j];
            std::int64_t w = same ? draw.between(3, 5) : (draw.unit() < 0.25 ? draw.between(2, 3) : 1);
            if (same && draw.unit() < 0.15) w = 2;
            if (friendship != nullptr) emit(i, friendship->id, w, roster[j].id);
            if (consumption != nullptr) {
                const bool yes = w >= 3 && risk[i] > 0.2 && risk[j] > 0.2 && draw.unit() < 0.8;
                emit(i, consumption->id, std::int64_t{yes ? 1 : 0}, roster[j].id);
            }
        }
    }
    return out;
}

}  // namespace peerlens::synthetic
