#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace peerlens::survey {

class SurveyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calendar date, serialized as YYYY-MM-DD.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    static Date parse(std::string_view iso);
    [[nodiscard]] std::string iso() const;
    friend auto operator<=>(const Date&, const Date&) = default;
};

using PersonId = std::string;
using AnswerValue = std::variant<std::int64_t, std::string>;

std::string to_string(const AnswerValue& value);

enum class QuestionKind { Choice, Likert, Numeric, Text, NetworkGenerating };

/// Answer scale of a roster-repeated question.
enum class NetworkScale { ContactStrength, YesNo };

struct Option {
    std::string label;
    std::int64_t value = 0;
};

struct Question {
    std::string id;
    std::string text;
    QuestionKind kind = QuestionKind::Choice;
    std::vector<Option> options;
    /// Inclusive bounds for numeric questions.
    std::int64_t min_value = 0;
    std::int64_t max_value = 0;
    NetworkScale network_scale = NetworkScale::ContactStrength;
    /// Instrument the item belongs to ("audit", "fas", "kidscreen", ...); empty for standalone items.
    std::string instrument;

    [[nodiscard]] bool repeat_over_roster() const noexcept { return kind == QuestionKind::NetworkGenerating; }
    [[nodiscard]] bool accepts(const AnswerValue& value) const;
    [[nodiscard]] const Option* option(std::int64_t value) const;
};

struct Questionnaire {
    std::string id;
    std::string title;
    std::vector<Question> questions;

    [[nodiscard]] const Question* find(std::string_view question_id) const;
    [[nodiscard]] std::vector<const Question*> instrument(std::string_view name) const;
};

/// The five statements of the contact question, weights 1..5.
const std::vector<Option>& contact_strength_scale();

/// Question ids of the standard battery that downstream modules read.
namespace items {
inline constexpr std::string_view kFriendship = "friendship";
inline constexpr std::string_view kConsumption = "consumption";
inline constexpr std::string_view kPlaceOfBirth = "place_of_birth";
inline constexpr std::string_view kFriendsOutside = "friends_outside";
inline constexpr std::string_view kDrinkingMatesOutside = "drinking_mates_outside";
inline constexpr std::string_view kFamilyDrinking = "family_drinking_frequency";
inline constexpr std::string_view kFirstDrinkAge = "first_drink_age";
inline constexpr std::string_view kUsualPlaces = "usual_places";
inline constexpr std::string_view kAuditFrequency = "audit_1";
inline constexpr std::string_view kAuditQuantity = "audit_2";
}  // namespace items

/// AUDIT, FAS II, KIDSCREEN-27, ESTUDES items, self-efficacy, and the two
/// roster-repeated network questions.
Questionnaire standard_questionnaire();

struct QuestionnaireEvent {
    std::string questionnaire_id;
    Date date;
    friend auto operator<=>(const QuestionnaireEvent&, const QuestionnaireEvent&) = default;
};

struct AnswerRecord {
    PersonId person;
    QuestionnaireEvent event;
    std::string question;
    AnswerValue value;
    std::optional<PersonId> target;
};

struct RosterEntry {
    PersonId id;
    std::string pseudonym;
    std::string full_name;
    std::optional<int> age;
    std::string gender;
    std::string class_name;
};

using Roster = std::vector<RosterEntry>;

// ---------------------------------------------------------------------------
// Standardized instruments

enum class AuditZone { I = 1, II = 2, III = 3, IV = 4 };

struct AuditResult {
    int score = 0;
    AuditZone zone = AuditZone::I;
    std::string intervention;
    friend bool operator==(const AuditResult&, const AuditResult&) = default;
};

enum class FasBand { Low, MediumLow, High };

struct FasResult {
    int score = 0;
    FasBand band = FasBand::Low;
    friend bool operator==(const FasResult&, const FasResult&) = default;
};

enum class KidscreenScale { PhysicalWellBeing, PsychologicalWellBeing, AutonomyParents, PeersSocialSupport, SchoolEnvironment };

inline constexpr std::array<std::size_t, 5> kKidscreenScaleSizes{5, 7, 7, 4, 4};
inline constexpr std::size_t kKidscreenItems = 27;
inline constexpr std::size_t kAuditItems = 10;
inline constexpr std::size_t kFasItems = 4;

struct KidscreenResult {
    std::array<int, 5> scales{};
    int total = 0;
    friend bool operator==(const KidscreenResult&, const KidscreenResult&) = default;
};

AuditZone audit_zone_for(int score);
std::string_view audit_intervention(AuditZone zone);
std::string_view roman(AuditZone zone);
std::optional<AuditZone> parse_audit_zone(std::string_view roman);
std::string_view to_string(FasBand band);
std::string_view to_string(KidscreenScale scale);
KidscreenScale kidscreen_scale_of_item(std::size_t index);

/// Ten items, each 0..4.
AuditResult score_audit(std::span<const int> items);
/// Car 0..2, bedroom 0..1, holidays 0..3, computers 0..3.
FasResult score_fas(std::span<const int> items);
/// Twenty-seven Likert items 1..5 in instrument order.
KidscreenResult score_kidscreen(std::span<const int> items);

// ---------------------------------------------------------------------------
// Response validation

struct ItemRef {
    PersonId person;
    std::string question;
    std::optional<PersonId> target;
    friend auto operator<=>(const ItemRef&, const ItemRef&) = default;
};

struct Duplicate {
    ItemRef item;
    std::vector<Date> dates;
};

struct ValidationReport {
    std::vector<PersonId> missing_respondents;
    std::vector<ItemRef> missing_items;
    std::vector<ItemRef> unknown_targets;
    std::vector<ItemRef> unknown_respondents;
    std::vector<ItemRef> unknown_questions;
    std::vector<ItemRef> invalid_values;
    std::vector<ItemRef> self_targets;
    std::vector<ItemRef> target_mismatches;
    std::vector<Duplicate> duplicates;

    /// Missing items only void the affected instrument; everything else blocks analysis.
    [[nodiscard]] bool has_errors() const;
    [[nodiscard]] bool empty() const;
};

ValidationReport validate_response_set(std::span<const AnswerRecord> answers, const Roster& roster,
                                       const Questionnaire& questionnaire);

/// Record-level checks only (roster membership, question, value, target); used to gate batch uploads.
ValidationReport validate_records(std::span<const AnswerRecord> answers, const Roster& roster,
                                  const Questionnaire& questionnaire);

// ---------------------------------------------------------------------------
// Per-person profile

struct PersonProfile {
    PersonId id;
    std::string pseudonym;
    std::optional<int> age;
    std::string gender;
    std::string class_name;
    std::optional<std::string> place_of_birth;
    std::optional<int> friends_outside;
    std::optional<int> drinking_mates_outside;
    /// Ordinal 0 (never) .. 4 (daily).
    std::optional<int> family_drinking_frequency;
    std::optional<AuditResult> audit;
    std::optional<int> audit_frequency;
    std::optional<int> audit_quantity;
    std::optional<FasResult> fas;
    std::optional<KidscreenResult> kidscreen;
    std::optional<int> self_efficacy;
    std::optional<int> first_drink_age;
    std::optional<std::string> usual_places;
    /// ESTUDES substance-use indicators (tobacco, cannabis, ...), raw values.
    std::map<std::string, std::int64_t> estudes_flags;
};

/// Scores every instrument that was fully answered; partially answered instruments stay absent.
std::vector<PersonProfile> build_profiles(std::span<const AnswerRecord> answers, const Roster& roster,
                                          const Questionnaire& questionnaire);

}  // namespace peerlens::survey
