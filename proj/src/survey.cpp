#include "peerlens/survey.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace peerlens::survey {

namespace {

Question choice(std::string id, std::string text, std::vector<Option> options, std::string instrument = {}) {
    Question q;
    q.id = std::move(id);
    q.text = std::move(text);
    q.kind = QuestionKind::Choice;
    q.options = std::move(options);
    q.instrument = std::move(instrument);
    return q;
}

Question likert(std::string id, std::string text, std::vector<Option> options, std::string instrument = {}) {
    auto q = choice(std::move(id), std::move(text), std::move(options), std::move(instrument));
    q.kind = QuestionKind::Likert;
    return q;
}

Question numeric(std::string id, std::string text, std::int64_t lo, std::int64_t hi) {
    Question q;
    q.id = std::move(id);
    q.text = std::move(text);
    q.kind = QuestionKind::Numeric;
    q.min_value = lo;
    q.max_value = hi;
    return q;
}

const std::vector<Option>& how_often_scale() {
    static const std::vector<Option> scale{
        {"never", 0}, {"less than monthly", 1}, {"monthly", 2}, {"weekly", 3}, {"daily or almost daily", 4}};
    return scale;
}

const std::vector<Option>& injury_scale() {
    static const std::vector<Option> scale{{"no", 0}, {"yes, but not in the last year", 2}, {"yes, during the last year", 4}};
    return scale;
}

const std::vector<Option>& yes_no() {
    static const std::vector<Option> scale{{"no", 0}, {"yes", 1}};
    return scale;
}

}  // namespace

Date Date::parse(std::string_view iso) {
    Date d;
    auto field = [&](std::size_t pos, std::size_t len, int& out) {
        auto s = iso.substr(pos, len);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' || !field(0, 4, d.year) || !field(5, 2, d.month) ||
        !field(8, 2, d.day) || d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) {
        throw SurveyError("invalid date '" + std::string(iso) + "', expected YYYY-MM-DD");
    }
    return d;
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::string to_string(const AnswerValue& value) {
    if (const auto* s = std::get_if<std::string>(&value)) return *s;
    return std::to_string(std::get<std::int64_t>(value));
}

const Option* Question::option(std::int64_t value) const {
    auto it = std::find_if(options.begin(), options.end(), [&](const Option& o) { return o.value == value; });
    return it == options.end() ? nullptr : &*it;
}

bool Question::accepts(const AnswerValue& value) const {
    if (kind == QuestionKind::Text) {
        const auto* s = std::get_if<std::string>(&value);
        return s != nullptr && !s->empty();
    }
    const auto* v = std::get_if<std::int64_t>(&value);
    if (v == nullptr) return false;
    if (kind == QuestionKind::Numeric) return *v >= min_value && *v <= max_value;
    return option(*v) != nullptr;
}

const Question* Questionnaire::find(std::string_view question_id) const {
    auto it = std::find_if(questions.begin(), questions.end(), [&](const Question& q) { return q.id == question_id; });
    return it == questions.end() ? nullptr : &*it;
}

std::vector<const Question*> Questionnaire::instrument(std::string_view name) const {
    std::vector<const Question*> out;
    for (const auto& q : questions) {
        if (q.instrument == name) out.push_back(&q);
    }
    return out;
}

const std::vector<Option>& contact_strength_scale() {
    static const std::vector<Option> scale{
        {"We never spend time together", 1},
        {"We sometimes spend time together", 2},
        {"We use to spend quite a lot of time together", 3},
        {"We are almost always together", 4},
        {"We are always together", 5},
    };
    return scale;
}

Questionnaire standard_questionnaire() {
    Questionnaire qn;
    qn.id = "classroom-alcohol-sna";
    qn.title = "Friendship and alcohol use in the classroom";
    auto& q = qn.questions;

    Question birth;
    birth.id = std::string(items::kPlaceOfBirth);
    birth.text = "Where were you born?";
    birth.kind = QuestionKind::Text;
    q.push_back(birth);

    q.push_back(numeric(std::string(items::kFriendsOutside), "How many close friends do you have outside this class?", 0, 100));
    q.push_back(numeric(std::string(items::kDrinkingMatesOutside),
                        "With how many people outside this class do you usually go out for a drink?", 0, 100));
    q.push_back(likert(std::string(items::kFamilyDrinking), "How often does someone in your family drink alcohol?",
                       {{"never", 0}, {"occasionally", 1}, {"monthly", 2}, {"weekly", 3}, {"daily", 4}}));

    // AUDIT
    q.push_back(choice("audit_1", "How often do you have a drink containing alcohol?",
                       {{"never", 0},
                        {"monthly or less", 1},
                        {"two to four times a month", 2},
                        {"two to three times a week", 3},
                        {"four or more times a week", 4}},
                       "audit"));
    q.push_back(choice("audit_2", "How many drinks containing alcohol do you have on a typical day when you are drinking?",
                       {{"one or two", 0}, {"three or four", 1}, {"five or six", 2}, {"seven to nine", 3}, {"ten or more", 4}},
                       "audit"));
    const char* how_often_items[] = {
        "How often do you have six or more drinks on one occasion?",
        "How often during the last year have you found that you were not able to stop drinking once you had started?",
        "How often during the last year have you failed to do what was normally expected of you because of drinking?",
        "How often during the last year have you needed a first drink in the morning to get yourself going after a "
        "heavy drinking session?",
        "How often during the last year have you had a feeling of guilt or remorse after drinking?",
        "How often during the last year have you been unable to remember what happened the night before because of "
        "your drinking?",
    };
    for (int i = 0; i < 6; ++i) {
        q.push_back(choice("audit_" + std::to_string(i + 3), how_often_items[i], how_often_scale(), "audit"));
    }
    q.push_back(choice("audit_9", "Have you or someone else been injured because of your drinking?", injury_scale(), "audit"));
    q.push_back(choice("audit_10",
                       "Has a relative, friend, doctor or other health worker been concerned about your drinking or "
                       "suggested you cut down?",
                       injury_scale(), "audit"));

    // FAS II
    q.push_back(choice("fas_car", "Does your family own a car, van or truck?",
                       {{"no", 0}, {"yes, one", 1}, {"yes, two or more", 2}}, "fas"));
    q.push_back(choice("fas_bedroom", "Do you have your own bedroom for yourself?", {{"no", 0}, {"yes", 1}}, "fas"));
    q.push_back(choice("fas_travel", "During the past 12 months, how many times did you travel away on holiday with your family?",
                       {{"not at all", 0}, {"once", 1}, {"twice", 2}, {"more than twice", 3}}, "fas"));
    q.push_back(choice("fas_computers", "How many computers does your family own?",
                       {{"none", 0}, {"one", 1}, {"two", 2}, {"more than two", 3}}, "fas"));

    // KIDSCREEN-27
    const std::vector<Option> kidscreen_scale{
        {"not at all", 1}, {"slightly", 2}, {"moderately", 3}, {"very", 4}, {"extremely", 5}};
    for (std::size_t i = 0; i < kKidscreenItems; ++i) {
        const auto scale = kidscreen_scale_of_item(i);
        q.push_back(likert("kidscreen_" + std::to_string(i + 1),
                           "KIDSCREEN-27 " + std::string(to_string(scale)) + " item " + std::to_string(i + 1),
                           kidscreen_scale, "kidscreen"));
    }

    // General self-efficacy
    const std::vector<Option> efficacy_scale{
        {"not at all true", 1}, {"hardly true", 2}, {"moderately true", 3}, {"exactly true", 4}};
    const char* efficacy_items[] = {
        "I can always manage to solve difficult problems if I try hard enough.",
        "I can usually handle whatever comes my way.",
        "I am confident that I could deal efficiently with unexpected events.",
        "I can remain calm when facing difficulties.",
        "If someone offers me a drink I do not want, I can refuse it.",
    };
    for (int i = 0; i < 5; ++i) {
        q.push_back(likert("self_efficacy_" + std::to_string(i + 1), efficacy_items[i], efficacy_scale, "self_efficacy"));
    }

    // ESTUDES
    auto first = numeric(std::string(items::kFirstDrinkAge), "How old were you when you first tried an alcoholic drink?", 5, 30);
    first.instrument = "estudes";
    q.push_back(first);
    q.push_back(choice(std::string(items::kUsualPlaces), "Where do you usually go for a drink?",
                       {{"home", 0}, {"friends' homes", 1}, {"street or park", 2}, {"bar/café", 3}, {"pub/disco", 4}},
                       "estudes"));
    q.push_back(choice("tobacco_use", "Have you smoked tobacco in the last 30 days?", yes_no(), "estudes"));
    q.push_back(choice("cannabis_use", "Have you used cannabis in the last 30 days?", yes_no(), "estudes"));

    Question friendship;
    friendship.id = std::string(items::kFriendship);
    friendship.text = "How much time do you spend with each of the following classmates?";
    friendship.kind = QuestionKind::NetworkGenerating;
    friendship.options = contact_strength_scale();
    friendship.network_scale = NetworkScale::ContactStrength;
    q.push_back(friendship);

    Question consumption;
    consumption.id = std::string(items::kConsumption);
    consumption.text = "Would you go out for an alcoholic drink with each of the following classmates?";
    consumption.kind = QuestionKind::NetworkGenerating;
    consumption.options = yes_no();
    consumption.network_scale = NetworkScale::YesNo;
    q.push_back(consumption);

    return qn;
}

}  // namespace peerlens::survey
