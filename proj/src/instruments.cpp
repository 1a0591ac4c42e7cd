#include <numeric>

#include "peerlens/survey.hpp"

namespace peerlens::survey {

namespace {

void require_count(std::span<const int> items, std::size_t expected, const char* instrument) {
    if (items.size() != expected) {
        throw SurveyError(std::string(instrument) + " expects " + std::to_string(expected) + " items, got " +
                          std::to_string(items.size()));
    }
}

void require_range(int value, int lo, int hi, const char* instrument, std::size_t index) {
    if (value < lo || value > hi) {
        throw SurveyError(std::string(instrument) + " item " + std::to_string(index + 1) + " value " +
                          std::to_string(value) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

}  // namespace

AuditZone audit_zone_for(int score) {
    if (score < 0 || score > 40) throw SurveyError("AUDIT score outside 0..40");
    if (score <= 7) return AuditZone::I;
    if (score <= 15) return AuditZone::II;
    if (score <= 19) return AuditZone::III;
    return AuditZone::IV;
}

std::string_view audit_intervention(AuditZone zone) {
    switch (zone) {
        case AuditZone::I: return "Alcohol education.";
        case AuditZone::II: return "Simple advice.";
        case AuditZone::III: return "Simple advice plus brief counseling and continued monitoring.";
        case AuditZone::IV: return "Referral to a specialist for diagnostic evaluation and treatment.";
    }
    return {};
}

std::string_view roman(AuditZone zone) {
    switch (zone) {
        case AuditZone::I: return "I";
        case AuditZone::II: return "II";
        case AuditZone::III: return "III";
        case AuditZone::IV: return "IV";
    }
    return {};
}

std::optional<AuditZone> parse_audit_zone(std::string_view text) {
    for (auto z : {AuditZone::I, AuditZone::II, AuditZone::III, AuditZone::IV}) {
        if (roman(z) == text) return z;
    }
    return std::nullopt;
}

std::string_view to_string(FasBand band) {
    switch (band) {
        case FasBand::Low: return "low";
        case FasBand::MediumLow: return "medium_low";
        case FasBand::High: return "high";
    }
    return {};
}

std::string_view to_string(KidscreenScale scale) {
    switch (scale) {
        case KidscreenScale::PhysicalWellBeing: return "physical well-being";
        case KidscreenScale::PsychologicalWellBeing: return "psychological well-being";
        case KidscreenScale::AutonomyParents: return "autonomy and parent relations";
        case KidscreenScale::PeersSocialSupport: return "peers and social support";
        case KidscreenScale::SchoolEnvironment: return "school environment";
    }
    return {};
}

KidscreenScale kidscreen_scale_of_item(std::size_t index) {
    std::size_t upper = 0;
    for (std::size_t s = 0; s < kKidscreenScaleSizes.size(); ++s) {
        upper += kKidscreenScaleSizes[s];
        if (index < upper) return static_cast<KidscreenScale>(s);
    }
    throw SurveyError("KIDSCREEN item index " + std::to_string(index) + " out of range");
}

AuditResult score_audit(std::span<const int> items) {
    require_count(items, kAuditItems, "AUDIT");
    for (std::size_t i = 0; i < items.size(); ++i) require_range(items[i], 0, 4, "AUDIT", i);
    AuditResult r;
    r.score = std::accumulate(items.begin(), items.end(), 0);
    r.zone = audit_zone_for(r.score);
    r.intervention = std::string(audit_intervention(r.zone));
    return r;
}

FasResult score_fas(std::span<const int> items) {
    static constexpr int kMax[kFasItems] = {2, 1, 3, 3};
    require_count(items, kFasItems, "FAS II");
    for (std::size_t i = 0; i < items.size(); ++i) require_range(items[i], 0, kMax[i], "FAS II", i);
    FasResult r;
    r.score = std::accumulate(items.begin(), items.end(), 0);
    r.band = r.score <= 2 ? FasBand::Low : (r.score <= 5 ? FasBand::MediumLow : FasBand::High);
    return r;
}

KidscreenResult score_kidscreen(std::span<const int> items) {
    require_count(items, kKidscreenItems, "KIDSCREEN-27");
    KidscreenResult r;
    for (std::size_t i = 0; i < items.size(); ++i) {
        require_range(items[i], 1, 5, "KIDSCREEN-27", i);
        r.scales[static_cast<std::size_t>(kidscreen_scale_of_item(i))] += items[i];
        r.total += items[i];
    }
    return r;
}

}  // namespace peerlens::survey
