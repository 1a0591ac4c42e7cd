#include "peerlens/study.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "peerlens/graph_io.hpp"
#include "peerlens/knowledge.hpp"
#include "peerlens/ontology.hpp"

namespace peerlens::study {

namespace {

constexpr std::array<std::pair<Status, std::string_view>, 3> kStatusNames{{
    {Status::Draft, "draft"},
    {Status::Collecting, "collecting"},
    {Status::Analyzed, "analyzed"},
}};

std::string describe(const survey::ValidationReport& r) {
    std::ostringstream out;
    out << "response set is invalid:";
    auto count = [&](const char* what, std::size_t n) {
        if (n > 0) out << ' ' << n << ' ' << what << ';';
    };
    count("missing respondents", r.missing_respondents.size());
    count("unknown respondents", r.unknown_respondents.size());
    count("unknown questions", r.unknown_questions.size());
    count("unknown targets", r.unknown_targets.size());
    count("invalid values", r.invalid_values.size());
    count("self targets", r.self_targets.size());
    count("target mismatches", r.target_mismatches.size());
    count("duplicates", r.duplicates.size());
    return out.str();
}

std::optional<double> annotation(const SocialGraph& g, std::string_view key) {
    const auto& a = g.graph_annotations();
    auto it = a.find(key);
    if (it == a.end()) return std::nullopt;
    return it->second;
}

template <typename T, typename F>
json array_of(const std::vector<T>& items, F&& f) {
    json a = json::array();
    for (const auto& item : items) a.push_back(f(item));
    return a;
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t row) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted) throw RosterError("row " + std::to_string(row) + ": unterminated quote");
    fields.push_back(std::move(field));
    for (auto& f : fields) {
        const auto first = f.find_first_not_of(" \t");
        const auto last = f.find_last_not_of(" \t");
        f = first == std::string::npos ? std::string() : f.substr(first, last - first + 1);
    }
    return fields;
}

}  // namespace

std::string_view to_string(Status status) {
    for (const auto& [s, name] : kStatusNames) {
        if (s == status) return name;
    }
    return "draft";
}

std::optional<Status> parse_status(std::string_view name) {
    for (const auto& [s, n] : kStatusNames) {
        if (n == name) return s;
    }
    return std::nullopt;
}

ValidationFailed::ValidationFailed(survey::ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

const SocialGraph* AnalysisResults::graph(std::string_view name) const {
    for (const auto& g : graphs) {
        if (g.name() == name) return &g;
    }
    return nullptr;
}

const IndividualResult* AnalysisResults::individual(std::string_view id_or_pseudonym) const {
    for (const auto& r : individuals) {
        if (r.profile.id == id_or_pseudonym || r.profile.pseudonym == id_or_pseudonym) return &r;
    }
    return nullptr;
}

AnalysisResults analyze(const Study& study, int version) {
    auto validation = survey::validate_response_set(study.answers, study.roster, study.questionnaire);
    if (validation.has_errors()) throw ValidationFailed(std::move(validation));

    AnalysisResults results;
    results.version = version;
    results.missing_items = validation.missing_items;

    const auto profiles = survey::build_profiles(study.answers, study.roster, study.questionnaire);
    const auto nets = networks::annotate_all(networks::build_networks(study.answers, study.roster, profiles));

    knowledge::Store store(knowledge::standard_vocabulary());
    knowledge::populate(store, study.questionnaire, study.roster, study.answers, profiles);
    const auto base = store.size();
    const auto rules = knowledge::standard_rules();
    knowledge::run_rules(store, rules);
    for (const auto* g : nets.all()) knowledge::write_back_metrics(store, *g);
    knowledge::run_rules(store, rules);
    results.fact_count = store.size();
    results.derived_count = store.size() - base;
    results.facts = knowledge::save_facts(store);

    for (const auto* g : nets.all()) results.graphs.push_back(*g);

    const auto social = report::compute_social_profiles(nets);
    for (const auto& person : profiles) {
        auto it = std::find_if(social.begin(), social.end(), [&](const auto& s) { return s.person == person.id; });
        if (it == social.end()) throw report::ReportError("no social profile for " + person.id);
        IndividualResult r{person, *it, {}, report::find_influencers(person.id, nets, profiles, social),
                           report::find_mediators(person.id, nets)};
        r.report = report::render_report(person, *it, nets, r.influencers);
        results.individuals.push_back(std::move(r));
    }
    return results;
}

json summary(const Study& study, const AnalysisResults& results) {
    json graphs = json::array();
    for (const auto& g : results.graphs) {
        json o{{"name", g.name()}, {"nodes", g.node_count()}, {"ties", g.tie_count()}};
        auto density = annotation(g, "density");
        auto diameter = annotation(g, "diameter");
        o["density"] = density ? json(*density) : json(nullptr);
        o["diameter"] = diameter ? json(*diameter) : json(nullptr);
        graphs.push_back(std::move(o));
    }
    return {{"study", study.id},
            {"version", results.version},
            {"students", results.individuals.size()},
            {"missing_items", results.missing_items.size()},
            {"facts", results.fact_count},
            {"derived_facts", results.derived_count},
            {"graphs", std::move(graphs)}};
}

json encode(const IndividualResult& r) {
    return {{"profile", codec::encode(r.profile)},
            {"social", codec::encode(r.social)},
            {"report", codec::encode(r.report)},
            {"influencers", array_of(r.influencers, [](const auto& i) { return codec::encode(i); })},
            {"mediators", array_of(r.mediators, [](const auto& m) { return codec::encode(m); })}};
}

json encode(const AnalysisResults& r) {
    return {{"version", r.version},
            {"graphs", array_of(r.graphs, [](const auto& g) { return codec::encode(g); })},
            {"individuals", array_of(r.individuals, [](const auto& i) { return encode(i); })},
            {"missing_items", array_of(r.missing_items, [](const auto& m) { return codec::encode(m); })},
            {"facts", r.facts},
            {"fact_count", r.fact_count},
            {"derived_count", r.derived_count}};
}

AnalysisResults decode_results(const json& j) {
    try {
        AnalysisResults r;
        r.version = j.at("version").get<int>();
        for (const auto& g : j.at("graphs")) r.graphs.push_back(codec::decode_graph(g));
        for (const auto& i : j.at("individuals")) {
            IndividualResult ir{codec::decode_profile(i.at("profile")), codec::decode_social_profile(i.at("social")),
                                codec::decode_report_text(i.at("report")), {}, {}};
            for (const auto& x : i.at("influencers")) ir.influencers.push_back(codec::decode_influencer(x));
            for (const auto& x : i.at("mediators")) ir.mediators.push_back(codec::decode_mediator(x));
            r.individuals.push_back(std::move(ir));
        }
        for (const auto& m : j.at("missing_items")) r.missing_items.push_back(codec::decode_item_ref(m));
        r.facts = j.at("facts").get<std::string>();
        r.fact_count = j.at("fact_count").get<std::size_t>();
        r.derived_count = j.at("derived_count").get<std::size_t>();
        return r;
    } catch (const json::exception& e) {
        throw codec::CodecError(std::string("results: ") + e.what());
    }
}

json encode_bundle(const Study& s) {
    return {{"schema", kBundleSchema},
            {"id", s.id},
            {"title", s.title},
            {"created", codec::encode(s.created)},
            {"seed", s.seed},
            {"status", to_string(s.status)},
            {"roster", array_of(s.roster, [](const auto& r) { return codec::encode(r, false); })},
            {"questionnaire", codec::encode(s.questionnaire)},
            {"events", array_of(s.events, [](const auto& e) {
                 return json{{"questionnaire", e.questionnaire_id}, {"date", codec::encode(e.date)}};
             })},
            {"answers", array_of(s.answers, [](const auto& a) { return codec::encode(a); })},
            {"results", array_of(s.results, [](const auto& r) { return encode(r); })}};
}

Study decode_bundle(const json& j) {
    try {
        if (j.value("schema", std::string()) != kBundleSchema) {
            throw codec::CodecError("unsupported bundle schema '" + j.value("schema", std::string()) + "'");
        }
        Study s;
        s.id = j.at("id").get<std::string>();
        s.title = j.at("title").get<std::string>();
        s.created = codec::decode_date(j.at("created"));
        s.seed = j.at("seed").get<std::uint64_t>();
        auto status = parse_status(j.at("status").get<std::string>());
        if (!status) throw codec::CodecError("unknown study status");
        s.status = *status;
        for (const auto& r : j.at("roster")) s.roster.push_back(codec::decode_roster_entry(r));
        s.questionnaire = codec::decode_questionnaire(j.at("questionnaire"));
        for (const auto& e : j.at("events")) {
            s.events.push_back({e.at("questionnaire").get<std::string>(), codec::decode_date(e.at("date"))});
        }
        s.answers = codec::decode_answers(j.at("answers"));
        for (const auto& r : j.at("results")) s.results.push_back(decode_results(r));
        return s;
    } catch (const json::exception& e) {
        throw codec::CodecError(std::string("bundle: ") + e.what());
    }
}

json expanded_questionnaire(const Study& study) {
    json q = codec::encode(study.questionnaire);
    json targets = array_of(study.roster, [](const auto& r) { return json{{"id", r.id}, {"pseudonym", r.pseudonym}}; });
    for (auto& item : q.at("questions")) {
        if (item.at("kind") == "network") item["targets"] = targets;
    }
    q["study"] = study.id;
    return q;
}

survey::Roster parse_roster_csv(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(std::move(line));
    }
    if (lines.empty()) throw RosterError("roster CSV is empty");
    if (lines.front().starts_with("\xEF\xBB\xBF")) lines.front().erase(0, 3);

    const auto header = split_csv_line(lines.front(), 1);
    std::map<std::string, std::size_t> column;
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string name = header[i];
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
        column[name] = i;
    }
    if (!column.contains("full_name")) throw RosterError("roster CSV needs a full_name column");
    auto cell = [&](const std::vector<std::string>& row, const char* name) -> std::string {
        auto it = column.find(name);
        return it != column.end() && it->second < row.size() ? row[it->second] : std::string();
    };

    survey::Roster roster;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto row = split_csv_line(lines[i], i + 1);
        survey::RosterEntry e;
        char id[24];
        std::snprintf(id, sizeof id, "P%03zu", roster.size() + 1);
        e.id = id;
        e.full_name = cell(row, "full_name");
        if (e.full_name.empty()) throw RosterError("row " + std::to_string(i + 1) + ": full_name is empty");
        if (auto age = cell(row, "age"); !age.empty()) {
            try {
                std::size_t used = 0;
                e.age = std::stoi(age, &used);
                if (used != age.size()) throw std::invalid_argument(age);
            } catch (const std::logic_error&) {
                throw RosterError("row " + std::to_string(i + 1) + ": age '" + age + "' is not a number");
            }
        }
        e.gender = cell(row, "gender");
        e.class_name = cell(row, "class");
        e.pseudonym = cell(row, "pseudonym");
        roster.push_back(std::move(e));
    }
    if (roster.empty()) throw RosterError("roster CSV has no students");
    return roster;
}

const std::vector<std::string>& surname_pool() {
    static const std::vector<std::string> pool{
        "Abbott",  "Acosta",   "Ayers",    "Baird",   "Barron",  "Bates",    "Benton",  "Blair",   "Boone",
        "Bowen",   "Briggs",   "Burch",    "Cain",    "Carver",  "Chase",    "Conley",  "Crane",   "Dalton",
        "Dillon",  "Doyle",    "Duffy",    "Ellison", "Farley",  "Finch",    "Frost",   "Gay",     "Gentry",
        "Glover",  "Hale",     "Hardin",   "Hayes",   "Hobbs",   "Holt",     "Ingram",  "Jarvis",  "Keller",
        "Kirby",   "Lamb",     "Lowe",     "Maddox",  "Mercer",  "Monroe",   "Nash",    "Noble",   "Osborn",
        "Pace",    "Pruitt",   "Quinn",    "Rankin",  "Rhodes",  "Sawyer",   "Shaw",    "Sloan",   "Stark",
        "Tate",    "Thorne",   "Vance",    "Wade",    "Whitley", "Yates"};
    return pool;
}

void anonymize(survey::Roster& roster, std::uint64_t seed, std::span<const std::string> pool) {
    std::set<std::string> taken;
    std::size_t needed = 0;
    for (const auto& e : roster) {
        if (e.full_name.empty() && e.pseudonym.empty()) throw RosterError("roster entry " + e.id + " has no name");
        if (e.pseudonym.empty()) {
            ++needed;
        } else if (!taken.insert(e.pseudonym).second) {
            throw RosterError("pseudonym '" + e.pseudonym + "' is used twice");
        }
    }
    std::vector<std::string> free;
    for (const auto& name : pool) {
        if (!taken.contains(name)) free.push_back(name);
    }
    if (free.size() < needed) {
        throw RosterError("the pseudonym pool has " + std::to_string(free.size()) + " free names for " +
                          std::to_string(needed) + " students; supply a larger pool");
    }
    // Fisher-Yates with raw engine output so the order does not depend on the standard library.
    std::mt19937_64 rng(seed);
    for (std::size_t i = free.size(); i > 1; --i) std::swap(free[i - 1], free[rng() % i]);
    std::size_t next = 0;
    for (auto& e : roster) {
        if (e.pseudonym.empty()) e.pseudonym = free[next++];
    }
}

std::uint64_t seed_for(std::string_view study_id) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : study_id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Repository::Repository(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path Repository::bundle_path(std::string_view id) const {
    return dir_ / (std::string(id) + ".study.json");
}

std::filesystem::path Repository::identity_path(std::string_view id) const {
    return dir_ / (std::string(id) + ".identity.json");
}

void Repository::save(const Study& study) const { write_atomically(bundle_path(study.id), encode_bundle(study).dump(1)); }

Study Repository::load(std::string_view id) const {
    std::ifstream in(bundle_path(id), std::ios::binary);
    if (!in) throw std::runtime_error("cannot open study bundle " + bundle_path(id).string());
    try {
        return decode_bundle(json::parse(in));
    } catch (const json::exception& e) {
        throw codec::CodecError(bundle_path(id).string() + ": " + e.what());
    }
}

std::vector<std::string> Repository::ids() const {
    std::vector<std::string> out;
    constexpr std::string_view suffix = ".study.json";
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.size() > suffix.size() && name.ends_with(suffix)) {
            out.push_back(name.substr(0, name.size() - suffix.size()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Repository::save_identity(std::string_view id, const std::map<std::string, std::string>& names) const {
    write_atomically(identity_path(id), json{{"study", id}, {"names", names}}.dump(1));
}

std::map<std::string, std::string> Repository::load_identity(std::string_view id) const {
    std::ifstream in(identity_path(id), std::ios::binary);
    if (!in) return {};
    return json::parse(in).at("names").get<std::map<std::string, std::string>>();
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path default_data_dir() {
    if (const char* dir = std::getenv("PEERLENS_DATA_DIR"); dir != nullptr && *dir != '\0') return dir;
    return "peerlens-data";
}

}  // namespace peerlens::study
