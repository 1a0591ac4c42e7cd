#include "peerlens/knowledge.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

namespace peerlens::knowledge {

namespace {

using Code = KnowledgeError::Code;

constexpr std::array<std::string_view, kEntityKindCount> kKindNames{
    "Person",      "ClassOnSchool", "School",   "Course",      "CourseLevel",
    "GroupOfClass", "AcademicCategory", "Questionnaire", "Question", "QuestionSNA",
    "QuestionnairePastEvent", "Answer", "AnswerOfPersonToQuestion", "Network", "SNAConcept",
    "SNACharacteristic",
};

std::string format_double(double d) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), d);
    (void)ec;
    return std::string(buf.data(), ptr);
}

}  // namespace

std::string_view to_string(EntityKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<EntityKind> parse_entity_kind(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) return static_cast<EntityKind>(i);
    }
    return std::nullopt;
}

ValueType type_of(const Value& v) { return static_cast<ValueType>(v.index()); }

std::string_view to_string(ValueType type) {
    switch (type) {
        case ValueType::Entity: return "entity";
        case ValueType::String: return "string";
        case ValueType::Integer: return "integer";
        case ValueType::Number: return "number";
        case ValueType::Date: return "date";
    }
    return "?";
}

std::string render(const Value& v) {
    struct Visitor {
        std::string operator()(const EntityRef& e) const { return e.id; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(const survey::Date& d) const { return d.iso(); }
    };
    return std::visit(Visitor{}, v);
}

std::optional<double> numeric(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return std::nullopt;
}

bool operator<(const Assertion& a, const Assertion& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    return a.object < b.object;
}

void Vocabulary::declare(PredicateDecl decl) {
    if (decl.name.empty()) throw KnowledgeError(Code::Malformed, "predicate name must not be empty");
    auto name = decl.name;
    if (!decls_.emplace(name, std::move(decl)).second) {
        throw KnowledgeError(Code::Malformed, "predicate '" + name + "' declared twice");
    }
}

const PredicateDecl* Vocabulary::find(std::string_view name) const {
    auto it = decls_.find(name);
    return it == decls_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------

Store::Store(Vocabulary vocabulary) : vocabulary_(std::move(vocabulary)) {}

void Store::add_entity(std::string id, EntityKind kind) {
    if (id.empty()) throw KnowledgeError(Code::Malformed, "entity id must not be empty");
    auto [it, inserted] = entities_.emplace(std::move(id), kind);
    if (!inserted && it->second != kind) {
        throw KnowledgeError(Code::DuplicateEntity, "entity '" + it->first + "' already exists as " +
                                                        std::string(to_string(it->second)));
    }
}

std::optional<EntityKind> Store::kind_of(std::string_view id) const {
    auto it = entities_.find(id);
    if (it == entities_.end()) return std::nullopt;
    return it->second;
}

const PredicateDecl& Store::require_predicate(std::string_view name) const {
    const auto* decl = vocabulary_.find(name);
    if (!decl) throw KnowledgeError(Code::UnknownPredicate, "unknown predicate '" + std::string(name) + "'");
    return *decl;
}

void Store::check(const Assertion& a) const {
    const auto& decl = require_predicate(a.predicate);
    auto subject_kind = kind_of(a.subject);
    if (!subject_kind) {
        throw KnowledgeError(Code::DanglingReference, "subject '" + a.subject + "' of " + a.predicate + " does not exist");
    }
    if (!decl.subject_kinds.empty() && !decl.subject_kinds.contains(*subject_kind)) {
        throw KnowledgeError(Code::TypeMismatch, a.predicate + " does not apply to " +
                                                     std::string(to_string(*subject_kind)) + " '" + a.subject + "'");
    }
    if (const auto* ref = std::get_if<EntityRef>(&a.object)) {
        if (!decl.entity_object) {
            throw KnowledgeError(Code::TypeMismatch, a.predicate + " expects a literal object");
        }
        auto object_kind = kind_of(ref->id);
        if (!object_kind) {
            throw KnowledgeError(Code::DanglingReference, "object '" + ref->id + "' of " + a.predicate + " does not exist");
        }
        if (!decl.object_kinds.empty() && !decl.object_kinds.contains(*object_kind)) {
            throw KnowledgeError(Code::TypeMismatch, a.predicate + " cannot point at " +
                                                         std::string(to_string(*object_kind)) + " '" + ref->id + "'");
        }
        return;
    }
    if (decl.entity_object) throw KnowledgeError(Code::TypeMismatch, a.predicate + " expects an entity object");
    auto type = type_of(a.object);
    if (!decl.literal_types.empty() && !decl.literal_types.contains(type)) {
        throw KnowledgeError(Code::TypeMismatch, a.predicate + " does not take " + std::string(to_string(type)) + " literals");
    }
    if (const auto* d = std::get_if<double>(&a.object); d && !std::isfinite(*d)) {
        throw KnowledgeError(Code::TypeMismatch, a.predicate + " literal must be finite");
    }
}

bool Store::assert_fact(const Assertion& a) {
    check(a);
    if (!facts_.insert(a).second) return false;
    by_ps_[a.predicate][a.subject].insert(a.object);
    by_po_[a.predicate][a.object].insert(a.subject);
    return true;
}

bool Store::retract(const Assertion& a) {
    if (facts_.erase(a) == 0) return false;
    auto ps = by_ps_.find(a.predicate);
    auto s = ps->second.find(a.subject);
    s->second.erase(a.object);
    if (s->second.empty()) ps->second.erase(s);
    if (ps->second.empty()) by_ps_.erase(ps);
    auto po = by_po_.find(a.predicate);
    auto o = po->second.find(a.object);
    o->second.erase(a.subject);
    if (o->second.empty()) po->second.erase(o);
    if (po->second.empty()) by_po_.erase(po);
    return true;
}

bool Store::contains(const Assertion& a) const { return facts_.contains(a); }

const std::set<Value>* Store::object_set(std::string_view subject, std::string_view predicate) const {
    auto ps = by_ps_.find(predicate);
    if (ps == by_ps_.end()) return nullptr;
    auto s = ps->second.find(subject);
    return s == ps->second.end() ? nullptr : &s->second;
}

const std::set<std::string>* Store::subject_set(std::string_view predicate, const Value& object) const {
    auto po = by_po_.find(predicate);
    if (po == by_po_.end()) return nullptr;
    auto o = po->second.find(object);
    return o == po->second.end() ? nullptr : &o->second;
}

const Store::SubjectIndex* Store::predicate_index(std::string_view predicate) const {
    auto ps = by_ps_.find(predicate);
    return ps == by_ps_.end() ? nullptr : &ps->second;
}

std::vector<Value> Store::objects(std::string_view subject, std::string_view predicate) const {
    require_predicate(predicate);
    const auto* set = object_set(subject, predicate);
    return set ? std::vector<Value>(set->begin(), set->end()) : std::vector<Value>{};
}

std::vector<std::string> Store::subjects(std::string_view predicate, const Value& object) const {
    require_predicate(predicate);
    const auto* set = subject_set(predicate, object);
    return set ? std::vector<std::string>(set->begin(), set->end()) : std::vector<std::string>{};
}

std::vector<Assertion> Store::with_predicate(std::string_view predicate) const {
    require_predicate(predicate);
    std::vector<Assertion> out;
    if (const auto* index = predicate_index(predicate)) {
        for (const auto& [subject, objects] : *index) {
            for (const auto& o : objects) out.push_back({subject, std::string(predicate), o});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matcher: patterns compiled to variable slots, joined most-bound-first.

namespace {

struct Slot {
    int var = -1;  // >= 0: variable slot
    Value constant;
};

struct CompiledPattern {
    Slot subject;
    std::string predicate;
    Slot object;
};

struct CompiledFilter {
    int var = 0;
    Comparison op = Comparison::Eq;
    Value operand;
};

using Row = std::vector<std::optional<Value>>;

bool passes(const Value& v, Comparison op, const Value& operand) {
    auto a = numeric(v);
    auto b = numeric(operand);
    if (a && b) {
        switch (op) {
            case Comparison::Ge: return *a >= *b;
            case Comparison::Le: return *a <= *b;
            case Comparison::Eq: return *a == *b;
        }
    }
    if (op == Comparison::Eq) return v == operand;
    if (type_of(v) != type_of(operand) || a || b) return false;
    return op == Comparison::Ge ? !(v < operand) : !(operand < v);
}

class Program {
public:
    Program(std::span<const Pattern> patterns, std::span<const Filter> filters) {
        for (const auto& p : patterns) {
            patterns_.push_back({compile(p.subject), p.predicate, compile(p.object)});
        }
        for (const auto& f : filters) {
            auto it = std::find(vars_.begin(), vars_.end(), f.variable);
            if (it == vars_.end()) {
                throw KnowledgeError(Code::UnsafeRule, "filter variable ?" + f.variable + " is not bound by any pattern");
            }
            filters_.push_back({static_cast<int>(it - vars_.begin()), f.op, f.operand});
        }
    }

    [[nodiscard]] const std::vector<std::string>& variables() const noexcept { return vars_; }
    [[nodiscard]] const std::vector<CompiledPattern>& patterns() const noexcept { return patterns_; }
    [[nodiscard]] int slot_of(std::string_view name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
    }

    /// Calls emit for every full binding; `seed` optionally fixes one pattern to a given fact.
    void run(const Store& store, const std::function<void(const Row&)>& emit,
             std::optional<std::size_t> seed_pattern = std::nullopt, const Assertion* seed_fact = nullptr) const {
        Row row(vars_.size());
        std::vector<bool> done(patterns_.size(), false);
        if (seed_pattern) {
            std::vector<int> bound;
            const auto& p = patterns_[*seed_pattern];
            if (!bind(row, p.subject, Value{EntityRef{seed_fact->subject}}, bound) ||
                !bind(row, p.object, seed_fact->object, bound)) {
                return;
            }
            done[*seed_pattern] = true;
            join(store, row, done, patterns_.size() - 1, emit);
            return;
        }
        join(store, row, done, patterns_.size(), emit);
    }

private:
    Slot compile(const Term& t) {
        if (const auto* v = std::get_if<Variable>(&t)) {
            auto it = std::find(vars_.begin(), vars_.end(), v->name);
            if (it != vars_.end()) return {static_cast<int>(it - vars_.begin()), {}};
            vars_.push_back(v->name);
            return {static_cast<int>(vars_.size() - 1), {}};
        }
        return {-1, std::get<Value>(t)};
    }

    static const Value* resolved(const Row& row, const Slot& s) {
        if (s.var < 0) return &s.constant;
        return row[s.var] ? &*row[s.var] : nullptr;
    }

    bool bind(Row& row, const Slot& s, const Value& v, std::vector<int>& bound) const {
        if (s.var < 0) return s.constant == v;
        auto& cell = row[s.var];
        if (cell) return *cell == v;
        for (const auto& f : filters_) {
            if (f.var == s.var && !passes(v, f.op, f.operand)) return false;
        }
        cell = v;
        bound.push_back(s.var);
        return true;
    }

    static void unbind(Row& row, std::vector<int>& bound) {
        for (int v : bound) row[v].reset();
        bound.clear();
    }

    void join(const Store& store, Row& row, std::vector<bool>& done, std::size_t remaining,
              const std::function<void(const Row&)>& emit) const {
        if (remaining == 0) {
            emit(row);
            return;
        }
        std::size_t pick = 0;
        int best = -1;
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            if (done[i]) continue;
            int score = (resolved(row, patterns_[i].subject) ? 2 : 0) + (resolved(row, patterns_[i].object) ? 1 : 0);
            if (score > best) {
                best = score;
                pick = i;
            }
        }
        const auto& p = patterns_[pick];
        done[pick] = true;
        std::vector<int> bound;
        const Value* s = resolved(row, p.subject);
        const Value* o = resolved(row, p.object);
        const auto* subject_ref = s ? std::get_if<EntityRef>(s) : nullptr;
        if (s && !subject_ref) {
            done[pick] = false;
            return;
        }
        if (s && o) {
            const auto* objects = store.object_set(subject_ref->id, p.predicate);
            if (objects && objects->contains(*o)) join(store, row, done, remaining - 1, emit);
        } else if (s) {
            if (const auto* objects = store.object_set(subject_ref->id, p.predicate)) {
                for (const auto& value : *objects) {
                    if (bind(row, p.object, value, bound)) join(store, row, done, remaining - 1, emit);
                    unbind(row, bound);
                }
            }
        } else if (o) {
            if (const auto* subjects = store.subject_set(p.predicate, *o)) {
                for (const auto& subject : *subjects) {
                    if (bind(row, p.subject, Value{EntityRef{subject}}, bound)) join(store, row, done, remaining - 1, emit);
                    unbind(row, bound);
                }
            }
        } else if (const auto* index = store.predicate_index(p.predicate)) {
            for (const auto& [subject, objects] : *index) {
                for (const auto& value : objects) {
                    if (bind(row, p.subject, Value{EntityRef{subject}}, bound) && bind(row, p.object, value, bound)) {
                        join(store, row, done, remaining - 1, emit);
                    }
                    unbind(row, bound);
                }
            }
        }
        done[pick] = false;
    }

    std::vector<std::string> vars_;
    std::vector<CompiledPattern> patterns_;
    std::vector<CompiledFilter> filters_;
};

void check_predicates(std::span<const Pattern> patterns, const Vocabulary& vocabulary) {
    for (const auto& p : patterns) {
        if (!vocabulary.find(p.predicate)) {
            throw KnowledgeError(Code::UnknownPredicate, "unknown predicate '" + p.predicate + "'");
        }
    }
}

}  // namespace

std::optional<std::size_t> QueryResult::column(std::string_view variable) const {
    auto it = std::find(variables.begin(), variables.end(), variable);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
}

QueryResult query(const Store& store, std::span<const Pattern> patterns, std::span<const Filter> filters) {
    check_predicates(patterns, store.vocabulary());
    Program program(patterns, filters);
    std::set<std::vector<Value>> rows;
    program.run(store, [&](const Row& row) {
        std::vector<Value> tuple;
        tuple.reserve(row.size());
        for (const auto& cell : row) tuple.push_back(*cell);
        rows.insert(std::move(tuple));
    });
    return QueryResult{program.variables(), {rows.begin(), rows.end()}};
}

// ---------------------------------------------------------------------------
// Rules

void validate_rule(const Rule& rule, const Vocabulary& vocabulary) {
    auto fail = [&](const std::string& why) {
        throw KnowledgeError(Code::UnsafeRule, "rule '" + rule.name + "': " + why);
    };
    if (rule.name.empty()) throw KnowledgeError(Code::UnsafeRule, "rule without a name");
    if (rule.body.empty()) fail("empty body");
    if (rule.head.empty()) fail("empty head");
    check_predicates(rule.body, vocabulary);
    std::set<std::string> bound;
    for (const auto& p : rule.body) {
        for (const auto* t : {&p.subject, &p.object}) {
            if (const auto* v = std::get_if<Variable>(t)) bound.insert(v->name);
        }
    }
    for (const auto& f : rule.filters) {
        if (!bound.contains(f.variable)) fail("filter variable ?" + f.variable + " not bound in body");
    }
    for (const auto& h : rule.head) {
        if (!vocabulary.find(h.predicate)) {
            throw KnowledgeError(Code::UnknownPredicate, "rule '" + rule.name + "': unknown predicate '" + h.predicate + "'");
        }
        for (const auto* t : {&h.subject, &h.object}) {
            if (const auto* v = std::get_if<Variable>(t); v && !bound.contains(v->name)) {
                fail("head variable ?" + v->name + " not bound in body");
            }
            if (const auto* m = std::get_if<Mint>(t)) {
                if (m->prefix.empty() || m->key.empty()) fail("minted entity needs a prefix and a key");
                for (const auto& k : m->key) {
                    if (!bound.contains(k)) fail("mint key ?" + k + " not bound in body");
                }
            }
        }
        if (const auto* v = std::get_if<Value>(&h.subject); v && !std::holds_alternative<EntityRef>(*v)) {
            fail("head subject must be an entity");
        }
    }
}

namespace {

struct Instantiation {
    std::vector<std::pair<std::string, EntityKind>> mints;
    std::vector<Assertion> facts;
};

class CompiledRule {
public:
    CompiledRule(const Rule& rule) : rule_(rule), program_(rule.body, rule.filters) {}

    [[nodiscard]] const Rule& rule() const noexcept { return rule_; }
    [[nodiscard]] const Program& program() const noexcept { return program_; }

    void instantiate(const Row& row, Instantiation& out) const {
        for (const auto& h : rule_.head) {
            auto subject = resolve(row, h.subject, out);
            auto object = resolve(row, h.object, out);
            const auto* ref = std::get_if<EntityRef>(&subject);
            if (!ref) {
                throw KnowledgeError(Code::TypeMismatch, "rule '" + rule_.name + "' produced a literal subject for " + h.predicate);
            }
            out.facts.push_back({ref->id, h.predicate, std::move(object)});
        }
    }

private:
    Value resolve(const Row& row, const HeadTerm& t, Instantiation& out) const {
        if (const auto* v = std::get_if<Variable>(&t)) return *row[program_.slot_of(v->name)];
        if (const auto* c = std::get_if<Value>(&t)) return *c;
        const auto& m = std::get<Mint>(t);
        std::string id = m.prefix;
        for (const auto& k : m.key) id += ":" + render(*row[program_.slot_of(k)]);
        out.mints.emplace_back(id, m.kind);
        return EntityRef{std::move(id)};
    }

    const Rule& rule_;
    Program program_;
};

}  // namespace

std::vector<Assertion> instantiate(const Store& store, const Rule& rule) {
    validate_rule(rule, store.vocabulary());
    CompiledRule compiled(rule);
    Instantiation out;
    compiled.program().run(store, [&](const Row& row) { compiled.instantiate(row, out); });
    std::sort(out.facts.begin(), out.facts.end());
    out.facts.erase(std::unique(out.facts.begin(), out.facts.end()), out.facts.end());
    return out.facts;
}

DerivationReport run_rules(Store& store, std::span<const Rule> rules) {
    for (const auto& r : rules) validate_rule(r, store.vocabulary());
    std::vector<CompiledRule> compiled(rules.begin(), rules.end());

    DerivationReport report;
    std::map<std::string, std::vector<Assertion>, std::less<>> delta;
    bool first = true;
    while (first || !delta.empty()) {
        ++report.rounds;
        std::vector<std::pair<Instantiation, std::size_t>> pending;
        for (std::size_t r = 0; r < compiled.size(); ++r) {
            Instantiation out;
            auto emit = [&](const Row& row) { compiled[r].instantiate(row, out); };
            const auto& patterns = compiled[r].program().patterns();
            if (first) {
                compiled[r].program().run(store, emit);
            } else {
                for (std::size_t i = 0; i < patterns.size(); ++i) {
                    auto it = delta.find(patterns[i].predicate);
                    if (it == delta.end()) continue;
                    for (const auto& fact : it->second) compiled[r].program().run(store, emit, i, &fact);
                }
            }
            pending.emplace_back(std::move(out), r);
        }
        first = false;
        delta.clear();
        for (auto& [out, r] : pending) {
            for (auto& [id, kind] : out.mints) {
                if (!store.kind_of(id)) report.minted.push_back(id);
                store.add_entity(id, kind);
            }
            for (auto& fact : out.facts) {
                if (store.assert_fact(fact)) {
                    report.derived.push_back({fact, compiled[r].rule().name});
                    delta[fact.predicate].push_back(std::move(fact));
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Fact file

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape(std::string_view s, std::size_t line) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) throw KnowledgeError(Code::Malformed, "fact line " + std::to_string(line) + ": dangling escape");
        switch (s[i]) {
            case '\\': out += '\\'; break;
            case 't': out += '\t'; break;
            case 'n': out += '\n'; break;
            case 'r': out += '\r'; break;
            default: throw KnowledgeError(Code::Malformed, "fact line " + std::to_string(line) + ": unknown escape");
        }
    }
    return out;
}

Value parse_value(std::string_view kind, const std::string& text, std::size_t line) {
    auto bad = [&]() {
        return KnowledgeError(Code::Malformed, "fact line " + std::to_string(line) + ": bad " + std::string(kind) + " '" + text + "'");
    };
    if (kind == "entity") return EntityRef{text};
    if (kind == "string") return text;
    if (kind == "integer") {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) throw bad();
        return v;
    }
    if (kind == "number") {
        double v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) throw bad();
        return v;
    }
    if (kind == "date") {
        try {
            return survey::Date::parse(text);
        } catch (const survey::SurveyError&) {
            throw bad();
        }
    }
    throw KnowledgeError(Code::Malformed, "fact line " + std::to_string(line) + ": unknown object kind '" + std::string(kind) + "'");
}

}  // namespace

std::string save_facts(const Store& store) {
    std::ostringstream os;
    for (const auto& [id, kind] : store.entities()) os << escape(id) << "\ta\tclass\t" << to_string(kind) << '\n';
    for (const auto& a : store.assertions()) {
        os << escape(a.subject) << '\t' << a.predicate << '\t' << to_string(type_of(a.object)) << '\t'
           << escape(render(a.object)) << '\n';
    }
    return os.str();
}

Store load_facts(std::string_view text, Vocabulary vocabulary) {
    Store store(std::move(vocabulary));
    std::vector<std::pair<std::size_t, Assertion>> facts;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::size_t f = 0;
        while (true) {
            auto tab = line.find('\t', f);
            fields.push_back(line.substr(f, tab == std::string_view::npos ? std::string_view::npos : tab - f));
            if (tab == std::string_view::npos) break;
            f = tab + 1;
        }
        if (fields.size() != 4) {
            throw KnowledgeError(Code::Malformed, "fact line " + std::to_string(line_no) + ": expected 4 tab-separated fields");
        }
        auto subject = unescape(fields[0], line_no);
        auto object = unescape(fields[3], line_no);
        if (fields[1] == "a" && fields[2] == "class") {
            auto kind = parse_entity_kind(object);
            if (!kind) throw KnowledgeError(Code::Malformed, "fact line " + std::to_string(line_no) + ": unknown kind '" + object + "'");
            store.add_entity(std::move(subject), *kind);
            continue;
        }
        facts.emplace_back(line_no, Assertion{std::move(subject), std::string(fields[1]), parse_value(fields[2], object, line_no)});
    }
    for (const auto& [ln, a] : facts) {
        try {
            store.assert_fact(a);
        } catch (const KnowledgeError& e) {
            throw KnowledgeError(e.code(), "fact line " + std::to_string(ln) + ": " + e.what());
        }
    }
    return store;
}

}  // namespace peerlens::knowledge
