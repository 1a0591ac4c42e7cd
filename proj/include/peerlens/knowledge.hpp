#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "peerlens/survey.hpp"

namespace peerlens::knowledge {

enum class EntityKind {
    Person,
    ClassOnSchool,
    School,
    Course,
    CourseLevel,
    GroupOfClass,
    AcademicCategory,
    Questionnaire,
    Question,
    QuestionSNA,
    QuestionnairePastEvent,
    Answer,
    AnswerOfPersonToQuestion,
    Network,
    SNAConcept,
    SNACharacteristic,
};

inline constexpr std::size_t kEntityKindCount = 16;

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> parse_entity_kind(std::string_view name);

class KnowledgeError : public std::runtime_error {
public:
    enum class Code { UnknownPredicate, DanglingReference, TypeMismatch, DuplicateEntity, UnsafeRule, Malformed };

    KnowledgeError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] Code code() const noexcept { return code_; }

private:
    Code code_;
};

struct EntityRef {
    std::string id;
    friend auto operator<=>(const EntityRef&, const EntityRef&) = default;
};

/// Object position of an assertion: an entity or a literal.
using Value = std::variant<EntityRef, std::string, std::int64_t, double, survey::Date>;

enum class ValueType { Entity, String, Integer, Number, Date };

ValueType type_of(const Value& v);
std::string_view to_string(ValueType type);
/// Display form; entity ids and strings verbatim, numbers in shortest round-trip form.
std::string render(const Value& v);
/// Integer or number as double; nullopt for everything else.
std::optional<double> numeric(const Value& v);

struct Assertion {
    std::string subject;
    std::string predicate;
    Value object;

    friend bool operator==(const Assertion&, const Assertion&) = default;
    friend bool operator<(const Assertion& a, const Assertion& b);
};

/// Declared relation: subject kinds, and either entity kinds or literal types for the object.
/// Empty kind sets accept any kind.
struct PredicateDecl {
    std::string name;
    std::set<EntityKind> subject_kinds;
    bool entity_object = true;
    std::set<EntityKind> object_kinds;
    std::set<ValueType> literal_types;
    std::string comment;
};

class Vocabulary {
public:
    void declare(PredicateDecl decl);
    [[nodiscard]] const PredicateDecl* find(std::string_view name) const;
    [[nodiscard]] const std::map<std::string, PredicateDecl, std::less<>>& predicates() const noexcept {
        return decls_;
    }

private:
    std::map<std::string, PredicateDecl, std::less<>> decls_;
};

/// Set-semantics fact store with (predicate, subject) and (predicate, object) indexes.
/// Single writer; const access is safe from several threads while no writer is active.
class Store {
public:
    explicit Store(Vocabulary vocabulary);

    /// Creates an entity; re-adding with the same kind is a no-op, with another kind an error.
    void add_entity(std::string id, EntityKind kind);
    [[nodiscard]] std::optional<EntityKind> kind_of(std::string_view id) const;
    [[nodiscard]] const std::map<std::string, EntityKind, std::less<>>& entities() const noexcept {
        return entities_;
    }

    /// Returns true when the assertion was new.
    bool assert_fact(const Assertion& a);
    /// Returns true when the assertion was present.
    bool retract(const Assertion& a);
    [[nodiscard]] bool contains(const Assertion& a) const;
    [[nodiscard]] std::size_t size() const noexcept { return facts_.size(); }
    [[nodiscard]] const std::set<Assertion>& assertions() const noexcept { return facts_; }

    [[nodiscard]] std::vector<Value> objects(std::string_view subject, std::string_view predicate) const;
    [[nodiscard]] std::vector<std::string> subjects(std::string_view predicate, const Value& object) const;
    [[nodiscard]] std::vector<Assertion> with_predicate(std::string_view predicate) const;

    /// Index views for the matcher; nullptr when nothing is indexed under the key.
    [[nodiscard]] const std::set<Value>* object_set(std::string_view subject, std::string_view predicate) const;
    [[nodiscard]] const std::set<std::string>* subject_set(std::string_view predicate, const Value& object) const;
    using SubjectIndex = std::map<std::string, std::set<Value>, std::less<>>;
    [[nodiscard]] const SubjectIndex* predicate_index(std::string_view predicate) const;

    [[nodiscard]] const Vocabulary& vocabulary() const noexcept { return vocabulary_; }
    /// Throws KnowledgeError(UnknownPredicate) when the predicate is not declared.
    const PredicateDecl& require_predicate(std::string_view name) const;

private:
    void check(const Assertion& a) const;

    Vocabulary vocabulary_;
    std::map<std::string, EntityKind, std::less<>> entities_;
    std::set<Assertion> facts_;
    std::map<std::string, SubjectIndex, std::less<>> by_ps_;
    std::map<std::string, std::map<Value, std::set<std::string>>, std::less<>> by_po_;
};

// ---------------------------------------------------------------------------
// Queries

struct Variable {
    std::string name;
    friend bool operator==(const Variable&, const Variable&) = default;
};

using Term = std::variant<Variable, Value>;

inline Term var(std::string name) { return Variable{std::move(name)}; }
inline Term ent(std::string id) { return Value{EntityRef{std::move(id)}}; }
inline Term lit(Value v) { return v; }

struct Pattern {
    Term subject;
    std::string predicate;
    Term object;
};

enum class Comparison { Ge, Le, Eq };

/// Numeric comparisons coerce integers and numbers; Eq on other values is exact.
struct Filter {
    std::string variable;
    Comparison op = Comparison::Eq;
    Value operand;
};

struct QueryResult {
    /// Variables in order of first appearance in the patterns.
    std::vector<std::string> variables;
    /// Distinct binding tuples, sorted.
    std::vector<std::vector<Value>> rows;

    [[nodiscard]] std::optional<std::size_t> column(std::string_view variable) const;
};

QueryResult query(const Store& store, std::span<const Pattern> patterns, std::span<const Filter> filters = {});

// ---------------------------------------------------------------------------
// Rules

/// Head term that names an entity by a deterministic key: prefix + ":" + rendered key values.
struct Mint {
    EntityKind kind = EntityKind::SNACharacteristic;
    std::string prefix;
    std::vector<std::string> key;
};

using HeadTerm = std::variant<Variable, Value, Mint>;

struct HeadTemplate {
    HeadTerm subject;
    std::string predicate;
    HeadTerm object;
};

struct Rule {
    std::string name;
    std::vector<Pattern> body;
    std::vector<Filter> filters;
    std::vector<HeadTemplate> head;
};

/// Rejects rules with an empty body or head, undeclared predicates, or head/filter variables not bound in the body.
void validate_rule(const Rule& rule, const Vocabulary& vocabulary);

struct Derivation {
    Assertion assertion;
    std::string rule;
};

struct DerivationReport {
    std::vector<Derivation> derived;
    std::vector<std::string> minted;
    std::size_t rounds = 0;

    [[nodiscard]] bool empty() const noexcept { return derived.empty() && minted.empty(); }
};

/// Semi-naive forward chaining to a fixpoint. Rules are validated before any fact is derived.
DerivationReport run_rules(Store& store, std::span<const Rule> rules);

/// Head assertions produced by every satisfying body binding in the current store, without changing it.
std::vector<Assertion> instantiate(const Store& store, const Rule& rule);

// ---------------------------------------------------------------------------
// Fact file: one line per entity (`id<TAB>a<TAB>class<TAB>Kind`) then one per assertion
// (`subject<TAB>predicate<TAB>object_kind<TAB>object`), sorted, LF-terminated.

std::string save_facts(const Store& store);
/// Loads into an empty store built on `vocabulary`.
Store load_facts(std::string_view text, Vocabulary vocabulary);

}  // namespace peerlens::knowledge
