#include "support/knowledge_check.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "peerlens/metrics.hpp"
#include "peerlens/networks.hpp"
#include "peerlens/ontology.hpp"
#include "peerlens/synthetic.hpp"

namespace peerlens::fixtures {

using namespace knowledge;

namespace {

bool filter_holds(const Value& v, const Filter& f) {
    auto a = numeric(v);
    auto b = numeric(f.operand);
    if (a && b) {
        if (f.op == Comparison::Ge) return *a >= *b;
        if (f.op == Comparison::Le) return *a <= *b;
        return *a == *b;
    }
    if (f.op == Comparison::Eq) return v == f.operand;
    if (a || b || v.index() != f.operand.index()) return false;
    return f.op == Comparison::Ge ? !(v < f.operand) : !(f.operand < v);
}

}  // namespace

QueryResult nested_loop_join(const Store& store, std::span<const Pattern> patterns, std::span<const Filter> filters) {
    QueryResult result;
    auto note = [&](const Term& t) {
        if (const auto* v = std::get_if<Variable>(&t)) {
            if (std::find(result.variables.begin(), result.variables.end(), v->name) == result.variables.end()) {
                result.variables.push_back(v->name);
            }
        }
    };
    for (const auto& p : patterns) {
        note(p.subject);
        note(p.object);
    }

    using Binding = std::map<std::string, Value>;
    std::vector<Binding> partial{Binding{}};
    auto unify = [](Binding& b, const Term& t, const Value& v) {
        if (const auto* var = std::get_if<Variable>(&t)) {
            auto [it, inserted] = b.emplace(var->name, v);
            return inserted || it->second == v;
        }
        return std::get<Value>(t) == v;
    };
    for (const auto& p : patterns) {
        std::vector<Binding> next;
        for (const auto& b : partial) {
            for (const auto& fact : store.assertions()) {
                if (fact.predicate != p.predicate) continue;
                Binding extended = b;
                if (unify(extended, p.subject, Value{EntityRef{fact.subject}}) && unify(extended, p.object, fact.object)) {
                    next.push_back(std::move(extended));
                }
            }
        }
        partial = std::move(next);
    }

    std::set<std::vector<Value>> rows;
    for (const auto& b : partial) {
        bool ok = true;
        for (const auto& f : filters) ok = ok && filter_holds(b.at(f.variable), f);
        if (!ok) continue;
        std::vector<Value> row;
        for (const auto& v : result.variables) row.push_back(b.at(v));
        rows.insert(std::move(row));
    }
    result.rows.assign(rows.begin(), rows.end());
    return result;
}

Store random_study_store(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto students = std::uniform_int_distribution<std::size_t>(3, 8)(rng);
    auto roster = synthetic::make_roster(students, seed);
    for (std::size_t i = 0; i < roster.size(); ++i) roster[i].pseudonym = "S" + std::to_string(i);
    const auto qn = survey::standard_questionnaire();
    const survey::QuestionnaireEvent event{qn.id, survey::Date{2017, 3, 1}};
    auto answers = synthetic::make_answers(roster, qn, seed + 1, event);
    std::bernoulli_distribution drop(0.1);
    std::erase_if(answers, [&](const survey::AnswerRecord&) { return drop(rng); });

    auto profiles = survey::build_profiles(answers, roster, qn);
    Store store(standard_vocabulary());
    populate(store, qn, roster, answers, profiles);
    auto nets = networks::annotate_all(networks::build_networks(answers, roster, profiles));
    for (const auto* g : nets.all()) write_back_metrics(store, *g);
    return store;
}

Store shuffled_copy(const Store& store, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, EntityKind>> entities(store.entities().begin(), store.entities().end());
    std::vector<Assertion> facts(store.assertions().begin(), store.assertions().end());
    std::shuffle(entities.begin(), entities.end(), rng);
    std::shuffle(facts.begin(), facts.end(), rng);
    Store copy(store.vocabulary());
    for (auto& [id, kind] : entities) copy.add_entity(id, kind);
    for (const auto& f : facts) copy.assert_fact(f);
    return copy;
}

std::vector<std::string> rule_engine_issues(std::uint64_t seed) {
    std::vector<std::string> issues;
    const auto rules = standard_rules();
    const auto base = random_study_store(seed);

    auto store = base;
    const auto report = run_rules(store, rules);
    if (report.derived.empty()) issues.push_back("no derivations on a populated store");
    const auto again = run_rules(store, rules);
    if (!again.empty()) issues.push_back("second run derived " + std::to_string(again.derived.size()) + " facts");

    for (const auto& f : base.assertions()) {
        if (!store.contains(f)) {
            issues.push_back("base fact lost: " + f.subject + " " + f.predicate);
            break;
        }
    }
    if (store.size() != base.size() + report.derived.size()) issues.push_back("store size differs from base + derived");

    auto shuffled = shuffled_copy(base, seed ^ 0x9e3779b97f4a7c15ULL);
    run_rules(shuffled, rules);
    if (save_facts(shuffled) != save_facts(store)) issues.push_back("fixpoint depends on insertion order");

    std::map<std::string, std::set<Assertion>> heads;
    for (const auto& r : rules) {
        auto produced = instantiate(store, r);
        heads[r.name] = std::set<Assertion>(produced.begin(), produced.end());
    }
    for (const auto& d : report.derived) {
        if (!heads[d.rule].contains(d.assertion)) {
            issues.push_back("unsound derivation by " + d.rule + ": " + d.assertion.subject + " " + d.assertion.predicate);
            break;
        }
    }
    return issues;
}

}  // namespace peerlens::fixtures
