#include "cspforge/instance.hpp"

#include <algorithm>
#include <set>

namespace cspforge {

bool WeightFunction::is_relation() const {
    for (const auto& [key, v] : table)
        if (!v.is_zero() && v != Rational(1)) return false;
    return true;
}

bool WeightFunction::is_zero() const {
    for (const auto& [key, v] : table)
        if (!v.is_zero()) return false;
    return true;
}

Rational WeightFunction::total() const {
    Rational sum;
    for (const auto& [key, v] : table) sum += v;
    return sum;
}

std::size_t WeightFunction::support_size() const {
    std::size_t n = 0;
    for (const auto& [key, v] : table)
        if (!v.is_zero()) ++n;
    return n;
}

void WeightFunction::normalize() {
    std::erase_if(table, [](const auto& kv) { return kv.second.is_zero(); });
}

bool Instance::has_variable(const std::string& v) const {
    return std::find(variables.begin(), variables.end(), v) != variables.end();
}

void Instance::add_variable(const std::string& v) {
    if (!has_variable(v)) variables.push_back(v);
}

const WeightFunction* Instance::find_function(const std::string& name) const {
    auto it = functions.find(name);
    return it == functions.end() ? nullptr : &it->second;
}

std::vector<std::string> Instance::unused_variables() const {
    std::set<std::string> used;
    for (const Constraint& c : constraints)
        used.insert(c.scope.begin(), c.scope.end());
    std::vector<std::string> unused;
    for (const std::string& v : variables)
        if (!used.count(v)) unused.push_back(v);
    return unused;
}

std::map<std::string, std::size_t> Instance::occurrence_counts() const {
    std::map<std::string, std::size_t> counts;
    for (const std::string& v : variables) counts[v] = 0;
    for (const Constraint& c : constraints)
        for (const std::string& v : c.scope) ++counts[v];
    return counts;
}

std::size_t Instance::max_occurrences() const {
    std::size_t best = 0;
    for (const auto& [v, n] : occurrence_counts()) best = std::max(best, n);
    return best;
}

std::size_t Instance::table_entries() const {
    std::size_t n = 0;
    for (const auto& [name, f] : functions) n += f.table.size();
    if (vertex_weighting) n += vertex_weighting->table.size();
    return n;
}

namespace {

void validate_table(const WeightFunction& f, int q, const std::string& what,
                    std::vector<std::string>& out) {
    if (f.arity < 1)
        out.push_back(what + " '" + f.name + "' has nonpositive arity");
    for (const auto& [key, v] : f.table) {
        if (static_cast<int>(key.size()) != f.arity) {
            out.push_back(what + " '" + f.name + "' has a table key of length " +
                          std::to_string(key.size()) + ", expected " +
                          std::to_string(f.arity));
            continue;
        }
        for (DomainValue d : key)
            if (d < 0 || d >= q)
                out.push_back(what + " '" + f.name + "' has a table entry outside the domain");
        if (v.is_negative())
            out.push_back(what + " '" + f.name + "' has a negative weight " + v.str());
    }
}

} // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    if (inst.domain_size < 1) out.push_back("domain size must be at least 1");

    std::set<std::string> declared(inst.variables.begin(), inst.variables.end());
    if (declared.size() != inst.variables.size())
        out.push_back("duplicate variable declaration");

    for (const auto& [name, f] : inst.functions) {
        if (name != f.name)
            out.push_back("function '" + name + "' is keyed under a different name");
        validate_table(f, inst.domain_size, "function", out);
    }
    if (inst.vertex_weighting) {
        const WeightFunction& lam = *inst.vertex_weighting;
        if (lam.arity != 1)
            out.push_back("vertex weighting '" + lam.name + "' is not unary");
        validate_table(lam, inst.domain_size, "vertex weighting", out);
    }

    for (const Constraint& c : inst.constraints) {
        const WeightFunction* f = inst.find_function(c.function);
        if (!f) {
            out.push_back("constraint references unknown function '" + c.function + "'");
            continue;
        }
        if (static_cast<int>(c.scope.size()) != f->arity)
            out.push_back("constraint on '" + c.function + "' has scope of length " +
                          std::to_string(c.scope.size()) + ", expected " +
                          std::to_string(f->arity));
        for (const std::string& v : c.scope)
            if (!declared.count(v))
                out.push_back("constraint scope uses undeclared variable '" + v + "'");
    }
    return out;
}

namespace {

std::map<Tuple, Rational> nonzero_entries(const WeightFunction& f) {
    std::map<Tuple, Rational> t;
    for (const auto& [key, v] : f.table)
        if (!v.is_zero()) t.emplace(key, v);
    return t;
}

bool same_function(const WeightFunction& a, const WeightFunction& b) {
    return a.name == b.name && a.arity == b.arity &&
           nonzero_entries(a) == nonzero_entries(b);
}

} // namespace

bool structurally_equal(const Instance& a, const Instance& b) {
    if (a.domain_size != b.domain_size) return false;

    std::set<std::string> va(a.variables.begin(), a.variables.end());
    std::set<std::string> vb(b.variables.begin(), b.variables.end());
    if (va != vb) return false;

    if (a.functions.size() != b.functions.size()) return false;
    for (const auto& [name, f] : a.functions) {
        const WeightFunction* g = b.find_function(name);
        if (!g || !same_function(f, *g)) return false;
    }

    if (a.vertex_weighting.has_value() != b.vertex_weighting.has_value()) return false;
    if (a.vertex_weighting && !same_function(*a.vertex_weighting, *b.vertex_weighting))
        return false;

    std::multiset<Constraint> ca(a.constraints.begin(), a.constraints.end());
    std::multiset<Constraint> cb(b.constraints.begin(), b.constraints.end());
    return ca == cb;
}

std::string fresh_variable_name(const Instance& inst, std::string base) {
    while (inst.has_variable(base)) base += "_";
    return base;
}

} // namespace cspforge
