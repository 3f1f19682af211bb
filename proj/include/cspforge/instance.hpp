#pragma once

#include "cspforge/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cspforge {

using DomainValue = int;
using Tuple = std::vector<DomainValue>;

// Finite table from arity-tuples over the domain to weights. Absent entries
// denote 0; explicit zero entries may be stored but are dropped on
// serialization and ignored by structural comparison.
struct WeightFunction {
    std::string name;
    int arity = 1;
    std::map<Tuple, Rational> table;

    Rational value(const Tuple& key) const {
        auto it = table.find(key);
        return it == table.end() ? Rational(0) : it->second;
    }

    void set(Tuple key, Rational v) { table[std::move(key)] = std::move(v); }

    // All stored values are exactly 0 or 1.
    bool is_relation() const;
    // No stored value is nonzero.
    bool is_zero() const;
    // Sum of all values.
    Rational total() const;
    // Number of nonzero entries.
    std::size_t support_size() const;
    // Drops stored zero entries.
    void normalize();
};

struct Constraint {
    std::string function;
    std::vector<std::string> scope;

    friend bool operator==(const Constraint&, const Constraint&) = default;
    friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

struct Instance {
    int domain_size = 1; // domain is {0, ..., domain_size-1}
    std::map<std::string, WeightFunction> functions;
    std::vector<std::string> variables;
    std::vector<Constraint> constraints; // multiset; order insignificant
    std::optional<WeightFunction> vertex_weighting;

    bool has_variable(const std::string& v) const;
    // Appends v if not already declared.
    void add_variable(const std::string& v);
    const WeightFunction* find_function(const std::string& name) const;

    // Variables that appear in no constraint scope.
    std::vector<std::string> unused_variables() const;
    // Total occurrences of each variable across all scopes.
    std::map<std::string, std::size_t> occurrence_counts() const;
    std::size_t max_occurrences() const;
    // Sum of stored table entries over functions and the vertex weighting.
    std::size_t table_entries() const;
};

// Empty iff all instance invariants hold; violations are data, not failures.
std::vector<std::string> validate_instance(const Instance& inst);

// Equality up to zero table entries, variable order, and constraint order.
bool structurally_equal(const Instance& a, const Instance& b);

// First name not declared in `inst`, formed from `base` by appending '_'.
std::string fresh_variable_name(const Instance& inst, std::string base);

} // namespace cspforge
