#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spast/instance.hpp"
#include "spast/stability.hpp"

namespace spast {

// Brute-force ground truth for small instances. Everything here is
// exponential in the worst case and guarded by an explicit node budget.

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationBudget {
    // Search-tree nodes (not leaves) for matching enumeration; instance
    // count for tie-breaking enumeration.
    long long max_nodes = 10'000'000;
};

// Visits every capacity-feasible assignment of students to acceptable
// projects (each student may also stay unassigned). Students are expanded
// in index order; per student the options run through acceptable projects
// in ascending index order with "unassigned" last. Throws BudgetExhausted
// when the node cap is hit.
void for_each_matching(const Instance& inst, const EnumerationBudget& budget,
                       const std::function<void(const Matching&)>& fn);

std::vector<Matching> all_super_stable(const Instance& inst, const EnumerationBudget& budget = {});
std::vector<Matching> all_weakly_stable(const Instance& inst, const EnumerationBudget& budget = {});

// Number of strict instances obtainable by permuting every rank group
// independently, i.e. the product of factorials of group sizes on both
// sides. Saturates at the maximum value instead of overflowing.
std::uint64_t count_tie_breakings(const Instance& inst);

// Visits every tie-breaking of inst as a strict instance, in lexicographic
// permutation order per group (student groups first, then lecturer groups).
// Throws BudgetExhausted if count_tie_breakings exceeds budget.max_nodes.
void for_each_tie_breaking(const Instance& inst, const EnumerationBudget& budget,
                           const std::function<void(const Instance&)>& fn);

struct PropositionCheck {
    bool lhs = false;  // stability of m in inst under the relevant notion
    bool rhs = false;  // the tie-breaking side of the biconditional
    bool holds() const { return lhs == rhs; }
};

// m is super-stable in inst  <=>  m is stable in every tie-breaking.
PropositionCheck check_proposition_1(const Instance& inst, const Matching& m,
                                     const EnumerationBudget& budget = {});

// m is weakly stable in inst  <=>  m is stable in some tie-breaking.
PropositionCheck check_proposition_2(const Instance& inst, const Matching& m,
                                     const EnumerationBudget& budget = {});

struct UnpopularProjectsReport {
    bool vacuous = false;  // fewer than one matching supplied
    bool lecturer_loads_equal = false;
    bool unassigned_equal = false;
    bool undersub_project_loads_equal = false;
    bool holds() const {
        return vacuous ||
               (lecturer_loads_equal && unassigned_equal && undersub_project_loads_equal);
    }
};

// Checks the three structural invariants over a set of matchings: equal
// per-lecturer loads, identical unassigned-student sets, and equal loads
// for projects offered by lecturers undersubscribed in any (equivalently,
// by the first invariant, every) matching of the set.
UnpopularProjectsReport unpopular_projects_report(const Instance& inst,
                                                  const std::vector<Matching>& matchings);

// Convenience wrapper over all_super_stable.
UnpopularProjectsReport check_unpopular_projects(const Instance& inst,
                                                 const EnumerationBudget& budget = {});

}  // namespace spast
