#pragma once

#include <string>
#include <vector>

#include "spast/instance.hpp"
#include "spast/oracle.hpp"
#include "spast/stability.hpp"

namespace spast {

// Binary program whose feasible solutions are exactly the super-stable
// matchings: an assignment variable per acceptable pair plus auxiliary
// indicator families for project/lecturer subscription states, with twelve
// linear constraint schemas tying them together and a maximize-cardinality
// objective.

struct IpConstraint {
    std::string name;
    // terms as (variable index, integer coefficient); the sense is
    // sum(terms) <= rhs when less_equal, otherwise sum(terms) >= rhs.
    std::vector<std::pair<int, int>> terms;
    bool less_equal = true;
    long long rhs = 0;
};

class IpModel {
public:
    int variable_count() const { return static_cast<int>(names_.size()); }
    const std::string& variable_name(int v) const { return names_[v]; }
    const std::vector<IpConstraint>& constraints() const { return constraints_; }
    // Objective: maximize the sum of these variables (every x, coefficient 1).
    const std::vector<int>& objective() const { return objective_; }

    int x_count() const { return x_count_; }

    // Variable lookups; -1 where the pair is not acceptable.
    int x_var(StudentId i, ProjectId j) const { return x_[(size_t)i * n2_ + j]; }
    int alpha_var(ProjectId j) const { return alpha_[j]; }
    int beta_var(LecturerId k) const { return beta_[k]; }
    int eta_var(LecturerId k) const { return eta_[k]; }
    int gamma_var(ProjectId j) const { return gamma_[j]; }
    int delta_var(StudentId i, LecturerId k) const { return delta_[(size_t)i * n3_ + k]; }
    int lambda_var(StudentId i, ProjectId j) const { return lambda_[(size_t)i * n2_ + j]; }

private:
    friend IpModel build_model(const Instance& inst);
    int n1_ = 0, n2_ = 0, n3_ = 0;
    int x_count_ = 0;
    std::vector<std::string> names_;
    std::vector<IpConstraint> constraints_;
    std::vector<int> objective_;
    std::vector<int> x_, alpha_, beta_, eta_, gamma_, delta_, lambda_;
};

IpModel build_model(const Instance& inst);

// The constructive assignment of all variables induced by a matching:
// x from the pairs, auxiliaries from subscription states and worst-assignee
// comparisons. For a super-stable matching the result is feasible.
std::vector<unsigned char> assignment_from_matching(const IpModel& model, const Instance& inst,
                                                    const Matching& m);

bool satisfies(const IpModel& model, const std::vector<unsigned char>& values);

// First violated constraint under values, or nullptr.
const IpConstraint* first_violated(const IpModel& model,
                                   const std::vector<unsigned char>& values);

// Enumerates capacity-feasible matchings, derives the auxiliaries for each,
// and keeps those satisfying every constraint. Agrees with all_super_stable
// on every instance; checked against it at desk scale.
std::vector<Matching> feasible_matchings_by_enumeration(const Instance& inst,
                                                        const EnumerationBudget& budget = {});

// LP-format text (objective, constraints, binary declarations).
std::string export_lp(const IpModel& model);

}  // namespace spast
