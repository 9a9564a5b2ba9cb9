#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spast/instance.hpp"
#include "spast/stability.hpp"

namespace spast {

// Where a pair deletion was triggered.
enum class DeletionCause {
    project_oversubscribed,
    lecturer_oversubscribed,
    project_full,
    lecturer_full,
    post_while,  // tail deletion in the pass that runs after the application loop drains
};
const char* deletion_cause_name(DeletionCause cause);

struct Deletion {
    StudentId student;
    ProjectId project;
    DeletionCause cause;
    bool operator==(const Deletion& other) const = default;
};

struct TraceEvent {
    enum class Kind { apply, erase, phase };
    Kind kind;
    StudentId student = -1;  // apply/erase
    ProjectId project = -1;  // apply/erase
    DeletionCause cause = DeletionCause::project_oversubscribed;  // erase only
    int phase = 0;                                                // phase only
};

// One event per line: "APPLY s p", "DELETE s p cause", "PHASE n" (1-based ids).
std::string format_trace(const std::vector<TraceEvent>& trace);

struct SolveOptions {
    // The algorithm leaves some choices free: which of several tied students
    // counts as "worst", work-list order, application order inside a tied
    // head, and the scan direction of the post-while pass. `alternate` flips
    // all of them; the outcome must not depend on it.
    bool alternate = false;
    bool record_trace = false;
};

enum class FailReason { none, multiply_assigned, blocking_pair };

struct SolveResult {
    bool found = false;
    std::optional<Matching> matching;  // engaged iff found
    FailReason reason = FailReason::none;
    std::vector<Deletion> deletions;
    std::vector<TraceEvent> trace;  // filled iff record_trace

    // Diagnostics.
    long long applications = 0;
    int phase_passes = 0;
    std::vector<char> lecturer_was_full;  // load reached the capacity at some point
    std::vector<int> lecturer_load;       // at termination
};

SolveResult solve(const Instance& inst, const SolveOptions& options = {});

}  // namespace spast
