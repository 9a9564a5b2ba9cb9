#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spast/instance.hpp"

namespace spast {

// A (partial) assignment of students to acceptable projects, at most one
// project per student. Capacity checks live in is_matching / find_blocking_pairs.
class Matching {
public:
    explicit Matching(int n_students) : assigned_(n_students, -1) {}

    // Throws ValidationError if a pair is not acceptable or a student appears twice.
    static Matching from_pairs(const Instance& inst, const std::vector<std::pair<StudentId, ProjectId>>& pairs);

    ProjectId project_of(StudentId i) const { return assigned_[i]; }
    bool assigned(StudentId i) const { return assigned_[i] >= 0; }
    void assign(StudentId i, ProjectId j) { assigned_[i] = j; }
    void unassign(StudentId i) { assigned_[i] = -1; }
    int student_count() const { return (int)assigned_.size(); }
    int size() const;  // number of assigned students

    // Pairs sorted by student id.
    std::vector<std::pair<StudentId, ProjectId>> pairs() const;

    std::vector<int> project_loads(const Instance& inst) const;
    std::vector<int> lecturer_loads(const Instance& inst) const;
    std::vector<StudentId> unassigned_students() const;

    bool operator==(const Matching& other) const { return assigned_ == other.assigned_; }

private:
    std::vector<ProjectId> assigned_;
};

struct MatchingVerdict {
    bool ok;
    std::string reason;  // empty when ok
};

// Checks capacity feasibility; acceptability violations throw from from_pairs.
MatchingVerdict is_matching(const Instance& inst, const Matching& m);

enum class Notion { super, weak };

// Which clause of the blocking condition fired: the project and its lecturer
// both undersubscribed; the project undersubscribed and the lecturer full;
// or the project full.
enum class BlockKind { lecturer_undersubscribed, lecturer_full, project_full };

struct BlockingPair {
    StudentId student;
    ProjectId project;
    BlockKind kind;
    bool operator==(const BlockingPair& other) const = default;
};

// All blocking pairs of m, sorted by (student, project).
std::vector<BlockingPair> find_blocking_pairs(const Instance& inst, const Matching& m, Notion notion);

bool is_super_stable(const Instance& inst, const Matching& m);
bool is_weakly_stable(const Instance& inst, const Matching& m);

const char* block_kind_name(BlockKind kind);

// Matching text format: one "student project" pair per line, 1-based ids,
// '#' comments and blank lines ignored; unassigned students are omitted.
Matching parse_matching(const Instance& inst, const std::string& text);
std::string serialize_matching(const Matching& m);
Matching read_matching_file(const Instance& inst, const std::string& path);

}  // namespace spast
