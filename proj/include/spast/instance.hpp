#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spast {

// Internally every id is 0-based; the text format uses 1-based ids.
using StudentId = int;
using ProjectId = int;
using LecturerId = int;

// One tie group: ids the owner of the list is indifferent between.
using TieGroup = std::vector<int>;
// A preference list is a sequence of tie groups, most preferred first.
using PreferenceList = std::vector<TieGroup>;

struct ParseError : std::runtime_error {
    int line;  // 1-based physical line number, 0 if not line-specific
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), line(0) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An SPA-ST instance: students with ranked (possibly tied) project lists,
// projects with capacities, each offered by one lecturer, and lecturers with
// capacities and ranked (possibly tied) lists over their applicants.
// Immutable once constructed; construction validates every invariant.
class Instance {
public:
    static Instance from_parts(std::vector<int> project_capacities,
                               std::vector<int> lecturer_capacities,
                               std::vector<LecturerId> project_owner,
                               std::vector<PreferenceList> student_prefs,
                               std::vector<PreferenceList> lecturer_prefs);

    int student_count() const { return n_students_; }
    int project_count() const { return n_projects_; }
    int lecturer_count() const { return n_lecturers_; }

    int project_capacity(ProjectId j) const { return cap_project_[j]; }
    int lecturer_capacity(LecturerId k) const { return cap_lecturer_[k]; }
    LecturerId owner(ProjectId j) const { return owner_[j]; }
    const std::vector<ProjectId>& projects_of(LecturerId k) const { return projects_of_[k]; }

    const PreferenceList& student_prefs(StudentId i) const { return student_prefs_[i]; }
    const PreferenceList& lecturer_prefs(LecturerId k) const { return lecturer_prefs_[k]; }

    // Projects acceptable to student i, ascending by index.
    const std::vector<ProjectId>& acceptable_projects(StudentId i) const { return acceptable_[i]; }
    bool acceptable(StudentId i, ProjectId j) const { return student_rank(i, j) != 0; }

    // rank = 1 + number of entries the list owner strictly prefers to the
    // target; tied entries share a rank. 0 means the target is not listed.
    int student_rank(StudentId i, ProjectId j) const { return student_rank_[(size_t)i * n_projects_ + j]; }
    int lecturer_rank(LecturerId k, StudentId i) const { return lecturer_rank_[(size_t)k * n_students_ + i]; }

    // Lecturer k's list restricted to students that rank project j (owned by k).
    PreferenceList projected_prefs(LecturerId k, ProjectId j) const;

    // Number of acceptable (student, project) pairs.
    long long acceptable_pair_count() const { return pair_count_; }
    // Combined length of all student and lecturer preference lists as written.
    long long total_pref_length() const { return total_pref_length_; }

    bool operator==(const Instance& other) const;

private:
    Instance() = default;

    int n_students_ = 0, n_projects_ = 0, n_lecturers_ = 0;
    std::vector<int> cap_project_;
    std::vector<int> cap_lecturer_;
    std::vector<LecturerId> owner_;
    std::vector<std::vector<ProjectId>> projects_of_;
    std::vector<PreferenceList> student_prefs_;
    std::vector<PreferenceList> lecturer_prefs_;
    std::vector<std::vector<ProjectId>> acceptable_;
    std::vector<int> student_rank_;   // n_students x n_projects, 0 = unacceptable
    std::vector<int> lecturer_rank_;  // n_lecturers x n_students, 0 = unranked
    long long pair_count_ = 0;
    long long total_pref_length_ = 0;
};

// Text format (1-based ids, '#' starts a comment line, blank lines ignored):
//   line 1: n_students n_projects n_lecturers
//   line 2: project capacities (n_projects integers)
//   line 3: lecturer capacities (n_lecturers integers)
//   line 4: owning lecturer of each project (n_projects integers)
//   next n_students lines: student preference lists, ties in parentheses,
//     e.g. "2 (5 3) 7"; a lone "-" denotes an empty list
//   next n_lecturers lines: lecturer preference lists, same syntax
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
Instance read_instance_file(const std::string& path);

}  // namespace spast
