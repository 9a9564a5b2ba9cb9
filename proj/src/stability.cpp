#include "spast/stability.hpp"

#include <fstream>
#include <sstream>

namespace spast {

Matching Matching::from_pairs(const Instance& inst, const std::vector<std::pair<StudentId, ProjectId>>& pairs) {
    Matching m(inst.student_count());
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= inst.student_count() || j < 0 || j >= inst.project_count())
            throw ValidationError("matching pair out of range");
        if (!inst.acceptable(i, j))
            throw ValidationError("student " + std::to_string(i + 1) + " does not find project " +
                                  std::to_string(j + 1) + " acceptable");
        if (m.assigned(i))
            throw ValidationError("student " + std::to_string(i + 1) + " is assigned twice");
        m.assign(i, j);
    }
    return m;
}

int Matching::size() const {
    int n = 0;
    for (ProjectId j : assigned_)
        if (j >= 0) ++n;
    return n;
}

std::vector<std::pair<StudentId, ProjectId>> Matching::pairs() const {
    std::vector<std::pair<StudentId, ProjectId>> out;
    for (StudentId i = 0; i < (int)assigned_.size(); ++i)
        if (assigned_[i] >= 0) out.emplace_back(i, assigned_[i]);
    return out;
}

std::vector<int> Matching::project_loads(const Instance& inst) const {
    std::vector<int> loads(inst.project_count(), 0);
    for (ProjectId j : assigned_)
        if (j >= 0) ++loads[j];
    return loads;
}

std::vector<int> Matching::lecturer_loads(const Instance& inst) const {
    std::vector<int> loads(inst.lecturer_count(), 0);
    for (ProjectId j : assigned_)
        if (j >= 0) ++loads[inst.owner(j)];
    return loads;
}

std::vector<StudentId> Matching::unassigned_students() const {
    std::vector<StudentId> out;
    for (StudentId i = 0; i < (int)assigned_.size(); ++i)
        if (assigned_[i] < 0) out.push_back(i);
    return out;
}

MatchingVerdict is_matching(const Instance& inst, const Matching& m) {
    std::vector<int> p_load = m.project_loads(inst);
    for (int j = 0; j < inst.project_count(); ++j)
        if (p_load[j] > inst.project_capacity(j))
            return {false, "project " + std::to_string(j + 1) + " is oversubscribed"};
    std::vector<int> l_load = m.lecturer_loads(inst);
    for (int k = 0; k < inst.lecturer_count(); ++k)
        if (l_load[k] > inst.lecturer_capacity(k))
            return {false, "lecturer " + std::to_string(k + 1) + " is oversubscribed"};
    return {true, ""};
}

std::vector<BlockingPair> find_blocking_pairs(const Instance& inst, const Matching& m, Notion notion) {
    const int n_p = inst.project_count();
    const int n_l = inst.lecturer_count();
    std::vector<int> p_load(n_p, 0), l_load(n_l, 0);
    // Worst rank among assignees, per project and per lecturer, in the
    // owning lecturer's ordering. 0 while empty.
    std::vector<int> p_worst(n_p, 0), l_worst(n_l, 0);
    for (StudentId i = 0; i < inst.student_count(); ++i) {
        ProjectId j = m.project_of(i);
        if (j < 0) continue;
        LecturerId k = inst.owner(j);
        int rank = inst.lecturer_rank(k, i);
        ++p_load[j];
        ++l_load[k];
        p_worst[j] = std::max(p_worst[j], rank);
        l_worst[k] = std::max(l_worst[k], rank);
    }

    const bool strict = notion == Notion::weak;
    std::vector<BlockingPair> blocking;
    for (StudentId i = 0; i < inst.student_count(); ++i) {
        const ProjectId current = m.project_of(i);
        const int current_rank = current >= 0 ? inst.student_rank(i, current) : 0;
        for (ProjectId j : inst.acceptable_projects(i)) {
            if (j == current) continue;
            if (current >= 0) {
                int r = inst.student_rank(i, j);
                if (strict ? r >= current_rank : r > current_rank) continue;
            }
            LecturerId k = inst.owner(j);
            int lrank = inst.lecturer_rank(k, i);
            bool in_mk = current >= 0 && inst.owner(current) == k;
            if (p_load[j] < inst.project_capacity(j)) {
                if (l_load[k] < inst.lecturer_capacity(k)) {
                    blocking.push_back({i, j, BlockKind::lecturer_undersubscribed});
                } else if (in_mk || (strict ? lrank < l_worst[k] : lrank <= l_worst[k])) {
                    blocking.push_back({i, j, BlockKind::lecturer_full});
                }
            } else if (strict ? lrank < p_worst[j] : lrank <= p_worst[j]) {
                blocking.push_back({i, j, BlockKind::project_full});
            }
        }
    }
    return blocking;
}

bool is_super_stable(const Instance& inst, const Matching& m) {
    return is_matching(inst, m).ok && find_blocking_pairs(inst, m, Notion::super).empty();
}

bool is_weakly_stable(const Instance& inst, const Matching& m) {
    return is_matching(inst, m).ok && find_blocking_pairs(inst, m, Notion::weak).empty();
}

const char* block_kind_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::lecturer_undersubscribed: return "lecturer-undersubscribed";
        case BlockKind::lecturer_full: return "lecturer-full";
        case BlockKind::project_full: return "project-full";
    }
    return "?";
}

Matching parse_matching(const Instance& inst, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    std::vector<std::pair<StudentId, ProjectId>> pairs;
    while (std::getline(in, line)) {
        ++no;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream row(stripped);
        long long s, p;
        if (!(row >> s)) continue;  // blank
        if (!(row >> p)) throw ParseError(no, "expected 'student project'");
        std::string extra;
        if (row >> extra) throw ParseError(no, "unexpected extra content");
        if (s < 1 || s > inst.student_count()) throw ParseError(no, "student id out of range");
        if (p < 1 || p > inst.project_count()) throw ParseError(no, "project id out of range");
        pairs.emplace_back((StudentId)(s - 1), (ProjectId)(p - 1));
    }
    return Matching::from_pairs(inst, pairs);
}

std::string serialize_matching(const Matching& m) {
    std::ostringstream out;
    for (auto [i, j] : m.pairs()) out << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

Matching read_matching_file(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matching file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matching(inst, buf.str());
}

}  // namespace spast
