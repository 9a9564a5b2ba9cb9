#include "spast/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spast {

namespace {

std::string agent_name(const char* kind, int id0) {
    return std::string(kind) + " " + std::to_string(id0 + 1);
}

// Builds the rank table for one list: rank = 1 + number of strictly
// preferred entries, tied entries share a rank.
void fill_ranks(const PreferenceList& prefs, std::vector<int>& table, size_t base,
                const char* list_owner, const char* entry_kind, int max_id) {
    int seen = 0;
    for (const TieGroup& group : prefs) {
        int rank = seen + 1;
        for (int id : group) {
            if (id < 0 || id >= max_id)
                throw ValidationError(std::string(list_owner) + " ranks a nonexistent " + entry_kind);
            if (table[base + id] != 0)
                throw ValidationError(std::string(list_owner) + " ranks " + agent_name(entry_kind, id) + " twice");
            table[base + id] = rank;
            ++seen;
        }
    }
}

}  // namespace

Instance Instance::from_parts(std::vector<int> project_capacities,
                              std::vector<int> lecturer_capacities,
                              std::vector<LecturerId> project_owner,
                              std::vector<PreferenceList> student_prefs,
                              std::vector<PreferenceList> lecturer_prefs) {
    Instance inst;
    inst.n_projects_ = (int)project_capacities.size();
    inst.n_lecturers_ = (int)lecturer_capacities.size();
    inst.n_students_ = (int)student_prefs.size();
    if (inst.n_students_ < 1 || inst.n_projects_ < 1 || inst.n_lecturers_ < 1)
        throw ValidationError("instance needs at least one student, project and lecturer");
    if ((int)project_owner.size() != inst.n_projects_)
        throw ValidationError("owner list length does not match the number of projects");
    if ((int)lecturer_prefs.size() != inst.n_lecturers_)
        throw ValidationError("lecturer preference count does not match the number of lecturers");

    inst.cap_project_ = std::move(project_capacities);
    inst.cap_lecturer_ = std::move(lecturer_capacities);
    inst.owner_ = std::move(project_owner);
    inst.student_prefs_ = std::move(student_prefs);
    inst.lecturer_prefs_ = std::move(lecturer_prefs);

    for (int j = 0; j < inst.n_projects_; ++j)
        if (inst.cap_project_[j] < 1)
            throw ValidationError(agent_name("project", j) + " has capacity below 1");
    for (int k = 0; k < inst.n_lecturers_; ++k)
        if (inst.cap_lecturer_[k] < 1)
            throw ValidationError(agent_name("lecturer", k) + " has capacity below 1");

    inst.projects_of_.assign(inst.n_lecturers_, {});
    for (int j = 0; j < inst.n_projects_; ++j) {
        LecturerId k = inst.owner_[j];
        if (k < 0 || k >= inst.n_lecturers_)
            throw ValidationError(agent_name("project", j) + " is owned by a nonexistent lecturer");
        inst.projects_of_[k].push_back(j);
    }
    for (int k = 0; k < inst.n_lecturers_; ++k)
        if (inst.projects_of_[k].empty())
            throw ValidationError(agent_name("lecturer", k) + " offers no project");

    // Capacity sandwich: max capacity over the lecturer's projects <= d_k <= their sum.
    for (int k = 0; k < inst.n_lecturers_; ++k) {
        int max_c = 0;
        long long sum_c = 0;
        for (ProjectId j : inst.projects_of_[k]) {
            max_c = std::max(max_c, inst.cap_project_[j]);
            sum_c += inst.cap_project_[j];
        }
        if (inst.cap_lecturer_[k] < max_c)
            throw ValidationError("capacity of " + agent_name("lecturer", k) +
                                  " is below the largest capacity among their projects");
        if (inst.cap_lecturer_[k] > sum_c)
            throw ValidationError("capacity of " + agent_name("lecturer", k) +
                                  " exceeds the total capacity of their projects");
    }

    inst.student_rank_.assign((size_t)inst.n_students_ * inst.n_projects_, 0);
    inst.lecturer_rank_.assign((size_t)inst.n_lecturers_ * inst.n_students_, 0);
    for (int i = 0; i < inst.n_students_; ++i) {
        if (inst.student_prefs_[i].empty())
            throw ValidationError(agent_name("student", i) + " has an empty preference list");
        fill_ranks(inst.student_prefs_[i], inst.student_rank_, (size_t)i * inst.n_projects_,
                   agent_name("student", i).c_str(), "project", inst.n_projects_);
    }
    for (int k = 0; k < inst.n_lecturers_; ++k)
        fill_ranks(inst.lecturer_prefs_[k], inst.lecturer_rank_, (size_t)k * inst.n_students_,
                   agent_name("lecturer", k).c_str(), "student", inst.n_students_);

    inst.acceptable_.assign(inst.n_students_, {});
    for (int i = 0; i < inst.n_students_; ++i) {
        for (int j = 0; j < inst.n_projects_; ++j)
            if (inst.student_rank(i, j) != 0) inst.acceptable_[i].push_back(j);
        inst.pair_count_ += (long long)inst.acceptable_[i].size();
        inst.total_pref_length_ += (long long)inst.acceptable_[i].size();
    }
    for (int k = 0; k < inst.n_lecturers_; ++k)
        for (const TieGroup& g : inst.lecturer_prefs_[k]) inst.total_pref_length_ += (long long)g.size();

    // Mutual acceptability: lecturer k ranks exactly the students that find
    // at least one of k's projects acceptable.
    for (int i = 0; i < inst.n_students_; ++i)
        for (ProjectId j : inst.acceptable_[i]) {
            LecturerId k = inst.owner_[j];
            if (inst.lecturer_rank(k, i) == 0)
                throw ValidationError(agent_name("lecturer", k) + " does not rank " +
                                      agent_name("student", i) + ", who finds " +
                                      agent_name("project", j) + " acceptable");
        }
    for (int k = 0; k < inst.n_lecturers_; ++k)
        for (const TieGroup& g : inst.lecturer_prefs_[k])
            for (StudentId i : g) {
                bool any = false;
                for (ProjectId j : inst.projects_of_[k])
                    if (inst.student_rank(i, j) != 0) {
                        any = true;
                        break;
                    }
                if (!any)
                    throw ValidationError(agent_name("lecturer", k) + " ranks " + agent_name("student", i) +
                                          ", who finds none of their projects acceptable");
            }

    return inst;
}

PreferenceList Instance::projected_prefs(LecturerId k, ProjectId j) const {
    if (owner_[j] != k) throw std::logic_error("projected_prefs: project not offered by lecturer");
    PreferenceList out;
    for (const TieGroup& g : lecturer_prefs_[k]) {
        TieGroup kept;
        for (StudentId i : g)
            if (acceptable(i, j)) kept.push_back(i);
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    return out;
}

bool Instance::operator==(const Instance& other) const {
    return cap_project_ == other.cap_project_ && cap_lecturer_ == other.cap_lecturer_ &&
           owner_ == other.owner_ && student_prefs_ == other.student_prefs_ &&
           lecturer_prefs_ == other.lecturer_prefs_;
}

namespace {

// Tokenizes one preference-list line into tie groups. Accepts "(a b)" tie
// syntax with arbitrary spacing and "-" for an empty list.
PreferenceList parse_pref_line(const std::string& line, int line_no, int max_id) {
    std::string spaced;
    spaced.reserve(line.size() + 8);
    for (char c : line) {
        if (c == '(' || c == ')') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
        } else {
            spaced += c;
        }
    }
    std::istringstream in(spaced);
    std::string tok;
    PreferenceList groups;
    bool in_tie = false;
    bool saw_dash = false;
    while (in >> tok) {
        if (tok == "(") {
            if (in_tie) throw ParseError(line_no, "nested '(' in preference list");
            groups.emplace_back();
            in_tie = true;
        } else if (tok == ")") {
            if (!in_tie) throw ParseError(line_no, "')' without matching '('");
            if (groups.back().empty()) throw ParseError(line_no, "empty tie group");
            in_tie = false;
        } else if (tok == "-") {
            saw_dash = true;
        } else {
            int value = 0;
            size_t used = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw ParseError(line_no, "expected an integer, got '" + tok + "'");
            }
            if (used != tok.size()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
            if (value < 1 || value > max_id)
                throw ParseError(line_no, "id " + std::to_string(value) + " out of range");
            if (in_tie)
                groups.back().push_back(value - 1);
            else
                groups.push_back({value - 1});
        }
    }
    if (in_tie) throw ParseError(line_no, "unterminated tie group");
    if (saw_dash && !groups.empty()) throw ParseError(line_no, "'-' mixed with list entries");
    return groups;
}

std::vector<int> parse_int_line(const std::string& line, int line_no, size_t expect, const char* what) {
    std::istringstream in(line);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        int value = 0;
        size_t used = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
        out.push_back(value);
    }
    if (out.size() != expect)
        throw ParseError(line_no, std::string("expected ") + std::to_string(expect) + " " + what + ", got " +
                                      std::to_string(out.size()));
    return out;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace((unsigned char)c)) return false;
    }
    return true;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    std::vector<std::pair<int, std::string>> data;  // (physical line number, content)
    {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (!blank_or_comment(line)) data.emplace_back(no, line);
        }
    }
    size_t at = 0;
    auto next_line = [&](const char* what) -> const std::pair<int, std::string>& {
        if (at >= data.size()) throw ParseError((int)(data.empty() ? 1 : data.back().first), std::string("missing ") + what);
        return data[at++];
    };

    const auto& counts_line = next_line("count line");
    std::vector<int> counts = parse_int_line(counts_line.second, counts_line.first, 3, "counts");
    int n_students = counts[0], n_projects = counts[1], n_lecturers = counts[2];
    if (n_students < 1 || n_projects < 1 || n_lecturers < 1)
        throw ParseError(counts_line.first, "counts must be at least 1");

    const auto& cap_p_line = next_line("project capacity line");
    std::vector<int> cap_p = parse_int_line(cap_p_line.second, cap_p_line.first, n_projects, "project capacities");
    const auto& cap_l_line = next_line("lecturer capacity line");
    std::vector<int> cap_l = parse_int_line(cap_l_line.second, cap_l_line.first, n_lecturers, "lecturer capacities");

    const auto& owner_line = next_line("project owner line");
    std::vector<int> owner_raw = parse_int_line(owner_line.second, owner_line.first, n_projects, "owners");
    std::vector<LecturerId> owner(n_projects);
    for (int j = 0; j < n_projects; ++j) {
        if (owner_raw[j] < 1 || owner_raw[j] > n_lecturers)
            throw ParseError(owner_line.first, "owner id " + std::to_string(owner_raw[j]) + " out of range");
        owner[j] = owner_raw[j] - 1;
    }

    std::vector<PreferenceList> sprefs(n_students);
    for (int i = 0; i < n_students; ++i) {
        const auto& line = next_line("student preference line");
        sprefs[i] = parse_pref_line(line.second, line.first, n_projects);
    }
    std::vector<PreferenceList> lprefs(n_lecturers);
    for (int k = 0; k < n_lecturers; ++k) {
        const auto& line = next_line("lecturer preference line");
        lprefs[k] = parse_pref_line(line.second, line.first, n_students);
    }
    if (at != data.size()) throw ParseError(data[at].first, "unexpected extra content");

    return Instance::from_parts(std::move(cap_p), std::move(cap_l), std::move(owner), std::move(sprefs),
                                std::move(lprefs));
}

namespace {

void write_pref_line(std::ostream& out, const PreferenceList& prefs) {
    if (prefs.empty()) {
        out << "-\n";
        return;
    }
    bool first = true;
    for (const TieGroup& g : prefs) {
        if (!first) out << ' ';
        first = false;
        if (g.size() == 1) {
            out << g[0] + 1;
        } else {
            out << '(';
            for (size_t t = 0; t < g.size(); ++t) {
                if (t) out << ' ';
                out << g[t] + 1;
            }
            out << ')';
        }
    }
    out << '\n';
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.student_count() << ' ' << inst.project_count() << ' ' << inst.lecturer_count() << '\n';
    for (int j = 0; j < inst.project_count(); ++j) out << (j ? " " : "") << inst.project_capacity(j);
    out << '\n';
    for (int k = 0; k < inst.lecturer_count(); ++k) out << (k ? " " : "") << inst.lecturer_capacity(k);
    out << '\n';
    for (int j = 0; j < inst.project_count(); ++j) out << (j ? " " : "") << inst.owner(j) + 1;
    out << '\n';
    for (int i = 0; i < inst.student_count(); ++i) write_pref_line(out, inst.student_prefs(i));
    for (int k = 0; k < inst.lecturer_count(); ++k) write_pref_line(out, inst.lecturer_prefs(k));
    return out.str();
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

}  // namespace spast
