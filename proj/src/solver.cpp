#include "spast/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <new>
#include <sstream>
#include <type_traits>

namespace spast {

const char* deletion_cause_name(DeletionCause cause) {
    switch (cause) {
        case DeletionCause::project_oversubscribed: return "project-oversubscribed";
        case DeletionCause::lecturer_oversubscribed: return "lecturer-oversubscribed";
        case DeletionCause::project_full: return "project-full";
        case DeletionCause::lecturer_full: return "lecturer-full";
        case DeletionCause::post_while: return "post-while";
    }
    return "?";
}

std::string format_trace(const std::vector<TraceEvent>& trace) {
    std::ostringstream out;
    for (const TraceEvent& ev : trace) {
        switch (ev.kind) {
            case TraceEvent::Kind::apply:
                out << "APPLY " << ev.student + 1 << ' ' << ev.project + 1 << '\n';
                break;
            case TraceEvent::Kind::erase:
                out << "DELETE " << ev.student + 1 << ' ' << ev.project + 1 << ' '
                    << deletion_cause_name(ev.cause) << '\n';
                break;
            case TraceEvent::Kind::phase:
                out << "PHASE " << ev.phase << '\n';
                break;
        }
    }
    return out.str();
}

namespace {

// calloc-backed array. Fresh pages are served lazily by the OS, so building
// one is cheap even when only a fraction of the cells is ever touched.
template <class T>
class ZeroedArray {
    static_assert(std::is_trivial_v<T>);

public:
    explicit ZeroedArray(size_t n) : data_((T*)std::calloc(n ? n : 1, sizeof(T))) {
        if (!data_) throw std::bad_alloc();
    }
    ~ZeroedArray() { std::free(data_); }
    ZeroedArray(const ZeroedArray&) = delete;
    ZeroedArray& operator=(const ZeroedArray&) = delete;

    T& operator[](size_t i) { return data_[i]; }
    const T& operator[](size_t i) const { return data_[i]; }

private:
    T* data_;
};

// One side of a lecturer's or project's static preference data plus the
// moving parts used by the backward tail walks.
struct RankedList {
    std::vector<StudentId> stu;          // list order, ties flattened
    std::vector<unsigned char> tied_pred;  // position shares a tie with the previous one
    std::vector<int> strict_succ;        // first position strictly worse, stu.size() if none
    int last = -1;                       // every live position is <= last
    int load = 0;
};

class Engine {
public:
    Engine(const Instance& inst, const SolveOptions& opt)
        : inst_(inst),
          opt_(opt),
          n1_(inst.student_count()),
          n2_(inst.project_count()),
          n3_(inst.lecturer_count()),
          entry_of_((size_t)n1_ * n2_),
          chain_head_((size_t)n1_ * n3_),
          held_per_lect_((size_t)n1_ * n3_) {
        build_student_lists();
        build_ranked_lists();
        full_flag_.assign(n2_, 0);
        best_reject_rank_.assign(n2_, 0);
        best_reject_stu_.assign(n2_, -1);
        ever_full_.assign(n3_, 0);
        in_queue_.assign(n1_, 0);
    }

    SolveResult run();

private:
    // Dense cell accessors; 0 in the raw tables means "none".
    int& entry_raw(StudentId i, ProjectId j) { return entry_of_[(size_t)i * n2_ + j]; }
    int& chain_raw(StudentId i, LecturerId k) { return chain_head_[(size_t)i * n3_ + k]; }
    int& held_l(StudentId i, LecturerId k) { return held_per_lect_[(size_t)i * n3_ + k]; }

    bool live_for_project(ProjectId j, int pos) { return e_alive_[entry_raw(proj_[j].stu[pos], j) - 1]; }
    bool held_for_project(ProjectId j, int pos) { return e_held_[entry_raw(proj_[j].stu[pos], j) - 1]; }
    bool live_for_lecturer(LecturerId k, int pos) { return chain_raw(lect_[k].stu[pos], k) != 0; }

    void build_student_lists();
    void build_ranked_lists();

    void push_student(StudentId i) {
        if (in_queue_[i]) return;
        in_queue_[i] = 1;
        queue_.push_back(i);
    }

    void apply(int e);
    void delete_pair(int e, DeletionCause cause);
    void delete_chain(StudentId i, LecturerId k, DeletionCause cause);

    void project_oversubscribed(ProjectId j);
    void lecturer_oversubscribed(LecturerId k);
    void project_full(ProjectId j);
    void lecturer_full(LecturerId k);
    bool post_while_pass();

    // Collects the live positions of the least-preferred live tie, most
    // preferred first. Returns false if the list has no live position.
    template <class LiveAt>
    bool collect_tail(RankedList& list, LiveAt&& live_at, std::vector<int>& out);

    const Instance& inst_;
    const SolveOptions opt_;
    int n1_, n2_, n3_;

    // Student preference lists as doubly linked lists embedded in flat
    // per-entry arrays; a second next/prev pair chains entries of the same
    // lecturer so one lecturer's pairs can be deleted together.
    std::vector<ProjectId> e_project_;
    std::vector<StudentId> e_student_;
    std::vector<int> e_next_, e_prev_, e_lnext_, e_lprev_;
    std::vector<unsigned char> e_tie_succ_;  // tied with the current successor
    std::vector<unsigned char> e_alive_, e_held_;
    std::vector<int> s_head_;  // first live entry, -1 when the list is empty
    std::vector<int> s_load_;  // number of projects currently held

    ZeroedArray<int> entry_of_;        // (student, project) -> entry + 1
    ZeroedArray<int> chain_head_;      // (student, lecturer) -> entry + 1
    ZeroedArray<int> held_per_lect_;   // (student, lecturer) -> held count

    std::vector<RankedList> lect_, proj_;
    std::vector<unsigned char> full_flag_;
    std::vector<int> best_reject_rank_;      // best rank ever unassigned from the project
    std::vector<StudentId> best_reject_stu_;
    std::vector<unsigned char> ever_full_;

    std::deque<StudentId> queue_;
    std::vector<unsigned char> in_queue_;
    std::vector<int> scratch_;

    SolveResult result_;
};

void Engine::build_student_lists() {
    size_t total = (size_t)inst_.acceptable_pair_count();
    e_project_.reserve(total);
    e_student_.reserve(total);
    s_head_.assign(n1_, -1);
    s_load_.assign(n1_, 0);
    ZeroedArray<int> chain_tail((size_t)n1_ * n3_);

    for (StudentId i = 0; i < n1_; ++i) {
        int prev = -1;
        for (const TieGroup& group : inst_.student_prefs(i)) {
            for (size_t t = 0; t < group.size(); ++t) {
                ProjectId j = group[t];
                int e = (int)e_project_.size();
                e_project_.push_back(j);
                e_student_.push_back(i);
                e_prev_.push_back(prev);
                e_next_.push_back(-1);
                e_tie_succ_.push_back(t + 1 < group.size());
                if (prev >= 0)
                    e_next_[prev] = e;
                else
                    s_head_[i] = e;
                prev = e;
                entry_raw(i, j) = e + 1;

                LecturerId k = inst_.owner(j);
                int& tail = chain_tail[(size_t)i * n3_ + k];
                e_lprev_.push_back(tail - 1);
                e_lnext_.push_back(-1);
                if (tail)
                    e_lnext_[tail - 1] = e;
                else
                    chain_raw(i, k) = e + 1;
                tail = e + 1;
            }
        }
    }
    e_alive_.assign(e_project_.size(), 1);
    e_held_.assign(e_project_.size(), 0);
}

void Engine::build_ranked_lists() {
    lect_.resize(n3_);
    proj_.resize(n2_);
    std::vector<int> last_group(n2_, -1);

    for (LecturerId k = 0; k < n3_; ++k) {
        RankedList& lk = lect_[k];
        const PreferenceList& prefs = inst_.lecturer_prefs(k);
        int group_index = 0;
        for (const TieGroup& group : prefs) {
            for (size_t t = 0; t < group.size(); ++t) {
                StudentId i = group[t];
                lk.stu.push_back(i);
                lk.tied_pred.push_back(t > 0);
                // The projected list of each project keeps the lecturer's
                // order; a tie survives wherever two kept students shared one.
                for (int e = chain_raw(i, k); e != 0; e = e_lnext_[e - 1] + 1) {
                    ProjectId j = e_project_[e - 1];
                    proj_[j].stu.push_back(i);
                    proj_[j].tied_pred.push_back(last_group[j] == group_index);
                    last_group[j] = group_index;
                }
            }
            ++group_index;
        }
    }
    auto finish = [](RankedList& list) {
        int len = (int)list.stu.size();
        list.strict_succ.assign(len, len);
        for (int pos = len - 2; pos >= 0; --pos)
            list.strict_succ[pos] = list.tied_pred[pos + 1] ? list.strict_succ[pos + 1] : pos + 1;
        list.last = len - 1;
    };
    for (RankedList& lk : lect_) finish(lk);
    for (RankedList& pj : proj_) finish(pj);
}

void Engine::delete_pair(int e, DeletionCause cause) {
    if (!e_alive_[e]) return;
    e_alive_[e] = 0;
    StudentId i = e_student_[e];
    ProjectId j = e_project_[e];
    LecturerId k = inst_.owner(j);
    result_.deletions.push_back({i, j, cause});
    if (opt_.record_trace) result_.trace.push_back({TraceEvent::Kind::erase, i, j, cause, 0});

    int pe = e_prev_[e], ne = e_next_[e];
    if (pe >= 0) {
        e_next_[pe] = ne;
        e_tie_succ_[pe] = e_tie_succ_[pe] && e_tie_succ_[e];
    } else {
        s_head_[i] = ne;
    }
    if (ne >= 0) e_prev_[ne] = pe;

    int lp = e_lprev_[e], ln = e_lnext_[e];
    if (lp >= 0)
        e_lnext_[lp] = ln;
    else
        chain_raw(i, k) = ln + 1;
    if (ln >= 0) e_lprev_[ln] = lp;

    if (e_held_[e]) {
        e_held_[e] = 0;
        --s_load_[i];
        --held_l(i, k);
        --proj_[j].load;
        --lect_[k].load;
        int rank = inst_.lecturer_rank(k, i);
        int& best_rank = best_reject_rank_[j];
        StudentId& best_stu = best_reject_stu_[j];
        bool better = best_stu < 0 || rank < best_rank ||
                      (rank == best_rank && (opt_.alternate ? i > best_stu : i < best_stu));
        if (better) {
            best_rank = rank;
            best_stu = i;
        }
        if (s_load_[i] == 0 && s_head_[i] >= 0) push_student(i);
    }
}

void Engine::delete_chain(StudentId i, LecturerId k, DeletionCause cause) {
    for (int e = chain_raw(i, k); e != 0; e = chain_raw(i, k)) delete_pair(e - 1, cause);
}

template <class LiveAt>
bool Engine::collect_tail(RankedList& list, LiveAt&& live_at, std::vector<int>& out) {
    out.clear();
    int pos = list.last;
    while (pos >= 0 && !live_at(pos)) --pos;
    if (pos < 0) {
        list.last = -1;
        return false;
    }
    // The tie flags of dead positions still delimit the original groups, so
    // walking them keeps the group boundary intact.
    int start = pos;
    while (true) {
        if (live_at(start)) out.push_back(start);
        if (!list.tied_pred[start]) break;
        --start;
    }
    list.last = start - 1;
    std::reverse(out.begin(), out.end());
    return true;
}

void Engine::project_oversubscribed(ProjectId j) {
    RankedList& pj = proj_[j];
    bool any = collect_tail(
        pj, [&](int pos) { return live_for_project(j, pos); }, scratch_);
    assert(any);
    (void)any;
    if (opt_.alternate) std::reverse(scratch_.begin(), scratch_.end());
    for (int pos : scratch_) delete_pair(entry_raw(pj.stu[pos], j) - 1, DeletionCause::project_oversubscribed);
}

void Engine::lecturer_oversubscribed(LecturerId k) {
    RankedList& lk = lect_[k];
    bool any = collect_tail(
        lk, [&](int pos) { return live_for_lecturer(k, pos); }, scratch_);
    assert(any);
    (void)any;
    if (opt_.alternate) std::reverse(scratch_.begin(), scratch_.end());
    // Copy out the students: delete_chain edits nothing positional, but keep
    // the order fixed before deletions begin.
    std::vector<StudentId> students;
    students.reserve(scratch_.size());
    for (int pos : scratch_) students.push_back(lk.stu[pos]);
    for (StudentId i : students) delete_chain(i, k, DeletionCause::lecturer_oversubscribed);
}

void Engine::project_full(ProjectId j) {
    RankedList& pj = proj_[j];
    int pos = pj.last;
    while (pos >= 0 && !held_for_project(j, pos)) --pos;
    assert(pos >= 0);  // the project is full, so someone holds it
    int boundary = pj.strict_succ[pos];
    if (boundary >= (int)pj.stu.size()) return;
    int from = boundary, to = pj.last;
    if (!opt_.alternate) {
        for (int q = from; q <= to; ++q)
            if (live_for_project(j, q)) delete_pair(entry_raw(pj.stu[q], j) - 1, DeletionCause::project_full);
    } else {
        for (int q = to; q >= from; --q)
            if (live_for_project(j, q)) delete_pair(entry_raw(pj.stu[q], j) - 1, DeletionCause::project_full);
    }
    pj.last = std::min(pj.last, boundary - 1);
}

void Engine::lecturer_full(LecturerId k) {
    RankedList& lk = lect_[k];
    int pos = lk.last;
    while (pos >= 0 && held_l(lk.stu[pos], k) == 0) --pos;
    assert(pos >= 0);
    int boundary = lk.strict_succ[pos];
    if (boundary >= (int)lk.stu.size()) return;
    int from = boundary, to = lk.last;
    if (!opt_.alternate) {
        for (int q = from; q <= to; ++q)
            if (live_for_lecturer(k, q)) delete_chain(lk.stu[q], k, DeletionCause::lecturer_full);
    } else {
        for (int q = to; q >= from; --q)
            if (live_for_lecturer(k, q)) delete_chain(lk.stu[q], k, DeletionCause::lecturer_full);
    }
    lk.last = std::min(lk.last, boundary - 1);
}

void Engine::apply(int e) {
    StudentId i = e_student_[e];
    ProjectId j = e_project_[e];
    LecturerId k = inst_.owner(j);
    ++result_.applications;
    if (opt_.record_trace) result_.trace.push_back({TraceEvent::Kind::apply, i, j, {}, 0});

    e_held_[e] = 1;
    ++s_load_[i];
    ++held_l(i, k);
    ++proj_[j].load;
    ++lect_[k].load;

    if (proj_[j].load > inst_.project_capacity(j))
        project_oversubscribed(j);
    else if (lect_[k].load > inst_.lecturer_capacity(k))
        lecturer_oversubscribed(k);
    if (proj_[j].load == inst_.project_capacity(j)) {
        full_flag_[j] = 1;
        project_full(j);
    }
    if (lect_[k].load == inst_.lecturer_capacity(k)) {
        ever_full_[k] = 1;
        lecturer_full(k);
    }
}

bool Engine::post_while_pass() {
    ++result_.phase_passes;
    if (opt_.record_trace)
        result_.trace.push_back({TraceEvent::Kind::phase, -1, -1, {}, result_.phase_passes});
    bool deleted_any = false;
    for (int step = 0; step < n2_; ++step) {
        ProjectId j = opt_.alternate ? n2_ - 1 - step : step;
        if (!full_flag_[j] || proj_[j].load >= inst_.project_capacity(j)) continue;
        if (best_reject_stu_[j] < 0) continue;  // full once and undersubscribed implies a rejection
        LecturerId k = inst_.owner(j);
        RankedList& lk = lect_[k];

        int pos = lk.last;
        while (pos >= 0 && !live_for_lecturer(k, pos)) --pos;
        if (pos < 0) {
            lk.last = -1;
            continue;
        }
        // Delete the tail unless the lecturer strictly prefers it to the
        // best student rejected from the project.
        if (inst_.lecturer_rank(k, lk.stu[pos]) < best_reject_rank_[j]) {
            lk.last = pos;
            continue;
        }
        collect_tail(
            lk, [&](int p) { return live_for_lecturer(k, p); }, scratch_);
        if (opt_.alternate) std::reverse(scratch_.begin(), scratch_.end());
        std::vector<StudentId> students;
        students.reserve(scratch_.size());
        for (int p : scratch_) students.push_back(lk.stu[p]);
        for (StudentId i : students) delete_chain(i, k, DeletionCause::post_while);
        deleted_any = true;
    }
    return deleted_any;
}

SolveResult Engine::run() {
    // Seed so that the first student popped is student 0 under both orders.
    if (opt_.alternate) {
        for (StudentId i = 0; i < n1_; ++i) push_student(i);
    } else {
        for (StudentId i = n1_ - 1; i >= 0; --i) push_student(i);
    }

    std::vector<int> snapshot;
    do {
        while (!queue_.empty()) {
            StudentId i;
            if (opt_.alternate) {
                i = queue_.front();
                queue_.pop_front();
            } else {
                i = queue_.back();
                queue_.pop_back();
            }
            in_queue_[i] = 0;
            if (s_load_[i] > 0 || s_head_[i] < 0) continue;

            // Snapshot the head tie, then apply to each member that is
            // still alive by the time its turn comes.
            snapshot.clear();
            int e = s_head_[i];
            snapshot.push_back(e);
            while (e_tie_succ_[e]) {
                e = e_next_[e];
                snapshot.push_back(e);
            }
            if (opt_.alternate) std::reverse(snapshot.begin(), snapshot.end());
            for (int cand : snapshot)
                if (e_alive_[cand]) apply(cand);
            if (s_load_[i] == 0 && s_head_[i] >= 0) push_student(i);
        }
    } while (post_while_pass() && !queue_.empty());

    result_.lecturer_was_full.assign(ever_full_.begin(), ever_full_.end());
    result_.lecturer_load.resize(n3_);
    for (LecturerId k = 0; k < n3_; ++k) result_.lecturer_load[k] = lect_[k].load;

    for (StudentId i = 0; i < n1_; ++i)
        if (s_load_[i] > 1) {
            result_.reason = FailReason::multiply_assigned;
            return std::move(result_);
        }
    Matching m(n1_);
    for (StudentId i = 0; i < n1_; ++i) {
        if (s_load_[i] == 0) continue;
        for (int e = s_head_[i]; e >= 0; e = e_next_[e])
            if (e_held_[e]) {
                m.assign(i, e_project_[e]);
                break;
            }
    }
    if (!find_blocking_pairs(inst_, m, Notion::super).empty()) {
        result_.reason = FailReason::blocking_pair;
        return std::move(result_);
    }
    result_.found = true;
    result_.matching = std::move(m);
    return std::move(result_);
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& options) {
    Engine engine(inst, options);
    return engine.run();
}

}  // namespace spast
