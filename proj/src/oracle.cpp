#include "spast/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace spast {

namespace {

struct MatchingEnumerator {
    const Instance& inst;
    const EnumerationBudget& budget;
    const std::function<void(const Matching&)>& fn;
    Matching m;
    std::vector<int> p_load;
    std::vector<int> l_load;
    long long nodes = 0;

    MatchingEnumerator(const Instance& i, const EnumerationBudget& b,
                       const std::function<void(const Matching&)>& f)
        : inst(i), budget(b), fn(f), m(i.student_count()),
          p_load(i.project_count(), 0), l_load(i.lecturer_count(), 0) {}

    void expand(int i) {
        if (++nodes > budget.max_nodes)
            throw BudgetExhausted("matching enumeration exceeded the node budget");
        if (i == inst.student_count()) {
            fn(m);
            return;
        }
        for (ProjectId j : inst.acceptable_projects(i)) {
            LecturerId k = inst.owner(j);
            if (p_load[j] == inst.project_capacity(j) || l_load[k] == inst.lecturer_capacity(k))
                continue;
            ++p_load[j];
            ++l_load[k];
            m.assign(i, j);
            expand(i + 1);
            m.unassign(i);
            --p_load[j];
            --l_load[k];
        }
        expand(i + 1);  // s_i stays unassigned
    }
};

}  // namespace

void for_each_matching(const Instance& inst, const EnumerationBudget& budget,
                       const std::function<void(const Matching&)>& fn) {
    MatchingEnumerator e(inst, budget, fn);
    e.expand(0);
}

std::vector<Matching> all_super_stable(const Instance& inst, const EnumerationBudget& budget) {
    std::vector<Matching> out;
    for_each_matching(inst, budget, [&](const Matching& m) {
        if (find_blocking_pairs(inst, m, Notion::super).empty())
            out.push_back(m);
    });
    return out;
}

std::vector<Matching> all_weakly_stable(const Instance& inst, const EnumerationBudget& budget) {
    std::vector<Matching> out;
    for_each_matching(inst, budget, [&](const Matching& m) {
        if (find_blocking_pairs(inst, m, Notion::weak).empty())
            out.push_back(m);
    });
    return out;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    if (a != 0 && b > cap / a)
        return cap;
    return a * b;
}

std::uint64_t factorial_saturating(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t v = 2; v <= n; ++v)
        f = saturating_mul(f, v);
    return f;
}

// A tie group eligible for permutation: side marks students (0) vs
// lecturers (1); the pair locates the list and the group inside it.
struct TieSite {
    int side;
    int agent;
    int group;
    std::size_t size;
};

std::vector<TieSite> tie_sites(const Instance& inst) {
    std::vector<TieSite> sites;
    for (StudentId i = 0; i < inst.student_count(); ++i) {
        const PreferenceList& prefs = inst.student_prefs(i);
        for (int g = 0; g < static_cast<int>(prefs.size()); ++g)
            if (prefs[g].size() > 1)
                sites.push_back({0, i, g, prefs[g].size()});
    }
    for (LecturerId k = 0; k < inst.lecturer_count(); ++k) {
        const PreferenceList& prefs = inst.lecturer_prefs(k);
        for (int g = 0; g < static_cast<int>(prefs.size()); ++g)
            if (prefs[g].size() > 1)
                sites.push_back({1, k, g, prefs[g].size()});
    }
    return sites;
}

}  // namespace

std::uint64_t count_tie_breakings(const Instance& inst) {
    std::uint64_t total = 1;
    for (const TieSite& site : tie_sites(inst))
        total = saturating_mul(total, factorial_saturating(site.size));
    return total;
}

void for_each_tie_breaking(const Instance& inst, const EnumerationBudget& budget,
                           const std::function<void(const Instance&)>& fn) {
    std::uint64_t total = count_tie_breakings(inst);
    if (budget.max_nodes >= 0 && total > static_cast<std::uint64_t>(budget.max_nodes))
        throw BudgetExhausted("tie-breaking enumeration exceeded the instance budget");

    std::vector<TieSite> sites = tie_sites(inst);

    // One sorted, independently permuted order per site; the odometer below
    // advances them in lexicographic order, least significant site last.
    std::vector<std::vector<int>> orders(sites.size());
    for (std::size_t t = 0; t < sites.size(); ++t) {
        const TieSite& site = sites[t];
        const PreferenceList& prefs =
            site.side == 0 ? inst.student_prefs(site.agent) : inst.lecturer_prefs(site.agent);
        orders[t] = prefs[site.group];
        std::sort(orders[t].begin(), orders[t].end());
    }

    std::vector<int> project_caps(inst.project_count());
    std::vector<int> lect_caps(inst.lecturer_count());
    std::vector<int> owners(inst.project_count());
    for (ProjectId j = 0; j < inst.project_count(); ++j) {
        project_caps[j] = inst.project_capacity(j);
        owners[j] = inst.owner(j);
    }
    for (LecturerId k = 0; k < inst.lecturer_count(); ++k)
        lect_caps[k] = inst.lecturer_capacity(k);

    // Rebuilds every list from its original groups, so a list with several
    // tied groups keeps its group indices intact while each site is spread
    // into singletons. Walks `sites` in step with the lists; tie_sites()
    // produces them in exactly this traversal order.
    auto emit = [&]() {
        std::size_t at = 0;
        auto rebuild = [&](const PreferenceList& original, int side, int agent) {
            PreferenceList out;
            for (int g = 0; g < static_cast<int>(original.size()); ++g) {
                if (at < sites.size() && sites[at].side == side &&
                    sites[at].agent == agent && sites[at].group == g) {
                    for (int member : orders[at])
                        out.push_back({member});
                    ++at;
                } else {
                    out.push_back(original[g]);
                }
            }
            return out;
        };
        std::vector<PreferenceList> student_prefs(inst.student_count());
        std::vector<PreferenceList> lecturer_prefs(inst.lecturer_count());
        for (StudentId i = 0; i < inst.student_count(); ++i)
            student_prefs[i] = rebuild(inst.student_prefs(i), 0, i);
        for (LecturerId k = 0; k < inst.lecturer_count(); ++k)
            lecturer_prefs[k] = rebuild(inst.lecturer_prefs(k), 1, k);
        fn(Instance::from_parts(project_caps, lect_caps, owners, student_prefs, lecturer_prefs));
    };

    // Odometer over per-site permutations.
    std::size_t t = sites.size();
    for (;;) {
        emit();
        while (t > 0) {
            --t;
            if (std::next_permutation(orders[t].begin(), orders[t].end()))
                break;
            // wrapped back to sorted order; carry to the next site
            if (t == 0)
                return;
        }
        if (sites.empty())
            return;
        t = sites.size();
    }
}

PropositionCheck check_proposition_1(const Instance& inst, const Matching& m,
                                     const EnumerationBudget& budget) {
    PropositionCheck out;
    out.lhs = is_super_stable(inst, m);
    out.rhs = true;
    for_each_tie_breaking(inst, budget, [&](const Instance& strict) {
        if (!is_weakly_stable(strict, m))
            out.rhs = false;
    });
    return out;
}

PropositionCheck check_proposition_2(const Instance& inst, const Matching& m,
                                     const EnumerationBudget& budget) {
    PropositionCheck out;
    out.lhs = is_weakly_stable(inst, m);
    out.rhs = false;
    for_each_tie_breaking(inst, budget, [&](const Instance& strict) {
        if (is_weakly_stable(strict, m))
            out.rhs = true;
    });
    return out;
}

UnpopularProjectsReport unpopular_projects_report(const Instance& inst,
                                                  const std::vector<Matching>& matchings) {
    UnpopularProjectsReport report;
    if (matchings.empty()) {
        report.vacuous = true;
        return report;
    }

    std::vector<std::vector<int>> lecturer_loads;
    lecturer_loads.reserve(matchings.size());
    for (const Matching& m : matchings)
        lecturer_loads.push_back(m.lecturer_loads(inst));

    report.lecturer_loads_equal = true;
    for (const std::vector<int>& loads : lecturer_loads)
        if (loads != lecturer_loads.front())
            report.lecturer_loads_equal = false;

    report.unassigned_equal = true;
    std::vector<StudentId> base_unassigned = matchings.front().unassigned_students();
    for (const Matching& m : matchings)
        if (m.unassigned_students() != base_unassigned)
            report.unassigned_equal = false;

    // A lecturer undersubscribed in any matching of the set; the projects
    // they offer must keep a constant load over the whole set.
    std::vector<char> undersub(inst.lecturer_count(), 0);
    for (std::size_t mi = 0; mi < matchings.size(); ++mi)
        for (LecturerId k = 0; k < inst.lecturer_count(); ++k)
            if (lecturer_loads[mi][k] < inst.lecturer_capacity(k))
                undersub[k] = 1;

    report.undersub_project_loads_equal = true;
    std::vector<int> base_project_loads = matchings.front().project_loads(inst);
    for (const Matching& m : matchings) {
        std::vector<int> loads = m.project_loads(inst);
        for (ProjectId j = 0; j < inst.project_count(); ++j)
            if (undersub[inst.owner(j)] && loads[j] != base_project_loads[j])
                report.undersub_project_loads_equal = false;
    }
    return report;
}

UnpopularProjectsReport check_unpopular_projects(const Instance& inst,
                                                 const EnumerationBudget& budget) {
    return unpopular_projects_report(inst, all_super_stable(inst, budget));
}

}  // namespace spast
