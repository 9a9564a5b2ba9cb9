#include "spast/cloning.hpp"

#include <numeric>

namespace spast {

Instance clone_to_hrt(const Instance& inst) {
    const int n1 = inst.student_count();
    const int n2 = inst.project_count();
    const int n3 = inst.lecturer_count();

    std::vector<int> dummy_count(n3, 0);
    std::vector<int> dummy_start(n3, 0);
    int total_dummies = 0;
    for (LecturerId k = 0; k < n3; ++k) {
        int cap_sum = 0;
        for (ProjectId j : inst.projects_of(k))
            cap_sum += inst.project_capacity(j);
        dummy_count[k] = cap_sum - inst.lecturer_capacity(k);
        dummy_start[k] = n1 + total_dummies;
        total_dummies += dummy_count[k];
    }

    std::vector<int> project_caps(n2);
    std::vector<int> lecturer_caps(n2);
    std::vector<int> owners(n2);
    for (ProjectId j = 0; j < n2; ++j) {
        project_caps[j] = inst.project_capacity(j);
        lecturer_caps[j] = inst.project_capacity(j);
        owners[j] = j;  // hospital j is its own lecturer
    }

    std::vector<PreferenceList> resident_prefs(n1 + total_dummies);
    for (StudentId i = 0; i < n1; ++i)
        resident_prefs[i] = inst.student_prefs(i);
    for (LecturerId k = 0; k < n3; ++k) {
        TieGroup hospitals(inst.projects_of(k).begin(), inst.projects_of(k).end());
        for (int d = 0; d < dummy_count[k]; ++d)
            resident_prefs[dummy_start[k] + d] = {hospitals};
    }

    std::vector<PreferenceList> hospital_prefs(n2);
    for (ProjectId j = 0; j < n2; ++j) {
        LecturerId k = inst.owner(j);
        PreferenceList prefs;
        if (dummy_count[k] > 0) {
            TieGroup dummies(dummy_count[k]);
            std::iota(dummies.begin(), dummies.end(), dummy_start[k]);
            prefs.push_back(std::move(dummies));
        }
        for (const TieGroup& group : inst.projected_prefs(k, j))
            prefs.push_back(group);
        hospital_prefs[j] = std::move(prefs);
    }

    return Instance::from_parts(project_caps, lecturer_caps, owners, resident_prefs,
                                hospital_prefs);
}

bool is_hrt(const Instance& inst) {
    for (LecturerId k = 0; k < inst.lecturer_count(); ++k) {
        const std::vector<ProjectId>& offered = inst.projects_of(k);
        if (offered.size() != 1)
            return false;
        if (inst.project_capacity(offered.front()) != inst.lecturer_capacity(k))
            return false;
    }
    return true;
}

}  // namespace spast
