#include "spast/ip_model.hpp"

#include <algorithm>
#include <sstream>

namespace spast {

namespace {

std::string num(int v) { return std::to_string(v + 1); }  // ids are 1-based in names

}  // namespace

IpModel build_model(const Instance& inst) {
    const int n1 = inst.student_count();
    const int n2 = inst.project_count();
    const int n3 = inst.lecturer_count();

    IpModel model;
    model.n1_ = n1;
    model.n2_ = n2;
    model.n3_ = n3;
    model.x_.assign((size_t)n1 * n2, -1);
    model.alpha_.assign(n2, -1);
    model.beta_.assign(n3, -1);
    model.eta_.assign(n3, -1);
    model.gamma_.assign(n2, -1);
    model.delta_.assign((size_t)n1 * n3, -1);
    model.lambda_.assign((size_t)n1 * n2, -1);

    auto add_var = [&](std::string name) {
        model.names_.push_back(std::move(name));
        return static_cast<int>(model.names_.size()) - 1;
    };

    for (StudentId i = 0; i < n1; ++i) {
        for (ProjectId j : inst.acceptable_projects(i)) {
            int v = add_var("x_" + num(i) + "_" + num(j));
            model.x_[(size_t)i * n2 + j] = v;
            model.objective_.push_back(v);
        }
    }
    model.x_count_ = static_cast<int>(model.objective_.size());
    for (ProjectId j = 0; j < n2; ++j)
        model.alpha_[j] = add_var("alpha_" + num(j));
    for (LecturerId k = 0; k < n3; ++k)
        model.beta_[k] = add_var("beta_" + num(k));
    for (LecturerId k = 0; k < n3; ++k)
        model.eta_[k] = add_var("eta_" + num(k));
    for (StudentId i = 0; i < n1; ++i)
        for (LecturerId k = 0; k < n3; ++k)
            if (inst.lecturer_rank(k, i) > 0)
                model.delta_[(size_t)i * n3 + k] = add_var("delta_" + num(i) + "_" + num(k));
    for (ProjectId j = 0; j < n2; ++j)
        model.gamma_[j] = add_var("gamma_" + num(j));
    for (StudentId i = 0; i < n1; ++i)
        for (ProjectId j : inst.acceptable_projects(i))
            model.lambda_[(size_t)i * n2 + j] =
                add_var("lambda_" + num(i) + "_" + num(j) + "_" + num(inst.owner(j)));

    auto add_le = [&](std::string name, std::vector<std::pair<int, int>> terms, long long rhs) {
        model.constraints_.push_back({std::move(name), std::move(terms), true, rhs});
    };
    auto add_ge = [&](std::string name, std::vector<std::pair<int, int>> terms, long long rhs) {
        model.constraints_.push_back({std::move(name), std::move(terms), false, rhs});
    };

    // Per-lecturer acceptable students, and the x terms of each project's
    // and lecturer's load, reused by several schemas.
    auto project_load_terms = [&](ProjectId j) {
        std::vector<std::pair<int, int>> terms;
        for (StudentId i = 0; i < n1; ++i)
            if (model.x_var(i, j) >= 0)
                terms.push_back({model.x_var(i, j), 1});
        return terms;
    };
    auto lecturer_load_terms = [&](LecturerId k) {
        std::vector<std::pair<int, int>> terms;
        for (StudentId i = 0; i < n1; ++i)
            for (ProjectId j : inst.projects_of(k))
                if (model.x_var(i, j) >= 0)
                    terms.push_back({model.x_var(i, j), 1});
        return terms;
    };

    // Each student takes at most one project.
    for (StudentId i = 0; i < n1; ++i) {
        std::vector<std::pair<int, int>> terms;
        for (ProjectId j : inst.acceptable_projects(i))
            terms.push_back({model.x_var(i, j), 1});
        add_le("asg_" + num(i), std::move(terms), 1);
    }
    // Project and lecturer capacities.
    for (ProjectId j = 0; j < n2; ++j)
        add_le("cap_p_" + num(j), project_load_terms(j), inst.project_capacity(j));
    for (LecturerId k = 0; k < n3; ++k)
        add_le("cap_l_" + num(k), lecturer_load_terms(k), inst.lecturer_capacity(k));

    // alpha_j forced up when p_j is undersubscribed.
    for (ProjectId j = 0; j < n2; ++j) {
        std::vector<std::pair<int, int>> terms = project_load_terms(j);
        terms.push_back({model.alpha_var(j), inst.project_capacity(j)});
        add_ge("under_p_" + num(j), std::move(terms), inst.project_capacity(j));
    }
    // beta_k forced up when l_k is undersubscribed.
    for (LecturerId k = 0; k < n3; ++k) {
        std::vector<std::pair<int, int>> terms = lecturer_load_terms(k);
        terms.push_back({model.beta_var(k), inst.lecturer_capacity(k)});
        add_ge("under_l_" + num(k), std::move(terms), inst.lecturer_capacity(k));
    }

    // theta measures "s_i would move to p_j": 1 - x_{i,j} - sum over the
    // projects s_i strictly prefers. Appended inline to the three
    // no-blocking schemas with the constant folded into the bound.
    auto theta_terms = [&](StudentId i, ProjectId j) {
        std::vector<std::pair<int, int>> terms;
        terms.push_back({model.x_var(i, j), -1});
        int rank = inst.student_rank(i, j);
        for (ProjectId j2 : inst.acceptable_projects(i))
            if (inst.student_rank(i, j2) < rank)
                terms.push_back({model.x_var(i, j2), -1});
        return terms;
    };

    // No pair may block with both ends undersubscribed.
    for (StudentId i = 0; i < n1; ++i)
        for (ProjectId j : inst.acceptable_projects(i)) {
            std::vector<std::pair<int, int>> terms = theta_terms(i, j);
            terms.push_back({model.alpha_var(j), 1});
            terms.push_back({model.beta_var(inst.owner(j)), 1});
            add_le("nbp1_" + num(i) + "_" + num(j), std::move(terms), 1);
        }

    // eta_k forced up when l_k is full.
    for (LecturerId k = 0; k < n3; ++k) {
        std::vector<std::pair<int, int>> terms = lecturer_load_terms(k);
        for (auto& term : terms)
            term.second = -1;
        terms.push_back({model.eta_var(k), inst.lecturer_capacity(k)});
        add_ge("full_l_" + num(k), std::move(terms), 1 - inst.lecturer_capacity(k));
    }

    // delta_{i,k} forced up when s_i is assigned to l_k or ranks at least
    // as well as some assignee of l_k; the strictly-better students'
    // variables cancel out of the load sum.
    for (StudentId i = 0; i < n1; ++i)
        for (LecturerId k = 0; k < n3; ++k) {
            int rank = inst.lecturer_rank(k, i);
            if (rank == 0)
                continue;
            std::vector<std::pair<int, int>> terms;
            terms.push_back({model.delta_var(i, k), inst.lecturer_capacity(k)});
            for (StudentId i2 = 0; i2 < n1; ++i2) {
                int rank2 = inst.lecturer_rank(k, i2);
                if (rank2 == 0 || rank2 < rank)
                    continue;
                for (ProjectId j : inst.projects_of(k))
                    if (model.x_var(i2, j) >= 0)
                        terms.push_back({model.x_var(i2, j), -1});
            }
            add_ge("best_l_" + num(i) + "_" + num(k), std::move(terms), 0);
        }

    // No pair may block via an undersubscribed project of a full lecturer.
    for (StudentId i = 0; i < n1; ++i)
        for (ProjectId j : inst.acceptable_projects(i)) {
            LecturerId k = inst.owner(j);
            std::vector<std::pair<int, int>> terms = theta_terms(i, j);
            terms.push_back({model.alpha_var(j), 1});
            terms.push_back({model.eta_var(k), 1});
            terms.push_back({model.delta_var(i, k), 1});
            add_le("nbp2_" + num(i) + "_" + num(j), std::move(terms), 2);
        }

    // gamma_j forced up when p_j is full.
    for (ProjectId j = 0; j < n2; ++j) {
        std::vector<std::pair<int, int>> terms = project_load_terms(j);
        for (auto& term : terms)
            term.second = -1;
        terms.push_back({model.gamma_var(j), inst.project_capacity(j)});
        add_ge("full_p_" + num(j), std::move(terms), 1 - inst.project_capacity(j));
    }

    // lambda_{i,j} forced up when s_i ranks at least as well as some
    // assignee of p_j on the projected list.
    for (StudentId i = 0; i < n1; ++i)
        for (ProjectId j : inst.acceptable_projects(i)) {
            LecturerId k = inst.owner(j);
            int rank = inst.lecturer_rank(k, i);
            std::vector<std::pair<int, int>> terms;
            terms.push_back({model.lambda_var(i, j), inst.project_capacity(j)});
            for (StudentId i2 = 0; i2 < n1; ++i2)
                if (model.x_var(i2, j) >= 0 && inst.lecturer_rank(k, i2) >= rank)
                    terms.push_back({model.x_var(i2, j), -1});
            add_ge("best_p_" + num(i) + "_" + num(j), std::move(terms), 0);
        }

    // No pair may block via a full project.
    for (StudentId i = 0; i < n1; ++i)
        for (ProjectId j : inst.acceptable_projects(i)) {
            std::vector<std::pair<int, int>> terms = theta_terms(i, j);
            terms.push_back({model.gamma_var(j), 1});
            terms.push_back({model.lambda_var(i, j), 1});
            add_le("nbp3_" + num(i) + "_" + num(j), std::move(terms), 1);
        }

    return model;
}

std::vector<unsigned char> assignment_from_matching(const IpModel& model, const Instance& inst,
                                                    const Matching& m) {
    std::vector<unsigned char> values(model.variable_count(), 0);
    std::vector<int> p_load = m.project_loads(inst);
    std::vector<int> l_load = m.lecturer_loads(inst);

    for (StudentId i = 0; i < inst.student_count(); ++i)
        if (m.assigned(i))
            values[model.x_var(i, m.project_of(i))] = 1;

    // Worst (largest) lecturer rank among assignees, per project and per
    // lecturer; 0 when nobody is assigned.
    std::vector<int> p_worst(inst.project_count(), 0);
    std::vector<int> l_worst(inst.lecturer_count(), 0);
    for (StudentId i = 0; i < inst.student_count(); ++i) {
        if (!m.assigned(i))
            continue;
        ProjectId j = m.project_of(i);
        LecturerId k = inst.owner(j);
        int rank = inst.lecturer_rank(k, i);
        p_worst[j] = std::max(p_worst[j], rank);
        l_worst[k] = std::max(l_worst[k], rank);
    }

    for (ProjectId j = 0; j < inst.project_count(); ++j) {
        if (p_load[j] < inst.project_capacity(j))
            values[model.alpha_var(j)] = 1;
        if (p_load[j] == inst.project_capacity(j))
            values[model.gamma_var(j)] = 1;
    }
    for (LecturerId k = 0; k < inst.lecturer_count(); ++k) {
        if (l_load[k] < inst.lecturer_capacity(k))
            values[model.beta_var(k)] = 1;
        if (l_load[k] == inst.lecturer_capacity(k))
            values[model.eta_var(k)] = 1;
    }
    for (StudentId i = 0; i < inst.student_count(); ++i) {
        for (LecturerId k = 0; k < inst.lecturer_count(); ++k) {
            int v = model.delta_var(i, k);
            if (v >= 0 && l_worst[k] > 0 && inst.lecturer_rank(k, i) <= l_worst[k])
                values[v] = 1;
        }
        for (ProjectId j : inst.acceptable_projects(i)) {
            LecturerId k = inst.owner(j);
            if (p_worst[j] > 0 && inst.lecturer_rank(k, i) <= p_worst[j])
                values[model.lambda_var(i, j)] = 1;
        }
    }
    return values;
}

const IpConstraint* first_violated(const IpModel& model,
                                   const std::vector<unsigned char>& values) {
    for (const IpConstraint& c : model.constraints()) {
        long long sum = 0;
        for (const auto& [var, coeff] : c.terms)
            sum += static_cast<long long>(coeff) * values[var];
        bool ok = c.less_equal ? sum <= c.rhs : sum >= c.rhs;
        if (!ok)
            return &c;
    }
    return nullptr;
}

bool satisfies(const IpModel& model, const std::vector<unsigned char>& values) {
    return first_violated(model, values) == nullptr;
}

std::vector<Matching> feasible_matchings_by_enumeration(const Instance& inst,
                                                        const EnumerationBudget& budget) {
    IpModel model = build_model(inst);
    std::vector<Matching> out;
    for_each_matching(inst, budget, [&](const Matching& m) {
        if (satisfies(model, assignment_from_matching(model, inst, m)))
            out.push_back(m);
    });
    return out;
}

std::string export_lp(const IpModel& model) {
    std::ostringstream lp;

    auto write_terms = [&](const std::vector<std::pair<int, int>>& terms) {
        std::string line;
        bool first = true;
        int on_line = 0;
        for (const auto& [var, coeff] : terms) {
            if (coeff == 0)
                continue;
            if (!first && on_line == 16) {
                line += "\n   ";
                on_line = 0;
            }
            std::string piece;
            if (first) {
                piece = coeff < 0 ? "- " : "";
            } else {
                piece = coeff < 0 ? " - " : " + ";
            }
            int mag = coeff < 0 ? -coeff : coeff;
            if (mag != 1)
                piece += std::to_string(mag) + " ";
            piece += model.variable_name(var);
            line += piece;
            first = false;
            ++on_line;
        }
        if (line.empty())
            line = "0 " + model.variable_name(0);  // a sum with no terms
        return line;
    };

    lp << "Maximize\n obj: ";
    std::vector<std::pair<int, int>> obj_terms;
    obj_terms.reserve(model.objective().size());
    for (int v : model.objective())
        obj_terms.push_back({v, 1});
    lp << write_terms(obj_terms) << "\n";

    lp << "Subject To\n";
    for (const IpConstraint& c : model.constraints()) {
        lp << " " << c.name << ": " << write_terms(c.terms)
           << (c.less_equal ? " <= " : " >= ") << c.rhs << "\n";
    }

    lp << "Binary\n";
    for (int v = 0; v < model.variable_count(); ++v)
        lp << " " << model.variable_name(v) << "\n";
    lp << "End\n";
    return lp.str();
}

}  // namespace spast
