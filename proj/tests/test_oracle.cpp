#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "spast/generator.hpp"
#include "spast/oracle.hpp"

using namespace spast;

TEST_CASE("i1 has exactly one super-stable and one weakly stable matching") {
    Instance inst = fixtures::i1();
    Matching golden = fixtures::matching(inst, {{2, 1}, {3, 2}, {4, 0}});

    std::vector<Matching> super = all_super_stable(inst);
    REQUIRE(super.size() == 1);
    CHECK(super[0] == golden);

    std::vector<Matching> weak = all_weakly_stable(inst);
    REQUIRE(weak.size() == 1);
    CHECK(weak[0] == golden);
}

TEST_CASE("i2 has exactly two super-stable matchings") {
    Instance inst = fixtures::i2();
    Matching m1 = fixtures::matching(inst, {{2, 2}, {3, 1}, {4, 2}, {5, 1}});
    Matching m2 = fixtures::matching(inst, {{2, 2}, {3, 2}, {4, 1}, {5, 1}});

    std::vector<Matching> super = all_super_stable(inst);
    REQUIRE(super.size() == 2);
    bool as_listed = super[0] == m1 && super[1] == m2;
    bool swapped = super[0] == m2 && super[1] == m1;
    CHECK((as_listed || swapped));
}

TEST_CASE("the all-ties instance: no super-stable, two weakly stable matchings") {
    Instance inst = fixtures::allties();
    CHECK(all_super_stable(inst).empty());

    std::vector<Matching> weak = all_weakly_stable(inst);
    REQUIRE(weak.size() == 2);
    Matching a = fixtures::matching(inst, {{0, 0}, {1, 1}});
    Matching b = fixtures::matching(inst, {{0, 1}, {1, 0}});
    bool both = (weak[0] == a && weak[1] == b) || (weak[0] == b && weak[1] == a);
    CHECK(both);
}

TEST_CASE("matching enumeration visits feasible assignments, without repeats") {
    Instance inst = fixtures::i1();
    long long visited = 0;
    std::set<std::string> seen;
    for_each_matching(inst, {}, [&](const Matching& m) {
        ++visited;
        CHECK(is_matching(inst, m).ok);
        seen.insert(serialize_matching(m));
    });
    CHECK(visited > 1);
    CHECK((long long)seen.size() == visited);
}

TEST_CASE("enumeration order on a one-pair instance") {
    Instance inst = fixtures::single_pair();
    std::vector<Matching> visited;
    for_each_matching(inst, {}, [&](const Matching& m) { visited.push_back(m); });
    REQUIRE(visited.size() == 2);
    CHECK(visited[0].project_of(0) == 0);   // assigned option first
    CHECK_FALSE(visited[1].assigned(0));    // unassigned last
}

TEST_CASE("tie-breaking counts are products of group factorials") {
    CHECK(count_tie_breakings(fixtures::i1()) == 4);
    CHECK(count_tie_breakings(fixtures::i2()) == 4);
    CHECK(count_tie_breakings(fixtures::fig2()) == 4);
    CHECK(count_tie_breakings(fixtures::allties()) == 8);
    CHECK(count_tie_breakings(fixtures::single_pair()) == 1);
}

TEST_CASE("tie-breaking enumeration yields distinct strict instances") {
    Instance inst = fixtures::allties();
    std::vector<Instance> broken;
    for_each_tie_breaking(inst, {}, [&](const Instance& strict) {
        for (StudentId i = 0; i < strict.student_count(); ++i)
            for (const TieGroup& g : strict.student_prefs(i))
                CHECK(g.size() == 1);
        for (LecturerId k = 0; k < strict.lecturer_count(); ++k)
            for (const TieGroup& g : strict.lecturer_prefs(k))
                CHECK(g.size() == 1);
        broken.push_back(strict);
    });
    REQUIRE(broken.size() == 8);
    for (size_t a = 0; a < broken.size(); ++a)
        for (size_t b = a + 1; b < broken.size(); ++b)
            CHECK_FALSE(broken[a] == broken[b]);
}

TEST_CASE("several ties in one list are broken independently") {
    // s1: (p1 p2) p3 (p4 p5) -- the second tie must stay in place while the
    // first is spread out, and vice versa.
    Instance inst = Instance::from_parts({1, 1, 1, 1, 1}, {2}, {0, 0, 0, 0, 0},
                                         {{{0, 1}, {2}, {3, 4}}}, {{{0}}});
    REQUIRE(count_tie_breakings(inst) == 4);
    std::vector<Instance> broken;
    for_each_tie_breaking(inst, {}, [&](const Instance& strict) {
        const PreferenceList& prefs = strict.student_prefs(0);
        REQUIRE(prefs.size() == 5);
        for (const TieGroup& g : prefs)
            CHECK(g.size() == 1);
        CHECK(prefs[2] == TieGroup{2});
        CHECK(prefs[0][0] + prefs[1][0] == 1);  // {p1, p2} in some order
        CHECK(prefs[3][0] + prefs[4][0] == 7);  // {p4, p5} in some order
        broken.push_back(strict);
    });
    REQUIRE(broken.size() == 4);
    for (size_t a = 0; a < broken.size(); ++a)
        for (size_t b = a + 1; b < broken.size(); ++b)
            CHECK_FALSE(broken[a] == broken[b]);
}

TEST_CASE("a strict instance is its own sole tie-breaking") {
    Instance inst = fixtures::single_pair();
    int visits = 0;
    for_each_tie_breaking(inst, {}, [&](const Instance& strict) {
        ++visits;
        CHECK(strict == inst);
    });
    CHECK(visits == 1);
}

TEST_CASE("budgets cut off both enumerations") {
    EnumerationBudget tiny;
    tiny.max_nodes = 2;
    CHECK_THROWS_AS(all_super_stable(fixtures::i1(), tiny), BudgetExhausted);
    CHECK_THROWS_AS(
        for_each_tie_breaking(fixtures::allties(), tiny, [](const Instance&) {}),
        BudgetExhausted);
}

TEST_CASE("super-stability matches stability under every tie-breaking") {
    Instance i1 = fixtures::i1();
    Matching golden = fixtures::matching(i1, {{2, 1}, {3, 2}, {4, 0}});
    PropositionCheck pc = check_proposition_1(i1, golden);
    CHECK(pc.lhs);
    CHECK(pc.rhs);
    CHECK(pc.holds());

    Instance at = fixtures::allties();
    Matching diag = fixtures::matching(at, {{0, 0}, {1, 1}});
    pc = check_proposition_1(at, diag);
    CHECK_FALSE(pc.lhs);
    CHECK_FALSE(pc.rhs);
    CHECK(pc.holds());
}

TEST_CASE("weak stability matches stability under some tie-breaking") {
    Instance at = fixtures::allties();
    Matching diag = fixtures::matching(at, {{0, 0}, {1, 1}});
    PropositionCheck pc = check_proposition_2(at, diag);
    CHECK(pc.lhs);
    CHECK(pc.rhs);
    CHECK(pc.holds());

    Matching half = fixtures::matching(at, {{0, 0}});
    pc = check_proposition_2(at, half);
    CHECK_FALSE(pc.lhs);
    CHECK_FALSE(pc.rhs);
    CHECK(pc.holds());
}

TEST_CASE("both equivalences hold across a randomized sweep") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GeneratorConfig cfg;
        cfg.n1 = 3 + (int)(seed % 3);
        cfg.pref_len = std::min(1 + (int)(seed % 2), std::max(1, cfg.n1 / 2));
        cfg.t_ds = cfg.t_dl = 0.5;
        cfg.seed = splitmix64(seed * 977);
        Instance inst = generate(cfg);
        if (count_tie_breakings(inst) > 512)
            continue;
        for_each_matching(inst, {}, [&](const Matching& m) {
            CHECK(check_proposition_1(inst, m).holds());
            CHECK(check_proposition_2(inst, m).holds());
        });
    }
}

TEST_CASE("super-stable matchings of i2 share the documented structure") {
    Instance inst = fixtures::i2();
    std::vector<Matching> super = all_super_stable(inst);
    REQUIRE(super.size() == 2);

    UnpopularProjectsReport report = unpopular_projects_report(inst, super);
    CHECK_FALSE(report.vacuous);
    CHECK(report.lecturer_loads_equal);
    CHECK(report.unassigned_equal);
    CHECK(report.undersub_project_loads_equal);
    CHECK(report.holds());

    for (const Matching& m : super) {
        std::vector<int> ll = m.lecturer_loads(inst);
        CHECK(ll == std::vector<int>{2, 2});
        CHECK(m.unassigned_students() == std::vector<StudentId>{0, 1});
        std::vector<int> pl = m.project_loads(inst);
        CHECK(pl[2] == 2);  // l2 is undersubscribed, so its projects are pinned
        CHECK(pl[3] == 0);
    }

    CHECK(check_unpopular_projects(inst).holds());
}

TEST_CASE("the structural invariants are vacuous without super-stable matchings") {
    UnpopularProjectsReport report = check_unpopular_projects(fixtures::allties());
    CHECK(report.vacuous);
    CHECK(report.holds());
}

TEST_CASE("the structural report notices a lecturer load mismatch") {
    Instance inst = fixtures::i2();
    Matching m1 = fixtures::matching(inst, {{2, 2}, {3, 1}, {4, 2}, {5, 1}});
    Matching empty(inst.student_count());
    UnpopularProjectsReport report = unpopular_projects_report(inst, {m1, empty});
    CHECK_FALSE(report.lecturer_loads_equal);
    CHECK_FALSE(report.holds());
}
