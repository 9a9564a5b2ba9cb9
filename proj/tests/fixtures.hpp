#pragma once

#include <vector>

#include "spast/instance.hpp"
#include "spast/stability.hpp"

namespace fixtures {

using spast::Instance;
using spast::Matching;
using spast::PreferenceList;

// 5 students, 3 projects, 2 lecturers; one tie on each side. Admits the
// single super-stable matching {(s3,p2),(s4,p3),(s5,p1)} (1-based ids).
inline Instance i1() {
    return Instance::from_parts(
        {1, 2, 1}, {2, 1}, {0, 0, 1},
        {{{0}}, {{0, 2}}, {{1}}, {{1}, {2}}, {{2}, {0}}},
        {{{4}, {0, 1}, {2}, {3}}, {{3}, {4}, {1}}});
}

// 6 students, 4 projects, 2 lecturers; admits exactly two super-stable
// matchings, which differ on s4/s5 swapping p2 and p3.
inline Instance i2() {
    return Instance::from_parts(
        {1, 2, 2, 1}, {2, 3}, {0, 0, 1, 1},
        {{{0}}, {{0, 2}}, {{1}, {2}}, {{1}, {2}}, {{2}, {1}}, {{1}, {3}}},
        {{{4}, {5}, {3}, {0, 1}, {2}}, {{2}, {3}, {4}, {5}, {1}}});
}

// 3 students, 3 projects, 2 lecturers, all capacities 1. Admits
// {(s1,p1),(s3,p3)}; its re-encoding as HRT admits nothing.
inline Instance fig2() {
    return Instance::from_parts(
        {1, 1, 1}, {1, 1}, {0, 0, 1},
        {{{0}}, {{0, 1}}, {{1}, {2}}},
        {{{0}, {1, 2}}, {{2}}});
}

// 2 students, 2 projects, 1 lecturer of capacity 2, every list a single
// tie of length 2. No super-stable matching exists.
inline Instance allties() {
    return Instance::from_parts(
        {1, 1}, {2}, {0, 0},
        {{{0, 1}}, {{0, 1}}},
        {{{0, 1}}});
}

// One student, one project, one lecturer, capacities 1.
inline Instance single_pair() {
    return Instance::from_parts({1}, {1}, {0}, {{{0}}}, {{{0}}});
}

inline Matching matching(const Instance& inst,
                         const std::vector<std::pair<int, int>>& pairs) {
    return Matching::from_pairs(inst, pairs);
}

}  // namespace fixtures
