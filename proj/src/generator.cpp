#include "spast/generator.hpp"

#include <algorithm>
#include <numeric>

namespace spast {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    // Rejection below the largest multiple of n keeps the draw unbiased.
    std::uint64_t limit = (0 - n) % n;  // 2^64 mod n
    std::uint64_t r;
    do {
        r = rng();
    } while (r < limit);
    return r % n;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GeneratorConfig resolve_defaults(GeneratorConfig config) {
    if (config.n2 < 0)
        config.n2 = std::max(1, config.n1 / 2);
    if (config.n3 < 0)
        config.n3 = std::max(1, config.n1 / 5);
    if (config.total_capacity < 0)
        config.total_capacity = std::max(config.n2, config.n1 * 3 / 2);
    return config;
}

namespace {

void check_config(const GeneratorConfig& c) {
    auto fail = [](const std::string& what) { throw ValidationError(what); };
    if (c.n1 < 1)
        fail("generator needs at least one student");
    if (c.n2 < 1 || c.n3 < 1)
        fail("generator needs at least one project and one lecturer");
    if (c.n2 < c.n3)
        fail("generator needs at least as many projects as lecturers");
    if (c.pref_len < 1 || c.pref_len > c.n2)
        fail("pref_len must lie in [1, n2]");
    if (c.total_capacity < c.n2)
        fail("total_capacity must be at least n2");
    if (c.t_ds < 0.0 || c.t_ds > 1.0 || c.t_dl < 0.0 || c.t_dl > 1.0)
        fail("tie densities must lie in [0, 1]");
}

// Draws the first `take` elements of a uniform permutation of pool.
void partial_shuffle(std::vector<int>& pool, int take, std::mt19937_64& rng) {
    int n = static_cast<int>(pool.size());
    for (int t = 0; t < take; ++t)
        std::swap(pool[t], pool[t + (int)uniform_below(rng, (std::uint64_t)(n - t))]);
}

// Groups `order` into a preference list, tying each element to its
// predecessor with probability t.
PreferenceList tie_up(const std::vector<int>& order, int len, double t,
                      std::mt19937_64& rng) {
    PreferenceList prefs;
    for (int pos = 0; pos < len; ++pos) {
        if (pos == 0 || !(uniform_unit(rng) < t))
            prefs.push_back({});
        prefs.back().push_back(order[pos]);
    }
    return prefs;
}

}  // namespace

Instance generate(const GeneratorConfig& raw) {
    GeneratorConfig c = resolve_defaults(raw);
    check_config(c);
    std::mt19937_64 rng(c.seed);

    // Every project gets one seat, the surplus lands uniformly.
    std::vector<int> caps(c.n2, 1);
    for (int extra = c.total_capacity - c.n2; extra > 0; --extra)
        ++caps[uniform_below(rng, c.n2)];

    // Uniform owners, then give every project-less lecturer one project
    // stolen from whoever currently holds the most.
    std::vector<int> owner(c.n2);
    std::vector<int> held(c.n3, 0);
    for (int j = 0; j < c.n2; ++j) {
        owner[j] = (int)uniform_below(rng, c.n3);
        ++held[owner[j]];
    }
    for (int k = 0; k < c.n3; ++k) {
        if (held[k] > 0)
            continue;
        int donor = (int)(std::max_element(held.begin(), held.end()) - held.begin());
        std::vector<int> candidates;
        for (int j = 0; j < c.n2; ++j)
            if (owner[j] == donor)
                candidates.push_back(j);
        int j = candidates[uniform_below(rng, candidates.size())];
        owner[j] = k;
        --held[donor];
        ++held[k];
    }

    // d_k uniform between the largest single capacity and the total.
    std::vector<int> lect_caps(c.n3, 0);
    for (int k = 0; k < c.n3; ++k) {
        int largest = 0;
        int total = 0;
        for (int j = 0; j < c.n2; ++j)
            if (owner[j] == k) {
                largest = std::max(largest, caps[j]);
                total += caps[j];
            }
        lect_caps[k] = largest + (int)uniform_below(rng, (std::uint64_t)(total - largest + 1));
    }

    std::vector<PreferenceList> student_prefs(c.n1);
    std::vector<int> pool(c.n2);
    for (int i = 0; i < c.n1; ++i) {
        std::iota(pool.begin(), pool.end(), 0);
        partial_shuffle(pool, c.pref_len, rng);
        student_prefs[i] = tie_up(pool, c.pref_len, c.t_ds, rng);
    }

    // Lecturers rank exactly the students that find one of their projects
    // acceptable, in uniform random order.
    std::vector<char> applies(c.n3, 0);
    std::vector<std::vector<int>> applicants(c.n3);
    for (int i = 0; i < c.n1; ++i) {
        std::fill(applies.begin(), applies.end(), 0);
        for (const TieGroup& group : student_prefs[i])
            for (int j : group)
                applies[owner[j]] = 1;
        for (int k = 0; k < c.n3; ++k)
            if (applies[k])
                applicants[k].push_back(i);
    }
    std::vector<PreferenceList> lecturer_prefs(c.n3);
    for (int k = 0; k < c.n3; ++k) {
        std::vector<int>& order = applicants[k];
        int len = static_cast<int>(order.size());
        if (len > 0)
            partial_shuffle(order, len - 1, rng);  // full Fisher-Yates
        lecturer_prefs[k] = tie_up(order, len, c.t_dl, rng);
    }

    return Instance::from_parts(caps, lect_caps, owner, student_prefs, lecturer_prefs);
}

}  // namespace spast
