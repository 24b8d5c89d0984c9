#ifndef BRT_SCENARIO_HPP
#define BRT_SCENARIO_HPP

#include <cstdint>

#include "brt/descent.hpp"

namespace brt {

// Deterministic generator used for all seeded randomness (documented in the
// README): splitmix64 with the scenario seed as initial state.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n), n > 0, by rejection-free modulo (bias negligible and
    // irrelevant: determinism is the requirement, not uniformity)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

struct Scenario {
    std::string name;
    DescentShape shape;
    CoeffKind kind = CoeffKind::Set;
    Field field;
    std::uint64_t seed = 0;
    std::int64_t budget = kDefaultBudget;
    int random_objects = 3;
    std::vector<std::string> laws;  // empty = full battery
};

struct LawResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "n/a"
    std::string witness;
};

struct Verdict {
    std::string scenario;
    std::string coeff;
    std::uint64_t seed = 0;
    std::int64_t budget = 0;
    std::vector<std::string> tested_objects;
    std::string chi_status;    // aggregate over square (eq6)
    std::string chi12_status;  // aggregate over square (eq1.2)
    std::vector<LawResult> laws;  // sorted by name
    bool all_pass = true;         // no "fail" entries
    double elapsed_seconds = 0;   // excluded from canonical serialization
};

// The complete law battery, in sorted order; every run reports each of these
// with status pass/fail/n-a (never silently skipped).
const std::vector<std::string>& law_battery();

Verdict run_scenario(const Scenario& s);

std::vector<std::string> builtin_names();
Scenario builtin_scenario(const std::string& name);  // throws on unknown name

// Seeded sample representation over an elements category: a coproduct of
// representables chosen by the generator.
Representation random_rep(const ElCatPtr& el, CoeffKind kind, Field field, SplitMix64& rng,
                          int summands = 2);

// Independent double-coset oracle for the Mackey cross-check. The group is a
// multiplication table (table[g][h] = g*h); h and k are subgroups given as
// sorted element lists with k ⊆ h.
struct MackeyPrediction {
    int ind_dim = 0;      // [H:K] · dim V
    int res_ind_dim = 0;  // Σ over K\H/K of [K : K ∩ gKg⁻¹] · dim V
    int n_double_cosets = 0;
};

MackeyPrediction mackey_oracle(const std::vector<std::vector<int>>& table,
                               const std::vector<int>& h, const std::vector<int>& k, int dim_v);

// Building blocks reused by tests: the builtin base data.
PresheafMorphism builtin_arrow(const std::string& name);  // the generating a: A1 -> A0

std::string render_text_report(const Verdict& v);

}  // namespace brt

#endif
