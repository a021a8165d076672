#pragma once

#include "nilrep/structure.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace nilrep {

// Deterministic PRNG stream. std::uniform_int_distribution is
// implementation-defined, so draws go through the raw engine; fixed seeds
// reproduce byte-identical reports across platforms.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Int pick_int(long lo, long hi) { return Int(pick(lo, hi)); }
};

GroupSpec random_group(Rng& rng, std::size_t max_rank = 3);
Element random_element(Rng& rng, const GroupSpec& g, long bound = 4);
// Random subgroup from a handful of random generators; index usually infinite.
TriSeq random_subgroup(Rng& rng, const GroupSpec& g);
// Random finite-index subgroup with index <= cap.
TriSeq random_finite_subgroup(Rng& rng, const GroupSpec& g, long index_cap);
// Random valid character (the central value respects the commutator
// constraints); rational unless with_symbol.
Character random_character(Rng& rng, const TriSeq& h, bool with_symbol = false);

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string note;  // first failure, empty when green
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::vector<PropertyResult> properties;
    bool ok = true;
};

// Runs the whole property suite, `budget` cases per property (scaled down
// for the expensive ones). Properties draw from independent streams derived
// from the seed, so the report is a pure function of (seed, budget).
SelftestReport run_selftest(std::uint64_t seed, std::size_t budget);

} // namespace nilrep
