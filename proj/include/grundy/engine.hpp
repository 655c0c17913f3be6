#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// A playing sequence picks distinct vertices one at a time, and each pick must
// see at least one vertex its coverage set reaches that no earlier pick has
// used up. The variant fixes the two neighborhoods involved:
//
//   classic: coverage N[v], accumulation N[v]
//   total:   coverage N(v), accumulation N(v)
//   l:       coverage N[v], accumulation N(v)
//
// The longest such sequence is the (classic / total / L-) Grundy domination
// number of the graph. The fourth pairing (open coverage, closed accumulation)
// is deliberately not offered.
enum class Variant { classic, total, l };

std::uint64_t coverage_set(const Graph& g, Variant variant, int v);
std::uint64_t accumulation_set(const Graph& g, Variant variant, int v);

std::string variant_name(Variant variant);
Variant variant_from_name(const std::string& name);  // throws std::invalid_argument

// Prefix of a legal sequence, grown one step at a time.
struct SequenceState {
    std::vector<int> chosen;
    std::uint64_t chosen_mask = 0;
    std::uint64_t blocked = 0;  // union of accumulation sets of chosen vertices
};

bool step_valid(const Graph& g, Variant variant, const SequenceState& s, int v);

// Throws std::invalid_argument when the step is not admissible.
void append_step(const Graph& g, Variant variant, SequenceState& s, int v);

// Mask of every vertex admissible as the next step. Never grows as the
// sequence extends: blocked only accumulates.
std::uint64_t candidates(const Graph& g, Variant variant, const SequenceState& s);

// Step i footprints vertex u when u is in pick i's coverage set and no earlier
// pick's accumulation set contains u. Under the L variant a vertex can be
// footprinted twice (by itself and by its first played neighbor); under
// classic and total at most once.
struct FootprintLog {
    std::vector<std::uint64_t> newly;  // newly[i]: vertices footprinted at step i
    std::vector<int> footprinter;      // first step to footprint u, or -1
};

enum class SequenceError { none, out_of_range, duplicate, no_new_footprint };

struct ValidationResult {
    bool ok = false;
    int fail_index = -1;  // first offending position, -1 when ok
    SequenceError error = SequenceError::none;
    FootprintLog log;  // on failure, covers the steps before fail_index
};

ValidationResult validate_sequence(const Graph& g, Variant variant,
                                   const std::vector<int>& seq);

}  // namespace grundy
