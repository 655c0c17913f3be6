#include "grundy/engine.hpp"

#include <bit>
#include <stdexcept>

namespace grundy {

std::uint64_t coverage_set(const Graph& g, Variant variant, int v) {
    return variant == Variant::total ? g.open_neighborhood(v)
                                     : g.closed_neighborhood(v);
}

std::uint64_t accumulation_set(const Graph& g, Variant variant, int v) {
    return variant == Variant::classic ? g.closed_neighborhood(v)
                                       : g.open_neighborhood(v);
}

std::string variant_name(Variant variant) {
    switch (variant) {
        case Variant::classic: return "classic";
        case Variant::total: return "total";
        case Variant::l: return "l";
    }
    throw std::logic_error("variant_name: bad enum value");
}

Variant variant_from_name(const std::string& name) {
    if (name == "classic") return Variant::classic;
    if (name == "total") return Variant::total;
    if (name == "l") return Variant::l;
    throw std::invalid_argument("unknown variant '" + name +
                                "', expected classic, total or l");
}

bool step_valid(const Graph& g, Variant variant, const SequenceState& s, int v) {
    if (v < 0 || v >= g.order()) return false;
    if (s.chosen_mask >> v & 1) return false;
    return (coverage_set(g, variant, v) & ~s.blocked) != 0;
}

void append_step(const Graph& g, Variant variant, SequenceState& s, int v) {
    if (!step_valid(g, variant, s, v))
        throw std::invalid_argument("inadmissible step: vertex " + std::to_string(v) +
                                    " at position " + std::to_string(s.chosen.size()));
    s.chosen.push_back(v);
    s.chosen_mask |= std::uint64_t(1) << v;
    s.blocked |= accumulation_set(g, variant, v);
}

std::uint64_t candidates(const Graph& g, Variant variant, const SequenceState& s) {
    std::uint64_t out = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!(s.chosen_mask >> v & 1) &&
            (coverage_set(g, variant, v) & ~s.blocked) != 0)
            out |= std::uint64_t(1) << v;
    return out;
}

ValidationResult validate_sequence(const Graph& g, Variant variant,
                                   const std::vector<int>& seq) {
    ValidationResult r;
    r.log.footprinter.assign(size_t(g.order()), -1);
    SequenceState s;
    for (size_t i = 0; i < seq.size(); ++i) {
        const int v = seq[i];
        SequenceError err = SequenceError::none;
        if (v < 0 || v >= g.order())
            err = SequenceError::out_of_range;
        else if (s.chosen_mask >> v & 1)
            err = SequenceError::duplicate;
        else if ((coverage_set(g, variant, v) & ~s.blocked) == 0)
            err = SequenceError::no_new_footprint;
        if (err != SequenceError::none) {
            r.fail_index = int(i);
            r.error = err;
            return r;
        }
        std::uint64_t fresh = coverage_set(g, variant, v) & ~s.blocked;
        r.log.newly.push_back(fresh);
        for (std::uint64_t m = fresh; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (r.log.footprinter[size_t(u)] < 0)
                r.log.footprinter[size_t(u)] = int(i);
        }
        s.chosen.push_back(v);
        s.chosen_mask |= std::uint64_t(1) << v;
        s.blocked |= accumulation_set(g, variant, v);
    }
    r.ok = true;
    return r;
}

}  // namespace grundy
