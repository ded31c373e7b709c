#include "tcone/ladder.hpp"

namespace tcone {

LadderProfile analyze_ladder(std::span<const Value> values)
{
    LadderProfile profile;
    const int size = static_cast<int>(values.size());
    for (int k = 1; k < size; ++k)
        if (values[k] < values[k - 1])
            throw Error(ErrorKind::NotALadder,
                        "ladder decreases at index " + std::to_string(k) + " (" +
                            std::to_string(values[k - 1]) + " > " + std::to_string(values[k]) + ")");

    for (int start = 0; start < size;) {
        int end = start;
        while (end + 1 < size && values[end + 1] == values[start]) ++end;
        if (end > start) profile.landings.push_back({start, end});
        start = end + 1;
    }

    profile.l = static_cast<int>(profile.landings.size()) - 1;
    if (!profile.landings.empty()) profile.d = profile.landings.back().end;
    for (std::size_t j = 1; j < profile.landings.size(); ++j) {
        const int prev_end = profile.landings[j - 1].end;
        profile.steps.push_back({prev_end, profile.landings[j].start - prev_end});
    }
    return profile;
}

std::vector<Value> rebuild_ladder(Value first, const LadderProfile& profile, Value step, std::size_t length)
{
    std::vector<Value> out;
    if (length == 0) return out;
    out.push_back(first);
    std::size_t next_landing = 0;
    for (std::size_t k = 1; k < length; ++k) {
        while (next_landing < profile.landings.size() &&
               profile.landings[next_landing].end < static_cast<int>(k))
            ++next_landing;
        const bool flat = next_landing < profile.landings.size() &&
                          profile.landings[next_landing].start < static_cast<int>(k);
        out.push_back(out.back() + (flat ? 0 : step));
    }
    return out;
}

}  // namespace tcone
