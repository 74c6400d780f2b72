#include "fss/comparison.hpp"

#include <algorithm>
#include <set>

#include "fss/errors.hpp"

namespace fss {

std::vector<RankedUnit> rank_units(std::vector<UnitEntry> units, int min_staff,
                                   const std::map<std::string, int>* tie_keys) {
    std::erase_if(units, [&](const UnitEntry& u) { return u.staff < min_staff; });

    std::set<std::string> keys;
    for (const auto& u : units)
        if (!keys.insert(u.unit_key).second)
            throw IngestError("duplicate unit key '" + u.unit_key + "'");

    const auto tie = [&](const UnitEntry& u) {
        if (tie_keys) {
            auto it = tie_keys->find(u.unit_key);
            if (it != tie_keys->end()) return it->second;
        }
        return 0;
    };
    std::sort(units.begin(), units.end(), [&](const UnitEntry& a, const UnitEntry& b) {
        if (a.fss != b.fss) return a.fss > b.fss;
        if (tie_keys && tie(a) != tie(b)) return tie(a) < tie(b);
        return a.unit_key < b.unit_key;
    });

    std::vector<RankedUnit> out;
    out.reserve(units.size());
    int rank = 0;
    for (const auto& u : units)
        out.push_back(RankedUnit{u.unit_key, u.fss, u.staff, ++rank});
    return out;
}

std::vector<RankShift> rank_shift(const std::vector<RankedUnit>& before,
                                  const std::vector<RankedUnit>& after) {
    std::map<std::string, const RankedUnit*> after_by_key;
    for (const auto& u : after) after_by_key[u.unit_key] = &u;
    if (before.size() != after.size())
        throw IngestError("rankings cover different unit sets (" +
                          std::to_string(before.size()) + " vs " +
                          std::to_string(after.size()) + " units)");
    const int n = static_cast<int>(before.size());

    std::vector<RankShift> out;
    out.reserve(before.size());
    for (const auto& b : before) {
        auto it = after_by_key.find(b.unit_key);
        if (it == after_by_key.end())
            throw IngestError("unit '" + b.unit_key + "' present only in the before ranking");
        const RankedUnit& a = *it->second;
        RankShift s;
        s.unit_key = b.unit_key;
        s.staff_before = b.staff;
        s.staff_after = a.staff;
        s.fss_before = b.fss;
        s.fss_after = a.fss;
        s.rank_before = b.rank;
        s.rank_after = a.rank;
        s.delta_rank = b.rank - a.rank;
        s.delta_fss = a.fss - b.fss;
        if (s.delta_rank > 0) {
            // Improvement against the positions scalable from rank_before.
            s.relative_delta_rank = static_cast<double>(s.delta_rank) / (b.rank - 1);
        } else if (s.delta_rank < 0) {
            s.relative_delta_rank = static_cast<double>(s.delta_rank) / (n - b.rank);
        } else if (b.rank > 1) {
            s.relative_delta_rank = 0.0;
        }
        // rank 1 holder with delta 0: no gain was possible, value undefined
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const RankShift& x, const RankShift& y) {
        return x.rank_before < y.rank_before;
    });
    return out;
}

std::vector<RankShift> compare_periods(const std::vector<UnitEntry>& before,
                                       const std::vector<UnitEntry>& after,
                                       int min_staff,
                                       const std::map<std::string, int>* tie_keys_before,
                                       const std::map<std::string, int>* tie_keys_after) {
    std::map<std::string, UnitEntry> b_by_key, a_by_key;
    for (const auto& u : before) b_by_key[u.unit_key] = u;
    for (const auto& u : after) a_by_key[u.unit_key] = u;

    std::vector<UnitEntry> b_joint, a_joint;
    for (const auto& [key, b] : b_by_key) {
        auto it = a_by_key.find(key);
        if (it == a_by_key.end()) continue;
        if (b.staff < min_staff || it->second.staff < min_staff) continue;
        b_joint.push_back(b);
        a_joint.push_back(it->second);
    }
    return rank_shift(rank_units(std::move(b_joint), 0, tie_keys_before),
                      rank_units(std::move(a_joint), 0, tie_keys_after));
}

std::vector<RegionSummary> region_summary(
    const std::vector<RankShift>& shifts,
    const std::map<std::string, MacroRegion>& regions) {
    std::map<MacroRegion, RegionSummary> acc;
    std::map<MacroRegion, std::pair<double, int>> rel;  // sum, count of defined
    for (MacroRegion r :
         {MacroRegion::North, MacroRegion::Center, MacroRegion::South})
        acc[r].region = r;

    for (const auto& s : shifts) {
        auto it = regions.find(s.unit_key);
        if (it == regions.end())
            throw LookupError("no macro region for unit '" + s.unit_key + "'");
        RegionSummary& r = acc[it->second];
        r.n_universities += 1;
        if (s.delta_rank > 0) r.n_improve += 1;
        if (s.delta_rank < 0) r.n_worsen += 1;
        if (s.relative_delta_rank) {
            auto& [sum, count] = rel[it->second];
            sum += *s.relative_delta_rank;
            count += 1;
            const double v = *s.relative_delta_rank;
            if (!r.max_improvement || v > *r.max_improvement) r.max_improvement = v;
            if (!r.max_decline || v < *r.max_decline) r.max_decline = v;
        }
    }
    std::vector<RegionSummary> out;
    for (auto& [region, summary] : acc) {
        const auto& [sum, count] = rel[region];
        if (count > 0) summary.avg_relative_delta_rank = sum / count;
        out.push_back(summary);
    }
    return out;
}

std::vector<DrillDownRow> drill_down(const std::vector<UnitScore>& before,
                                     const std::vector<UnitScore>& after) {
    // group -> university -> score, per period
    std::map<std::string, std::vector<UnitEntry>> b_groups, a_groups;
    std::map<std::string, std::string> uni_of_key;
    for (const auto& u : before) {
        b_groups[u.group].push_back(UnitEntry{u.university_id, u.fss, u.staff});
        uni_of_key[u.unit_key] = u.university_id;
    }
    for (const auto& u : after)
        a_groups[u.group].push_back(UnitEntry{u.university_id, u.fss, u.staff});

    std::map<std::string, DrillDownRow> rows;
    for (const auto& [group, b_units] : b_groups) {
        auto ag = a_groups.find(group);
        if (ag == a_groups.end()) continue;
        const auto shifts = compare_periods(b_units, ag->second, 0);
        for (const auto& s : shifts) {
            DrillDownRow& row = rows[s.unit_key];
            row.unit_key = s.unit_key;
            row.assessed += 1;
            const char mark = s.delta_rank > 0 ? '+' : s.delta_rank < 0 ? '-' : '=';
            if (mark == '+') row.improving += 1;
            row.marks[group] = mark;
        }
    }
    std::vector<DrillDownRow> out;
    for (auto& [key, row] : rows) {
        if (row.assessed == 0) continue;
        row.share_improving = static_cast<double>(row.improving) / row.assessed;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace fss
