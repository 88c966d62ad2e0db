#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cclab/chartable.hpp"
#include "cclab/config.hpp"
#include "cclab/report.hpp"

namespace cclab::testing {

// Tables are built once per process and shared between test cases.
inline TablePtr table_for(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, TablePtr> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(spec);
    if (it != tables.end()) return it->second;
    auto t = build_table(compute_classes(enumerate(parse_group_spec(spec))));
    tables.emplace(spec, t);
    return t;
}

inline ClassesPtr classes_for(const std::string& spec) { return table_for(spec)->classes; }

// Subgroup of H.group cut out by a predicate on ids of the ambient group.
template <class Pred>
Subgroup restrict_subgroup(const Subgroup& H, Pred keep, std::string label) {
    std::vector<int> ids;
    for (int i = 0; i < H.group->order(); ++i)
        if (keep(H.embed[i])) ids.push_back(i);
    return subgroup_from_ids(H.group, std::move(ids), std::move(label));
}

inline int count_verdict(const std::vector<BoundReport>& rs, Verdict v) {
    int n = 0;
    for (const auto& r : rs)
        if (r.verdict == v) ++n;
    return n;
}

inline std::vector<BoundReport> with_id(const std::vector<BoundReport>& rs, const std::string& id) {
    std::vector<BoundReport> out;
    for (const auto& r : rs)
        if (r.id == id) out.push_back(r);
    return out;
}

inline std::string first_failure(const std::vector<BoundReport>& rs) {
    for (const auto& r : rs)
        if (r.verdict == Verdict::Fail) return r.id + " [" + r.instance + "] " + r.note;
    return {};
}

// Degrees of a table as a sorted list.
inline std::vector<int64_t> degree_list(const CharacterTable& t) {
    std::vector<int64_t> d = t.degrees;
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace cclab::testing
