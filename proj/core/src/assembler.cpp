#include "scs/assembler.hpp"

#include <algorithm>
#include <cassert>
#include <span>

#include "scs/suffix_sort.hpp"

namespace scs {

int64_t merge_plan::edge_count() const {
    int64_t c = 0;
    for (int64_t k = 1; k <= m; ++k) c += successor[k] != 0;
    return c;
}

merge_plan merge_plan::from_state(const merge_state& state) {
    merge_plan plan;
    plan.m = state.m();
    plan.successor = state.successor();
    plan.overlap_length = state.overlap_length();
    if (plan.m == 0) return plan;

    std::vector<bool> has_pred(plan.m + 1, false);
    for (int64_t k = 1; k <= plan.m; ++k)
        if (plan.successor[k] != 0) has_pred[plan.successor[k]] = true;
    for (int64_t k = 1; k <= plan.m; ++k) {
        if (!has_pred[k]) {
            if (plan.head != 0)
                throw contract_error("merge plan has more than one path head");
            plan.head = k;
        }
    }
    if (plan.head == 0) throw contract_error("merge plan has no path head");
    return plan;
}

std::vector<code_t> build_superstring(const string_set& set, const merge_plan& plan) {
    if (plan.m != set.m) throw contract_error("plan and string set disagree on m");
    std::vector<code_t> out;
    if (plan.m == 0) return out;
    out.reserve(set.n_chars);

    int64_t visited = 0;
    int64_t cur = plan.head;
    const auto& first = set.strings[cur - 1];
    out.insert(out.end(), first.begin(), first.end());
    ++visited;
    while (plan.successor[cur] != 0) {
        const int64_t next = plan.successor[cur];
        const int64_t d = plan.overlap_length[cur];
        const auto& s = set.strings[next - 1];
        if (d > int64_t(s.size()) || d > int64_t(out.size()) ||
            !std::equal(s.begin(), s.begin() + d, out.end() - d))
            throw contract_error("recorded overlap does not match suffix/prefix");
        out.insert(out.end(), s.begin() + d, s.end());
        cur = next;
        if (++visited > plan.m)
            throw contract_error("merge plan path revisits a string");
    }
    if (visited != plan.m)
        throw contract_error("merge plan path does not cover all strings");
    return out;
}

verify_report verify_superstring(const std::vector<std::string>& originals,
                                 std::string_view output) {
    verify_report report;
    std::span<const code_t> text(reinterpret_cast<const code_t*>(output.data()),
                                 output.size());
    const std::vector<int32_t> sa =
        output.empty() ? std::vector<int32_t>{} : build_suffix_array(text);

    auto occurs = [&](std::string_view pat) {
        if (pat.empty()) return true;
        if (pat.size() > output.size()) return false;
        // first suffix >= pat
        int64_t lo = 0, hi = int64_t(sa.size());
        while (lo < hi) {
            const int64_t mid = (lo + hi) / 2;
            if (output.substr(sa[mid]) < pat) lo = mid + 1; else hi = mid;
        }
        return lo < int64_t(sa.size()) && output.substr(sa[lo], pat.size()) == pat;
    };

    for (int64_t i = 0; i < int64_t(originals.size()); ++i) {
        if (!occurs(originals[i])) {
            report.pass = false;
            report.missing.push_back(i);
        }
    }
    return report;
}

} // namespace scs
