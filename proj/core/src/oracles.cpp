#include "scs/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <set>

namespace scs::oracle {

std::vector<int64_t> naive_suffix_array(std::span<const code_t> text) {
    std::vector<int64_t> sa(text.size());
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](int64_t a, int64_t b) {
        return std::lexicographical_compare(text.begin() + a, text.end(),
                                            text.begin() + b, text.end());
    });
    return sa;
}

std::vector<code_t> naive_bwt(std::span<const code_t> text, std::span<const int64_t> sa) {
    std::vector<code_t> bwt(text.size());
    for (size_t k = 0; k < sa.size(); ++k)
        bwt[k] = sa[k] > 0 ? text[sa[k] - 1] : text.back();
    return bwt;
}

naive_index::naive_index(std::vector<code_t> text) : text_(std::move(text)) {
    sa_ = naive_suffix_array(text_);
    isa_.resize(sa_.size());
    for (size_t k = 0; k < sa_.size(); ++k) isa_[sa_[k]] = int64_t(k);
    bwt_ = naive_bwt(text_, sa_);

    const int64_t n = int64_t(text_.size());
    lcp_.assign(n, 0);
    for (int64_t k = 1; k < n; ++k) {
        int64_t a = sa_[k - 1], b = sa_[k], l = 0;
        while (a + l < n && b + l < n && text_[a + l] == text_[b + l]) ++l;
        lcp_[k] = l;
    }
}

lex_range naive_index::pattern_range(std::span<const code_t> pattern) const {
    const int64_t n = int64_t(text_.size());
    int64_t lo = 0, count = 0;
    bool seen = false;
    for (int64_t k = 0; k < n; ++k) {
        const int64_t p = sa_[k];
        const bool match =
            p + int64_t(pattern.size()) <= n &&
            std::equal(pattern.begin(), pattern.end(), text_.begin() + p);
        if (match) {
            if (!seen) lo = k + 1;
            seen = true;
            ++count;
        } else if (seen) {
            break;  // prefixed suffixes are contiguous
        }
    }
    if (!seen) return {};
    return {lo, lo + count - 1};
}

lex_range naive_index::left_extend(std::span<const code_t> alpha, code_t c) const {
    std::vector<code_t> pat;
    pat.reserve(alpha.size() + 1);
    pat.push_back(c);
    pat.insert(pat.end(), alpha.begin(), alpha.end());
    return pattern_range(pat);
}

int64_t naive_index::boundary_lcp(int64_t k) const { return lcp_[k]; }

lex_range naive_index::suffix_link(std::span<const code_t> c_alpha) const {
    assert(!c_alpha.empty() && c_alpha.front() != SEPARATOR);
    const lex_range r = pattern_range(c_alpha);
    assert(!r.empty());
    const int64_t n = int64_t(text_.size());

    // ranks of the suffixes one position after the first and last occurrence
    const int64_t x = isa_[sa_[r.lo - 1] + 1] + 1;
    const int64_t y = isa_[sa_[r.hi - 1] + 1] + 1;
    const int64_t lo = std::min(x, y), hi = std::max(x, y);
    if (lo == hi) return {lo, hi};

    int64_t d = std::numeric_limits<int64_t>::max();
    for (int64_t k = lo; k < hi; ++k) d = std::min(d, boundary_lcp(k));
    int64_t a = lo, b = hi;
    while (a > 1 && boundary_lcp(a - 1) >= d) --a;
    while (b < n && boundary_lcp(b) >= d) ++b;
    return {a, b};
}

bool naive_index::right_maximal(std::span<const code_t> alpha) const {
    const int64_t n = int64_t(text_.size());
    std::set<code_t> followers;
    for (int64_t p = 0; p + int64_t(alpha.size()) < n; ++p) {
        if (std::equal(alpha.begin(), alpha.end(), text_.begin() + p))
            followers.insert(text_[p + alpha.size()]);
    }
    return followers.size() >= 2;
}

overlap_table overlap_table::build(const std::vector<std::vector<code_t>>& strings) {
    const int64_t m = int64_t(strings.size());
    overlap_table t;
    t.ov.assign(m + 1, std::vector<int32_t>(m + 1, 0));
    for (int64_t i = 1; i <= m; ++i) {
        for (int64_t j = 1; j <= m; ++j) {
            const auto& si = strings[i - 1];
            const auto& sj = strings[j - 1];
            int64_t dmax = std::min(si.size(), sj.size());
            if (i == j) dmax = int64_t(si.size()) - 1;
            for (int64_t d = dmax; d >= 1; --d) {
                if (std::equal(si.end() - d, si.end(), sj.begin())) {
                    t.ov[i][j] = int32_t(d);
                    break;
                }
            }
        }
    }
    return t;
}

namespace {

// Longest proper suffix of s that is right-maximal in the separator-joined
// concatenation of all kept strings, by definitional scan.
int64_t longest_right_maximal_suffix(const std::vector<code_t>& s,
                                     const std::vector<code_t>& joined) {
    const int64_t n = int64_t(joined.size());
    int64_t best = 0;
    for (int64_t d = 1; d < int64_t(s.size()); ++d) {
        std::span<const code_t> suffix(s.data() + s.size() - d, size_t(d));
        std::set<code_t> followers;
        for (int64_t p = 0; p + d < n; ++p) {
            if (std::equal(suffix.begin(), suffix.end(), joined.begin() + p))
                followers.insert(joined[p + d]);
        }
        if (followers.size() >= 2)
            best = d;
        else
            break;  // right-maximality is monotone in suffix length
    }
    return best;
}

} // namespace

naive_plan naive_greedy(const std::vector<std::vector<code_t>>& kept) {
    const int64_t m = int64_t(kept.size());
    naive_plan plan;
    plan.successor.assign(m + 1, 0);
    plan.overlap_length.assign(m + 1, 0);
    if (m == 0) return plan;

    std::vector<code_t> joined;
    joined.push_back(SEPARATOR);
    for (const auto& s : kept) {
        joined.insert(joined.end(), s.begin(), s.end());
        joined.push_back(SEPARATOR);
    }

    struct iter {
        int64_t id;
        int64_t init_d;
    };
    std::vector<iter> iters;
    for (int64_t i = 1; i <= m; ++i)
        iters.push_back({i, longest_right_maximal_suffix(kept[i - 1], joined)});
    std::sort(iters.begin(), iters.end(), [](const iter& a, const iter& b) {
        if (a.init_d != b.init_d) return a.init_d > b.init_d;
        return a.id < b.id;
    });

    std::vector<bool> leftavail(m + 1, true), rightavail(m + 1, true);

    // cycle check by walking successor pointers from the candidate
    auto chain_end = [&](int64_t j) {
        int64_t cur = j, steps = 0;
        while (plan.successor[cur] != 0) {
            cur = plan.successor[cur];
            assert(++steps <= m);
        }
        return cur;
    };

    const int64_t target = m - 1;
    const int64_t maxd = iters.front().init_d;
    for (int64_t D = maxd; D >= 0 && int64_t(plan.edges.size()) < target; --D) {
        for (const iter& it : iters) {
            if (it.init_d < D) break;
            if (int64_t(plan.edges.size()) == target) break;
            const int64_t i = it.id;
            if (!leftavail[i]) continue;
            const auto& si = kept[i - 1];
            std::span<const code_t> suffix(si.data() + si.size() - D, size_t(D));
            for (int64_t j = 1; j <= m; ++j) {
                if (int64_t(kept[j - 1].size()) < D) continue;
                if (!std::equal(suffix.begin(), suffix.end(), kept[j - 1].begin()))
                    continue;
                if (!rightavail[j]) continue;
                if (chain_end(j) == i) continue;  // would close a cycle
                plan.successor[i] = int32_t(j);
                plan.overlap_length[i] = int32_t(D);
                leftavail[i] = false;
                rightavail[j] = false;
                plan.edges.push_back({i, j, D});
                break;
            }
        }
    }

    std::vector<bool> has_pred(m + 1, false);
    for (int64_t k = 1; k <= m; ++k)
        if (plan.successor[k]) has_pred[plan.successor[k]] = true;
    for (int64_t k = 1; k <= m; ++k)
        if (!has_pred[k]) plan.head = k;

    int64_t cur = plan.head;
    plan.superstring.insert(plan.superstring.end(), kept[cur - 1].begin(),
                            kept[cur - 1].end());
    while (plan.successor[cur] != 0) {
        const int64_t next = plan.successor[cur];
        const int64_t d = plan.overlap_length[cur];
        plan.superstring.insert(plan.superstring.end(), kept[next - 1].begin() + d,
                                kept[next - 1].end());
        cur = next;
    }
    return plan;
}

int64_t exhaustive_optimal(const std::vector<std::vector<code_t>>& kept) {
    const int64_t m = int64_t(kept.size());
    if (m > 8) throw contract_error("exhaustive_optimal: m too large");
    if (m == 0) return 0;

    const overlap_table t = overlap_table::build(kept);
    std::vector<int64_t> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    int64_t best = std::numeric_limits<int64_t>::max();
    do {
        int64_t len = int64_t(kept[perm[0] - 1].size());
        for (int64_t k = 1; k < m; ++k)
            len += int64_t(kept[perm[k] - 1].size()) - t.ov[perm[k - 1]][perm[k]];
        best = std::min(best, len);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace scs::oracle
