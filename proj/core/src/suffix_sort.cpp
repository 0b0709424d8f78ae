#include "scs/suffix_sort.hpp"

#include <algorithm>
#include <cassert>

namespace scs {
namespace {

constexpr int32_t EMPTY = -1;

inline bool is_lms(const std::vector<uint8_t>& t, int64_t i) {
    return i > 0 && t[i] && !t[i - 1];
}

void fill_buckets(const int32_t* s, std::vector<int32_t>& bkt, int64_t n, int64_t K,
                  bool ends) {
    bkt.assign(K, 0);
    for (int64_t i = 0; i < n; ++i) ++bkt[s[i]];
    int32_t sum = 0;
    for (int64_t c = 0; c < K; ++c) {
        sum += bkt[c];
        bkt[c] = ends ? sum : sum - bkt[c];
    }
}

void induce_l(const std::vector<uint8_t>& t, int32_t* sa, const int32_t* s, int64_t n,
              int64_t K, std::vector<int32_t>& bkt) {
    fill_buckets(s, bkt, n, K, false);
    for (int64_t i = 0; i < n; ++i) {
        int32_t j = sa[i] - 1;
        if (sa[i] > 0 && !t[j]) sa[bkt[s[j]]++] = j;
    }
}

void induce_s(const std::vector<uint8_t>& t, int32_t* sa, const int32_t* s, int64_t n,
              int64_t K, std::vector<int32_t>& bkt) {
    fill_buckets(s, bkt, n, K, true);
    for (int64_t i = n - 1; i >= 0; --i) {
        int32_t j = sa[i] - 1;
        if (sa[i] > 0 && t[j]) sa[--bkt[s[j]]] = j;
    }
}

// SA-IS over s[0..n) with values in [0, K); s[n-1] must be the unique
// smallest value. Writes the suffix array into sa[0..n).
void sa_is(const int32_t* s, int32_t* sa, int64_t n, int64_t K) {
    assert(n >= 1);
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    if (n == 2) {
        sa[0] = 1;
        sa[1] = 0;
        return;
    }

    std::vector<uint8_t> t(n);  // 1 = S-type, 0 = L-type
    t[n - 1] = 1;
    t[n - 2] = 0;
    for (int64_t i = n - 3; i >= 0; --i)
        t[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && t[i + 1])) ? 1 : 0;

    std::vector<int32_t> bkt;

    // Stage 1: sort the LMS substrings by placing LMS positions at bucket
    // ends and inducing.
    std::fill(sa, sa + n, EMPTY);
    fill_buckets(s, bkt, n, K, true);
    for (int64_t i = 1; i < n; ++i)
        if (is_lms(t, i)) sa[--bkt[s[i]]] = int32_t(i);
    induce_l(t, sa, s, n, K, bkt);
    induce_s(t, sa, s, n, K, bkt);

    // Compact the sorted LMS positions into sa[0..n1).
    int64_t n1 = 0;
    for (int64_t i = 0; i < n; ++i)
        if (is_lms(t, sa[i])) sa[n1++] = sa[i];

    // Name LMS substrings in sa[n1..n) (indexed by pos/2).
    std::fill(sa + n1, sa + n, EMPTY);
    int32_t name = 0;
    int64_t prev = -1;
    for (int64_t i = 0; i < n1; ++i) {
        int64_t pos = sa[i];
        bool diff = false;
        if (prev < 0) {
            diff = true;
        } else {
            for (int64_t d = 0;; ++d) {
                if (d > 0 && (is_lms(t, pos + d) || is_lms(t, prev + d))) {
                    diff = !(is_lms(t, pos + d) && is_lms(t, prev + d));
                    break;
                }
                if (s[pos + d] != s[prev + d] || t[pos + d] != t[prev + d]) {
                    diff = true;
                    break;
                }
            }
        }
        if (diff) {
            ++name;
            prev = pos;
        }
        sa[n1 + pos / 2] = name - 1;
    }
    for (int64_t i = n - 1, j = n - 1; i >= n1; --i)
        if (sa[i] >= 0) sa[j--] = sa[i];

    // Sort the reduced problem (each LMS substring replaced by its name).
    int32_t* s1 = sa + n - n1;
    if (name < n1) {
        sa_is(s1, sa, n1, name);
    } else {
        for (int64_t i = 0; i < n1; ++i) sa[s1[i]] = int32_t(i);
    }

    // Stage 2: induce the full suffix array from the sorted LMS suffixes.
    for (int64_t i = 1, j = 0; i < n; ++i)
        if (is_lms(t, i)) s1[j++] = int32_t(i);
    for (int64_t i = 0; i < n1; ++i) sa[i] = s1[sa[i]];
    std::fill(sa + n1, sa + n, EMPTY);
    fill_buckets(s, bkt, n, K, true);
    for (int64_t i = n1 - 1; i >= 0; --i) {
        int32_t j = sa[i];
        sa[i] = EMPTY;
        sa[--bkt[s[j]]] = j;
    }
    induce_l(t, sa, s, n, K, bkt);
    induce_s(t, sa, s, n, K, bkt);
}

} // namespace

std::vector<int32_t> build_suffix_array(std::span<const code_t> text) {
    const int64_t n = int64_t(text.size());
    if (n == 0) return {};

    // Shift codes up by one and append a unique 0 sentinel; dropping the
    // sentinel suffix afterwards yields the plain (non-cyclic) order.
    int32_t max_code = 0;
    std::vector<int32_t> shifted(n + 1);
    for (int64_t i = 0; i < n; ++i) {
        shifted[i] = int32_t(text[i]) + 1;
        max_code = std::max(max_code, shifted[i]);
    }
    shifted[n] = 0;

    std::vector<int32_t> sa(n + 1);
    sa_is(shifted.data(), sa.data(), n + 1, max_code + 1);
    assert(sa[0] == n);
    return {sa.begin() + 1, sa.end()};
}

std::vector<int32_t> build_lcp_array(std::span<const code_t> text,
                                     std::span<const int32_t> sa) {
    const int64_t n = int64_t(text.size());
    std::vector<int32_t> lcp(n > 0 ? n : 0, 0);
    if (n == 0) return lcp;

    std::vector<int32_t> rank(n);
    for (int64_t k = 0; k < n; ++k) rank[sa[k]] = int32_t(k);

    int64_t h = 0;
    for (int64_t i = 0; i < n; ++i) {
        if (rank[i] > 0) {
            int64_t j = sa[rank[i] - 1];
            while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
            lcp[rank[i]] = int32_t(h);
            if (h > 0) --h;
        } else {
            h = 0;
        }
    }
    return lcp;
}

} // namespace scs
