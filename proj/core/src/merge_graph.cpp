#include "scs/merge_graph.hpp"

#include <cassert>
#include <ostream>

namespace scs {

merge_state::merge_state(int64_t m)
    : m_(m),
      leftavail_(m + 1, true),
      rightavail_(m + 1, true),
      leftend_(m + 1),
      rightend_(m + 1),
      successor_(m + 1, 0),
      overlaplength_(m + 1, 0),
      uf_(m) {
    for (int64_t k = 0; k <= m; ++k) {
        leftend_[k] = int32_t(k);
        rightend_[k] = int32_t(k);
    }
}

int64_t merge_state::next_one(int64_t k) {
    assert(k >= 0 && k <= m_);
    return uf_.next_one(k);
}

void merge_state::clear_right_available(int64_t k) {
    if (k < 1 || k > m_ || !rightavail_.get(k))
        throw contract_error("clear_right_available: position not set");
    rightavail_.clear(k);
    uf_.on_clear(k, k + 1 <= m_ && !rightavail_.get(k + 1));
}

std::optional<merge_edge> merge_state::try_merge(int64_t i, id_interval ids, int64_t d,
                                                 bool* cycle_rejected) {
    if (cycle_rejected) *cycle_rejected = false;
    if (i < 1 || i > m_ || !leftavail_.get(i))
        throw contract_error("try_merge: left side not available");
    if (ids.empty()) return std::nullopt;
    assert(ids.lo >= 1 && ids.hi <= m_);

    int64_t j = uf_.next_one(ids.lo - 1);
    if (j > ids.hi) return std::nullopt;
    // Chains make the two cycle tests equivalent; check both in debug.
    assert((rightend_[j] == i) == (leftend_[i] == j));
    if (rightend_[j] == i) {
        if (cycle_rejected) *cycle_rejected = true;
        j = uf_.next_one(j);
        if (j > ids.hi) return std::nullopt;
        assert(rightend_[j] != i && leftend_[i] != j);
    }

    successor_[i] = int32_t(j);
    overlaplength_[i] = int32_t(d);
    leftavail_.clear(i);
    clear_right_available(j);
    const int32_t chain_left = leftend_[i];
    const int32_t chain_right = rightend_[j];
    leftend_[chain_right] = chain_left;
    rightend_[chain_left] = chain_right;

    edges_.push_back({i, j, d});
    return edges_.back();
}

void merge_state::dump(std::ostream& out) const {
    out << "k\tleftavail\trightavail\tleftend\trightend\tsuccessor\toverlap\n";
    for (int64_t k = 1; k <= m_; ++k) {
        out << k << '\t' << int(leftavail_.get(k)) << '\t' << int(rightavail_.get(k))
            << '\t' << leftend_[k] << '\t' << rightend_[k] << '\t' << successor_[k]
            << '\t' << overlaplength_[k] << '\n';
    }
}

int64_t merge_state::size_bits() const {
    return leftavail_.size_bits() + rightavail_.size_bits() +
           32 * int64_t(leftend_.size() + rightend_.size() + successor_.size() +
                        overlaplength_.size()) +
           192 * int64_t(edges_.size()) + uf_.size_bits();
}

} // namespace scs
