#include "mcr/node_set.hpp"

#include <algorithm>
#include <cassert>

namespace mcr {

namespace {

bool pick_bits_layout(std::size_t universe, NodeSet::Layout layout) {
    if (layout == NodeSet::Layout::kBits) return true;
    if (layout == NodeSet::Layout::kSorted) return false;
    return universe <= NodeSet::kBitsLayoutMaxUniverse;
}

}  // namespace

NodeSet::NodeSet(std::vector<NodeIndex> sorted_members, std::size_t universe_size, Layout layout)
    : universe_(universe_size),
      size_(sorted_members.size()),
      bits_layout_(pick_bits_layout(universe_size, layout)) {
    assert(std::is_sorted(sorted_members.begin(), sorted_members.end()));
    if (bits_layout_) {
        words_.assign((universe_ + 63) / 64, 0);
        for (NodeIndex v : sorted_members) {
            assert(v < universe_);
            words_[v / 64] |= std::uint64_t{1} << (v % 64);
        }
    } else {
        sorted_ = std::move(sorted_members);
    }
}

NodeSet NodeSet::full(std::size_t universe_size, Layout layout) {
    std::vector<NodeIndex> all(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i) all[i] = static_cast<NodeIndex>(i);
    return NodeSet(std::move(all), universe_size, layout);
}

NodeSet NodeSet::intersection(const NodeSet& a, const NodeSet& b) {
    assert(a.universe_ == b.universe_);
    NodeSet out;
    out.universe_ = a.universe_;
    if (a.bits_layout_ && b.bits_layout_) {
        out.bits_layout_ = true;
        out.words_.resize(a.words_.size());
        std::size_t count = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            out.words_[w] = a.words_[w] & b.words_[w];
            count += static_cast<std::size_t>(__builtin_popcountll(out.words_[w]));
        }
        out.size_ = count;
        return out;
    }
    // Mixed or sorted layouts: merge over the sorted views.
    const std::vector<NodeIndex> av = a.to_vector();
    const std::vector<NodeIndex> bv = b.to_vector();
    std::vector<NodeIndex> merged;
    merged.reserve(std::min(av.size(), bv.size()));
    std::set_intersection(av.begin(), av.end(), bv.begin(), bv.end(), std::back_inserter(merged));
    return NodeSet(std::move(merged), a.universe_, Layout::kSorted);
}

bool NodeSet::contains(NodeIndex v) const {
    if (v >= universe_) return false;
    if (bits_layout_) return (words_[v / 64] >> (v % 64)) & 1u;
    return std::binary_search(sorted_.begin(), sorted_.end(), v);
}

std::vector<NodeIndex> NodeSet::to_vector() const {
    if (!bits_layout_) return sorted_;
    std::vector<NodeIndex> out;
    out.reserve(size_);
    for_each([&](NodeIndex v) { out.push_back(v); });
    return out;
}

bool NodeSet::operator==(const NodeSet& other) const {
    if (universe_ != other.universe_ || size_ != other.size_) return false;
    if (bits_layout_ && other.bits_layout_) return words_ == other.words_;
    return to_vector() == other.to_vector();
}

}  // namespace mcr
