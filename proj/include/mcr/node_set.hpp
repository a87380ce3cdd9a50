#ifndef MCR_NODE_SET_HPP_
#define MCR_NODE_SET_HPP_

#include <cstdint>
#include <vector>

namespace mcr {

using NodeIndex = std::uint32_t;

/// Compact node-index set over a dense universe [0, universe_size).
///
/// Two storage layouts: a fixed-width bit array for small universes (fast
/// intersection, which dominates lattice construction) and a sorted index
/// array for large ones (a bit array per stored core would not fit in memory
/// once |V| grows past tens of thousands).
class NodeSet {
public:
    enum class Layout { kAuto, kBits, kSorted };

    /// Universes up to this size use the bit-array layout under kAuto.
    static constexpr std::size_t kBitsLayoutMaxUniverse = 65536;

    NodeSet() = default;

    /// Builds from a strictly ascending index vector.
    NodeSet(std::vector<NodeIndex> sorted_members, std::size_t universe_size,
            Layout layout = Layout::kAuto);

    static NodeSet full(std::size_t universe_size, Layout layout = Layout::kAuto);
    static NodeSet intersection(const NodeSet& a, const NodeSet& b);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    std::size_t universe_size() const noexcept { return universe_; }
    bool uses_bits() const noexcept { return bits_layout_; }

    bool contains(NodeIndex v) const;

    /// Members in ascending order.
    std::vector<NodeIndex> to_vector() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        if (!bits_layout_) {
            for (NodeIndex v : sorted_) fn(v);
            return;
        }
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                fn(static_cast<NodeIndex>(w * 64 + static_cast<std::size_t>(bit)));
                word &= word - 1;
            }
        }
    }

    bool operator==(const NodeSet& other) const;

private:
    std::size_t universe_ = 0;
    std::size_t size_ = 0;
    bool bits_layout_ = true;
    std::vector<std::uint64_t> words_;   // bit layout
    std::vector<NodeIndex> sorted_;      // sorted layout
};

}  // namespace mcr

#endif  // MCR_NODE_SET_HPP_
