#pragma once

#include <compare>
#include <vector>

namespace autosieve::core {

/// Integer partition: a weakly decreasing list of positive parts.  The empty
/// partition is valid and has size 0 and length 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;

    // Zero-padded access: part(i) == 0 for i >= length().
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    static Partition single_row(int k);

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part lists, so descending order in enumeration
    // output means (4) < (3,1) is false: (4) sorts before (3,1) when reversed.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// All partitions of k with at most max_length parts, in lexicographically
/// descending order: (4), (3,1), (2,2) for k = 4, max_length = 2.
/// k = 0 yields the singleton list holding the empty partition.
std::vector<Partition> partitions_of(int k, int max_length);

}  // namespace autosieve::core
