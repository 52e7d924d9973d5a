#include "autosieve/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace autosieve::core {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::single_row(int k) {
    if (k < 0) throw std::invalid_argument("Partition::single_row: negative size");
    if (k == 0) return Partition{};
    return Partition{{k}};
}

namespace {

void emit_partitions(int remaining, int max_part, int slots_left,
                     std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (slots_left == 0) return;
    // Largest first part gives lexicographically descending output.
    int hi = std::min(remaining, max_part);
    // remaining must fit in slots_left parts of size <= p, so p >= ceil(remaining/slots_left)
    int lo = (remaining + slots_left - 1) / slots_left;
    for (int p = hi; p >= lo; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, slots_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int max_length) {
    if (k < 0 || max_length < 0)
        throw std::invalid_argument("partitions_of: arguments must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(k, k, max_length, prefix, out);
    return out;
}

}  // namespace autosieve::core
