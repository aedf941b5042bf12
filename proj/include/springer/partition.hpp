#ifndef SPRINGER_PARTITION_HPP
#define SPRINGER_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "springer/bigint.hpp"
#include "springer/error.hpp"

namespace springer {

/// A weakly decreasing finite sequence of positive integers.
///
/// Construction from an arbitrary multiset of parts sorts it descending, so
/// `Partition{1, 3}` and `Partition{3, 1}` are the same value. Zero and
/// negative parts are rejected. The empty partition is the default value.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Build `size^count` blocks, e.g. from_blocks({{3,1},{1,2}}) = (3,1,1).
    struct Block {
        int size;
        int count;
    };
    static Partition from_blocks(std::span<const Block> blocks);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int weight() const noexcept { return weight_; }

    /// parts()[i] for i < length(), zero beyond.
    [[nodiscard]] int part(std::size_t i) const noexcept
    {
        return i < parts_.size() ? parts_[i] : 0;
    }

    [[nodiscard]] int multiplicity(int size) const noexcept;
    [[nodiscard]] int distinct_sizes() const noexcept;
    [[nodiscard]] bool is_two_regular() const noexcept;
    [[nodiscard]] bool all_even() const noexcept;
    [[nodiscard]] bool has_odd_part() const noexcept { return !all_even(); }

    /// Differences parts[i] - parts[i+1], with a trailing comparison against 0.
    [[nodiscard]] std::vector<int> gaps() const;

    /// "(3,1,1)"; the empty partition prints as "()".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Plain lexicographic order on the part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// True when `a` comes strictly before `b` in reverse-lexicographic order,
/// the canonical output order: (3) < (2,1) < (1,1,1).
[[nodiscard]] inline bool revlex_less(const Partition& a, const Partition& b)
{
    return a > b;
}

struct PartitionStats {
    int f = 0;  ///< number of distinct part sizes
    int g = 0;  ///< number of i with parts[i] - parts[i+1] == 2 (last part compared to 0)
    friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

/// All partitions of n in reverse-lexicographic order.
[[nodiscard]] std::vector<Partition> enumerate_partitions(int n);

/// All partitions of n with distinct parts, reverse-lexicographic.
[[nodiscard]] std::vector<Partition> enumerate_two_regular(int n);

[[nodiscard]] Partition transpose(const Partition& lambda);

[[nodiscard]] PartitionStats stats(const Partition& lambda);

/// Dominance order. Throws DomainError when the weights differ.
[[nodiscard]] bool dominates(const Partition& lambda, const Partition& mu);

// Counting functions, computed by dynamic programming over part sizes
// (independent of the enumerators above).
[[nodiscard]] BigInt count_p(int n);
[[nodiscard]] BigInt count_q(int n);
/// Partitions of l using exactly k distinct part sizes.
[[nodiscard]] BigInt count_plk(int l, int k);

/// Parse "3,1,1" (comma separated, descending, positive). The empty string
/// parses to the empty partition. Throws ParseError.
[[nodiscard]] Partition parse_partition(const std::string& text);

}  // namespace springer

#endif  // SPRINGER_PARTITION_HPP
