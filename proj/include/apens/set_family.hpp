#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apens/exact.hpp"

namespace apens {

// 2^20 terms is the ceiling for the subset-sum expansion.
inline constexpr std::size_t kMaxInclusionExclusionSets = 20;

// Ordered family of finite sets of non-negative element IDs. Members are
// stored sorted and deduplicated; the family itself may repeat sets.
class SetFamily {
public:
    explicit SetFamily(std::vector<std::vector<std::uint64_t>> sets);

    std::size_t size() const { return sets_.size(); }
    const std::vector<std::uint64_t>& set_at(std::size_t i) const { return sets_.at(i); }
    const std::vector<std::vector<std::uint64_t>>& sets() const { return sets_; }

    // Fixture format: top-level JSON array of arrays of non-negative integers.
    static SetFamily from_json_text(const std::string& text);
    static SetFamily load_json_file(const std::string& path);

private:
    std::vector<std::vector<std::uint64_t>> sets_;
};

/// |A_1 u ... u A_m| by materializing the union.
ExactCount union_cardinality_direct(const SetFamily& family);

struct InclusionExclusionResult {
    ExactCount count;
    ExactCount terms_evaluated;  // always 2^m - 1
};

/// Subset-sum expansion with alternating signs over all 2^m - 1 nonempty
/// subsets. m <= 20.
InclusionExclusionResult union_cardinality_inclusion_exclusion(const SetFamily& family);

/// Induction split: B = A_1 u ... u A_{m-1}, |B u A_m| = |B| + |A_m| - |B n A_m|,
/// recursing on the pairwise-intersection family {A_i n A_m}. m <= 20.
ExactCount union_cardinality_recursive(const SetFamily& family);

}  // namespace apens
