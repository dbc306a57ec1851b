#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace apens {

using Label = std::string;

// Full-ensemble generation is bounded by n! blowup.
inline constexpr std::size_t kMaxEnsembleN = 8;

// Ordered sequence of pairwise-distinct element labels.
struct BasePattern {
    std::vector<Label> elements;
};

/// Validates distinctness and non-emptiness.
BasePattern make_base_pattern(std::vector<Label> labels);

/// a1, a2, ..., an.
std::vector<Label> default_labels(std::size_t n);

// One permutation of the base. fixed_positions is the sorted set of indices
// where the member agrees with its base.
struct PermutationPattern {
    std::vector<Label> elements;
    std::vector<std::size_t> fixed_positions;
};

struct Ensemble {
    BasePattern base;
    std::vector<PermutationPattern> members;  // all n!, lexicographic by base-element index
    std::size_t chi = 0;                      // members with at least one fixed position
};

/// All n! permutations of the base in lexicographic index order, n <= 8.
Ensemble generate_ensemble(const BasePattern& base);

/// Indices where member and base agree. Rejects length mismatch.
std::vector<std::size_t> fixed_positions(const PermutationPattern& member, const BasePattern& base);

struct Classification {
    std::vector<PermutationPattern> fixed_members;
    std::vector<PermutationPattern> derangements;
};

/// Partition of the members by fixed_positions nonempty/empty, order kept.
Classification classify(const Ensemble& ensemble);

/// Positions where a and b agree: n minus their Hamming distance.
std::size_t pairwise_agreement(const PermutationPattern& a, const PermutationPattern& b);

}  // namespace apens
