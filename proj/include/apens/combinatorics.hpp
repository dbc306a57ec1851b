#pragma once

#include <vector>

#include "apens/exact.hpp"

namespace apens {

// Closed-form counting paths accept m up to this cap. 500! is ~1135 decimal
// digits; beyond that the tables stop being desk-scale.
inline constexpr unsigned kMaxClosedFormM = 500;

// Exhaustive permutation enumeration stays under 8! = 40320.
inline constexpr unsigned kMaxBruteForceM = 8;

/// m! for m <= 500.
ExactCount factorial(unsigned m);

/// m! / (k! (m-k)!) for k <= m <= 500.
ExactCount binomial(unsigned m, unsigned k);

/// Number of summands in the m-set inclusion-exclusion expansion: 2^m - 1.
ExactCount inclusion_exclusion_term_count(unsigned m);

/// Permutations of m elements that keep k designated positions fixed: (m-k)!.
ExactCount count_permutations_fixing(unsigned m, unsigned k);

/// N_m: permutations of m elements with at least one fixed point, via the
/// alternating sum m!/1! - m!/2! + ... + (-1)^(m+1).
ExactCount fixed_point_permutation_count(unsigned m);

/// D_m by the recurrence D_m = (m-1)(D_{m-1} + D_{m-2}), D_0 = 1, D_1 = 0.
/// Independent of the alternating-sum route; N_m + D_m must equal m!.
ExactCount derangement_count(unsigned m);

/// N_m by exhaustive enumeration of all m! permutations. m <= 8.
ExactCount brute_force_fixed_point_count(unsigned m);

/// N_m / m! evaluated as an exact rational, converted to double last.
double fixed_point_share(unsigned m);

/// Alternating partial sum 1/1! - 1/2! + ... + (-1)^(m+1)/m!, exact rationals.
/// Same rational as fixed_point_share(m), evaluated the other way.
double partial_sum_S(unsigned m);

/// The limit of the shares: 1 - e^-1 = 0.632120558...
double mu();

// One row of the convergence table. share and the error columns are doubles;
// the underlying counts stay exact. series_bound = 1/(m+1)! underflows to 0
// for m beyond ~170, where abs_error itself sits at double resolution.
struct ConvergenceRow {
    unsigned m = 0;
    ExactCount factorial_m;
    ExactCount n_fixed;
    double share = 0.0;
    double abs_error = 0.0;
    double series_bound = 0.0;
};

/// Rows for m = 1..max_m, max_m <= 500.
std::vector<ConvergenceRow> convergence_table(unsigned max_m);

}  // namespace apens
