#pragma once

#include <vector>

namespace ecg {

/// Enumeration bound for existence searches. EULER_CG_BOUND, when set to a
/// positive integer, overrides `requested`.
int search_bound(int requested);

/// Integer vectors of length `len` with max-norm exactly `norm`, in a fixed
/// order (entries ranked 0, 1, -1, 2, -2, ...).
std::vector<std::vector<int>> vectors_of_norm(int len, int norm);

/// All vectors with max-norm <= bound, ordered by norm then rank.
std::vector<std::vector<int>> vectors_up_to(int len, int bound);

}  // namespace ecg
