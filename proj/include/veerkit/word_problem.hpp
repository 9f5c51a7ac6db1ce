#pragma once

#include <vector>

#include "veerkit/braid.hpp"

namespace veerkit {

/// Dehornoy handle reduction.
///
/// A sigma_i-handle is a factor sigma_i^e v sigma_i^-e whose interior v only
/// uses generators of index > i. Reducing it deletes the two ends and
/// rewrites each sigma_{i+1}^d inside v as sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.
/// The loop always reduces the handle that ends first, which contains no
/// other handle, so the process terminates. The result has no handles: it
/// is empty, or its lowest generator occurs with a single sign (and the
/// braid is then nontrivial).
std::vector<int> handle_reduce(std::vector<int> word);

/// Complete decision procedure for the braid word problem.
bool is_trivial_braid(const BraidWord &w);

/// Same strand count required.
bool braid_equal(const BraidWord &lhs, const BraidWord &rhs);

} // namespace veerkit
