#pragma once

// Braid words and the Wirtinger presentation of their closures.
//
// Grammar: whitespace-separated tokens `s<k>` and `s<k>^-1`, k >= 1.
// The strand count is max k + 1.  The closure must be a knot (the braid
// permutation must be a single cycle).

#include <string>
#include <vector>

#include "l2alex/presentation.hpp"

namespace l2alex {

struct Braid {
    int strands = 2;
    std::vector<int> letters;  // +k for s_k, -k for s_k^-1 (1-based)
};

Braid parse_braid(const std::string& text);

/// Permutation of strand slots induced by the braid: slot i ends at perm[i].
std::vector<int> braid_permutation(const Braid& b);
int closure_component_count(const Braid& b);

/// Wirtinger presentation of the braid closure: one generator per arc, one
/// relator per crossing plus the closure identifications with one redundant
/// relator dropped, leaving deficiency one.  All generators are meridians.
GroupPresentation wirtinger_from_braid(const Braid& b);

} // namespace l2alex
