#pragma once

// Deficiency-one group presentations, optionally paired with a word-problem
// oracle for the presented group.

#include <memory>
#include <string>
#include <vector>

#include "l2alex/automorphism.hpp"
#include "l2alex/oracle.hpp"
#include "l2alex/word.hpp"

namespace l2alex {

struct GroupPresentation {
    int generators = 0;
    std::vector<Word> relators;
    std::vector<std::string> names;
    std::shared_ptr<const NormalFormOracle> oracle;

    bool deficiency_one() const {
        return static_cast<int>(relators.size()) == generators - 1;
    }
    void require_deficiency_one() const;
};

/// <g, h | g h^{-1}>, the doubly twisted band diagram of the trivial knot;
/// the quotient is Z, decided by the cyclic oracle with weights (1, 1).
GroupPresentation unknot_presentation();

/// <x, y | x^p y^{-q}> for the (p,q) torus knot (no oracle attached).
GroupPresentation torus_presentation(int p, int q);

/// Fibered knot presentation <z, a_1..a_2g | z a_i z^{-1} = phi(a_i)>,
/// generators ordered (z, a_1, ..., a_2g), with the free-by-cyclic oracle.
GroupPresentation fibered_presentation(int genus, const FreeAutomorphism& phi);

} // namespace l2alex
