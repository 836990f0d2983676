#include "l2alex/presentation.hpp"

#include "l2alex/errors.hpp"

namespace l2alex {

void GroupPresentation::require_deficiency_one() const {
    if (!deficiency_one())
        throw deficiency_error("presentation has " + std::to_string(relators.size()) +
                               " relators on " + std::to_string(generators) +
                               " generators; deficiency one requires " +
                               std::to_string(generators - 1));
}

GroupPresentation unknot_presentation() {
    GroupPresentation p;
    p.generators = 2;
    p.names = {"g", "h"};
    p.relators = {Word::generator(0) * Word::generator(1, -1)};
    p.oracle = std::make_shared<NormalFormOracle>(NormalFormOracle::cyclic({1, 1}));
    return p;
}

GroupPresentation torus_presentation(int p, int q) {
    GroupPresentation pr;
    pr.generators = 2;
    pr.names = {"x", "y"};
    pr.relators = {Word::generator(0, p) * Word::generator(1, -q)};
    return pr;
}

GroupPresentation fibered_presentation(int genus, const FreeAutomorphism& phi) {
    if (genus < 1)
        throw validation_error("fiber genus must be at least 1; the trivial knot is handled "
                               "by its own presentation");
    if (phi.rank() != 2 * genus)
        throw invalid_automorphism_error("monodromy rank " + std::to_string(phi.rank()) +
                                         " does not match genus " + std::to_string(genus));
    GroupPresentation p;
    p.generators = 2 * genus + 1;
    p.names.push_back("z");
    for (int i = 1; i <= 2 * genus; ++i) p.names.push_back("a" + std::to_string(i));
    for (int i = 0; i < 2 * genus; ++i) {
        // z a_i z^{-1} phi(a_i)^{-1}; fiber generators sit at indices 1..2g.
        Word r = Word::generator(0);
        r.append(Word::generator(i + 1));
        r.append(Word::generator(0, -1));
        r.append(phi.image(i).shifted(1).inverse());
        p.relators.push_back(std::move(r));
    }
    p.oracle = std::make_shared<NormalFormOracle>(NormalFormOracle::free_by_cyclic(phi));
    return p;
}

} // namespace l2alex
