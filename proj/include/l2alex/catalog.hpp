#pragma once

// Catalog of the knots the detector and the numeric engine know about:
// trivial knot, torus knots T(p,q), the figure-eight knot 4_1, the twist
// knot 5_2 and K12n242.  Hyperbolic volumes are census constants; the
// figure-eight monodromy is stored as data and must pass a validation gate
// (classical Alexander polynomial and abelianized-jacobian spectrum) before
// it is handed out.

#include <optional>
#include <string>

#include "l2alex/automorphism.hpp"
#include "l2alex/presentation.hpp"

namespace l2alex {

/// Volume of the regular ideal tetrahedron.
inline constexpr double kIdealTetrahedronVolume = 1.0149416064096536;
/// Hyperbolic volume of the figure-eight knot exterior (two ideal regular
/// tetrahedra).
inline constexpr double kVolumeFigureEight = 2.0298832128193072;
/// Hyperbolic volume of the 5_2 exterior (census manifold m015); the
/// K12n242 exterior (m016) has the same volume.
inline constexpr double kVolumeFiveTwo = 2.8281220883307827;
/// Dilatation of the figure-eight monodromy, (3 + sqrt 5)/2.
inline constexpr double kFigureEightDilatation = 2.618033988749895;

struct CatalogEntry {
    std::string name;
    int genus = 0;
    double volume = 0.0;
    bool fibered = false;
    double exp_vol_over_6pi = 1.0;
    std::optional<double> leading_C;
    std::optional<FreeAutomorphism> monodromy;
    /// Certified monomiality bound for fibered entries (dilatation when
    /// known, otherwise absent).
    std::optional<double> dilatation;
    std::string notes;
};

/// Accepts "unknot", "3_1", "4_1", "5_2", "K12n242" and "T(p,q)".
CatalogEntry catalog(const std::string& name);
bool catalog_has(const std::string& name);

/// Presentation suitable for numeric or symbolic work: unknot (cyclic
/// oracle), torus knots (no oracle) and 4_1 (fibered, free-by-cyclic
/// oracle).  Throws for entries without a stored presentation.
GroupPresentation catalog_presentation(const std::string& name);

/// The stored figure-eight monodromy after its validation gate.
const FreeAutomorphism& figure_eight_monodromy();

double exp_vol_over_6pi(double volume);

} // namespace l2alex
