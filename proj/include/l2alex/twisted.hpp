#pragma once

// Twisted matrices: group-ring matrices after the abelianization twist
// (each coefficient of a word g scaled by t^{alpha(g)}), with every entry
// word kept in oracle normal form.  The twist is a ring homomorphism, so
// products of twisted matrices stay correctly twisted.

#include <memory>

#include "l2alex/fox.hpp"
#include "l2alex/oracle.hpp"
#include "l2alex/ring_matrix.hpp"

namespace l2alex {

struct TwistedMatrix {
    RingMatrix m;
    double t = 1.0;
    std::shared_ptr<const NormalFormOracle> oracle;

    int size() const { return m.rows(); }
};

/// Applies psi_t: coefficient of each word w is multiplied by t^{alpha(w)};
/// entry words are then rewritten to oracle normal form.
TwistedMatrix twist(const RingMatrix& f, double t, const AbelianizationMap& alpha,
                    std::shared_ptr<const NormalFormOracle> oracle);

/// Wraps an untwisted matrix (entries normalized in place); used by tests
/// and the scalar/block determinant paths.
TwistedMatrix twisted_from_ring(RingMatrix m, double t,
                                std::shared_ptr<const NormalFormOracle> oracle);

/// von Neumann trace: sum over the diagonal of the identity-word
/// coefficients (the oracle decides identity).
double vn_trace(const TwistedMatrix& m);

/// Certified operator-norm upper bound via the Schur test on entry l1
/// norms: sqrt(max_i sum_j |M_ij|_1 * max_j sum_i |M_ij|_1).
double norm_bound(const TwistedMatrix& m);
double norm_bound(const RingMatrix& m);

TwistedMatrix adjoint(const TwistedMatrix& m);

TwistedMatrix mul(const TwistedMatrix& a, const TwistedMatrix& b, MulContext& ctx);

/// Hilbert-Schmidt norm squared, sum of squared coefficients over all
/// entries; equals vn_trace(M* M) exactly.
double hs_norm_sq(const TwistedMatrix& m);
/// Hilbert-Schmidt pairing tr(A* B) for matrices with real coefficients.
double hs_inner(const TwistedMatrix& a, const TwistedMatrix& b);

} // namespace l2alex
