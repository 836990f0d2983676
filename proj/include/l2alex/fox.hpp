#pragma once

// Fox calculus: free derivatives, Fox matrices of presentations,
// abelianization maps, monodromy jacobians and the classical Alexander
// polynomial cross-check.
//
// Derivative rules, for u, v free words and generators g_i, g_j:
//   d(1) = 0,  d(g_j)/d(g_i) = delta_ij,  d(g_j^{-1})/d(g_i) = -delta_ij g_j^{-1},
//   d(uv)/d(g_i) = d(u)/d(g_i) + u d(v)/d(g_i).

#include <vector>

#include "l2alex/automorphism.hpp"
#include "l2alex/group_ring.hpp"
#include "l2alex/laurent.hpp"
#include "l2alex/presentation.hpp"
#include "l2alex/ring_matrix.hpp"

namespace l2alex {

GroupRingElement fox_derivative(const Word& w, int gen);
/// Linear extension to group-ring elements.
GroupRingElement fox_derivative(const GroupRingElement& x, int gen);

/// Applies an automorphism to every word of a ring element.
GroupRingElement apply(const FreeAutomorphism& phi, const GroupRingElement& x);

/// k x (k-1) matrix with entry (i, j) = d r_j / d g_i, kept over the free
/// group; quotient relations are applied later through the oracles.
struct FoxMatrix {
    RingMatrix m;
};

FoxMatrix fox_matrix(const GroupPresentation& p);
/// Deletes row `row` (0-based), leaving a (k-1) x (k-1) matrix.
RingMatrix delete_row(const FoxMatrix& f, int row);

class AbelianizationMap {
public:
    AbelianizationMap() = default;
    explicit AbelianizationMap(std::vector<long long> exponents)
        : exponents_(std::move(exponents)) {}

    long long operator()(const Word& w) const { return w.weighted_exponent_sum(exponents_); }
    long long image(int gen) const { return exponents_.at(gen); }
    const std::vector<long long>& exponents() const { return exponents_; }
    int generator_count() const { return static_cast<int>(exponents_.size()); }

private:
    std::vector<long long> exponents_;
};

/// The surjection onto Z computed from the abelianized relator matrix by
/// integer linear algebra (signed maximal minors).  Requires H1 = Z; the
/// sign is fixed so the first generator with nonzero image maps positively.
AbelianizationMap abelianization(const GroupPresentation& p);

/// Jacobian of a free-group automorphism in row-gradient layout: row r is
/// the Fox gradient of phi(a_r), so W * Winv = Winv * W = Id holds as a
/// plain symbolic matrix product.  Winv comes from the inverse automorphism
/// through the chain rule (row r is phi applied to the gradient of
/// phi^{-1}(a_r)); the constructor verifies both products.
struct MonodromyJacobian {
    RingMatrix W;
    RingMatrix Winv;
};

MonodromyJacobian jacobian(const FreeAutomorphism& phi);

/// Integer Laurent image of a ring element under g -> t^{alpha(g)}.
/// Coefficients must be (numerically) integers.
LaurentPoly laurent_image(const GroupRingElement& x, const AbelianizationMap& alpha);

/// Classical Alexander polynomial from the deleted Fox matrix, normalized
/// to lowest degree 0 and positive top coefficient.  The first row whose
/// generator has nonzero abelianization is deleted and the cyclotomic-like
/// factor (t^{|alpha(g)|} - 1)/(t - 1) is divided out exactly.
LaurentPoly classical_alexander(const GroupPresentation& p);

} // namespace l2alex
