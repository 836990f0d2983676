#pragma once

// Fuglede-Kadison determinant approximation and the invariant evaluation
// delta_at.
//
// For a twisted square matrix M the epsilon-regularized determinant is
//   det_eps(M) = exp( (1/2) tr ln(M* M + eps Id) ).
// With H = M* M + eps Id and a certified bound c >= |H| (Schur test, with
// a 1.01 safety factor), K = Id - H/c is positive with spectrum in [0, 1)
// and
//   tr ln H = m ln c - sum_{n>=1} tr(K^n)/n .
// Truncating after N terms therefore yields a DECREASING sequence of upper
// bounds, since every tr(K^n) is nonnegative.  Powers are symbolic matrix
// products over the group ring, with words merged through the oracle normal
// form and coefficients below the pruning threshold dropped (their l1 mass
// is accounted).  Traces to depth N only need powers to depth N/2 + 1:
//   tr(K^{2m})   = |K^m|_HS^2
//   tr(K^{2m+1}) = <K^m, K^{m+1}>_HS ,
// which are exact identities for self-adjoint K.

#include <functional>
#include <vector>

#include "l2alex/automorphism.hpp"
#include "l2alex/presentation.hpp"
#include "l2alex/twisted.hpp"

namespace l2alex {

struct DetApproxResult {
    double estimate = 0.0;                   // last partial estimate
    std::vector<double> partial_estimates;   // after each series order
    double epsilon = 0.0;
    int terms = 0;
    double pruned_mass_bound = 0.0;          // accumulated dropped l1 mass
    double norm_bound_used = 0.0;            // the certified c
    bool converged = false;
};

struct FkOptions {
    double conv_tol = 1e-8;   // relative change defining the converged flag
    bool parallel = true;
    std::function<void(int order, std::size_t max_support)> progress;
};

DetApproxResult fk_det(const TwistedMatrix& m, double epsilon, int n_terms, double prune,
                       const FkOptions& opts = {});

/// Lagrange extrapolation of (epsilon, estimate) samples to epsilon = 0.
double extrapolate_to_zero(const std::vector<std::pair<double, double>>& samples);

struct DeltaParams {
    std::vector<double> eps_ladder{1e-1, 1e-2, 1e-3};
    int n_terms = 32;
    double prune = 1e-12;
    double conv_tol = 1e-8;
    bool parallel = true;
};

struct DeltaResult {
    double t = 1.0;
    double value = 0.0;                    // ladder extrapolation, normalized
    std::vector<DetApproxResult> ladder;   // one entry per epsilon, reported
    int norm_exponent = 0;                 // |alpha(g_1)| - 1
};

/// The invariant evaluation at one twist parameter: Fuglede-Kadison
/// determinant of the twisted deleted Fox matrix divided by
/// max(1,t)^{|alpha(g_1)| - 1}.  One representative of the monomial class.
DeltaResult delta_at(const GroupPresentation& p, double t, const DeltaParams& params = {});

/// Certified upper bound on min(|A|, |A^{-1}|) for the twisted monodromy
/// jacobian; any t below the reciprocal or above the bound is certified
/// monomial territory.
double monomiality_bound(const FreeAutomorphism& phi, double t);

} // namespace l2alex
