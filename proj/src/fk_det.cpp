#include "l2alex/fk_det.hpp"

#include <algorithm>
#include <cmath>

#include "l2alex/errors.hpp"

namespace l2alex {

DetApproxResult fk_det(const TwistedMatrix& m, double epsilon, int n_terms, double prune,
                       const FkOptions& opts) {
    if (epsilon <= 0.0) throw numeric_error("epsilon must be positive");
    if (n_terms < 1) throw numeric_error("series needs at least one term");
    if (prune < 0.0) throw numeric_error("pruning threshold must be nonnegative");
    if (!m.m.square()) throw validation_error("determinant of a non-square matrix");

    const int dim = m.size();
    DetApproxResult res;
    res.epsilon = epsilon;
    res.terms = n_terms;

    MulContext ctx;
    ctx.oracle = m.oracle.get();
    ctx.prune = prune;
    ctx.parallel = opts.parallel;

    TwistedMatrix h = mul(adjoint(m), m, ctx);
    h.m.add_scalar_diagonal(epsilon);

    const double c = norm_bound(h) * 1.01;
    res.norm_bound_used = c;

    // K = Id - H/c, positive with spectrum in [0, 1).
    TwistedMatrix k = h;
    k.m *= (-1.0 / c);
    k.m.add_scalar_diagonal(1.0);

    // Traces via half-depth powers; see header.
    std::vector<double> traces(n_terms + 1, 0.0);
    traces[1] = vn_trace(k);
    if (2 <= n_terms) traces[2] = hs_norm_sq(k);

    TwistedMatrix power = k;       // K^mu
    int mu = 1;
    while (2 * mu < n_terms) {
        TwistedMatrix next = mul(power, k, ctx);  // K^{mu+1}
        if (2 * mu + 1 <= n_terms) traces[2 * mu + 1] = hs_inner(power, next);
        if (2 * mu + 2 <= n_terms) traces[2 * mu + 2] = hs_norm_sq(next);
        power = std::move(next);
        ++mu;
        if (opts.progress) opts.progress(2 * mu, power.m.max_support());
    }

    res.partial_estimates.reserve(n_terms);
    double seriesSum = 0.0;
    for (int n = 1; n <= n_terms; ++n) {
        seriesSum += traces[n] / n;
        const double logDet = 0.5 * (dim * std::log(c) - seriesSum);
        res.partial_estimates.push_back(std::exp(logDet));
    }
    res.estimate = res.partial_estimates.back();
    res.pruned_mass_bound = ctx.pruned_mass;
    if (!std::isfinite(res.estimate)) throw numeric_error("determinant estimate is not finite");
    if (res.partial_estimates.size() >= 2) {
        const double last = res.partial_estimates[res.partial_estimates.size() - 1];
        const double prev = res.partial_estimates[res.partial_estimates.size() - 2];
        res.converged = std::abs(last - prev) <= opts.conv_tol * std::abs(last);
    }
    return res;
}

double extrapolate_to_zero(const std::vector<std::pair<double, double>>& samples) {
    if (samples.empty()) throw numeric_error("nothing to extrapolate");
    if (samples.size() == 1) return samples[0].second;
    double value = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double weight = 1.0;
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            weight *= samples[j].first / (samples[j].first - samples[i].first);
        }
        value += weight * samples[i].second;
    }
    return value;
}

DeltaResult delta_at(const GroupPresentation& p, double t, const DeltaParams& params) {
    if (t <= 0.0) throw numeric_error("twist parameter t must be positive");
    p.require_deficiency_one();
    if (!p.oracle)
        throw unsupported_oracle_error("presentation has no word-problem oracle; "
                                       "numeric evaluation is unsupported");
    if (params.eps_ladder.empty()) throw numeric_error("empty epsilon ladder");

    const AbelianizationMap alpha = abelianization(p);
    const RingMatrix deleted = delete_row(fox_matrix(p), 0);
    const TwistedMatrix twisted = twist(deleted, t, alpha, p.oracle);

    DeltaResult out;
    out.t = t;
    out.norm_exponent = static_cast<int>(std::llabs(alpha.image(0))) - 1;

    FkOptions fkOpts;
    fkOpts.conv_tol = params.conv_tol;
    fkOpts.parallel = params.parallel;

    std::vector<std::pair<double, double>> samples;
    for (double eps : params.eps_ladder) {
        DetApproxResult r = fk_det(twisted, eps, params.n_terms, params.prune, fkOpts);
        samples.push_back({eps, r.estimate});
        out.ladder.push_back(std::move(r));
    }
    const double norm = std::pow(std::max(1.0, t), static_cast<double>(out.norm_exponent));
    out.value = extrapolate_to_zero(samples) / norm;
    return out;
}

double monomiality_bound(const FreeAutomorphism& phi, double t) {
    MonodromyJacobian jac = jacobian(phi);
    // Fiber words all have abelianization zero, so the twist leaves the
    // jacobian untouched; alpha is (1, 0, ..., 0) on (z, fibers).
    std::vector<long long> weights(phi.rank(), 0);
    AbelianizationMap alpha(weights);
    auto oracle = std::make_shared<NormalFormOracle>(NormalFormOracle::trivial(phi.rank()));
    TwistedMatrix a = twist(jac.W, t, alpha, oracle);
    TwistedMatrix ainv = twist(jac.Winv, t, alpha, oracle);
    return std::min(norm_bound(a), norm_bound(ainv));
}

} // namespace l2alex
