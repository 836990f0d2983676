#include "l2alex/twisted.hpp"

#include <algorithm>
#include <cmath>

#include "l2alex/errors.hpp"

namespace l2alex {

TwistedMatrix twist(const RingMatrix& f, double t, const AbelianizationMap& alpha,
                    std::shared_ptr<const NormalFormOracle> oracle) {
    if (t <= 0.0) throw numeric_error("twist parameter t must be positive");
    if (!oracle) throw validation_error("twist needs an oracle");
    TwistedMatrix out;
    out.t = t;
    out.oracle = std::move(oracle);
    out.m = RingMatrix(f.rows(), f.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            std::vector<GroupRingElement::Term> terms;
            terms.reserve(f.at(i, j).size());
            for (const auto& term : f.at(i, j).terms()) {
                const double scale = std::pow(t, static_cast<double>(alpha(term.first)));
                terms.push_back({out.oracle->normal_form(term.first), term.second * scale});
            }
            out.m.at(i, j) = GroupRingElement::from_terms(std::move(terms));
        }
    return out;
}

TwistedMatrix twisted_from_ring(RingMatrix m, double t,
                                std::shared_ptr<const NormalFormOracle> oracle) {
    if (t <= 0.0) throw numeric_error("twist parameter t must be positive");
    if (!oracle) throw validation_error("twisted matrix needs an oracle");
    m.normalize(*oracle);
    TwistedMatrix out;
    out.m = std::move(m);
    out.t = t;
    out.oracle = std::move(oracle);
    return out;
}

double vn_trace(const TwistedMatrix& m) {
    if (!m.m.square()) throw validation_error("trace of a non-square matrix");
    double s = 0.0;
    for (int i = 0; i < m.size(); ++i) {
        for (const auto& term : m.m.at(i, i).terms())
            if (m.oracle->is_identity(term.first)) s += term.second;
    }
    return s;
}

double norm_bound(const RingMatrix& m) {
    double maxRow = 0.0, maxCol = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < m.cols(); ++j) row += m.at(i, j).l1_norm();
        maxRow = std::max(maxRow, row);
    }
    for (int j = 0; j < m.cols(); ++j) {
        double col = 0.0;
        for (int i = 0; i < m.rows(); ++i) col += m.at(i, j).l1_norm();
        maxCol = std::max(maxCol, col);
    }
    return std::sqrt(maxRow * maxCol);
}

double norm_bound(const TwistedMatrix& m) { return norm_bound(m.m); }

TwistedMatrix adjoint(const TwistedMatrix& m) {
    TwistedMatrix out;
    out.t = m.t;
    out.oracle = m.oracle;
    out.m = m.m.adjoint_transpose();
    out.m.normalize(*out.oracle);
    return out;
}

TwistedMatrix mul(const TwistedMatrix& a, const TwistedMatrix& b, MulContext& ctx) {
    if (a.oracle.get() != b.oracle.get())
        throw validation_error("twisted product across different oracles");
    ctx.oracle = a.oracle.get();
    TwistedMatrix out;
    out.t = a.t;
    out.oracle = a.oracle;
    out.m = mul(a.m, b.m, ctx);
    return out;
}

double hs_norm_sq(const TwistedMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.m.rows(); ++i)
        for (int j = 0; j < m.m.cols(); ++j)
            for (const auto& term : m.m.at(i, j).terms()) s += term.second * term.second;
    return s;
}

double hs_inner(const TwistedMatrix& a, const TwistedMatrix& b) {
    if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols())
        throw validation_error("Hilbert-Schmidt pairing needs equal shapes");
    double s = 0.0;
    for (int i = 0; i < a.m.rows(); ++i)
        for (int j = 0; j < a.m.cols(); ++j) {
            const auto& x = a.m.at(i, j).terms();
            const auto& y = b.m.at(i, j).terms();
            auto ix = x.begin();
            auto iy = y.begin();
            while (ix != x.end() && iy != y.end()) {
                if (ix->first < iy->first) {
                    ++ix;
                } else if (iy->first < ix->first) {
                    ++iy;
                } else {
                    s += ix->second * iy->second;
                    ++ix;
                    ++iy;
                }
            }
        }
    return s;
}

} // namespace l2alex
