#include "l2alex/fox.hpp"

#include <cmath>
#include <numeric>

#include "l2alex/errors.hpp"

namespace l2alex {

GroupRingElement fox_derivative(const Word& w, int gen) {
    if (gen < 0) throw validation_error("negative generator index");
    std::vector<GroupRingElement::Term> terms;
    Word prefix;
    for (const Run& r : w.runs()) {
        if (r.gen == gen) {
            if (r.exp > 0) {
                for (int s = 0; s < r.exp; ++s)
                    terms.push_back({prefix * Word::generator(gen, s), 1.0});
            } else {
                for (int s = 1; s <= -r.exp; ++s)
                    terms.push_back({prefix * Word::generator(gen, -s), -1.0});
            }
        }
        prefix.append_run(r.gen, r.exp);
    }
    return GroupRingElement::from_terms(std::move(terms));
}

GroupRingElement fox_derivative(const GroupRingElement& x, int gen) {
    GroupRingElement d;
    for (const auto& t : x.terms()) d += t.second * fox_derivative(t.first, gen);
    return d;
}

GroupRingElement apply(const FreeAutomorphism& phi, const GroupRingElement& x) {
    std::vector<GroupRingElement::Term> terms;
    terms.reserve(x.size());
    for (const auto& t : x.terms()) terms.push_back({phi.apply(t.first), t.second});
    return GroupRingElement::from_terms(std::move(terms));
}

FoxMatrix fox_matrix(const GroupPresentation& p) {
    p.require_deficiency_one();
    FoxMatrix f;
    f.m = RingMatrix(p.generators, p.generators - 1);
    for (int j = 0; j < p.generators - 1; ++j)
        for (int i = 0; i < p.generators; ++i)
            f.m.at(i, j) = fox_derivative(p.relators[j], i);
    return f;
}

RingMatrix delete_row(const FoxMatrix& f, int row) {
    const int k = f.m.rows();
    if (row < 0 || row >= k) throw validation_error("row index out of range");
    RingMatrix m(k - 1, k - 1);
    for (int i = 0, r = 0; i < k; ++i) {
        if (i == row) continue;
        for (int j = 0; j + 1 < k; ++j) m.at(r, j) = f.m.at(i, j);
        ++r;
    }
    return m;
}

namespace {

using Int = __int128;

// Fraction-free Bareiss determinant of an integer matrix.
long long int_det(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Int det = sign * a[n - 1][n - 1];
    return static_cast<long long>(det);
}

} // namespace

AbelianizationMap abelianization(const GroupPresentation& p) {
    p.require_deficiency_one();
    const int k = p.generators;
    if (k == 1) return AbelianizationMap({1});

    std::vector<std::vector<long long>> rel(k - 1, std::vector<long long>(k, 0));
    for (int j = 0; j < k - 1; ++j)
        for (int i = 0; i < k; ++i) rel[j][i] = p.relators[j].exponent_sum(i);

    // Signed maximal minors give an integer kernel vector of the relator
    // matrix; their gcd is the torsion order of H1, so gcd 1 certifies H1 = Z
    // and primitivity of the map at the same time.
    std::vector<long long> v(k, 0);
    long long g = 0;
    for (int drop = 0; drop < k; ++drop) {
        std::vector<std::vector<long long>> minor(k - 1, std::vector<long long>(k - 1));
        for (int r = 0; r < k - 1; ++r)
            for (int c = 0, cc = 0; c < k; ++c) {
                if (c == drop) continue;
                minor[r][cc++] = rel[r][c];
            }
        long long d = int_det(minor);
        v[drop] = (drop % 2 == 0) ? d : -d;
        g = std::gcd(g, std::llabs(d));
    }
    if (g == 0)
        throw not_a_knot_error("relator matrix is rank deficient; H1 is not infinite cyclic");
    if (g != 1)
        throw not_a_knot_error("H1 has torsion of order " + std::to_string(g) +
                               "; not a knot group");
    int firstNonzero = 0;
    while (v[firstNonzero] == 0) ++firstNonzero;
    if (v[firstNonzero] < 0)
        for (auto& x : v) x = -x;

    AbelianizationMap alpha(std::move(v));
    for (const Word& r : p.relators)
        if (alpha(r) != 0) throw not_a_knot_error("abelianization does not kill a relator");
    return alpha;
}

MonodromyJacobian jacobian(const FreeAutomorphism& phi) {
    const int n = phi.rank();
    MonodromyJacobian jac;
    jac.W = RingMatrix(n, n);
    jac.Winv = RingMatrix(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            jac.W.at(r, c) = fox_derivative(phi.image(r), c);
            jac.Winv.at(r, c) = apply(phi, fox_derivative(phi.inverse_image(r), c));
        }
    if (!mul_free(jac.W, jac.Winv).is_identity() || !mul_free(jac.Winv, jac.W).is_identity())
        throw invalid_automorphism_error("jacobian product is not the identity matrix");
    return jac;
}

LaurentPoly laurent_image(const GroupRingElement& x, const AbelianizationMap& alpha) {
    LaurentPoly p;
    for (const auto& t : x.terms()) {
        double c = t.second;
        long long ci = std::llround(c);
        if (std::abs(c - static_cast<double>(ci)) > 1e-9)
            throw validation_error("non-integer coefficient in Laurent image");
        if (ci != 0) p += LaurentPoly::monomial(ci, static_cast<int>(alpha(t.first)));
    }
    return p;
}

LaurentPoly classical_alexander(const GroupPresentation& p) {
    p.require_deficiency_one();
    AbelianizationMap alpha = abelianization(p);

    int row = 0;
    while (row < p.generators && alpha.image(row) == 0) ++row;
    if (row == p.generators)
        throw not_a_knot_error("abelianization vanishes on all generators");

    FoxMatrix f = fox_matrix(p);
    RingMatrix m = delete_row(f, row);
    std::vector<std::vector<LaurentPoly>> lm(m.rows(), std::vector<LaurentPoly>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) lm[i][j] = laurent_image(m.at(i, j), alpha);

    LaurentPoly det = laurent_det(lm);
    if (det.is_zero())
        throw validation_error("deleted Fox matrix has vanishing determinant");

    // det = Delta(t) * (t^a - 1)/(t - 1) up to units, a = |alpha(deleted gen)|.
    const long long a = std::llabs(alpha.image(row));
    LaurentPoly divisor;
    for (long long s = 0; s < a; ++s) divisor += LaurentPoly::monomial(1, static_cast<int>(s));
    auto quotient = det.divide_exact(divisor);
    if (!quotient)
        throw validation_error("Alexander determinant is not divisible by the deleted-row factor");
    return quotient->normalized();
}

} // namespace l2alex
