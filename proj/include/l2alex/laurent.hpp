#pragma once

// Integer Laurent polynomials, exact arithmetic.  Used for the classical
// Alexander polynomial cross-checks.

#include <optional>
#include <string>
#include <vector>

namespace l2alex {

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long coeff, int degree);
    static LaurentPoly constant(long long c) { return monomial(c, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    int lowest_degree() const { return low_; }
    int highest_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    int degree_span() const { return is_zero() ? 0 : highest_degree() - lowest_degree(); }
    long long coeff(int degree) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Exact quotient, or nullopt when the division leaves a remainder.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    /// Unit normalization: lowest degree shifted to 0, top coefficient > 0.
    LaurentPoly normalized() const;
    /// t -> 1/t.
    LaurentPoly reciprocal_substitution() const;

    double evaluate(double t) const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    int low_ = 0;
    std::vector<long long> coeffs_;  // coeffs_[d] is the coefficient of t^(low_+d)
};

/// Determinant by minor expansion with column-subset memoization; exact.
LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m);

} // namespace l2alex
