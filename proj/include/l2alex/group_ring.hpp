#pragma once

// Finite formal real-coefficient sums of free-group words.
//
// Terms are kept sorted by word with nonzero coefficients, so equality,
// iteration order and accumulated floating-point sums are deterministic.

#include <string>
#include <utility>
#include <vector>

#include "l2alex/word.hpp"

namespace l2alex {

class GroupRingElement {
public:
    using Term = std::pair<Word, double>;

    GroupRingElement() = default;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return term(Word{}, 1.0); }
    static GroupRingElement term(Word w, double c);
    /// Sorts, merges duplicate words and drops zero coefficients.
    static GroupRingElement from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    double coeff(const Word& w) const;
    double identity_coeff() const;
    double l1_norm() const;
    int max_generator() const;

    /// Term-wise c*w -> c*w^{-1} (coefficients are real).
    GroupRingElement adjoint() const;

    GroupRingElement& operator+=(const GroupRingElement& rhs);
    GroupRingElement& operator-=(const GroupRingElement& rhs);
    GroupRingElement& operator*=(double s);

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        a += b;
        return a;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        a -= b;
        return a;
    }
    friend GroupRingElement operator-(const GroupRingElement& a);
    friend GroupRingElement operator*(GroupRingElement a, double s) {
        a *= s;
        return a;
    }
    friend GroupRingElement operator*(double s, GroupRingElement a) {
        a *= s;
        return a;
    }
    /// Free-group ring product (bilinear convolution with free reduction).
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::vector<Term> terms_;
};

/// ring_mul spelled as a named function for symmetry with the operations table.
inline GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b) {
    return a * b;
}

} // namespace l2alex
