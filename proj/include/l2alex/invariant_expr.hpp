#pragma once

// Symbolic invariant expressions closed under connected sum, cabling,
// mirror and reversion, with genus / volume / monomiality-limit extraction
// and equivalence up to monomial shifts.
//
// Semantics of the nodes, as functions of t > 0 up to monomial factors:
//   TorusBase(g)        max(1,t)^{2g}
//   HyperbolicBase(K)   the invariant of the catalog knot K
//   Product(l, r)       pointwise product         (connected sum)
//   CableMap(p, q, f)   f(t^p) * max(1,t)^{(|p|-1)(|q|-1)}
//   Recip(f)            t -> f(1/t)               (mirror, reversion)
//
// The monomiality limit is carried symbolically as a rational power of the
// figure-eight base constant; the only facts used about it are that it is
// finite and strictly greater than 1.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "l2alex/knot_spec.hpp"

namespace l2alex {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational integer(long long n) { return Rational(n, 1); }

    friend bool operator==(const Rational&, const Rational&) = default;
    bool operator<(const Rational& rhs) const;
    Rational operator/(long long k) const;
    std::string to_string() const;
};

/// Symbolic monomiality limit.
struct Lambda {
    enum class Kind {
        one,            // iterated torus territory
        power_of_41,    // lambda_F^exp with lambda_F > 1 the figure-eight base
        unknown_finite, // fibered, but not expressible in lambda_F
        undefined       // not known to be fibered
    };

    Kind kind = Kind::one;
    Rational exp{1, 1};

    static Lambda one() { return {Kind::one, Rational::integer(0)}; }
    static Lambda power(Rational r) { return {Kind::power_of_41, r}; }
    static Lambda unknown() { return {Kind::unknown_finite, Rational::integer(0)}; }
    static Lambda undefined() { return {Kind::undefined, Rational::integer(0)}; }

    friend bool operator==(const Lambda&, const Lambda&) = default;
    std::string to_string() const;
    static Lambda from_string(const std::string& s);
};

class InvariantExpr {
public:
    enum class Kind { torus_base, hyperbolic_base, product, cable_map, recip };

    static InvariantExpr torus_base(int genus);
    static InvariantExpr hyperbolic_base(const std::string& name);
    static InvariantExpr product(InvariantExpr l, InvariantExpr r);
    static InvariantExpr cable_map(int p, int q, InvariantExpr inner);
    static InvariantExpr recip(InvariantExpr inner);

    Kind kind() const { return kind_; }
    int base_genus() const { return genus_; }
    const std::string& base_name() const { return name_; }
    int p() const { return p_; }
    int q() const { return q_; }
    const InvariantExpr& left() const { return *children_.at(0); }
    const InvariantExpr& right() const { return *children_.at(1); }
    const InvariantExpr& inner() const { return *children_.at(0); }

private:
    InvariantExpr() = default;

    Kind kind_ = Kind::torus_base;
    int genus_ = 0;
    std::string name_;
    int p_ = 0;
    int q_ = 0;
    std::vector<std::shared_ptr<const InvariantExpr>> children_;
};

/// Structural recursion over a knot spec.  Catalog leaves must be the
/// trivial knot, a torus knot, 3_1, 4_1 or 5_2.
InvariantExpr expr_of(const KnotSpec& k);

int genus_of(const InvariantExpr& e);
double volume_of(const InvariantExpr& e);
double value_at_1(const InvariantExpr& e);
/// Throws undefined_lambda_error on trees with a non-fibered leaf.
Lambda lambda_of(const InvariantExpr& e);

/// Degrees of the two monomial tails, computed from the node semantics;
/// their span is twice the genus (property-tested against genus_of).
struct TailDegrees {
    long long deg_zero = 0;
    long long deg_inf = 0;
};
TailDegrees tail_degrees(const InvariantExpr& e);

/// Exact or asymptotic point evaluation; nullopt where neither applies.
struct EvalPoint {
    double value = 0.0;
    bool exact = true;
};
std::optional<EvalPoint> eval_expr(const InvariantExpr& e, double t);

struct EquivalenceResult {
    bool equivalent = false;
    bool exact = false;      // decided symbolically, not by sampling
    long long shift = 0;     // monomial shift between representatives
    std::string reason;
};
/// Equality up to one integer monomial shift; exact on iterated-torus
/// expressions, a diagnosed semi-decision when hyperbolic leaves force
/// numeric sampling.
EquivalenceResult equivalent(const InvariantExpr& a, const InvariantExpr& b);

struct InvariantSummary {
    int genus = 0;
    double volume = 0.0;
    double value_at_1 = 1.0;
    Lambda lambda = Lambda::one();
    std::optional<double> leading_C;
    std::optional<bool> monomial_tails;

    /// Enforces value_at_1 = exp(volume / 6 pi) within 1e-9 and the
    /// lambda/volume coupling for fibered data.
    void validate() const;
    nlohmann::json to_json() const;
    static InvariantSummary from_json(const nlohmann::json& j);
};

InvariantSummary summarize(const InvariantExpr& e);
/// Summary straight from a catalog entry (works for K12n242 too).
InvariantSummary summary_of_catalog(const std::string& name);

} // namespace l2alex
