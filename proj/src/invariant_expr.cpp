#include "l2alex/invariant_expr.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "l2alex/catalog.hpp"
#include "l2alex/errors.hpp"

namespace l2alex {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(std::llabs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

bool Rational::operator<(const Rational& rhs) const {
    return num * rhs.den < rhs.num * den;
}

Rational Rational::operator/(long long k) const { return Rational(num, den * k); }

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Lambda::to_string() const {
    switch (kind) {
        case Kind::one:
            return "1";
        case Kind::power_of_41:
            if (exp == Rational::integer(1)) return "lambda_F";
            return "lambda_F^(" + exp.to_string() + ")";
        case Kind::unknown_finite:
            return "unknown";
        case Kind::undefined:
            return "undefined";
    }
    return "undefined";
}

Lambda Lambda::from_string(const std::string& s) {
    if (s == "1") return one();
    if (s == "lambda_F") return power(Rational::integer(1));
    if (s == "unknown") return unknown();
    if (s == "undefined") return undefined();
    if (s.rfind("lambda_F^(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(10, s.size() - 11);
        std::size_t slash = body.find('/');
        long long num, den = 1;
        try {
            if (slash == std::string::npos) {
                num = std::stoll(body);
            } else {
                num = std::stoll(body.substr(0, slash));
                den = std::stoll(body.substr(slash + 1));
            }
        } catch (const std::exception&) {
            throw validation_error("malformed lambda string '" + s + "'");
        }
        Rational r(num, den);
        if (r == Rational::integer(0)) return one();
        return power(r);
    }
    throw validation_error("malformed lambda string '" + s + "'");
}

InvariantExpr InvariantExpr::torus_base(int genus) {
    if (genus < 0) throw validation_error("negative genus");
    InvariantExpr e;
    e.kind_ = Kind::torus_base;
    e.genus_ = genus;
    return e;
}

InvariantExpr InvariantExpr::hyperbolic_base(const std::string& name) {
    CatalogEntry entry = catalog(name);
    if (entry.volume <= 0.0)
        throw validation_error("hyperbolic base requires positive volume");
    InvariantExpr e;
    e.kind_ = Kind::hyperbolic_base;
    e.name_ = name;
    e.genus_ = entry.genus;
    return e;
}

InvariantExpr InvariantExpr::product(InvariantExpr l, InvariantExpr r) {
    InvariantExpr e;
    e.kind_ = Kind::product;
    e.children_.push_back(std::make_shared<const InvariantExpr>(std::move(l)));
    e.children_.push_back(std::make_shared<const InvariantExpr>(std::move(r)));
    return e;
}

InvariantExpr InvariantExpr::cable_map(int p, int q, InvariantExpr inner) {
    if (p == 0 || std::gcd(p, q) != 1)
        throw validation_error("cable map needs coprime (p, q) with p nonzero");
    InvariantExpr e;
    e.kind_ = Kind::cable_map;
    e.p_ = p;
    e.q_ = q;
    e.children_.push_back(std::make_shared<const InvariantExpr>(std::move(inner)));
    return e;
}

InvariantExpr InvariantExpr::recip(InvariantExpr inner) {
    InvariantExpr e;
    e.kind_ = Kind::recip;
    e.children_.push_back(std::make_shared<const InvariantExpr>(std::move(inner)));
    return e;
}

InvariantExpr expr_of(const KnotSpec& k) {
    switch (k.kind()) {
        case KnotSpec::Kind::catalog: {
            const std::string& name = k.name();
            CatalogEntry entry = catalog(name);
            if (entry.volume == 0.0) return InvariantExpr::torus_base(entry.genus);
            if (name == "4_1" || name == "5_2") return InvariantExpr::hyperbolic_base(name);
            throw validation_error("unsupported catalog leaf '" + name +
                                   "' (supported: unknot, torus knots, 3_1, 4_1, 5_2)");
        }
        case KnotSpec::Kind::sum:
            return InvariantExpr::product(expr_of(k.left()), expr_of(k.right()));
        case KnotSpec::Kind::cable:
            return InvariantExpr::cable_map(k.p(), k.q(), expr_of(k.inner()));
        case KnotSpec::Kind::mirror:
        case KnotSpec::Kind::reverse:
            return InvariantExpr::recip(expr_of(k.inner()));
        case KnotSpec::Kind::braid:
        case KnotSpec::Kind::fibered:
            throw validation_error(
                "braid and monodromy leaves have no symbolic invariant expression");
    }
    throw validation_error("unreachable knot spec kind");
}

int genus_of(const InvariantExpr& e) {
    switch (e.kind()) {
        case InvariantExpr::Kind::torus_base:
        case InvariantExpr::Kind::hyperbolic_base:
            return e.base_genus();
        case InvariantExpr::Kind::product:
            return genus_of(e.left()) + genus_of(e.right());
        case InvariantExpr::Kind::cable_map: {
            const int ap = std::abs(e.p());
            const int aq = std::abs(e.q());
            return ap * genus_of(e.inner()) + (ap - 1) * (aq - 1) / 2;
        }
        case InvariantExpr::Kind::recip:
            return genus_of(e.inner());
    }
    return 0;
}

double volume_of(const InvariantExpr& e) {
    switch (e.kind()) {
        case InvariantExpr::Kind::torus_base:
            return 0.0;
        case InvariantExpr::Kind::hyperbolic_base:
            return catalog(e.base_name()).volume;
        case InvariantExpr::Kind::product:
            return volume_of(e.left()) + volume_of(e.right());
        case InvariantExpr::Kind::cable_map:
        case InvariantExpr::Kind::recip:
            return volume_of(e.inner());
    }
    return 0.0;
}

double value_at_1(const InvariantExpr& e) { return exp_vol_over_6pi(volume_of(e)); }

Lambda lambda_of(const InvariantExpr& e) {
    switch (e.kind()) {
        case InvariantExpr::Kind::torus_base:
            return Lambda::one();
        case InvariantExpr::Kind::hyperbolic_base: {
            if (e.base_name() == "4_1") return Lambda::power(Rational::integer(1));
            throw undefined_lambda_error("monomiality limit undefined for leaf '" +
                                         e.base_name() + "' (not known to be fibered)");
        }
        case InvariantExpr::Kind::product: {
            Lambda a = lambda_of(e.left());
            Lambda b = lambda_of(e.right());
            if (a.kind == Lambda::Kind::one) return b;
            if (b.kind == Lambda::Kind::one) return a;
            // both powers of lambda_F; lambda_F > 1 makes max monotone in the exponent
            return Lambda::power(a.exp < b.exp ? b.exp : a.exp);
        }
        case InvariantExpr::Kind::cable_map: {
            Lambda inner = lambda_of(e.inner());
            if (inner.kind == Lambda::Kind::one) return inner;
            Rational r = inner.exp / std::abs(e.p());
            if (r == Rational::integer(0)) return Lambda::one();
            return Lambda::power(r);
        }
        case InvariantExpr::Kind::recip:
            return lambda_of(e.inner());
    }
    return Lambda::undefined();
}

TailDegrees tail_degrees(const InvariantExpr& e) {
    switch (e.kind()) {
        case InvariantExpr::Kind::torus_base:
        case InvariantExpr::Kind::hyperbolic_base:
            return {0, 2LL * e.base_genus()};
        case InvariantExpr::Kind::product: {
            TailDegrees l = tail_degrees(e.left());
            TailDegrees r = tail_degrees(e.right());
            return {l.deg_zero + r.deg_zero, l.deg_inf + r.deg_inf};
        }
        case InvariantExpr::Kind::cable_map: {
            TailDegrees d = tail_degrees(e.inner());
            const long long p = e.p();
            const long long extra =
                (std::llabs(p) - 1) * (std::llabs(static_cast<long long>(e.q())) - 1);
            if (p > 0) return {p * d.deg_zero, p * d.deg_inf + extra};
            return {p * d.deg_inf, p * d.deg_zero + extra};
        }
        case InvariantExpr::Kind::recip: {
            TailDegrees d = tail_degrees(e.inner());
            return {-d.deg_inf, -d.deg_zero};
        }
    }
    return {};
}

std::optional<EvalPoint> eval_expr(const InvariantExpr& e, double t) {
    if (t <= 0.0) return std::nullopt;
    switch (e.kind()) {
        case InvariantExpr::Kind::torus_base:
            return EvalPoint{std::pow(std::max(1.0, t), 2.0 * e.base_genus()), true};
        case InvariantExpr::Kind::hyperbolic_base: {
            CatalogEntry entry = catalog(e.base_name());
            if (std::abs(t - 1.0) < 1e-12) return EvalPoint{entry.exp_vol_over_6pi, true};
            if (entry.fibered && entry.dilatation) {
                if (t < 1.0 / *entry.dilatation) return EvalPoint{1.0, true};
                if (t > *entry.dilatation)
                    return EvalPoint{std::pow(t, 2.0 * entry.genus), true};
                return std::nullopt;
            }
            // Non-fibered leaf: only the asymptotic tails are available.
            if (entry.leading_C) {
                if (t <= 1e-3) return EvalPoint{*entry.leading_C, false};
                if (t >= 1e3)
                    return EvalPoint{*entry.leading_C * std::pow(t, 2.0 * entry.genus), false};
            }
            return std::nullopt;
        }
        case InvariantExpr::Kind::product: {
            auto l = eval_expr(e.left(), t);
            auto r = eval_expr(e.right(), t);
            if (!l || !r) return std::nullopt;
            return EvalPoint{l->value * r->value, l->exact && r->exact};
        }
        case InvariantExpr::Kind::cable_map: {
            auto innerVal = eval_expr(e.inner(), std::pow(t, e.p()));
            if (!innerVal) return std::nullopt;
            const double extra =
                std::pow(std::max(1.0, t),
                         static_cast<double>((std::abs(e.p()) - 1) * (std::abs(e.q()) - 1)));
            return EvalPoint{innerVal->value * extra, innerVal->exact};
        }
        case InvariantExpr::Kind::recip:
            return eval_expr(e.inner(), 1.0 / t);
    }
    return std::nullopt;
}

namespace {

bool lambda_available(const InvariantExpr& e, Lambda& out) {
    try {
        out = lambda_of(e);
        return true;
    } catch (const undefined_lambda_error&) {
        return false;
    }
}

} // namespace

EquivalenceResult equivalent(const InvariantExpr& a, const InvariantExpr& b) {
    EquivalenceResult res;
    const int ga = genus_of(a);
    const int gb = genus_of(b);
    if (ga != gb) {
        res.exact = true;
        res.reason = "tail degree spans differ (genus " + std::to_string(ga) + " vs " +
                     std::to_string(gb) + ")";
        return res;
    }
    const double va = volume_of(a);
    const double vb = volume_of(b);
    if (std::abs(va - vb) > 1e-9) {
        res.exact = true;
        res.reason = "volumes differ";
        return res;
    }
    Lambda la, lb;
    const bool haveLa = lambda_available(a, la);
    const bool haveLb = lambda_available(b, lb);
    if (haveLa && haveLb && !(la == lb)) {
        res.exact = true;
        res.reason = "monomiality limits differ (" + la.to_string() + " vs " + lb.to_string() +
                     "), using lambda_F > 1";
        return res;
    }

    if (va == 0.0 && vb == 0.0) {
        // Pure iterated-torus territory: equal genus decides exactly.
        res.equivalent = true;
        res.exact = true;
        res.shift = tail_degrees(a).deg_zero - tail_degrees(b).deg_zero;
        res.reason = "piecewise-monomial expressions with equal degree span";
        return res;
    }

    // Sampled ratio constancy at matched deep points; a semi-decision.
    const double t0 = 1e-4;
    const double t1 = 1e4;
    auto a0 = eval_expr(a, t0), a1 = eval_expr(a, t1);
    auto b0 = eval_expr(b, t0), b1 = eval_expr(b, t1);
    if (!a0 || !a1 || !b0 || !b1) {
        res.reason = "sampling failed inside an uncertified region; undecided, "
                     "reporting non-equivalent";
        return res;
    }
    const double r1 = a1->value / b1->value;
    const double mReal = std::log(r1) / std::log(t1);
    const double mRound = std::round(mReal);
    if (std::abs(mReal - mRound) > 1e-6) {
        res.reason = "large-t ratio is not an integer monomial";
        return res;
    }
    const double r0 = a0->value / b0->value;
    if (std::abs(r0 - std::pow(t0, mRound)) > 1e-6 * std::abs(r0)) {
        res.reason = "small-t ratio disagrees with the large-t monomial shift";
        return res;
    }
    if (std::abs(value_at_1(a) - value_at_1(b)) > 1e-9) {
        res.reason = "values at t = 1 differ";
        return res;
    }
    res.equivalent = true;
    res.exact = a0->exact && a1->exact && b0->exact && b1->exact;
    res.shift = static_cast<long long>(mRound);
    res.reason = res.exact ? "matched on certified monomial tails and t = 1"
                           : "matched on sampled tails (asymptotic leaves involved)";
    return res;
}

void InvariantSummary::validate() const {
    if (genus < 0) throw validation_error("summary has negative genus");
    if (volume < -1e-12) throw validation_error("summary has negative volume");
    if (std::abs(value_at_1 - exp_vol_over_6pi(volume)) > 1e-9)
        throw validation_error("summary value_at_1 is inconsistent with its volume");
    if (lambda.kind == Lambda::Kind::one && volume > 1e-9)
        throw validation_error("summary claims lambda = 1 with positive volume");
    if (lambda.kind == Lambda::Kind::power_of_41 && !(Rational::integer(0) < lambda.exp))
        throw validation_error("summary lambda power must be positive");
    if (leading_C && (*leading_C < 1.0 - 1e-12 || *leading_C > value_at_1 + 1e-9))
        throw validation_error("summary leading coefficient outside [1, value_at_1]");
}

nlohmann::json InvariantSummary::to_json() const {
    nlohmann::json j;
    j["genus"] = genus;
    j["volume"] = volume;
    j["value_at_1"] = value_at_1;
    j["lambda"] = lambda.to_string();
    if (leading_C)
        j["leading_C"] = *leading_C;
    else
        j["leading_C"] = nullptr;
    if (monomial_tails)
        j["monomial_tails"] = *monomial_tails;
    else
        j["monomial_tails"] = nullptr;
    return j;
}

InvariantSummary InvariantSummary::from_json(const nlohmann::json& j) {
    InvariantSummary s;
    if (!j.contains("genus")) throw validation_error("summary JSON needs a genus");
    s.genus = j.at("genus").get<int>();
    const bool haveVol = j.contains("volume") && !j.at("volume").is_null();
    const bool haveV1 = j.contains("value_at_1") && !j.at("value_at_1").is_null();
    if (!haveVol && !haveV1)
        throw validation_error("summary JSON needs volume or value_at_1");
    if (haveVol) s.volume = j.at("volume").get<double>();
    if (haveV1) s.value_at_1 = j.at("value_at_1").get<double>();
    if (haveVol && haveV1) {
        if (std::abs(s.value_at_1 - exp_vol_over_6pi(s.volume)) > 1e-6)
            throw validation_error("summary volume and value_at_1 disagree");
        s.value_at_1 = exp_vol_over_6pi(s.volume);
    } else if (haveVol) {
        s.value_at_1 = exp_vol_over_6pi(s.volume);
    } else {
        if (s.value_at_1 < 1.0 - 1e-12)
            throw validation_error("value_at_1 below 1 is impossible");
        s.volume = 6.0 * std::numbers::pi * std::log(std::max(1.0, s.value_at_1));
    }
    if (j.contains("lambda") && !j.at("lambda").is_null())
        s.lambda = Lambda::from_string(j.at("lambda").get<std::string>());
    else
        s.lambda = (s.volume <= 1e-9) ? Lambda::one() : Lambda::undefined();
    if (j.contains("leading_C") && !j.at("leading_C").is_null())
        s.leading_C = j.at("leading_C").get<double>();
    if (j.contains("monomial_tails") && !j.at("monomial_tails").is_null())
        s.monomial_tails = j.at("monomial_tails").get<bool>();
    s.validate();
    return s;
}

namespace {

std::optional<double> leading_c_of(const InvariantExpr& e) {
    switch (e.kind()) {
        case InvariantExpr::Kind::torus_base:
            return 1.0;
        case InvariantExpr::Kind::hyperbolic_base:
            return catalog(e.base_name()).leading_C;
        case InvariantExpr::Kind::product: {
            auto l = leading_c_of(e.left());
            auto r = leading_c_of(e.right());
            if (l && r) return *l * *r;
            return std::nullopt;
        }
        case InvariantExpr::Kind::cable_map:
        case InvariantExpr::Kind::recip:
            return leading_c_of(e.inner());
    }
    return std::nullopt;
}

} // namespace

InvariantSummary summarize(const InvariantExpr& e) {
    InvariantSummary s;
    s.genus = genus_of(e);
    s.volume = volume_of(e);
    s.value_at_1 = exp_vol_over_6pi(s.volume);
    Lambda l;
    if (lambda_available(e, l)) {
        s.lambda = l;
        s.monomial_tails = true;
    } else {
        s.lambda = Lambda::undefined();
        s.monomial_tails = std::nullopt;
    }
    s.leading_C = leading_c_of(e);
    s.validate();
    return s;
}

InvariantSummary summary_of_catalog(const std::string& name) {
    CatalogEntry entry = catalog(name);
    InvariantSummary s;
    s.genus = entry.genus;
    s.volume = entry.volume;
    s.value_at_1 = exp_vol_over_6pi(entry.volume);
    if (entry.volume == 0.0)
        s.lambda = Lambda::one();
    else if (name == "4_1")
        s.lambda = Lambda::power(Rational::integer(1));
    else if (entry.fibered)
        s.lambda = Lambda::unknown();
    else
        s.lambda = Lambda::undefined();
    s.monomial_tails = entry.fibered ? std::optional<bool>(true) : std::nullopt;
    s.leading_C = entry.leading_C;
    s.validate();
    return s;
}

} // namespace l2alex
