// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "l2alex/braid.hpp"
#include "l2alex/catalog.hpp"
#include "l2alex/detector.hpp"
#include "l2alex/fk_det.hpp"
#include "l2alex/fox.hpp"
#include "l2alex/invariant_expr.hpp"

using namespace l2alex;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
    void note(const std::string& s) {
        detail << (detail.str().empty() ? "" : "; ") << s;
    }
};

bool monotone_up_to(const std::vector<double>& xs, double relSlack, Check& c,
                    const char* label) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] > xs[i - 1] * (1.0 + relSlack)) {
            c.require(false, std::string(label) + ": partial estimates increase at order " +
                                 std::to_string(i + 1));
            return false;
        }
    }
    return true;
}

// ---- criterion 1: unknot exactness --------------------------------------
void criterion_unknot(Check& c) {
    GroupPresentation p = unknot_presentation();
    DeltaParams params;
    params.n_terms = 32;
    double worst = 0.0;
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        DeltaResult r = delta_at(p, t, params);
        worst = std::max(worst, std::abs(r.value - 1.0));
    }
    c.require(worst <= 1e-6, "max deviation " + std::to_string(worst) + " > 1e-6");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max |delta - 1| = %.2e", worst);
    c.note(buf);
}

// ---- criterion 2: scalar determinants ------------------------------------
void criterion_scalar(Check& c) {
    auto oracle = std::make_shared<NormalFormOracle>(NormalFormOracle::trivial(1));
    double worst = 0.0;
    for (double lambda : {0.5, 2.0, -3.0}) {
        for (int m : {1, 2, 3}) {
            RingMatrix r = RingMatrix::identity(m);
            r *= lambda;
            TwistedMatrix tm = twisted_from_ring(std::move(r), 1.0, oracle);
            std::vector<std::pair<double, double>> samples;
            for (double eps : {1e-1, 1e-2, 1e-3})
                samples.push_back({eps, fk_det(tm, eps, 32, 0.0).estimate});
            double est = extrapolate_to_zero(samples);
            worst = std::max(worst, std::abs(est - std::pow(std::abs(lambda), m)));
        }
    }
    c.require(worst <= 1e-4, "max deviation " + std::to_string(worst) + " > 1e-4");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max |det - |lambda|^m| = %.2e", worst);
    c.note(buf);
}

// ---- criterion 3: block multiplicativity ---------------------------------
void criterion_block(Check& c) {
    std::mt19937 rng(2024);
    auto oracle = std::make_shared<NormalFormOracle>(NormalFormOracle::trivial(2));
    auto gentle = [&rng, &oracle](int size) {
        RingMatrix m(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                std::vector<GroupRingElement::Term> terms;
                if (i == j) terms.push_back({Word{}, 1.0 + 0.5 * static_cast<double>(rng() % 5)});
                Word w;
                w.append_run(static_cast<int>(rng() % 2), (rng() % 2) ? 1 : -1);
                terms.push_back({w, static_cast<double>(rng() % 100) / 2000.0 - 0.025});
                m.at(i, j) = GroupRingElement::from_terms(std::move(terms));
            }
        return twisted_from_ring(std::move(m), 1.0, oracle);
    };
    auto ladder = [](const TwistedMatrix& m) {
        std::vector<std::pair<double, double>> samples;
        for (double eps : {1e-1, 1e-2, 1e-3})
            samples.push_back({eps, fk_det(m, eps, 40, 1e-10).estimate});
        return extrapolate_to_zero(samples);
    };
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        TwistedMatrix f = gentle(2);
        TwistedMatrix g = gentle(trial % 2 + 1);
        TwistedMatrix diag = twisted_from_ring(block_diag(f.m, g.m), 1.0, oracle);
        double lhs = ladder(diag);
        double rhs = ladder(f) * ladder(g);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    c.require(worst <= 1e-3, "max relative deviation " + std::to_string(worst) + " > 1e-3");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max rel |det(diag) - det*det| = %.2e", worst);
    c.note(buf);
}

// ---- criterion 4: monomial territory for the fibered figure-eight --------
void criterion_monomial_territory(Check& c) {
    GroupPresentation p = fibered_presentation(1, figure_eight_monodromy());
    DeltaParams params;
    params.eps_ladder = {1e-3};
    params.n_terms = 64;
    params.prune = 1e-12;

    DeltaResult high = delta_at(p, 4.0, params);
    const DetApproxResult& h = high.ladder[0];
    c.require(h.pruned_mass_bound <= 1e-6,
              "pruning slack at t=4 is " + std::to_string(h.pruned_mass_bound));
    monotone_up_to(h.partial_estimates, 1e-6, c, "t=4");
    c.require(h.partial_estimates.back() >= 16.0 * (1.0 - 1e-3),
              "t=4 partials dropped below 16*(1-1e-3)");

    DeltaResult low = delta_at(p, 0.25, params);
    const DetApproxResult& l = low.ladder[0];
    c.require(l.pruned_mass_bound <= 1e-6,
              "pruning slack at t=0.25 is " + std::to_string(l.pruned_mass_bound));
    monotone_up_to(l.partial_estimates, 1e-6, c, "t=0.25");
    c.require(l.partial_estimates.back() >= 1.0 - 1e-3,
              "t=0.25 partials dropped below 1-1e-3");

    // vanishing traces of (A^{-1} t Rz)^n for n <= 4, exact
    MonodromyJacobian jac = jacobian(figure_eight_monodromy());
    auto oracle = p.oracle;
    RingMatrix winvShift(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::vector<GroupRingElement::Term> terms;
            for (const auto& t : jac.Winv.at(i, j).terms())
                terms.push_back({t.first.shifted(1), t.second});
            winvShift.at(i, j) = GroupRingElement::from_terms(std::move(terms));
        }
    RingMatrix tz(2, 2);
    for (int i = 0; i < 2; ++i) tz.at(i, i) = GroupRingElement::term(Word::generator(0), 4.0);
    MulContext ctx{oracle.get(), 0.0, true, 0.0, 16384};
    RingMatrix s = mul(winvShift, tz, ctx);
    RingMatrix power = s;
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 2; ++i)
            for (const auto& term : power.at(i, i).terms()) {
                c.require(!oracle->is_identity(term.first),
                          "identity word appeared at series order " + std::to_string(n));
                c.require(NormalFormOracle::z_exponent(oracle->normal_form(term.first)) == n,
                          "word with z-exponent != n at order " + std::to_string(n));
            }
        MulContext c2{oracle.get(), 0.0, true, 0.0, 16384};
        power = mul(power, s, c2);
    }

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "t=4: last=%.6f converged=%s; t=0.25: last=%.6f converged=%s",
                  h.partial_estimates.back(), h.converged ? "yes" : "no",
                  l.partial_estimates.back(), l.converged ? "yes" : "no");
    c.note(buf);
}

// ---- criterion 5: volume bracket at t = 1 --------------------------------
void criterion_volume_bracket(Check& c) {
    GroupPresentation p = fibered_presentation(1, figure_eight_monodromy());
    DeltaParams params;
    params.eps_ladder = {1e-3};
    params.n_terms = 64;
    params.prune = 1e-12;
    DeltaResult r = delta_at(p, 1.0, params);
    const DetApproxResult& d = r.ladder[0];
    const double target = exp_vol_over_6pi(kVolumeFigureEight);
    monotone_up_to(d.partial_estimates, 1e-6, c, "t=1");
    c.require(d.partial_estimates.back() >= target - 5e-3,
              "bracket violated: last partial " +
                  std::to_string(d.partial_estimates.back()) + " < " +
                  std::to_string(target - 5e-3));
    c.require(d.pruned_mass_bound <= 1e-6, "pruning slack too large");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "upper bound %.6f vs target %.6f, converged=%s",
                  d.partial_estimates.back(), target, d.converged ? "yes" : "no");
    c.note(buf);
}

// ---- criterion 6: classical Alexander golden files ------------------------
void criterion_fox_golden(Check& c) {
    const LaurentPoly one = LaurentPoly::constant(1);
    const LaurentPoly trefoil =
        LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 1) + LaurentPoly::constant(1);
    const LaurentPoly fig8 =
        LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-3, 1) + LaurentPoly::constant(1);

    c.require(classical_alexander(wirtinger_from_braid(parse_braid("s1"))) == one,
              "unknot braid route");
    c.require(classical_alexander(unknot_presentation()) == one, "unknot catalog route");
    c.require(classical_alexander(wirtinger_from_braid(parse_braid("s1 s1 s1"))) == trefoil,
              "trefoil braid route");
    c.require(classical_alexander(catalog_presentation("3_1")) == trefoil,
              "trefoil catalog route");
    c.require(classical_alexander(wirtinger_from_braid(parse_braid("s1 s2^-1 s1 s2^-1"))) ==
                  fig8,
              "figure-eight braid route");
    c.require(classical_alexander(catalog_presentation("4_1")) == fig8,
              "figure-eight catalog route");
}

// ---- criterion 7: jacobian invertibility ----------------------------------
void criterion_jacobians(Check& c) {
    MonodromyJacobian stored = jacobian(figure_eight_monodromy());
    c.require(mul_free(stored.W, stored.Winv).is_identity(), "stored monodromy W*Winv");
    c.require(mul_free(stored.Winv, stored.W).is_identity(), "stored monodromy Winv*W");

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        FreeAutomorphism f = FreeAutomorphism::identity(n);
        const int moves = 3 + static_cast<int>(rng() % 5);
        for (int i = 0; i < moves; ++i) {
            int a = static_cast<int>(rng() % n);
            int b = static_cast<int>(rng() % n);
            if (a == b) {
                f = compose(f, FreeAutomorphism::inverter(n, a));
            } else {
                int sign = (rng() % 2) ? 1 : -1;
                f = compose(f, (rng() % 2)
                                   ? FreeAutomorphism::right_multiplier(n, a, b, sign)
                                   : FreeAutomorphism::left_multiplier(n, a, b, sign));
            }
        }
        MonodromyJacobian jac = jacobian(f);
        c.require(mul_free(jac.W, jac.Winv).is_identity(),
                  "random automorphism " + std::to_string(trial) + " W*Winv");
        c.require(mul_free(jac.Winv, jac.W).is_identity(),
                  "random automorphism " + std::to_string(trial) + " Winv*W");
    }
    c.note("stored monodromy + 20 random Nielsen compositions");
}

// ---- criterion 8: family audit -------------------------------------------
void criterion_family(Check& c) {
    FamilyAuditReport report = family_audit(10);
    c.require(report.all_pass, "family audit reported failures");
    for (const auto& row : report.rows) {
        c.require(row.genus_equal, "genus clause failed at n=" + std::to_string(row.n));
        c.require(row.volume_equal, "volume clause failed at n=" + std::to_string(row.n));
        c.require(row.invariants_distinct,
                  "equivalence clause failed at n=" + std::to_string(row.n));
        c.require(row.detect_ok, "detection clause failed at n=" + std::to_string(row.n));
    }
    c.note("n = 0..10, genus column 2..31");
}

// ---- criterion 9: detector conformance ------------------------------------
void criterion_detector(Check& c) {
    auto expectDetected = [&c](const InvariantSummary& s, const std::string& name) {
        DetectionResult r = detect(s);
        c.require(r.kind == DetectionResult::Kind::detected && r.names.size() == 1 &&
                      r.names[0] == name,
                  "expected " + name + ", got " + r.display());
    };
    expectDetected(summary_of_catalog("unknot"), "unknot");
    expectDetected(summary_of_catalog("3_1"), "3_1");
    expectDetected(summary_of_catalog("4_1"), "4_1");
    expectDetected(summary_of_catalog("5_2"), "5_2");

    DetectionResult k12 = detect(summary_of_catalog("K12n242"));
    c.require(k12.kind == DetectionResult::Kind::unknown,
              "K12n242 should be unknown, got " + k12.display());
    KnotSpec pair = KnotSpec::sum(KnotSpec::catalog("5_2"), KnotSpec::catalog("T(2,9)"));
    DetectionResult sum = detect(summarize(expr_of(pair)));
    c.require(sum.kind == DetectionResult::Kind::unknown,
              "5_2 # T(2,9) should be unknown, got " + sum.display());
}

// ---- criterion 10: duality symmetry for the fibered figure-eight ----------
void criterion_symmetry(Check& c) {
    GroupPresentation p = fibered_presentation(1, figure_eight_monodromy());
    DeltaParams params;
    params.eps_ladder = {1e-6};
    params.n_terms = 64;
    params.prune = 1e-12;
    DeltaResult high = delta_at(p, 4.0, params);
    DeltaResult low = delta_at(p, 0.25, params);

    // monomial shift measured from the large-t regime
    const double sReal = std::log(high.value) / std::log(4.0);
    const long long s = std::llround(sReal);
    c.require(s == 2, "measured shift " + std::to_string(sReal) + " rounds to " +
                          std::to_string(s) + ", expected 2g = 2");
    const double lhs = high.value * std::pow(4.0, -static_cast<double>(s));
    const double rhs = low.value;
    c.require(std::abs(lhs - rhs) <= 2e-2,
              "symmetry defect " + std::to_string(std::abs(lhs - rhs)) + " > 2e-2");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "delta(4)/4^2 = %.6f vs delta(1/4) = %.6f", lhs, rhs);
    c.note(buf);
}

struct Criterion {
    int id;
    const char* label;
    double limitSeconds;
    std::function<void(Check&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "unknot exactness", 1.0, criterion_unknot},
        {2, "scalar determinants", 1.0, criterion_scalar},
        {3, "block multiplicativity", 10.0, criterion_block},
        {4, "fibered 4_1 monomial territory", 300.0, criterion_monomial_territory},
        {5, "volume bracket at t = 1", 600.0, criterion_volume_bracket},
        {6, "classical Alexander golden files", 1.0, criterion_fox_golden},
        {7, "jacobian invertibility", 5.0, criterion_jacobians},
        {8, "family audit n = 0..10", 1.0, criterion_family},
        {9, "detector conformance", 1.0, criterion_detector},
        {10, "duality symmetry for 4_1", 300.0, criterion_symmetry},
    };

    int passed = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        const double start = now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.pass = false;
            check.note(std::string("exception: ") + e.what());
        }
        const double elapsed = now() - start;
        if (elapsed > cr.limitSeconds) {
            check.pass = false;
            check.note("runtime " + std::to_string(elapsed) + "s exceeds limit " +
                       std::to_string(cr.limitSeconds) + "s");
        }
        if (check.pass) ++passed;
        std::printf("[%2d/10] %s  %-36s (%.2f s)%s%s\n", cr.id,
                    check.pass ? "PASS" : "FAIL", cr.label, elapsed,
                    check.detail.str().empty() ? "" : "  -- ", check.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %d/10 criteria passed\n", passed);
    return passed == 10 ? 0 : 1;
}
