// Benchmark: serial vs OpenMP quotient-product kernels on the power series
// of the twisted figure-eight Fox matrix, plus the naive reference kernel
// on a smaller instance.
//
// Usage: l2alex_bench [terms] [t]

#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "l2alex/catalog.hpp"
#include "l2alex/fk_det.hpp"
#include "l2alex/fox.hpp"

using namespace l2alex;

namespace {

TwistedMatrix series_base(const GroupPresentation& p, double t, double eps) {
    AbelianizationMap alpha = abelianization(p);
    TwistedMatrix m = twist(delete_row(fox_matrix(p), 0), t, alpha, p.oracle);
    MulContext ctx{p.oracle.get(), 0.0, false, 0.0, 16384};
    TwistedMatrix h = mul(adjoint(m), m, ctx);
    h.m.add_scalar_diagonal(eps);
    const double c = norm_bound(h) * 1.01;
    TwistedMatrix k = h;
    k.m *= (-1.0 / c);
    k.m.add_scalar_diagonal(1.0);
    return k;
}

double run_powers(const TwistedMatrix& k, int terms, bool parallel, double prune,
                  std::size_t& peakSupport, bool verbose = false) {
    TwistedMatrix power = k;
    peakSupport = power.m.max_support();
    const double start = omp_get_wtime();
    double mass = 0.0;
    for (int i = 1; i < terms; ++i) {
        MulContext ctx{k.oracle.get(), prune, parallel, 0.0, 16384};
        power = mul(power, k, ctx);
        mass += ctx.pruned_mass;
        peakSupport = std::max(peakSupport, power.m.max_support());
        if (verbose) {
            std::printf("  order %2d: support %9zu  l1 %10.4g  trace %10.4g  pruned %10.4g"
                        "  %.2fs\n",
                        i + 1, power.m.max_support(), power.m.l1_mass(), vn_trace(power),
                        mass, omp_get_wtime() - start);
            std::fflush(stdout);
        }
    }
    return omp_get_wtime() - start;
}

} // namespace

int main(int argc, char** argv) {
    const int terms = argc > 1 ? std::atoi(argv[1]) : 16;
    const double t = argc > 2 ? std::atof(argv[2]) : 1.0;
    const double prune = argc > 3 ? std::atof(argv[3]) : 1e-12;

    GroupPresentation p = fibered_presentation(1, figure_eight_monodromy());
    TwistedMatrix k = series_base(p, t, 1e-3);

    std::printf("power series of the twisted figure-eight matrix, t = %g, %d factors\n", t,
                terms);
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    std::size_t peakSerial = 0, peakParallel = 0;
    const double serial = run_powers(k, terms, false, prune, peakSerial, true);
    std::printf("serial:   %8.3f s   peak support %zu\n", serial, peakSerial);
    const double parallel = run_powers(k, terms, true, prune, peakParallel);
    std::printf("parallel: %8.3f s   peak support %zu\n", parallel, peakParallel);
    if (parallel > 0.0) std::printf("speedup:  %8.2fx\n", serial / parallel);
    if (peakSerial != peakParallel) {
        std::printf("MISMATCH: serial and parallel kernels disagree\n");
        return 1;
    }

    // naive reference on a short prefix, to keep the comparison honest
    const int refTerms = std::min(terms, 8);
    TwistedMatrix power = k;
    const double refStart = omp_get_wtime();
    for (int i = 1; i < refTerms; ++i)
        power.m = mul_reference(power.m, k.m, *k.oracle);
    const double ref = omp_get_wtime() - refStart;
    std::printf("reference (naive, %d factors): %8.3f s\n", refTerms, ref);
    return 0;
}
