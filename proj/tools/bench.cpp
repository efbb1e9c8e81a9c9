// Times the OpenMP kernels against their serial references on the standard
// families: characteristic-polynomial evaluation, the exact scaled inverse,
// and the axiom sweep.

#include <cstdio>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "diffposet/constructions.hpp"
#include "diffposet/dense_matrix.hpp"
#include "diffposet/poset.hpp"
#include "diffposet/spectra.hpp"

using namespace diffposet;

namespace {

void report(const char* kernel, int size, double serial, double parallel)
{
    std::printf("%-22s %6d  serial %8.3fs  parallel %8.3fs  speedup %.2fx\n", kernel, size,
                serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"serial vs OpenMP kernel comparison"};
    std::string family = "young";
    int ranks = 10;
    int k = 1;
    app.add_option("--family", family, "young | yf");
    app.add_option("--ranks", ranks, "top rank of the test poset");
    app.add_option("--k", k, "shift for the inverse benchmark");
    CLI11_PARSE(app, argc, argv);

    const GradedPoset poset = family == "yf" ? build_young_fibonacci(ranks) : build_young(ranks);
    const int n = poset.top_rank() - 1;
    const DenseIntMatrix du = to_dense(du_matrix(poset, n));
    const DenseIntMatrix shifted = to_dense(du_matrix(poset, n).plus_scaled_identity(k));

    std::printf("%s through rank %d; DU_%d is %dx%d; %d OpenMP threads\n", family.c_str(), ranks,
                n, du.rows(), du.cols(), omp_get_max_threads());

    {
        double t0 = omp_get_wtime();
        const auto serial = char_poly_ref(du);
        double t1 = omp_get_wtime();
        const auto parallel = char_poly(du);
        double t2 = omp_get_wtime();
        if (serial != parallel) {
            std::fprintf(stderr, "char_poly: serial and parallel results DISAGREE\n");
            return 1;
        }
        report("char_poly", du.rows(), t1 - t0, t2 - t1);
    }

    {
        double t0 = omp_get_wtime();
        const ScaledInverse serial = inverse_scaled_ref(shifted);
        double t1 = omp_get_wtime();
        const ScaledInverse parallel = inverse_scaled(shifted);
        double t2 = omp_get_wtime();
        if (serial.det != parallel.det || !(serial.num == parallel.num)) {
            std::fprintf(stderr, "inverse_scaled: serial and parallel results DISAGREE\n");
            return 1;
        }
        report("inverse_scaled", shifted.rows(), t1 - t0, t2 - t1);
    }

    {
        const int threads = omp_get_max_threads();
        omp_set_num_threads(1);
        double t0 = omp_get_wtime();
        const AxiomReport serial = check_axioms(poset, 1);
        double t1 = omp_get_wtime();
        omp_set_num_threads(threads);
        const AxiomReport parallel = check_axioms(poset, 1);
        double t2 = omp_get_wtime();
        if (serial.all_ok != parallel.all_ok) {
            std::fprintf(stderr, "check_axioms: serial and parallel results DISAGREE\n");
            return 1;
        }
        report("check_axioms", poset.rank_size(poset.top_rank()), t1 - t0, t2 - t1);
    }

    return 0;
}
