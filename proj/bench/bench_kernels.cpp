// Serial reference kernels against the OpenMP ones on the same shells.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef JACKHYP_HAVE_OPENMP
#include <omp.h>
#endif

#include "jackhyp/hypergeo.hpp"
#include "jackhyp/jack.hpp"

using namespace jackhyp;

namespace {

struct Case {
  const char* name;
  SeriesParams params;
  std::vector<long double> x;  // empty: all-ones point
  int degree;
};

double seconds_for(const Case& c, Exec exec, int reps, long double& checksum) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int rep = 0; rep < reps; ++rep) {
    checksum = 0;
    for (int n = 0; n <= c.degree; ++n)
      checksum += reduce_shell(shell_terms(c.params, n, c.x, Precision::Extended, exec), Precision::Extended);
  }
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int reps = quick ? 1 : 5;
  auto q = [](const char* s) { return parse_scalar(s); };

  std::vector<Case> cases = {
      {"4F3 at 1^2, a=2", SeriesParams({q("2"), q("2"), q("2"), q("2")}, {q("2"), q("2"), q("7")}, 2, q("2")), {},
       quick ? 60 : 240},
      {"4F3 at 1^3, a=1", SeriesParams({q("7/4"), q("7/4"), q("7/4"), q("7/4")}, {q("5/2"), q("5/2"), q("7/2")}, 3, q("1")),
       {}, quick ? 40 : 120},
      {"2F1 at (.3,.5,.6)^2, a=2", SeriesParams({q("3/2"), q("1")}, {q("5/2")}, 3, q("2")), {0.09L, 0.25L, 0.36L},
       quick ? 12 : 24},
  };

  int threads = 1;
#ifdef JACKHYP_HAVE_OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d, repetitions: %d\n", threads, reps);
  std::printf("%-28s %6s %12s %12s %8s %s\n", "case", "degree", "serial [s]", "parallel [s]", "speedup", "identical");
  bool all_same = true;
  for (const Case& c : cases) {
    long double warm = 0;
    seconds_for(c, Exec::Serial, 1, warm);  // builds the Jack shells once
    long double s_sum = 0, p_sum = 0;
    const double ts = seconds_for(c, Exec::Serial, reps, s_sum);
    const double tp = seconds_for(c, Exec::Parallel, reps, p_sum);
    const bool same = s_sum == p_sum;
    all_same = all_same && same;
    std::printf("%-28s %6d %12.4f %12.4f %8.2f %s\n", c.name, c.degree, ts, tp, tp > 0 ? ts / tp : 0.0,
                same ? "yes" : "NO");
  }

  const int jw = quick ? 8 : 14;
  clear_jack_caches();
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 0; n <= jw; ++n) jack_shell(n, 3, q("1/2"));
  const double tj = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("Jack shells 0..%d in 3 variables (alpha 1/2, parallel over partitions): %.4f s\n", jw, tj);
  return all_same ? 0 : 1;
}
