// Times the OpenMP enumeration against the serial reference on the same
// instances and cross-checks that they return identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "discheb/solver.hpp"

namespace {

using namespace discheb;
using clock_type = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f, ExtremalResult& out) {
  const auto start = clock_type::now();
  out = f();
  const auto stop = clock_type::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark: parallel enumeration vs serial reference"};
  std::vector<int> degrees{4, 5, 6};
  std::vector<int> counts{12, 16, 20};
  bool skip_serial = false;
  app.add_option("-d,--degree", degrees, "degrees to run (pairs up with --count)");
  app.add_option("-k,--count", counts, "grid sizes to run (pairs up with --degree)");
  app.add_flag("--skip-serial", skip_serial, "time only the parallel kernel");
  CLI11_PARSE(app, argc, argv);

  if (degrees.size() != counts.size()) {
    std::fprintf(stderr, "need as many degrees as counts\n");
    return 1;
  }

  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif

  bool all_match = true;
  for (size_t i = 0; i < degrees.size(); ++i) {
    const int d = degrees[i];
    const int k = counts[i];
    const PointSet ps = PointSet::arithmetic(1, 1, k);

    ExtremalResult parallel_result;
    const double parallel_ms =
        time_ms([&] { return solve(ps, d, max_threads); }, parallel_result);
    std::printf("d=%d k=%d  candidates=%llu feasible=%llu lead=%s\n", d, k,
                static_cast<unsigned long long>(parallel_result.candidates_enumerated),
                static_cast<unsigned long long>(parallel_result.candidates_feasible),
                parallel_result.lead.str().c_str());
    std::printf("  parallel (%d threads): %9.2f ms\n", max_threads, parallel_ms);

    if (max_threads > 1) {
      ExtremalResult one_thread;
      const double one_ms = time_ms([&] { return solve(ps, d, 1); }, one_thread);
      std::printf("  parallel (1 thread):  %9.2f ms  speedup %.2fx\n", one_ms,
                  one_ms / parallel_ms);
      all_match = all_match && one_thread == parallel_result;
    }

    if (!skip_serial) {
      ExtremalResult serial_result;
      const double serial_ms = time_ms([&] { return solve_serial(ps, d); }, serial_result);
      std::printf("  serial reference:     %9.2f ms  speedup %.2fx\n", serial_ms,
                  serial_ms / parallel_ms);
      all_match = all_match && serial_result == parallel_result;
    }
  }

  std::printf("results identical across implementations: %s\n", all_match ? "yes" : "NO");
  return all_match ? 0 : 1;
}
