// Benchmark: the library's parallel kernels against the serial reference
// implementations, on the same inputs, with an agreement check per row.
#include <chrono>
#include <cstdio>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "yaoconn/graphs.hpp"
#include "yaoconn/radius.hpp"
#include "yaoconn/reference.hpp"

using namespace yaoconn;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

PointSet make_instance(int n, std::uint64_t seed) {
  InstanceConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.model = InstanceModel::incremental_disk;
  return random_connected_instance(cfg);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel kernels run serially\n\n");
#endif

  std::printf("%-28s %6s %14s %14s %9s %8s\n", "benchmark", "n", "parallel (ms)",
              "serial (ms)", "speedup", "agree");

  const int k = 4;
  const double d = 1.5;
  for (int n : {500, 1000, 2000}) {
    const PointSet s = make_instance(n, 0xBE5C0000u + n);
    GeomGraph yao;
    std::vector<std::pair<int, int>> brute;
    const double par_ms = time_ms([&] { yao = yao_directed(disk_graph(s, d), YaoParams{k, {}}); });
    const double ser_ms = time_ms([&] { brute = reference::yao_arcs_brute(s, d, k); });
    bool agree = static_cast<std::size_t>(yao.edge_count()) == brute.size();
    for (std::size_t i = 0; agree && i < brute.size(); ++i) {
      agree = yao.edges()[i].src == brute[i].first && yao.edges()[i].dst == brute[i].second;
    }
    std::printf("%-28s %6d %14.2f %14.2f %8.1fx %8s\n", "yao arcs (d=1.5, k=4)", n, par_ms,
                ser_ms, ser_ms / par_ms, agree ? "yes" : "NO");
  }

  std::printf("\n");
  for (int n : {50, 100, 200}) {
    const PointSet s = make_instance(n, 0xAD100000u + n);
    RadiusResult fast;
    reference::LinearRadius slow;
    const double par_ms = time_ms([&] { fast = connectivity_radius(s, k, 4.0); });
    const double ser_ms =
        time_ms([&] { slow = reference::connectivity_radius_linear(s, k, 4.0); });
    const bool agree = fast.bounded == slow.bounded &&
                       (!fast.bounded || fast.radius_sq == slow.radius_sq);
    std::printf("%-28s %6d %14.2f %14.2f %8.1fx %8s\n", "connectivity radius (k=4)", n, par_ms,
                ser_ms, ser_ms / par_ms, agree ? "yes" : "NO");
  }
  return 0;
}
