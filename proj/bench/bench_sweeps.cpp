// Times the serial sweep driver against the OpenMP one on three real
// verification workloads and prints a comparison table. The two drivers
// must produce identical results — any divergence is reported and fails
// the run. Usage: bench_sweeps [scale], scale >= 1 multiplies case counts.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "brauer/cellular.hpp"
#include "brauer/concat.hpp"
#include "brauer/sampling.hpp"
#include "brauer/sweep.hpp"

using namespace brauer;

namespace {

double run_ms(const std::function<SweepResult()>& body, SweepResult& out) {
  const auto start = std::chrono::steady_clock::now();
  out = body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

struct Workload {
  std::string name;
  std::size_t cases;
  std::function<std::optional<std::string>(std::size_t)> body;
};

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t scale = 1;
  if (argc > 1) {
    const long parsed = std::strtol(argv[1], nullptr, 10);
    if (parsed < 1) {
      std::cerr << "usage: bench_sweeps [scale >= 1]\n";
      return 2;
    }
    scale = static_cast<std::size_t>(parsed);
  }

  // Shared read-only inputs for the group-law workload.
  const auto wreaths = enumerate_wreath(3, 1);  // 162 elements
  const Dangle loose = Dangle::make(3, {1, 2, 3}, {});
  std::vector<ColoredDiagram> perm_diagrams;
  for (const WreathElem& w : wreaths)
    perm_diagrams.push_back(reconstruct({loose, loose, w}));
  const std::size_t m = wreaths.size();

  std::vector<Workload> workloads;
  workloads.push_back(
      {"product congruence, n=4 colored", 300 * scale,
       [](std::size_t i) -> std::optional<std::string> {
         Rng rng(1000 + i);
         const int k = 2 * rng.uniform(0, 2);
         const ColoredDiagram c = random_diagram_with_through(rng, 4, k, 3);
         const ColoredDiagram d = random_diagram_with_through(rng, 4, k, 3);
         if (!check_lemma42(c, d)) return "congruence broke";
         return std::nullopt;
       }});
  workloads.push_back(
      {"full-through group law, n=3", m * m * scale,
       [&](std::size_t idx) -> std::optional<std::string> {
         const std::size_t a = (idx / m) % m;
         const std::size_t b = idx % m;
         const ConcatResult prod =
             concatenate(perm_diagrams[a], perm_diagrams[b]);
         if (decompose(prod.diagram).wreath != wreath_mul(wreaths[a], wreaths[b]))
           return "group law broke";
         return std::nullopt;
       }});
  workloads.push_back(
      {"wreath associativity, k=6", 200000 * scale,
       [](std::size_t i) -> std::optional<std::string> {
         Rng rng(3000 + i);
         const WreathElem a = random_wreath(rng, 6, 4);
         const WreathElem b = random_wreath(rng, 6, 4);
         const WreathElem c = random_wreath(rng, 6, 4);
         if (wreath_mul(wreath_mul(a, b), c) != wreath_mul(a, wreath_mul(b, c)))
           return "associativity broke";
         return std::nullopt;
       }});

  std::cout << "threads: " << threads() << "\n";
  std::cout << "workload                              cases      serial"
               "    parallel     speedup\n";

  bool all_ok = true;
  for (const Workload& w : workloads) {
    SweepResult serial_result, parallel_result;
    const double serial_ms =
        run_ms([&] { return sweep_serial(w.cases, w.body); }, serial_result);
    const double parallel_ms = run_ms(
        [&] { return sweep_parallel(w.cases, w.body); }, parallel_result);

    const bool same = serial_result.cases == parallel_result.cases &&
                      serial_result.failures == parallel_result.failures;
    const bool ok = same && serial_result.ok();
    all_ok = all_ok && ok;

    std::printf("%-36s %8zu %9.1fms %9.1fms %9.2fx%s\n", w.name.c_str(),
                w.cases, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                ok ? "" : (same ? "  [FAILURES]" : "  [DIVERGED]"));
  }

  if (!all_ok) {
    std::cout << "benchmark detected failures\n";
    return 1;
  }
  return 0;
}
