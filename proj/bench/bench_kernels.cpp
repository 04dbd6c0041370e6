#include <benchmark/benchmark.h>

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ftmd/families.hpp"
#include "ftmd/kernels.hpp"
#include "ftmd/pair_cover.hpp"
#include "ftmd/resolve.hpp"

using namespace ftmd;

namespace {

struct Instance {
  std::string name;
  Graph graph;
  std::unique_ptr<PairCover> cover;
  CoverProblem problem;
  int extra = 0;
};

Instance make(std::string name, Graph g) {
  Instance in{std::move(name), std::move(g), nullptr, {}, 0};
  in.cover = std::make_unique<PairCover>(in.graph.distances());
  in.problem = fault_tolerant_problem(*in.cover);
  propagate_forced(in.problem);
  in.extra = fdim(in.graph).value - static_cast<int>(in.problem.forced.size());
  return in;
}

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> v;
    v.push_back(make("C12", families::cycle(12)));
    v.push_back(make("C16", families::cycle(16)));
    v.push_back(make("Q4", families::hypercube(4)));
    v.push_back(make("figure2", families::figure2().composite()));
    return v;
  }();
  return all;
}

template <class Fn>
void register_all(const std::string& kernel, Fn fn) {
  for (std::size_t i = 0; i < instances().size(); ++i) {
    benchmark::RegisterBenchmark((kernel + "/" + instances()[i].name).c_str(),
                                 [i, fn](benchmark::State& state) {
                                   const Instance& in = instances()[i];
                                   for (auto _ : state) benchmark::DoNotOptimize(fn(in));
                                 })
        ->Unit(benchmark::kMillisecond);
  }
}

}  // namespace

int main(int argc, char** argv) {
  register_all("first_cover/reference",
               [](const Instance& in) { return kernels::reference::first_cover(in.problem, in.extra); });
  register_all("first_cover/omp",
               [](const Instance& in) { return kernels::omp::first_cover(in.problem, in.extra); });
  register_all("all_covers/reference",
               [](const Instance& in) { return kernels::reference::all_covers(in.problem, in.extra); });
  register_all("all_covers/omp",
               [](const Instance& in) { return kernels::omp::all_covers(in.problem, in.extra); });
  register_all("cover_lattice/reference",
               [](const Instance& in) { return kernels::reference::cover_lattice(in.problem); });
  register_all("cover_lattice/omp",
               [](const Instance& in) { return kernels::omp::cover_lattice(in.problem); });
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}
