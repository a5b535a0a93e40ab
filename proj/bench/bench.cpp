// Serial reference path versus OpenMP kernels on the three parallel workloads.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>

#include "schur/enumerate.hpp"
#include "schur/isomorphism.hpp"
#include "schur/wl.hpp"

using namespace schur;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(3) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
            << (same ? "" : "  RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : 4;
  const Exec serial = Exec::serial(), par{threads};
  std::cout << "openmp=" << (openmp_available() ? "yes" : "no") << " threads=" << threads << "\n";
  std::cout << std::left << std::setw(34) << "workload" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "omp" << std::setw(10) << "speedup" << "\n";
  bool all_same = true;

  for (auto spec : {"C2xC2xC2xC2", "C3xC3xC3", "C4xC2xC3"}) {
    const auto g = AbelianGroup::parse(spec);
    std::vector<SRing> a, b;
    const double ts = seconds([&] { a = enumerate_srings(g, serial); });
    const double tp = seconds([&] { b = enumerate_srings(g, par); });
    all_same = all_same && a == b;
    row(std::string("enumerate ") + spec, ts, tp, a == b);
  }

  for (std::size_t n : {20, 28}) {
    std::vector<SRingRef> targets;
    for (auto& g : abelian_groups_of_order(n))
      for (auto& r : enumerate_srings(g, par)) targets.push_back(std::make_shared<const SRing>(std::move(r)));
    std::size_t found_s = 0, found_p = 0;
    const double ts = seconds([&] {
      for (auto& t : targets) found_s += separability_check(*t, targets, serial).entries.size();
    });
    const double tp = seconds([&] {
      for (auto& t : targets) found_p += separability_check(*t, targets, par).entries.size();
    });
    all_same = all_same && found_s == found_p;
    row("separability order " + std::to_string(n), ts, tp, found_s == found_p);
  }

  for (std::size_t n : {12, 20}) {
    WlExperimentReport a, b;
    const double ts = seconds([&] { a = wl_dimension_experiment(n, false, serial); });
    const double tp = seconds([&] { b = wl_dimension_experiment(n, false, par); });
    const bool same = a.fingerprint_classes == b.fingerprint_classes && a.oracle_calls == b.oracle_calls &&
                      a.indistinguishable_nonisomorphic.size() == b.indistinguishable_nonisomorphic.size();
    all_same = all_same && same;
    row("wl experiment order " + std::to_string(n), ts, tp, same);
  }
  return all_same ? 0 : 1;
}
