// Serial vs OpenMP timings for the brute-force and contraction-deletion kernels.
//
//   bench_kernels [--quick] [--repeat N]

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels/kernels.hpp"
#include "transversal/analysis.hpp"

namespace {

using namespace transversal;
using Clock = std::chrono::steady_clock;

struct Case {
  std::string name;
  GeneratorParams params;
};

template <typename Fn>
double BestOf(int repeat, Fn fn) {
  double best = 1e300;
  for (int k = 0; k < repeat; ++k) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
  }
  return best;
}

std::uint64_t Total(const kernels::CompiledCover& cc) {
  std::uint64_t t = 1;
  for (std::uint32_t k = 0; k < cc.n; ++k) t *= cc.r;
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  int repeat = 3;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--quick") {
      quick = true;
      repeat = 1;
    } else if (arg == "--repeat" && k + 1 < argc) {
      repeat = std::max(1, std::stoi(argv[++k]));
    } else {
      std::cerr << "usage: bench_kernels [--quick] [--repeat N]\n";
      return 2;
    }
  }

  std::vector<Case> cases = {
      {"small", {.n = 6, .r = 3, .edges = 10, .loops = 2, .seed = 1}},
  };
  if (!quick) {
    cases.push_back({"medium", {.n = 10, .r = 3, .edges = 16, .loops = 2, .seed = 2}});
    cases.push_back({"large", {.n = 12, .r = 3, .edges = 20, .loops = 0, .seed = 3}});
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads: " << threads << "\n";
  std::cout << std::left << std::setw(8) << "case" << std::setw(8) << "kernel" << std::right
            << std::setw(12) << "serial_s" << std::setw(12) << "omp_s" << std::setw(10) << "speedup"
            << "  agree\n";

  bool all_agree = true;
  for (const auto& c : cases) {
    const auto cc = kernels::CompiledCover::from(generate_random(c.params));
    const auto total = Total(cc);

    std::vector<std::uint64_t> hs;
    std::vector<std::uint64_t> ho;
    const double bs = BestOf(repeat, [&] { hs = kernels::brute_histogram_serial(cc, total); });
    const double bo = BestOf(repeat, [&] { ho = kernels::brute_histogram_omp(cc, total); });

    IntPolynomial ds;
    IntPolynomial dp;
    const double ts = BestOf(repeat, [&] {
      EngineStats stats;
      ds = kernels::dc_serial(cc, stats);
    });
    const double to = BestOf(repeat, [&] {
      EngineStats stats;
      dp = kernels::dc_omp(cc, 12, stats);
    });

    const auto row = [&](const char* kernel, double serial, double omp, bool agree) {
      std::cout << std::left << std::setw(8) << c.name << std::setw(8) << kernel << std::right
                << std::fixed << std::setprecision(4) << std::setw(12) << serial << std::setw(12)
                << omp << std::setw(9) << std::setprecision(2) << serial / std::max(omp, 1e-9)
                << "x  " << (agree ? "yes" : "NO") << "\n";
    };
    row("brute", bs, bo, hs == ho);
    row("dc", ts, to, ds == dp);
    all_agree = all_agree && hs == ho && ds == dp;
  }
  return all_agree ? 0 : 1;
}
