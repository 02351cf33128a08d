// Runs every acceptance check and prints one PASS/FAIL line per check.
// Usage: acceptance [--seed N] [--workers W] [--only id,id,...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "momzeta/acceptance.hpp"

int main(int argc, char** argv) {
  momzeta::acceptance::Options opt;
  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (i + 1 >= argc) {
      std::fprintf(stderr, "missing value for %s\n", a.c_str());
      return 2;
    }
    const std::string v = argv[++i];
    if (a == "--seed") {
      opt.seed = std::strtoull(v.c_str(), nullptr, 10);
    } else if (a == "--workers") {
      opt.workers = static_cast<unsigned>(std::strtoul(v.c_str(), nullptr, 10));
    } else if (a == "--only") {
      std::stringstream ss(v);
      std::string id;
      while (std::getline(ss, id, ',')) only.push_back(id);
    } else {
      std::fprintf(stderr, "unknown option %s\n", a.c_str());
      return 2;
    }
  }

  int failed = 0;
  int total = 0;
  auto t0 = std::chrono::steady_clock::now();
  momzeta::acceptance::run(opt, only, [&](const momzeta::acceptance::Criterion& c) {
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    t0 = t1;
    ++total;
    failed += c.pass ? 0 : 1;
    std::printf("%s [%s] %s: %s (%.1fs)\n", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), c.detail.c_str(),
                secs);
    std::fflush(stdout);
  });
  std::printf("%d/%d checks passed\n", total - failed, total);
  return failed == 0 ? 0 : 1;
}
