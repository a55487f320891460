// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include "liegiambelli/acceptance.hpp"

#include <chrono>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  namespace acc = liegiambelli::acceptance;
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  int failed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const acc::Suite& suite : acc::suites()) {
    for (const acc::CriterionResult& r : acc::run(suite.name)) {
      std::cout << acc::format(r, verbose) << std::flush;
      failed += r.passed ? 0 : 1;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failed ? "FAILED: " : "OK: ") << acc::suites().size() - static_cast<std::size_t>(failed) << "/"
            << acc::suites().size() << " criteria passed in " << seconds << " s\n";
  return failed ? 1 : 0;
}
