// Acceptance harness: one pass/fail line per check, one summary per criterion.
#include <cstring>
#include <iostream>

#include "symqcs/acceptance.hpp"

int main(int argc, char** argv) {
  int only = 0;
  std::uint64_t seed = 2026;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    else {
      std::cerr << "usage: acceptance [--criterion 1..8] [--seed N]\n";
      return 1;
    }
  }
  bool all = true;
  for (int k = 1; k <= 8; ++k) {
    if (only && k != only) continue;
    try {
      auto r = symqcs::run_criterion(k, seed);
      symqcs::print_criterion(r, std::cout);
      all = all && r.passed();
    } catch (const std::exception& ex) {
      std::cout << "criterion " << k << ": FAIL (exception: " << ex.what() << ")\n";
      all = false;
    }
  }
  return all ? 0 : 2;
}
