// Classify a small (c, p) grid and print each verdict next to the
// solutions an exhaustive search actually finds.

#include <iostream>

#include "gmn/oracle.hpp"

int main() {
  using namespace gmn;
  const unsigned n_max = 60;
  for (unsigned c = 1; c <= 9; ++c) {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
      const Verdict v = classify_pair(c, p);
      const SolutionSet sols = solve_gmn_bounded(c, p, n_max);
      std::cout << "c=" << c << " p=" << p << ": " << to_string(v.kind)
                << "  found";
      if (sols.solutions.empty()) std::cout << " none";
      for (const Solution& s : sols.solutions)
        std::cout << " (x=" << s.x << ", n=" << s.exponent << ")";
      std::cout << "\n";
    }
  }
  return 0;
}
