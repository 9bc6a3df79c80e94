#include <cstdlib>
#include <iostream>

#include "pangular/verify.hpp"

int main(int argc, char** argv) {
  pangular::AcceptanceOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  int failures = 0;
  for (const auto& r : pangular::run_acceptance(opts)) {
    std::cout << pangular::format_result_line(r) << " (" << r.seconds << " s)\n";
    if (!r.passed) ++failures;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 9 - failures << "/9\n";
  return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
