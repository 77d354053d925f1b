// Runs every acceptance criterion at full size and prints one line each.
#include <iostream>

#include "confspace/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& c : confspace::acceptance::criteria()) {
    const auto r = confspace::acceptance::run(c);
    std::cout << r.line() << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
