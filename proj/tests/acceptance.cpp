// Runs the ten acceptance criteria and prints one line per criterion.
#include <iostream>

#include "djc/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : djc::run_acceptance()) {
    std::cout << djc::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << std::endl;
  return failed ? 1 : 0;
}
