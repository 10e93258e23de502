#include <cstdlib>
#include <iostream>
#include <string>

#include "ncop/acceptance.hpp"

// Usage: acceptance [--thorough] [--seed N] [criterion ids...]
int main(int argc, char** argv) {
  ncop::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--thorough") opt.thorough = true;
    else if (a == "--seed" && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
    else opt.only.push_back(std::stoi(a));
  }
  int failed = 0;
  ncop::run_acceptance(opt, [&](const ncop::CriterionResult& r) {
    failed += !r.pass;
    std::cout << ncop::format_result(r) << std::endl;
  });
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : std::string("ALL PASS")) << "\n";
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
