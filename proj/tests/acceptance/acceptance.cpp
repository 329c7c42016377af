#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "suite/suite.hpp"

// Usage: acceptance [--seed S] [--criterion N]... ; one line per criterion.
int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  std::vector<int> ids;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if ((arg == "--seed" || arg == "--criterion") && k + 1 < argc) {
      const std::string value = argv[++k];
      if (arg == "--seed")
        seed = std::strtoull(value.c_str(), nullptr, 10);
      else
        ids.push_back(std::atoi(value.c_str()));
    } else {
      std::cerr << "usage: acceptance [--seed S] [--criterion N]...\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& r : invtensor::suite::run_suite(seed, ids)) {
    std::cout << invtensor::suite::summary_line(r) << '\n';
    for (const auto& c : r.detail.at("checks"))
      if (!c.at("passed").get<bool>() && !c.value("informational", false))
        std::cout << "      failed check: " << c.dump() << '\n';
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
