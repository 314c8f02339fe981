#include <iostream>

#include "crosscut/suite.hpp"

int main() {
  const auto results = crosscut::suite::run(crosscut::suite::Options{});
  int failed = 0;
  for (const auto& r : results) {
    std::cout << crosscut::suite::format(r) << '\n';
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: all " : "acceptance: ") << results.size() - static_cast<std::size_t>(failed)
            << '/' << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
