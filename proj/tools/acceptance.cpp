#include <iostream>

#include "khecke/verify.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  bool ok = true;
  for (int id = 1; id <= khecke::criterion_count; ++id) {
    const auto r = khecke::run_criterion(id, [](const std::string& msg) { std::cerr << msg << '\n'; });
    std::cout << khecke::format_result(r, verbose) << std::flush;
    ok = ok && r.acceptable();
  }
  return ok ? 0 : 1;
}
