#include <iostream>

#include "gtq/errors.hpp"
#include "gtq/verify.hpp"

// Usage: acceptance [data-dir]
int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : GTQ_DATA_DIR;
  try {
    bool ok = true;
    for (const auto& r : gtq::run_acceptance(dir)) {
      std::cout << r.line() << "\n";
      for (std::size_t i = 1; i < r.failures.size(); ++i) std::cout << "  " << r.failures[i] << "\n";
      ok &= r.pass();
    }
    return ok ? 0 : 1;
  } catch (const gtq::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
