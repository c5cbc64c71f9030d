#include "stretchlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace stretchlab {

unsigned sweep_threads() {
  if (const char* env = std::getenv("STRETCHLAB_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // unparsable values fall back to auto
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace stretchlab
