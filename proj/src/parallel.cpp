#include "hypdeg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace hypdeg {

int thread_count() {
  const char* env = std::getenv("HYPDEG_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int n = std::stoi(env);
    return std::clamp(n, 1, 256);
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace hypdeg
