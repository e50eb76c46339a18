#include "csitq/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace csitq {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  n = std::min(n, 16);
  if (const char* env = std::getenv("CSITQ_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<int>(std::min<long>(v, 256));
  }
  return n;
}

}  // namespace csitq
