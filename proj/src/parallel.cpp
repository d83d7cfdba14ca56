#include "glj/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace glj {

namespace {

int initial_threads() {
  if (const char* env = std::getenv("GLJ_NUM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

int& thread_setting() {
  static int n = initial_threads();
  return n;
}

}  // namespace

int num_threads() { return thread_setting(); }

void set_num_threads(int n) { thread_setting() = n > 0 ? n : initial_threads(); }

}  // namespace glj
