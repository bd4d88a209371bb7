#pragma once

#include <stdexcept>

// Internal invariant check that stays on in release builds.
#define BICANON_CHECK(cond)                                                          \
  do {                                                                               \
    if (!(cond)) throw std::logic_error("internal invariant violated: " #cond);      \
  } while (0)
