#pragma once

#include <vector>

#include "doctest.h"
#include "sgforge/enumerate.hpp"
#include "sgforge/error.hpp"

#define CHECK_THROWS_CODE(expr, expected)                     \
  do {                                                        \
    bool thrown_ = false;                                     \
    try {                                                     \
      (void)(expr);                                           \
    } catch (const sgforge::Error& e_) {                      \
      thrown_ = true;                                         \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());      \
    }                                                         \
    CHECK_MESSAGE(thrown_, "no exception from " #expr);       \
  } while (0)

inline const std::vector<sgforge::NumericalSemigroup>& small_suite() {
  static const auto all = sgforge::enumerate_semigroups({7, 25});
  return all;
}
