#pragma once

#include <gtest/gtest.h>

#include "mphide/error.hpp"

// Passes when `stmt` throws mphide::Error with the given kind.
#define EXPECT_ERROR_KIND(stmt, expected_kind)                                  \
  do {                                                                          \
    try {                                                                       \
      stmt;                                                                     \
      ADD_FAILURE() << "no error thrown by " #stmt;                             \
    } catch (const ::mphide::Error& e) {                                        \
      EXPECT_EQ(::mphide::to_string(e.kind()), ::mphide::to_string(expected_kind)) \
          << e.what();                                                          \
    }                                                                           \
  } while (false)
