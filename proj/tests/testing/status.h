// Copyright 2026 The LPAL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LPAL_TESTS_TESTING_STATUS_H_
#define LPAL_TESTS_TESTING_STATUS_H_

#include <gtest/gtest.h>

#include "lpal/error.h"

// Expects `statement` to throw lpal::Error with the given code.
#define EXPECT_LPAL_ERROR(statement, expected_code)                        \
  do {                                                                     \
    try {                                                                  \
      statement;                                                           \
      ADD_FAILURE() << "expected " << #expected_code << ", nothing thrown"; \
    } catch (const ::lpal::Error& e) {                                     \
      EXPECT_EQ(e.code(), expected_code)                                   \
          << ::lpal::error_code_name(e.code()) << ": " << e.what();        \
    }                                                                      \
  } while (0)

#endif  // LPAL_TESTS_TESTING_STATUS_H_
