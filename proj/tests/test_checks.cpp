// Copyright 2026-present the rankdb authors
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

#include <gtest/gtest.h>

#include "rankdb/checks.hpp"

using namespace rankdb::checks;

class Suites : public ::testing::TestWithParam<Suite> {};

TEST_P(Suites, GreenAtSmallScale) {
  CheckOptions opt;
  opt.seed = 11;
  opt.iterations = 100;
  for (const auto& r : GetParam().run(opt)) {
    EXPECT_TRUE(r.ok()) << format_result(r);
  }
}

INSTANTIATE_TEST_SUITE_P(All, Suites, ::testing::ValuesIn(suites()),
                         [](const auto& info) { return std::string(info.param.name); });
