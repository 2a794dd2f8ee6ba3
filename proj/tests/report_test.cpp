// Copyright 2026 The qmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmeasure/report.hpp"

#include <cmath>
#include <cstring>

#include "gtest/gtest.h"
#include "qmeasure/random.hpp"

using namespace qmeasure;

TEST(format_number, shortest_round_trip) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(INFINITY), "inf");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");

  Rng rng(17);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t bits = rng.next_u64();
    double x;
    std::memcpy(&x, &bits, sizeof x);
    if (!std::isfinite(x)) continue;
    ASSERT_EQ(std::strtod(format_number(x).c_str(), nullptr), x);
  }
}

TEST(csv_field, quoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(rows_to_csv, header_then_rows) {
  ExperimentResult r;
  r.rows.push_back({{"x", 0.5}, {"label", std::string("a,b")}, {"n", std::int64_t{3}}});
  r.rows.push_back({{"x", INFINITY}, {"label", std::string("inf")}, {"n", std::int64_t{-1}}});
  EXPECT_EQ(rows_to_csv(r), "x,label,n\n0.5,\"a,b\",3\ninf,inf,-1\n");
}

TEST(to_json, reemission_is_byte_identical) {
  ExperimentResult r;
  r.name = "demo";
  r.seed = 9;
  r.rows.push_back({{"p", 0.1}, {"mu", 1.0}, {"d", std::string("inf")}, {"k", std::int64_t{2}}});
  r.checks.push_back(make_check("c", Relation::kAtMost, 1e-17, 0.0, 1e-9));
  r.checks.push_back(make_check("inf", Relation::kEqual, INFINITY, INFINITY, 0.0));
  const std::string once = to_json(r);
  EXPECT_EQ(canonicalize_json(once), once);
  EXPECT_NE(once.find("\"observed\":\"inf\""), std::string::npos);

  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    ExperimentResult random;
    random.name = "random";
    for (int i = 0; i < 5; ++i) random.rows.push_back({{"v", rng.normal() * std::exp2(rng.uniform(-60, 60))}});
    const std::string emitted = to_json(random);
    ASSERT_EQ(canonicalize_json(emitted), emitted);
  }
}

TEST(state_set_document, shape) {
  const StateSet u{PureState::basis(2, 0), PureState::basis(2, 1)};
  EXPECT_EQ(to_state_set_document(u), "{\"dim\":2,\"states\":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]}");
}
