// Copyright 2026 The qverify Authors
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

#pragma once

#include <stdexcept>

namespace qverify {

/// Base class of all qverify runtime failures. Plain argument misuse
/// (bad indices, size mismatches, malformed input) throws
/// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A register or matrix exceeds the configured simulation limits.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Computed thresholds leave no usable promise gap (b <= a). The instance
/// cannot back a statistically meaningful verification run.
class GapCollapseError : public Error {
 public:
  using Error::Error;
};

/// A repetition plan asks for more energy tests than the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Numerical state integrity violation, e.g. a measurement whose branch
/// probabilities have both collapsed to zero.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qverify
