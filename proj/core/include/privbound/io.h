// Copyright 2026 The Privbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats.
//
// Distribution file:
//   # optional comment lines
//   pxy <nx> <ny>
//   <nx lines of ny whitespace-separated decimals>
//
// Mechanism file:
//   puxy <nu> <nx> <ny>
//   <nx * ny lines of nu decimals; line index is x * ny + y>
//
// Blank lines and `#` comment lines are ignored anywhere. Errors carry the
// 1-based line number of the offending line.

#ifndef PRIVBOUND_IO_H_
#define PRIVBOUND_IO_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"
#include "privbound/mechanism.h"

namespace privbound {

absl::StatusOr<JointDistribution> ParseDistribution(std::string_view text);
std::string FormatDistribution(const JointDistribution& joint);

// A parsed mechanism is tagged hidden when its rows do not depend on x,
// observed otherwise. Each row may deviate from unit mass by up to
// kMassTolerance before renormalization.
absl::StatusOr<Mechanism> ParseMechanism(std::string_view text);
// Writes 17 significant digits so that a reloaded kernel reproduces every
// measure to double precision.
std::string FormatMechanism(const Mechanism& mechanism);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view contents);

}  // namespace privbound

#endif  // PRIVBOUND_IO_H_
