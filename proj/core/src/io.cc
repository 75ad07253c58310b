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

#include "privbound/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "absl/strings/ascii.h"

namespace privbound {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Splits into non-empty, non-comment lines of whitespace-separated tokens.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  for (absl::string_view raw :
       absl::StrSplit(absl::string_view(text.data(), text.size()), '\n')) {
    ++number;
    raw = absl::StripAsciiWhitespace(raw);
    if (raw.empty() || raw.front() == '#') continue;
    Line line{number, {}};
    for (absl::string_view tok :
         absl::StrSplit(raw, absl::ByAnyChar(" \t\r"), absl::SkipEmpty())) {
      line.tokens.emplace_back(tok.data(), tok.size());
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

absl::Status LineError(int line, std::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", std::string(message)));
}

bool ParseInt(std::string_view tok, int& out) {
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

bool ParseDouble(std::string_view tok, double& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size() && std::isfinite(out);
}

// Parses `expected_rows` rows of `width` non-negative decimals following the
// header line at lines[0].
absl::StatusOr<std::vector<double>> ParseRows(const std::vector<Line>& lines,
                                              int expected_rows, int width) {
  const int available = static_cast<int>(lines.size()) - 1;
  if (available < expected_rows) {
    const int last = lines.back().number;
    return LineError(last, absl::StrFormat(
                               "dimension mismatch: expected %d data rows, found %d",
                               expected_rows, available));
  }
  if (available > expected_rows) {
    return LineError(lines[expected_rows + 1].number,
                     absl::StrFormat("dimension mismatch: expected %d data rows",
                                     expected_rows));
  }
  std::vector<double> values;
  values.reserve(static_cast<size_t>(expected_rows) * width);
  for (int r = 1; r <= expected_rows; ++r) {
    const Line& line = lines[r];
    if (static_cast<int>(line.tokens.size()) != width) {
      return LineError(line.number,
                       absl::StrFormat("dimension mismatch: expected %d entries, found %d",
                                       width, line.tokens.size()));
    }
    for (std::string_view tok : line.tokens) {
      double v = 0;
      if (!ParseDouble(tok, v)) {
        return LineError(line.number, absl::StrCat("malformed number '", std::string(tok), "'"));
      }
      if (v < 0) {
        return LineError(line.number, absl::StrCat("negative entry ", std::string(tok)));
      }
      values.push_back(v);
    }
  }
  return values;
}

}  // namespace

absl::StatusOr<JointDistribution> ParseDistribution(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) return LineError(1, "malformed header: file is empty");
  const Line& header = lines.front();
  int nx = 0;
  int ny = 0;
  if (header.tokens.size() != 3 || header.tokens[0] != "pxy" ||
      !ParseInt(header.tokens[1], nx) || !ParseInt(header.tokens[2], ny) ||
      nx < 1 || ny < 1) {
    return LineError(header.number, "malformed header: expected 'pxy <nx> <ny>'");
  }
  auto values = ParseRows(lines, nx, ny);
  if (!values.ok()) return values.status();
  const double total = std::accumulate(values->begin(), values->end(), 0.0);
  if (std::abs(total - 1.0) > kMassTolerance) {
    return LineError(lines.back().number,
                     absl::StrFormat("entries sum to %.12g, not 1", total));
  }
  return JointDistribution::Create(nx, ny, *std::move(values));
}

std::string FormatDistribution(const JointDistribution& joint) {
  std::string out = absl::StrFormat("pxy %d %d\n", joint.nx(), joint.ny());
  for (int x = 0; x < joint.nx(); ++x) {
    for (int y = 0; y < joint.ny(); ++y) {
      absl::StrAppendFormat(&out, "%s%.17g", y == 0 ? "" : " ", joint(x, y));
    }
    out += '\n';
  }
  return out;
}

absl::StatusOr<Mechanism> ParseMechanism(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) return LineError(1, "malformed header: file is empty");
  const Line& header = lines.front();
  int nu = 0;
  int nx = 0;
  int ny = 0;
  if (header.tokens.size() != 4 || header.tokens[0] != "puxy" ||
      !ParseInt(header.tokens[1], nu) || !ParseInt(header.tokens[2], nx) ||
      !ParseInt(header.tokens[3], ny) || nu < 1 || nx < 1 || ny < 1) {
    return LineError(header.number,
                     "malformed header: expected 'puxy <nu> <nx> <ny>'");
  }
  auto values = ParseRows(lines, nx * ny, nu);
  if (!values.ok()) return values.status();
  for (int r = 0; r < nx * ny; ++r) {
    const auto begin = values->begin() + static_cast<std::ptrdiff_t>(r) * nu;
    const double mass = std::accumulate(begin, begin + nu, 0.0);
    if (std::abs(mass - 1.0) > kMassTolerance) {
      return LineError(lines[r + 1].number,
                       absl::StrFormat("row sums to %.12g, not 1", mass));
    }
    if (std::abs(mass - 1.0) > 8 * std::numeric_limits<double>::epsilon()) {
      std::for_each(begin, begin + nu, [mass](double& v) { v /= mass; });
    }
  }
  bool hidden = true;
  for (int x = 1; x < nx && hidden; ++x) {
    for (int i = 0; i < ny * nu && hidden; ++i) {
      hidden = std::abs((*values)[i] - (*values)[x * ny * nu + i]) <= 1e-12;
    }
  }
  return Mechanism::Create(nu, nx, ny, *std::move(values),
                           hidden ? Scenario::kHidden : Scenario::kObserved);
}

std::string FormatMechanism(const Mechanism& mechanism) {
  std::string out = absl::StrFormat("puxy %d %d %d\n", mechanism.nu(),
                                    mechanism.nx(), mechanism.ny());
  for (int x = 0; x < mechanism.nx(); ++x) {
    for (int y = 0; y < mechanism.ny(); ++y) {
      const auto row = mechanism.Row(x, y);
      for (int u = 0; u < mechanism.nu(); ++u) {
        absl::StrAppendFormat(&out, "%s%.17g", u == 0 ? "" : " ", row[u]);
      }
      out += '\n';
    }
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

}  // namespace privbound
