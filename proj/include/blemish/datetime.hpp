// Copyright 2026 The Blemish Authors.
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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// Minimal strftime-style formatting: %Y (4 digits), %m %d %H %M %S (2 digits),
// %% and literal characters. Parsing requires the whole token to match.
namespace blemish::datetime {

inline constexpr std::array<std::string_view, 3> kIsoFormats = {
    "%Y-%m-%d", "%Y-%m-%dT%H:%M:%S", "%Y-%m-%d %H:%M:%S"};

inline constexpr std::int64_t kSecondsPerDay = 86400;

std::optional<std::int64_t> parse(std::string_view token, std::string_view format);
std::string format(std::int64_t seconds, std::string_view format);

bool has_time_fields(std::string_view format);
bool is_iso_format(std::string_view format);

// Day-first with slashes for ISO formats, ISO otherwise. Time fields are kept
// when the declared format has them.
std::string alternate_format(std::string_view declared);

// Years 1..9999 are representable by %Y.
bool in_range(std::int64_t seconds);

}  // namespace blemish::datetime
