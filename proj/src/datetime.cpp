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

#include "blemish/datetime.hpp"

#include <chrono>
#include <cstdio>

namespace blemish::datetime {
namespace {

using std::chrono::days;
using std::chrono::sys_days;

constexpr std::int64_t kMinSeconds = -62135596800;  // 0001-01-01T00:00:00
constexpr std::int64_t kMaxSeconds = 253402300799;  // 9999-12-31T23:59:59

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool read_digits(std::string_view token, std::size_t& pos, int width, int& value) {
  if (pos + width > token.size()) return false;
  value = 0;
  for (int i = 0; i < width; ++i) {
    const char c = token[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  pos += width;
  return true;
}

void append_padded(std::string& out, int value, int width) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%0*d", width, value);
  out += buf;
}

}  // namespace

bool in_range(std::int64_t seconds) { return seconds >= kMinSeconds && seconds <= kMaxSeconds; }

std::optional<std::int64_t> parse(std::string_view token, std::string_view format) {
  int year = 1970, month = 1, day = 1, hour = 0, minute = 0, second = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < format.size(); ++i) {
    const char f = format[i];
    if (f != '%' || i + 1 == format.size()) {
      if (pos >= token.size() || token[pos] != f) return std::nullopt;
      ++pos;
      continue;
    }
    const char spec = format[++i];
    bool ok = true;
    switch (spec) {
      case 'Y': ok = read_digits(token, pos, 4, year); break;
      case 'm': ok = read_digits(token, pos, 2, month); break;
      case 'd': ok = read_digits(token, pos, 2, day); break;
      case 'H': ok = read_digits(token, pos, 2, hour); break;
      case 'M': ok = read_digits(token, pos, 2, minute); break;
      case 'S': ok = read_digits(token, pos, 2, second); break;
      case '%':
        ok = pos < token.size() && token[pos] == '%';
        ++pos;
        break;
      default: return std::nullopt;
    }
    if (!ok) return std::nullopt;
  }
  if (pos != token.size()) return std::nullopt;
  if (year < 1 || hour > 23 || minute > 59 || second > 59) return std::nullopt;
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{static_cast<unsigned>(month)},
                                        std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) return std::nullopt;
  const std::int64_t day_count = sys_days{ymd}.time_since_epoch().count();
  return day_count * kSecondsPerDay + hour * 3600 + minute * 60 + second;
}

std::string format(std::int64_t seconds, std::string_view fmt) {
  const std::int64_t day_count = floor_div(seconds, kSecondsPerDay);
  const std::int64_t rem = seconds - day_count * kSecondsPerDay;
  const std::chrono::year_month_day ymd{sys_days{days{day_count}}};
  std::string out;
  for (std::size_t i = 0; i < fmt.size(); ++i) {
    if (fmt[i] != '%' || i + 1 == fmt.size()) {
      out += fmt[i];
      continue;
    }
    switch (fmt[++i]) {
      case 'Y': append_padded(out, static_cast<int>(ymd.year()), 4); break;
      case 'm': append_padded(out, static_cast<int>(static_cast<unsigned>(ymd.month())), 2); break;
      case 'd': append_padded(out, static_cast<int>(static_cast<unsigned>(ymd.day())), 2); break;
      case 'H': append_padded(out, static_cast<int>(rem / 3600), 2); break;
      case 'M': append_padded(out, static_cast<int>(rem / 60 % 60), 2); break;
      case 'S': append_padded(out, static_cast<int>(rem % 60), 2); break;
      case '%': out += '%'; break;
      default: out += '%'; out += fmt[i]; break;
    }
  }
  return out;
}

bool has_time_fields(std::string_view fmt) {
  return fmt.find("%H") != std::string_view::npos || fmt.find("%M") != std::string_view::npos ||
         fmt.find("%S") != std::string_view::npos;
}

bool is_iso_format(std::string_view fmt) { return fmt.substr(0, 8) == "%Y-%m-%d"; }

std::string alternate_format(std::string_view declared) {
  const bool with_time = has_time_fields(declared);
  if (is_iso_format(declared)) return with_time ? "%d/%m/%Y %H:%M:%S" : "%d/%m/%Y";
  return with_time ? "%Y-%m-%dT%H:%M:%S" : "%Y-%m-%d";
}

}  // namespace blemish::datetime
