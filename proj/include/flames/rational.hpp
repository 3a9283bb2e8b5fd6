// Copyright 2026 The Authors.
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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "flames/errors.hpp"

namespace flames {

// All arithmetic in this library is exact. Capacities, flows and
// connectivity values are rationals with arbitrary-precision numerator
// and denominator, kept in canonical (lowest-terms) form by the backend.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& x) { return denominator(x) == 1; }

/// Serializes as "p/q" in lowest terms ("0/1", "2/1", "5/6"). This is the
/// canonical machine format used in all reports; parse_rational inverts it
/// bit-exactly.
inline std::string rat_to_string(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace detail

/// Accepts an integer ("2"), a decimal ("0.5"), or a ratio ("p/q"), all
/// non-negative. Returns nullopt on anything else.
inline std::optional<Rat> try_parse_rational(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
    BigInt q{std::string(den)};
    if (q == 0) return std::nullopt;
    return Rat(BigInt{std::string(num)}, q);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) return std::nullopt;
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt mantissa = BigInt{std::string(whole)} * scale + BigInt{std::string(frac)};
    return Rat(mantissa, scale);
  }
  if (!detail::all_digits(s)) return std::nullopt;
  return Rat(BigInt{std::string(s)});
}

inline Rat parse_rational(std::string_view s) {
  auto r = try_parse_rational(s);
  if (!r) throw input_error("malformed capacity '" + std::string(s) + "'");
  return *r;
}

}  // namespace flames
