/*
 * Copyright (c) 2026, The linkset authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <gmpxx.h>

#include <string>

namespace linkset {

using Rational = mpq_class;

struct Point2 {
  Rational x;
  Rational y;

  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point2& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator*(const Rational& k, const Point2& a) { return {k * a.x, k * a.y}; }

/// z-component of a × b.
inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
/// Signed area test for the turn o -> a -> b.
inline int orientation(const Point2& o, const Point2& a, const Point2& b) { return sgn(cross(a - o, b - o)); }

/// Always "num/den", e.g. "3/1", "-1/2".
std::string format_rational(const Rational& q);
/// Accepts "num/den" or an integer; throws parse_error otherwise.
Rational parse_rational(const std::string& text);

}  // namespace linkset
