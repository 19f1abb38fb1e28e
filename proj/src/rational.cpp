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
#include "linkset/rational.hpp"

#include <cctype>

#include "linkset/error.hpp"

namespace linkset {

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto digits = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = allow_sign && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) fail(ErrorCode::parse_error, "bad rational '" + text + "'");
  const mpz_class d(den);
  if (d == 0) fail(ErrorCode::parse_error, "zero denominator in '" + text + "'");
  Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  q.canonicalize();
  return q;
}

}  // namespace linkset
