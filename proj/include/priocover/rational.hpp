// Copyright 2026 The priocover Authors.
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

// Exact rational arithmetic used by every numeric step of the library.

#ifndef PRIOCOVER_RATIONAL_HPP_
#define PRIOCOVER_RATIONAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace priocover {

// Arbitrary-precision rational in canonical (reduced, positive denominator)
// form. Expression templates are disabled so that `auto` behaves as a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline Rational MakeRational(int64_t num, int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt Numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt Denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool IsInteger(const Rational& q) { return Denominator(q) == 1; }

// Largest integer <= q.
inline BigInt Floor(const Rational& q) {
  BigInt n = Numerator(q), d = Denominator(q);
  BigInt f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

// Smallest integer >= q.
inline BigInt Ceil(const Rational& q) { return -Floor(-q); }

inline int64_t ToInt64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) {
    throw std::overflow_error("integer does not fit in 64 bits");
  }
  return v.convert_to<int64_t>();
}

// Renders "p" for integers and "p/q" otherwise.
inline std::string ToString(const Rational& q) {
  if (IsInteger(q)) return Numerator(q).str();
  return Numerator(q).str() + "/" + Denominator(q).str();
}

// Parses "p", "-p" or "p/q".
inline Rational ParseRational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

inline double ToDouble(const Rational& q) { return q.convert_to<double>(); }

template <typename T>
std::vector<Rational> ToRationalVector(const std::vector<T>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(e);
  return out;
}

inline Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace priocover

#endif  // PRIOCOVER_RATIONAL_HPP_
