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
#include <cstdint>
#include <string>
#include <vector>

#include "predimlab/errors.hpp"

namespace predimlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Smallest integer >= q.
inline std::int64_t ceil_int(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (quot * den != num && num > 0) quot += 1;
  return quot.convert_to<std::int64_t>();
}

/// A control function with f(0) = 0, f(1) = n and increments
/// f(k) - f(k-1) = slope / (k-1) for k >= 2. slope = 1 is the harmonic
/// family f(k) = n + H_{k-1}; slope must lie in (0, 1].
class ControlFunction {
 public:
  static ControlFunction harmonic(std::int64_t n, Rational slope = 1) {
    if (n <= 0) throw InputError("control function needs n > 0");
    if (slope <= 0 || slope > 1) throw InputError("control function slope must lie in (0, 1]");
    ControlFunction f;
    f.n_ = n;
    f.slope_ = slope;
    f.name_ = slope == 1 ? "harmonic" : "harmonic(slope=" + to_string(slope) + ")";
    return f;
  }

  std::int64_t n() const noexcept { return n_; }
  const Rational& slope() const noexcept { return slope_; }
  const std::string& name() const noexcept { return name_; }

  Rational eval(std::size_t k) const {
    if (k == 0) return 0;
    Rational v = n_;
    for (std::size_t j = 2; j <= k; ++j) v += slope_ / Rational(static_cast<std::int64_t>(j - 1));
    return v;
  }

  /// f(k) - f(k-1), for k >= 1.
  Rational increment(std::size_t k) const {
    if (k == 0) throw InputError("increment needs k >= 1");
    if (k == 1) return n_;
    return slope_ / Rational(static_cast<std::int64_t>(k - 1));
  }

  /// ceil(f(k)) for k = 0..upto: delta is an integer, so delta >= f(k) iff
  /// delta >= ceil(f(k)).
  std::vector<std::int64_t> thresholds(std::size_t upto) const {
    std::vector<std::int64_t> t(upto + 1);
    Rational v = 0;
    for (std::size_t k = 0; k <= upto; ++k) {
      if (k == 1) v = n_;
      if (k >= 2) v += slope_ / Rational(static_cast<std::int64_t>(k - 1));
      t[k] = ceil_int(v);
    }
    return t;
  }

  /// Checks the discrete goodness conditions up to `upto`; returns an empty
  /// string when they hold, otherwise a description of the first failure.
  std::string goodness_violation(std::size_t upto) const {
    if (eval(0) != 0) return "f(0) != 0";
    if (eval(1) != n_) return "f(1) != n";
    for (std::size_t k = 2; k <= upto; ++k) {
      const Rational inc = increment(k);
      if (inc <= 0) return "increment at " + std::to_string(k) + " is not positive";
      if (inc > Rational(1) / Rational(static_cast<std::int64_t>(k - 1)))
        return "increment at " + std::to_string(k) + " exceeds 1/(k-1)";
      if (k >= 3 && inc > increment(k - 1)) return "increments increase at " + std::to_string(k);
    }
    // f(x + y) <= f(x) + y * (increment at x + 1)
    for (std::size_t x = 1; x <= upto; ++x)
      for (std::size_t y = 0; x + y <= upto; ++y)
        if (eval(x + y) > eval(x) + Rational(static_cast<std::int64_t>(y)) * increment(x + 1))
          return "concavity fails at x=" + std::to_string(x) + ", y=" + std::to_string(y);
    return {};
  }

 private:
  ControlFunction() = default;
  std::int64_t n_ = 1;
  Rational slope_ = 1;
  std::string name_;
};

inline Rational eval_f(const ControlFunction& f, std::size_t k) { return f.eval(k); }

}  // namespace predimlab
