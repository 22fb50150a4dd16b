// Copyright 2026 The Berge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BERGE_LINEAR_H_
#define BERGE_LINEAR_H_

#include <span>
#include <string>

#include <gmpxx.h>

namespace berge {

// Exact rational number. GMP keeps results of arithmetic in lowest terms.
using Rational = mpq_class;

// Affine function x -> slope * x + intercept of a single probability.
struct LinearFn {
  Rational slope;
  Rational intercept;

  Rational Evaluate(const Rational& x) const { return slope * x + intercept; }
  LinearFn operator-(const LinearFn& other) const {
    return {slope - other.slope, intercept - other.intercept};
  }
  bool operator==(const LinearFn& other) const = default;
};

std::string ToString(const LinearFn& fn);

// A subset of the open unit interval (0, 1): empty, a single point, or an
// interval whose finite endpoints may be inclusive. Instances are always
// normalized: points lie strictly inside (0, 1), interval endpoints at 0 or 1
// are exclusive, and degenerate intervals collapse to a point or to empty.
class SolutionSet {
 public:
  enum class Kind { kEmpty, kPoint, kInterval };

  static SolutionSet Empty();
  // The whole open interval (0, 1).
  static SolutionSet Full();
  // Empty when value is outside (0, 1).
  static SolutionSet Point(const Rational& value);
  // The interval is clipped to (0, 1) before normalization.
  static SolutionSet Interval(const Rational& lo, bool lo_inclusive,
                              const Rational& hi, bool hi_inclusive);

  Kind kind() const { return kind_; }
  bool IsEmpty() const { return kind_ == Kind::kEmpty; }
  bool IsPoint() const { return kind_ == Kind::kPoint; }
  bool IsInterval() const { return kind_ == Kind::kInterval; }
  bool IsFull() const;

  // For a point both bounds hold the point value.
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_inclusive() const { return lo_inclusive_; }
  bool hi_inclusive() const { return hi_inclusive_; }
  const Rational& point() const { return lo_; }

  bool Contains(const Rational& x) const;

  bool operator==(const SolutionSet& other) const;

  // "empty", "1/2", or bracket notation such as "[1/2, 1)".
  std::string ToString() const;

 private:
  SolutionSet() = default;

  Kind kind_ = Kind::kEmpty;
  Rational lo_ = 0;
  Rational hi_ = 0;
  bool lo_inclusive_ = false;
  bool hi_inclusive_ = false;
};

// The set of x in (0, 1) at which all lines take the same value. Affine
// equalities only admit the empty set, one point, or everything, so the
// result is never a proper sub-interval. Throws std::invalid_argument on an
// empty list.
SolutionSet SolveAllEqual(std::span<const LinearFn> lines);

// {x in (0, 1) : g(x) >= f(x)}.
SolutionSet SolveGe(const LinearFn& g, const LinearFn& f);

SolutionSet Intersect(const SolutionSet& a, const SolutionSet& b);

}  // namespace berge

#endif  // BERGE_LINEAR_H_
