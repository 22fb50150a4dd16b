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

#include "berge/linear.h"

#include <stdexcept>

namespace berge {

std::string ToString(const LinearFn& fn) {
  return "(" + fn.slope.get_str() + ")*x + (" + fn.intercept.get_str() + ")";
}

SolutionSet SolutionSet::Empty() { return SolutionSet(); }

SolutionSet SolutionSet::Full() { return Interval(0, false, 1, false); }

SolutionSet SolutionSet::Point(const Rational& value) {
  SolutionSet set;
  if (value <= 0 || value >= 1) return set;
  set.kind_ = Kind::kPoint;
  set.lo_ = value;
  set.hi_ = value;
  set.lo_inclusive_ = true;
  set.hi_inclusive_ = true;
  return set;
}

SolutionSet SolutionSet::Interval(const Rational& lo, bool lo_inclusive,
                                  const Rational& hi, bool hi_inclusive) {
  SolutionSet set;
  set.lo_ = lo;
  set.hi_ = hi;
  set.lo_inclusive_ = lo_inclusive;
  set.hi_inclusive_ = hi_inclusive;
  if (set.lo_ <= 0) {
    set.lo_ = 0;
    set.lo_inclusive_ = false;
  }
  if (set.hi_ >= 1) {
    set.hi_ = 1;
    set.hi_inclusive_ = false;
  }
  if (set.lo_ > set.hi_) return Empty();
  if (set.lo_ == set.hi_) {
    if (set.lo_inclusive_ && set.hi_inclusive_) return Point(set.lo_);
    return Empty();
  }
  set.kind_ = Kind::kInterval;
  return set;
}

bool SolutionSet::IsFull() const {
  return kind_ == Kind::kInterval && lo_ == 0 && hi_ == 1;
}

bool SolutionSet::Contains(const Rational& x) const {
  switch (kind_) {
    case Kind::kEmpty:
      return false;
    case Kind::kPoint:
      return x == lo_;
    case Kind::kInterval:
      return (lo_inclusive_ ? x >= lo_ : x > lo_) &&
             (hi_inclusive_ ? x <= hi_ : x < hi_);
  }
  return false;
}

bool SolutionSet::operator==(const SolutionSet& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::kEmpty) return true;
  return lo_ == other.lo_ && hi_ == other.hi_ &&
         lo_inclusive_ == other.lo_inclusive_ &&
         hi_inclusive_ == other.hi_inclusive_;
}

std::string SolutionSet::ToString() const {
  switch (kind_) {
    case Kind::kEmpty:
      return "empty";
    case Kind::kPoint:
      return lo_.get_str();
    case Kind::kInterval:
      return std::string(lo_inclusive_ ? "[" : "(") + lo_.get_str() + ", " +
             hi_.get_str() + (hi_inclusive_ ? "]" : ")");
  }
  return "";
}

namespace {

// Roots of diff(x) = 0 inside (0, 1).
SolutionSet SolveZero(const LinearFn& diff) {
  if (diff.slope == 0) {
    return diff.intercept == 0 ? SolutionSet::Full() : SolutionSet::Empty();
  }
  return SolutionSet::Point(-diff.intercept / diff.slope);
}

}  // namespace

SolutionSet SolveAllEqual(std::span<const LinearFn> lines) {
  if (lines.empty()) {
    throw std::invalid_argument("SolveAllEqual: empty system");
  }
  SolutionSet result = SolutionSet::Full();
  for (std::size_t k = 1; k < lines.size() && !result.IsEmpty(); ++k) {
    if (lines[k] == lines[0]) continue;
    result = Intersect(result, SolveZero(lines[k] - lines[0]));
  }
  return result;
}

SolutionSet SolveGe(const LinearFn& g, const LinearFn& f) {
  const LinearFn diff = g - f;
  if (diff.slope == 0) {
    return diff.intercept >= 0 ? SolutionSet::Full() : SolutionSet::Empty();
  }
  const Rational root = -diff.intercept / diff.slope;
  if (diff.slope > 0) return SolutionSet::Interval(root, true, 1, false);
  return SolutionSet::Interval(0, false, root, true);
}

SolutionSet Intersect(const SolutionSet& a, const SolutionSet& b) {
  if (a.IsEmpty() || b.IsEmpty()) return SolutionSet::Empty();
  if (a.IsPoint()) {
    return b.Contains(a.point()) ? a : SolutionSet::Empty();
  }
  if (b.IsPoint()) {
    return a.Contains(b.point()) ? b : SolutionSet::Empty();
  }
  Rational lo = a.lo();
  bool lo_inclusive = a.lo_inclusive();
  if (b.lo() > lo) {
    lo = b.lo();
    lo_inclusive = b.lo_inclusive();
  } else if (b.lo() == lo) {
    lo_inclusive = lo_inclusive && b.lo_inclusive();
  }
  Rational hi = a.hi();
  bool hi_inclusive = a.hi_inclusive();
  if (b.hi() < hi) {
    hi = b.hi();
    hi_inclusive = b.hi_inclusive();
  } else if (b.hi() == hi) {
    hi_inclusive = hi_inclusive && b.hi_inclusive();
  }
  return SolutionSet::Interval(lo, lo_inclusive, hi, hi_inclusive);
}

}  // namespace berge
