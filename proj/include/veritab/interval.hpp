#pragma once

// Small interval-set algebra over exact rationals. Quantity denotations are
// finite unions of intervals (points, rays, segments), so subset/disjoint/
// equality checks stay exact. The universe for exhaustiveness checks is the
// non-negative ray: negative values never participate in complement-based
// negation.

#include <optional>
#include <string>
#include <vector>

#include "veritab/num.hpp"

namespace veritab {

struct Interval {
  // Unset lo means -inf, unset hi means +inf.
  std::optional<Num> lo, hi;
  bool lo_closed = true, hi_closed = true;

  static Interval point(const Num& v) { return {v, v, true, true}; }
  static Interval at_least(const Num& v) { return {v, std::nullopt, true, true}; }
  static Interval at_most(const Num& v) { return {std::nullopt, v, true, true}; }
  static Interval greater_than(const Num& v) { return {v, std::nullopt, false, true}; }
  static Interval less_than(const Num& v) { return {std::nullopt, v, true, false}; }
  static Interval closed(const Num& a, const Num& b) { return {a, b, true, true}; }

  bool empty() const;
  bool contains(const Num& v) const;
};

class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval iv) { add(iv); }

  void add(Interval iv);
  bool empty() const { return parts_.empty(); }
  bool contains(const Num& v) const;
  bool operator==(const IntervalSet& o) const;

  bool subset_of(const IntervalSet& o) const;
  bool disjoint_with(const IntervalSet& o) const;

  // True when this ∪ o covers [0, +inf) and neither set reaches below 0.
  bool exhaustive_with(const IntervalSet& o) const;

  // [0, +inf) \ this.
  IntervalSet complement_in_naturals() const;

  const std::vector<Interval>& parts() const { return parts_; }
  std::string describe() const;

 private:
  void normalize();
  std::vector<Interval> parts_;
};

}  // namespace veritab
