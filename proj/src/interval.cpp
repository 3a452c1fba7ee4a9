#include "veritab/interval.hpp"

#include <algorithm>

namespace veritab {

bool Interval::empty() const {
  if (!lo || !hi) return false;
  if (*lo > *hi) return true;
  if (*lo == *hi && !(lo_closed && hi_closed)) return true;
  return false;
}

bool Interval::contains(const Num& v) const {
  if (lo) {
    if (v < *lo) return false;
    if (v == *lo && !lo_closed) return false;
  }
  if (hi) {
    if (v > *hi) return false;
    if (v == *hi && !hi_closed) return false;
  }
  return true;
}

namespace {

// a ⊆ b for single intervals.
bool part_subset(const Interval& a, const Interval& b) {
  if (b.lo) {
    if (!a.lo) return false;
    if (*a.lo < *b.lo) return false;
    if (*a.lo == *b.lo && a.lo_closed && !b.lo_closed) return false;
  }
  if (b.hi) {
    if (!a.hi) return false;
    if (*a.hi > *b.hi) return false;
    if (*a.hi == *b.hi && a.hi_closed && !b.hi_closed) return false;
  }
  return true;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (!a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else if (!b.lo || *a.lo > *b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (*b.lo > *a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (!a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else if (!b.hi || *a.hi < *b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (*b.hi < *a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

bool parts_intersect(const Interval& a, const Interval& b) { return !intersect(a, b).empty(); }

// Sort key: lower bound ascending, -inf first.
bool lo_before(const Interval& a, const Interval& b) {
  if (!a.lo && !b.lo) return false;
  if (!a.lo) return true;
  if (!b.lo) return false;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed && !b.lo_closed;
}

}  // namespace

void IntervalSet::add(Interval iv) {
  if (iv.empty()) return;
  parts_.push_back(iv);
  normalize();
}

void IntervalSet::normalize() {
  std::sort(parts_.begin(), parts_.end(), lo_before);
  std::vector<Interval> merged;
  for (auto& p : parts_) {
    if (merged.empty()) {
      merged.push_back(p);
      continue;
    }
    Interval& last = merged.back();
    bool joins;
    if (!last.hi) {
      joins = true;
    } else if (!p.lo) {
      joins = true;
    } else if (*p.lo < *last.hi) {
      joins = true;
    } else if (*p.lo == *last.hi) {
      joins = last.hi_closed || p.lo_closed;
    } else {
      joins = false;
    }
    if (!joins) {
      merged.push_back(p);
      continue;
    }
    if (last.hi && (!p.hi || *p.hi > *last.hi || (*p.hi == *last.hi && p.hi_closed))) {
      last.hi = p.hi;
      last.hi_closed = p.hi ? p.hi_closed : true;
    }
  }
  parts_ = merged;
}

bool IntervalSet::contains(const Num& v) const {
  for (auto& p : parts_)
    if (p.contains(v)) return true;
  return false;
}

bool IntervalSet::operator==(const IntervalSet& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (size_t i = 0; i < parts_.size(); ++i) {
    const Interval &a = parts_[i], &b = o.parts_[i];
    if (static_cast<bool>(a.lo) != static_cast<bool>(b.lo)) return false;
    if (a.lo && (*a.lo != *b.lo || a.lo_closed != b.lo_closed)) return false;
    if (static_cast<bool>(a.hi) != static_cast<bool>(b.hi)) return false;
    if (a.hi && (*a.hi != *b.hi || a.hi_closed != b.hi_closed)) return false;
  }
  return true;
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
  for (auto& p : parts_) {
    bool placed = false;
    for (auto& q : o.parts_) {
      if (part_subset(p, q)) {
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

bool IntervalSet::disjoint_with(const IntervalSet& o) const {
  for (auto& p : parts_)
    for (auto& q : o.parts_)
      if (parts_intersect(p, q)) return false;
  return true;
}

bool IntervalSet::exhaustive_with(const IntervalSet& o) const {
  Num zero(0);
  IntervalSet both = *this;
  for (auto& q : o.parts_) both.add(q);
  for (auto& p : parts_)
    if (!p.lo || *p.lo < zero) return false;
  for (auto& q : o.parts_)
    if (!q.lo || *q.lo < zero) return false;
  // Union must be a single piece [0, +inf).
  return both.parts_.size() == 1 && both.parts_[0].lo && *both.parts_[0].lo == zero &&
         both.parts_[0].lo_closed && !both.parts_[0].hi;
}

IntervalSet IntervalSet::complement_in_naturals() const {
  Num zero(0);
  Interval universe = Interval::at_least(zero);
  std::vector<Interval> clipped;
  for (auto& p : parts_) {
    Interval c = intersect(p, universe);
    if (!c.empty()) clipped.push_back(c);
  }
  IntervalSet out;
  std::optional<Num> cur = zero;
  bool cur_closed = true;
  for (auto& p : clipped) {
    Interval gap{cur, p.lo, cur_closed, !p.lo_closed};
    if (p.lo && !gap.empty()) out.add(gap);
    if (!p.hi) return out;
    cur = p.hi;
    cur_closed = !p.hi_closed;
  }
  out.add(Interval{cur, std::nullopt, cur_closed, true});
  return out;
}

std::string IntervalSet::describe() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (auto& p : parts_) {
    if (!out.empty()) out += " u ";
    if (p.lo && p.hi && *p.lo == *p.hi) {
      out += "{" + p.lo->render(false) + "}";
      continue;
    }
    out += p.lo_closed && p.lo ? "[" : "(";
    out += p.lo ? p.lo->render(false) : "-inf";
    out += ", ";
    out += p.hi ? p.hi->render(false) : "+inf";
    out += p.hi && p.hi_closed ? "]" : ")";
  }
  return out;
}

}  // namespace veritab
