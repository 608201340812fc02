#include "hyperpoly/interval_set.hpp"

#include <algorithm>

#include "hyperpoly/error.hpp"

namespace hyperpoly {

bool Interval::empty() const {
  if (lo < hi) return false;
  if (lo == hi) return !(lo_closed && hi_closed);
  return true;
}

bool Interval::contains(const ExtRational& x) const {
  if (x < lo || (x == lo && !lo_closed)) return false;
  if (hi < x || (x == hi && !hi_closed)) return false;
  return true;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo == b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  } else if (a.lo < b.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  }
  if (a.hi == b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  } else if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  }
  return r;
}

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.empty(); });
  for (auto& p : parts) {
    if (p.hi.is_pos_inf()) p.hi_closed = false;
    if (p.lo.is_pos_inf()) throw DomainError("interval starting at +inf");
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (auto& p : parts) {
    if (parts_.empty()) {
      parts_.push_back(p);
      continue;
    }
    Interval& cur = parts_.back();
    const bool overlaps =
        p.lo < cur.hi || (p.lo == cur.hi && (cur.hi_closed || p.lo_closed));
    if (!overlaps) {
      parts_.push_back(p);
      continue;
    }
    if (cur.hi < p.hi) {
      cur.hi = p.hi;
      cur.hi_closed = p.hi_closed;
    } else if (cur.hi == p.hi) {
      cur.hi_closed = cur.hi_closed || p.hi_closed;
    }
  }
}

bool IntervalUnion::contains(const ExtRational& x) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Interval& i) { return i.contains(x); });
}

bool IntervalUnion::includes(const IntervalUnion& other) const {
  return intersect(other) == other;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<Interval> all(parts_.begin(), parts_.end());
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalUnion(std::move(all));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      Interval c = hyperpoly::intersect(a, b);
      if (!c.empty()) out.push_back(c);
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::shift(const Rational& t) const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) {
    out.push_back({p.lo + ExtRational(t), p.hi + ExtRational(t), p.lo_closed,
                   p.hi_closed});
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::scale(const Rational& factor) const {
  if (factor.sign() <= 0) throw DomainError("interval scale factor must be positive");
  auto mul = [&](const ExtRational& e) {
    return e.is_finite() ? ExtRational(e.value() * factor) : e;
  };
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) {
    out.push_back({mul(p.lo), mul(p.hi), p.lo_closed, p.hi_closed});
  }
  return IntervalUnion(std::move(out));
}

std::optional<ExtRational> IntervalUnion::inf() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.front().lo;
}

std::optional<ExtRational> IntervalUnion::sup() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.back().hi;
}

std::string IntervalUnion::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const auto& p : parts_) {
    if (!out.empty()) out += " u ";
    if (p.is_point()) {
      out += "{" + p.lo.str() + "}";
    } else {
      out += (p.lo_closed ? "[" : "(") + p.lo.str() + "," + p.hi.str() +
             (p.hi_closed ? "]" : ")");
    }
  }
  return out;
}

}  // namespace hyperpoly
