#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpoly/rational.hpp"

namespace hyperpoly {

/// One interval of extended rationals. A closed -inf endpoint means the
/// point -inf itself belongs to the interval (the tropical zero); +inf is
/// never a member.
struct Interval {
  ExtRational lo;
  ExtRational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval point(const ExtRational& x) { return {x, x, true, true}; }
  static Interval closed(const ExtRational& a, const ExtRational& b) {
    return {a, b, true, true};
  }
  static Interval open(const ExtRational& a, const ExtRational& b) {
    return {a, b, false, false};
  }

  bool empty() const;
  bool is_point() const { return lo_closed && hi_closed && lo == hi; }
  bool contains(const ExtRational& x) const;
  bool operator==(const Interval&) const = default;
};

/// Finite union of intervals in canonical form: sorted, pairwise disjoint,
/// and maximal (touching components with a shared closed endpoint are
/// merged). Two unions denote the same set iff they compare equal.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> parts);
  IntervalUnion(std::initializer_list<Interval> parts)
      : IntervalUnion(std::vector<Interval>(parts)) {}

  static IntervalUnion point(const ExtRational& x) {
    return IntervalUnion{Interval::point(x)};
  }

  std::span<const Interval> parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool is_point() const { return parts_.size() == 1 && parts_[0].is_point(); }
  bool contains(const ExtRational& x) const;
  bool includes(const IntervalUnion& other) const;

  IntervalUnion unite(const IntervalUnion& other) const;
  IntervalUnion intersect(const IntervalUnion& other) const;
  /// Translate every endpoint by t (infinite endpoints stay put).
  IntervalUnion shift(const Rational& t) const;
  /// Multiply every endpoint by a positive factor.
  IntervalUnion scale(const Rational& factor) const;

  /// Infimum / supremum of the whole union (nullopt when empty).
  std::optional<ExtRational> inf() const;
  std::optional<ExtRational> sup() const;

  bool operator==(const IntervalUnion&) const = default;

  /// "[a,b]", "(a,b)", "{x}" parts joined by " u ".
  std::string str() const;

 private:
  std::vector<Interval> parts_;
};

Interval intersect(const Interval& a, const Interval& b);

}  // namespace hyperpoly
