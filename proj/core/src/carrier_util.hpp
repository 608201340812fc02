#pragma once

// Helpers shared by the carrier implementations. Not installed.

#include <string>
#include <string_view>
#include <vector>

#include "hyperpoly/interval_set.hpp"

namespace hyperpoly::detail {

std::string_view trim(std::string_view s);
/// Removes balanced outer parentheses, repeatedly: "((-2))" -> "-2".
std::string_view strip_parens(std::string_view s);

/// A point strictly inside a non-degenerate interval (the point itself for
/// degenerate ones): midpoint, or one unit away from a single finite end.
ExtRational interior_point(const Interval& part);

/// Closed upper endpoint of the last component, else its closed lower
/// endpoint, else an interior point. Precondition: nonempty.
ExtRational interval_representative(const IntervalUnion& set);

/// Per component, last component first: closed upper end, interior point,
/// closed lower end; at most `per_component` of them.
std::vector<ExtRational> interval_samples(const IntervalUnion& set,
                                          std::size_t per_component);

}  // namespace hyperpoly::detail
