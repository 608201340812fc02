#include "carrier_util.hpp"

#include <cctype>

#include "hyperpoly/error.hpp"

namespace hyperpoly::detail {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

ExtRational interior_point(const Interval& part) {
  if (part.lo == part.hi) return part.lo;
  if (part.lo.is_finite() && part.hi.is_finite()) {
    return midpoint(part.lo.value(), part.hi.value());
  }
  if (part.lo.is_finite()) return part.lo.value() + Rational(1);
  if (part.hi.is_finite()) return part.hi.value() - Rational(1);
  return ExtRational(0);
}

ExtRational interval_representative(const IntervalUnion& set) {
  if (set.empty()) throw DomainError("representative of an empty set");
  const Interval& last = set.parts().back();
  if (last.hi_closed) return last.hi;
  if (last.lo_closed) return last.lo;
  return interior_point(last);
}

std::vector<ExtRational> interval_samples(const IntervalUnion& set,
                                          std::size_t per_component) {
  std::vector<ExtRational> out;
  const auto parts = set.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    std::vector<ExtRational> local;
    if (it->is_point()) {
      local.push_back(it->lo);
    } else {
      if (it->hi_closed) local.push_back(it->hi);
      local.push_back(interior_point(*it));
      if (it->lo_closed) local.push_back(it->lo);
    }
    if (local.size() > per_component) local.resize(per_component);
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

}  // namespace hyperpoly::detail
