#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supermod/set_function.hpp"

namespace testing {

using supermod::Rational;
using supermod::SetFunction;
using supermod::SubsetMask;
using supermod::VariableSet;

inline VariableSet vars(int n) { return VariableSet::letters(n); }

inline VariableSet vars(std::vector<std::string> labels) { return VariableSet(std::move(labels)); }

inline SetFunction fn(const VariableSet& v, const std::vector<std::pair<std::string, Rational>>& terms) {
  return supermod::from_deltas(v, terms);
}

inline SubsetMask S(const VariableSet& v, const std::string& compact) { return v.parse_compact(compact); }

// Example functions used throughout.
inline SetFunction m0() { return fn(vars(3), {{"abc", 2}, {"ab", 1}, {"ac", 1}, {"bc", 1}}); }
inline SetFunction m_star() { return fn(vars(4), {{"abcd", 2}, {"abc", 1}, {"abd", 1}, {"acd", 1}}); }
inline SetFunction r_star() {
  return fn(vars(4),
            {{"abcd", 3}, {"abc", 2}, {"abd", 2}, {"acd", 2}, {"bcd", 1}, {"ab", 1}, {"ac", 1}, {"ad", 1}});
}

inline SetFunction up(const VariableSet& v, const std::string& compact) {
  return supermod::superset_indicator(v, v.parse_compact(compact));
}

}  // namespace testing
