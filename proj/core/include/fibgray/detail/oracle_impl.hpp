#pragma once

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>
#include <utility>

namespace fibgray {

template <class T, class Render>
OracleReport compare_as_sets(std::string check, std::string params,
                             std::vector<T> expected, std::vector<T> actual,
                             Render render) {
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  const std::uint64_t n = actual.size();
  for (const auto* side : {&expected, &actual}) {
    auto dup = std::adjacent_find(side->begin(), side->end());
    if (dup != side->end()) {
      return OracleReport::disagreed(
          std::move(check), std::move(params), n,
          std::string(side == &expected ? "expected" : "actual") +
              " has duplicate " + render(*dup));
    }
  }
  std::vector<T> missing;
  std::set_difference(expected.begin(), expected.end(), actual.begin(),
                      actual.end(), std::back_inserter(missing));
  if (!missing.empty()) {
    return OracleReport::disagreed(std::move(check), std::move(params), n,
                                   "missing " + render(missing.front()));
  }
  std::vector<T> extra;
  std::set_difference(actual.begin(), actual.end(), expected.begin(),
                      expected.end(), std::back_inserter(extra));
  if (!extra.empty()) {
    return OracleReport::disagreed(std::move(check), std::move(params), n,
                                   "unexpected " + render(extra.front()));
  }
  return OracleReport::agreed(std::move(check), std::move(params), n);
}

}  // namespace fibgray
