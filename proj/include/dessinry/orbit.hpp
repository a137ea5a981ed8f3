#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace dessinry {

struct OrbitEdge {
  std::size_t from = 0;  // index into Orbit::members
  std::size_t to = 0;
  std::string generator;
};

// members is sorted; every seed is a member.
template <class T>
struct Orbit {
  std::vector<T> seeds;
  std::vector<T> members;
  std::vector<OrbitEdge> generator_log;
};

// Breadth-first closure of seeds under the maps steps[k]; each map must return
// values already in canonical form.
template <class T>
Orbit<T> close_orbit(std::vector<T> seeds, const std::vector<std::string>& names,
                     const std::vector<std::function<T(const T&)>>& steps, bool log_edges = true) {
  std::set<T> seen(seeds.begin(), seeds.end());
  std::deque<T> queue(seen.begin(), seen.end());
  struct RawEdge {
    T from, to;
    std::size_t gen;
  };
  std::vector<RawEdge> raw;
  while (!queue.empty()) {
    T x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < steps.size(); ++k) {
      T y = steps[k](x);
      if (log_edges) raw.push_back({x, y, k});
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  Orbit<T> out;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  out.seeds = std::move(seeds);
  out.members.assign(seen.begin(), seen.end());
  auto index = [&](const T& v) {
    return static_cast<std::size_t>(std::lower_bound(out.members.begin(), out.members.end(), v) - out.members.begin());
  };
  for (const auto& e : raw) out.generator_log.push_back({index(e.from), index(e.to), names[e.gen]});
  std::sort(out.generator_log.begin(), out.generator_log.end(), [](const OrbitEdge& a, const OrbitEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.generator != b.generator) return a.generator < b.generator;
    return a.to < b.to;
  });
  return out;
}

}  // namespace dessinry
