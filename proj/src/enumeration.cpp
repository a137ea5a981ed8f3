#include "dessinry/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "canonical_impl.hpp"
#include "dessinry/error.hpp"

namespace dessinry {

namespace {

using Encoding = std::vector<int>;

double factorial(int d) {
  double f = 1;
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}

void check_args(int n, int d) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
}

void check_naive_bound(int n, int d) {
  double work = std::pow(factorial(d), n - 1);
  if (work > kNaiveBound)
    throw Error(ErrorKind::BoundExceeded, "(d!)^(n-1) = " + std::to_string(work) + " exceeds the direct-count bound");
}

// Images of the permutation that is the product of consecutive cycles with the given lengths.
std::vector<int> cycle_type_rep(const std::vector<int>& parts) {
  std::vector<int> im;
  int start = 0;
  for (int len : parts) {
    for (int k = 0; k < len; ++k) im.push_back(start + (k + 1) % len);
    start += len;
  }
  return im;
}

// Collects canonical encodings of transitive product-one tuples whose first
// n-1 permutations are g0, g1, and any choice of the middle ones.
class Completer {
 public:
  Completer(int n, int d, const std::vector<std::vector<int>>& all) : n_(n), d_(d), all_(all) {}

  void run(const std::vector<int>& g0, const std::vector<int>& g1, std::set<Encoding>& out) {
    prefix_.assign(static_cast<std::size_t>(n_ - 1), {});
    prefix_[0] = g0;
    prefix_[1] = g1;
    recurse(2, out);
  }

 private:
  void recurse(int level, std::set<Encoding>& out) {
    if (level == n_ - 1) {
      finish(out);
      return;
    }
    for (const auto& g : all_) {
      prefix_[static_cast<std::size_t>(level)] = g;
      recurse(level + 1, out);
    }
  }

  void finish(std::set<Encoding>& out) {
    const auto d = static_cast<std::size_t>(d_);
    std::vector<int> prod(d);
    std::iota(prod.begin(), prod.end(), 0);
    for (const auto& g : prefix_)
      for (auto& x : prod) x = g[static_cast<std::size_t>(x)];
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n_) * d);
    for (const auto& g : prefix_) flat.insert(flat.end(), g.begin(), g.end());
    // last permutation is the inverse of the product
    std::vector<int> last(d);
    for (std::size_t i = 0; i < d; ++i) last[static_cast<std::size_t>(prod[i])] = static_cast<int>(i);
    flat.insert(flat.end(), last.begin(), last.end());
    auto t = detail::make_flat(n_, d_, std::move(flat));
    if (!detail::is_transitive(t)) return;
    out.insert(detail::canonical_search(t).best);
  }

  int n_, d_;
  const std::vector<std::vector<int>>& all_;
  std::vector<std::vector<int>> prefix_;
};

std::vector<std::vector<int>> all_images(int d) {
  std::vector<std::vector<int>> out;
  for (const auto& p : all_permutations(d)) out.push_back(p.images());
  return out;
}

std::vector<int> conj(const std::vector<int>& x, const std::vector<int>& c) {
  // c^{-1} x c in left-to-right order: i -> c(x(c^{-1}(i)))
  std::vector<int> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[static_cast<std::size_t>(c[i])] = c[static_cast<std::size_t>(x[i])];
  return r;
}

// One representative of each orbit of Cent(g0) acting on Sym(d) by conjugation,
// or all of Sym(d) when that computation would be costly.
std::vector<std::vector<int>> second_level_reps(const std::vector<int>& g0, const std::vector<std::vector<int>>& all) {
  std::vector<std::vector<int>> cent;
  for (const auto& c : all)
    if (conj(g0, c) == g0) cent.push_back(c);
  if (static_cast<double>(cent.size()) * static_cast<double>(all.size()) > 2.0e7) return all;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], k);
  std::vector<char> seen(all.size(), 0);
  std::vector<std::vector<int>> reps;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (seen[k]) continue;
    reps.push_back(all[k]);
    for (const auto& c : cent) seen[index.at(conj(all[k], c))] = 1;
  }
  return reps;
}

EnumerationResult finish_result(int n, int d, const std::set<Encoding>& encodings) {
  EnumerationResult r{n, d, {}, 0};
  const auto df = static_cast<std::uint64_t>(factorial(d));
  for (const auto& e : encodings) {
    std::vector<Permutation> perms;
    for (int nu = 0; nu < n; ++nu) {
      auto first = e.begin() + static_cast<std::ptrdiff_t>(nu * d);
      perms.emplace_back(std::vector<int>(first, first + d));
    }
    MonodromyTuple t(n, d, std::move(perms));
    r.marked_count += df / static_cast<std::uint64_t>(centralizer_order(t));
    r.classes.push_back(DessinClass{t, genus(t), cycle_profile(t), is_normal(t)});
  }
  return r;
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

EnumerationResult enumerate(int n, int d, int jobs) {
  check_args(n, d);
  const auto parts = integer_partitions(d);
  double work = static_cast<double>(parts.size()) * std::pow(factorial(d), n - 2);
  if (work > kEnumerationBound)
    throw Error(ErrorKind::BoundExceeded,
                "search size " + std::to_string(work) + " exceeds the enumeration bound " + std::to_string(kEnumerationBound));
  const auto all = all_images(d);

  // Work units: (g0 representative, g1 representative).
  std::vector<std::pair<std::vector<int>, std::vector<int>>> units;
  for (const auto& part : parts) {
    auto g0 = cycle_type_rep(part);
    for (const auto& g1 : second_level_reps(g0, all)) units.emplace_back(g0, g1);
  }

  jobs = std::max(1, jobs);
  std::vector<std::set<Encoding>> partial(static_cast<std::size_t>(jobs));
  auto worker = [&](int w) {
    Completer c(n, d, all);
    for (std::size_t k = static_cast<std::size_t>(w); k < units.size(); k += static_cast<std::size_t>(jobs))
      c.run(units[k].first, units[k].second, partial[static_cast<std::size_t>(w)]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& th : threads) th.join();
  }
  std::set<Encoding> merged;
  for (auto& s : partial) merged.merge(s);
  return finish_result(n, d, merged);
}

EnumerationResult enumerate_naive(int n, int d) {
  check_args(n, d);
  check_naive_bound(n, d);
  const auto all = all_images(d);
  std::set<Encoding> found;
  Completer c(n, d, all);
  for (const auto& g0 : all)
    for (const auto& g1 : all) c.run(g0, g1, found);
  return finish_result(n, d, found);
}

std::uint64_t count_transitive_tuples(int n, int d) {
  check_args(n, d);
  check_naive_bound(n, d);
  const auto all = all_images(d);
  const auto du = static_cast<std::size_t>(d);
  std::uint64_t count = 0;
  std::vector<std::vector<int>> prefix(static_cast<std::size_t>(n - 1));
  std::function<void(int)> rec = [&](int level) {
    if (level == n - 1) {
      std::vector<int> prod(du);
      std::iota(prod.begin(), prod.end(), 0);
      for (const auto& g : prefix)
        for (auto& x : prod) x = g[static_cast<std::size_t>(x)];
      // g_{n-1} = prod^{-1} lies in the group generated by the others, so
      // transitivity only depends on the first n-1 permutations
      std::vector<int> flat;
      for (const auto& g : prefix) flat.insert(flat.end(), g.begin(), g.end());
      flat.insert(flat.end(), prod.begin(), prod.end());
      if (detail::is_transitive(detail::make_flat(n, d, std::move(flat)))) ++count;
      return;
    }
    for (const auto& g : all) {
      prefix[static_cast<std::size_t>(level)] = g;
      rec(level + 1);
    }
  };
  rec(0);
  return count;
}

boost::multiprecision::cpp_int hall_count(int r, int d) {
  using boost::multiprecision::cpp_int;
  if (r < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "hall_count needs r >= 1 and d >= 1");
  std::vector<cpp_int> fact(static_cast<std::size_t>(d) + 1, 1);
  for (int k = 1; k <= d; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;
  auto power = [](cpp_int b, int e) {
    cpp_int x = 1;
    for (int k = 0; k < e; ++k) x *= b;
    return x;
  };
  std::vector<cpp_int> N(static_cast<std::size_t>(d) + 1, 0);
  N[1] = 1;
  for (int m = 2; m <= d; ++m) {
    cpp_int v = m * power(fact[static_cast<std::size_t>(m)], r - 1);
    for (int i = 1; i < m; ++i) v -= power(fact[static_cast<std::size_t>(m - i)], r - 1) * N[static_cast<std::size_t>(i)];
    N[static_cast<std::size_t>(m)] = v;
  }
  return N[static_cast<std::size_t>(d)];
}

}  // namespace dessinry
