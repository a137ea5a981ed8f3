#include "dessinry/monodromy.hpp"

#include <algorithm>
#include <sstream>

#include "canonical_impl.hpp"
#include "dessinry/error.hpp"

namespace dessinry {

namespace detail {

FlatTuple make_flat(int n, int d, std::vector<int> perms) {
  FlatTuple t{n, d, std::move(perms), {}};
  t.inverses.resize(t.perms.size());
  for (int nu = 0; nu < n; ++nu)
    for (int i = 0; i < d; ++i) t.inverses[static_cast<std::size_t>(nu * d + t.perms[static_cast<std::size_t>(nu * d + i)])] = i;
  return t;
}

bool is_transitive(const FlatTuple& t) {
  std::vector<char> seen(static_cast<std::size_t>(t.d), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int nu = 0; nu < t.n; ++nu) {
      int y = t.perms[static_cast<std::size_t>(nu * t.d + x)];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == t.d;
}

namespace {

// BFS relabeling from b; label[x] is the new name of x.
void bfs_labels(const FlatTuple& t, int b, std::vector<int>& label, std::vector<int>& order) {
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  label[static_cast<std::size_t>(b)] = 0;
  order.push_back(b);
  auto visit = [&](int y) {
    if (label[static_cast<std::size_t>(y)] < 0) {
      label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
      order.push_back(y);
    }
  };
  for (std::size_t k = 0; k < order.size(); ++k) {
    int x = order[k];
    for (int nu = 0; nu < t.n; ++nu) visit(t.perms[static_cast<std::size_t>(nu * t.d + x)]);
    for (int nu = 0; nu < t.n; ++nu) visit(t.inverses[static_cast<std::size_t>(nu * t.d + x)]);
  }
}

}  // namespace

CanonicalSearch canonical_search(const FlatTuple& t) {
  const auto d = static_cast<std::size_t>(t.d);
  std::vector<int> label(d), order, cand(t.perms.size()), first;
  CanonicalSearch out;
  for (int b = 0; b < t.d; ++b) {
    bfs_labels(t, b, label, order);
    for (int nu = 0; nu < t.n; ++nu)
      for (std::size_t k = 0; k < d; ++k) {
        // new label k is old point order[k]
        int img = t.perms[static_cast<std::size_t>(nu) * d + static_cast<std::size_t>(order[k])];
        cand[static_cast<std::size_t>(nu) * d + k] = label[static_cast<std::size_t>(img)];
      }
    if (b == 0) {
      first = cand;
      out.best = cand;
      out.centralizer = 1;
      continue;
    }
    if (cand == first) ++out.centralizer;
    if (cand < out.best) out.best = cand;
  }
  return out;
}

}  // namespace detail

namespace {

detail::FlatTuple flatten(const MonodromyTuple& t) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(t.n() * t.degree()));
  for (const auto& g : t.perms()) flat.insert(flat.end(), g.images().begin(), g.images().end());
  return detail::make_flat(t.n(), t.degree(), std::move(flat));
}

void require_valid(const MonodromyTuple& t) {
  auto diag = validate(t);
  if (!diag.ok) throw Error(ErrorKind::InvalidTuple, diag.message);
}

}  // namespace

MonodromyTuple::MonodromyTuple(int n, int d, std::vector<Permutation> perms)
    : n_(n), d_(d), perms_(std::move(perms)) {
  if (n < 3) throw Error(ErrorKind::InvalidTuple, "n must be at least 3");
  if (d < 1) throw Error(ErrorKind::InvalidTuple, "degree must be at least 1");
  if (static_cast<int>(perms_.size()) != n)
    throw Error(ErrorKind::InvalidTuple, "expected " + std::to_string(n) + " permutations");
  for (const auto& g : perms_)
    if (g.degree() != d) throw Error(ErrorKind::InvalidTuple, "permutation degree differs from d");
}

MonodromyTuple MonodromyTuple::trivial(int n) {
  return MonodromyTuple(n, 1, std::vector<Permutation>(static_cast<std::size_t>(n), Permutation::identity(1)));
}

std::vector<int> MonodromyTuple::encoding() const {
  std::vector<int> e{n_, d_};
  for (const auto& g : perms_) e.insert(e.end(), g.images().begin(), g.images().end());
  return e;
}

Diagnostic validate(const MonodromyTuple& t) {
  Permutation prod = Permutation::identity(t.degree());
  for (const auto& g : t.perms()) prod = prod * g;
  if (!prod.is_identity())
    return {false, "product constraint violated: g_0*...*g_{n-1} = " + to_cycle_string(prod) + " != id"};
  if (!detail::is_transitive(flatten(t))) return {false, "transitivity violated: generated group is not transitive"};
  return {true, "ok"};
}

std::string to_string(const RamificationProfile& p) {
  std::ostringstream os;
  for (std::size_t nu = 0; nu < p.partitions.size(); ++nu) {
    os << (nu ? "," : "") << '(';
    for (std::size_t k = 0; k < p.partitions[nu].size(); ++k) os << (k ? "," : "") << p.partitions[nu][k];
    os << ')';
  }
  return os.str();
}

MonodromyTuple canonical_form(const MonodromyTuple& t) {
  require_valid(t);
  auto search = detail::canonical_search(flatten(t));
  const auto d = static_cast<std::size_t>(t.degree());
  std::vector<Permutation> perms;
  for (int nu = 0; nu < t.n(); ++nu) {
    auto first = search.best.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(nu) * d);
    perms.emplace_back(std::vector<int>(first, first + static_cast<std::ptrdiff_t>(d)));
  }
  return MonodromyTuple(t.n(), t.degree(), std::move(perms));
}

bool isomorphic(const MonodromyTuple& a, const MonodromyTuple& b) {
  require_valid(a);
  require_valid(b);
  if (a.n() != b.n() || a.degree() != b.degree()) return false;
  return canonical_form(a) == canonical_form(b);
}

int genus(const MonodromyTuple& t) {
  require_valid(t);
  int ramification = 0;
  for (const auto& g : t.perms()) ramification += t.degree() - g.cycle_count();
  // 2 - 2g = 2d - ramification
  int twice = ramification - 2 * t.degree() + 2;
  if (twice < 0 || twice % 2 != 0)
    throw Error(ErrorKind::NonIntegerGenus, "Riemann-Hurwitz gives 2g = " + std::to_string(twice));
  return twice / 2;
}

RamificationProfile cycle_profile(const MonodromyTuple& t) {
  require_valid(t);
  RamificationProfile p;
  for (const auto& g : t.perms()) p.partitions.push_back(g.cycle_type());
  return p;
}

int centralizer_order(const MonodromyTuple& t) {
  require_valid(t);
  return detail::canonical_search(flatten(t)).centralizer;
}

bool is_normal(const MonodromyTuple& t) { return centralizer_order(t) == t.degree(); }

MonodromyTuple orientation_reverse(const MonodromyTuple& t) {
  require_valid(t);
  std::vector<Permutation> out;
  Permutation prefix = Permutation::identity(t.degree());
  for (const auto& g : t.perms()) {
    out.push_back(prefix * g.inverse() * prefix.inverse());
    prefix = prefix * g;
  }
  return MonodromyTuple(t.n(), t.degree(), std::move(out));
}

MonodromyTuple relabel(const MonodromyTuple& t, const Permutation& pi) {
  std::vector<Permutation> out;
  Permutation pinv = pi.inverse();
  for (const auto& g : t.perms()) out.push_back(pinv * g * pi);
  return MonodromyTuple(t.n(), t.degree(), std::move(out));
}

DessinClass classify(const MonodromyTuple& t) {
  return DessinClass{canonical_form(t), genus(t), cycle_profile(t), is_normal(t)};
}

}  // namespace dessinry
