#include "dessinry/origami.hpp"

#include <deque>

#include "dessinry/error.hpp"

namespace dessinry {

namespace {

void require_valid(const BipartiteOrigami& o) {
  auto diag = validate_origami(o);
  if (!diag.ok) throw Error(ErrorKind::InvalidOrigami, diag.message);
}

BipartiteOrigami checked(BipartiteOrigami o) {
  require_valid(o);
  return o;
}

}  // namespace

BipartiteOrigami::BipartiteOrigami(int m, Permutation R, Permutation L, Permutation U, Permutation D)
    : m_(m), R_(std::move(R)), L_(std::move(L)), U_(std::move(U)), D_(std::move(D)) {
  if (m < 1) throw Error(ErrorKind::InvalidOrigami, "m must be at least 1");
  for (const auto* p : {&R_, &L_, &U_, &D_})
    if (p->degree() != m) throw Error(ErrorKind::InvalidOrigami, "pairing is not a bijection of m squares");
}

BipartiteOrigami BipartiteOrigami::pillowcase() {
  auto id = Permutation::identity(1);
  return BipartiteOrigami(1, id, id, id, id);
}

Diagnostic validate_origami(const BipartiteOrigami& o) {
  // squares: whites 0..m-1, greys m..2m-1
  const int m = o.m();
  std::vector<char> seen(static_cast<std::size_t>(2 * m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  const Permutation* maps[] = {&o.R(), &o.L(), &o.U(), &o.D()};
  std::vector<Permutation> inverses;
  for (const auto* p : maps) inverses.push_back(p->inverse());
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (std::size_t k = 0; k < 4; ++k) {
      int t = s < m ? m + (*maps[k])(s) : inverses[k](s - m);
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        ++count;
        stack.push_back(t);
      }
    }
  }
  if (count != 2 * m) return {false, "connectivity violated: gluing graph is disconnected"};
  return {true, "ok"};
}

MonodromyTuple origami_to_dessin(const BipartiteOrigami& o) {
  require_valid(o);
  const auto& R = o.R();
  const auto& L = o.L();
  const auto& U = o.U();
  const auto& D = o.D();
  return MonodromyTuple(4, o.m(), {L * D.inverse(), D * R.inverse(), R * U.inverse(), U * L.inverse()});
}

BipartiteOrigami dessin_to_origami(const MonodromyTuple& t) {
  if (t.n() != 4) throw Error(ErrorKind::InvalidTuple, "origamis correspond to 4-dessins only");
  auto diag = validate(t);
  if (!diag.ok) throw Error(ErrorKind::InvalidTuple, diag.message);
  const int m = t.degree();
  return BipartiteOrigami(m, (t[0] * t[1]).inverse(), Permutation::identity(m), t[3], t[0].inverse());
}

BipartiteOrigami canonical_origami(const BipartiteOrigami& o) {
  require_valid(o);
  const int m = o.m();
  const auto um = static_cast<std::size_t>(m);
  const Permutation* maps[] = {&o.R(), &o.L(), &o.U(), &o.D()};
  std::vector<Permutation> inverses;
  for (const auto* p : maps) inverses.push_back(p->inverse());

  std::vector<int> best;
  std::vector<int> wlabel(um), glabel(um), cand(4 * um);
  for (int start = 0; start < m; ++start) {
    std::fill(wlabel.begin(), wlabel.end(), -1);
    std::fill(glabel.begin(), glabel.end(), -1);
    int nw = 0, ng = 0;
    std::deque<std::pair<bool, int>> queue;  // (is_white, index)
    wlabel[static_cast<std::size_t>(start)] = nw++;
    queue.emplace_back(true, start);
    while (!queue.empty()) {
      auto [white, s] = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < 4; ++k) {
        if (white) {
          int g = (*maps[k])(s);
          if (glabel[static_cast<std::size_t>(g)] < 0) {
            glabel[static_cast<std::size_t>(g)] = ng++;
            queue.emplace_back(false, g);
          }
        } else {
          int w = inverses[k](s);
          if (wlabel[static_cast<std::size_t>(w)] < 0) {
            wlabel[static_cast<std::size_t>(w)] = nw++;
            queue.emplace_back(true, w);
          }
        }
      }
    }
    for (std::size_t k = 0; k < 4; ++k)
      for (int w = 0; w < m; ++w)
        cand[k * um + static_cast<std::size_t>(wlabel[static_cast<std::size_t>(w)])] =
            glabel[static_cast<std::size_t>((*maps[k])(w))];
    if (best.empty() || cand < best) best = cand;
  }
  auto part = [&](std::size_t k) {
    auto first = best.begin() + static_cast<std::ptrdiff_t>(k * um);
    return Permutation(std::vector<int>(first, first + m));
  };
  return BipartiteOrigami(m, part(0), part(1), part(2), part(3));
}

bool origami_isomorphic(const BipartiteOrigami& a, const BipartiteOrigami& b) {
  return a.m() == b.m() && canonical_origami(a) == canonical_origami(b);
}

BipartiteOrigami delta_hor(const BipartiteOrigami& o) {
  require_valid(o);
  const auto& R = o.R();
  const auto& L = o.L();
  return checked(BipartiteOrigami(o.m(), R, L, R * L.inverse() * o.U() * R.inverse() * L, o.D()));
}

BipartiteOrigami delta_hor_inv(const BipartiteOrigami& o) {
  require_valid(o);
  const auto& R = o.R();
  const auto& L = o.L();
  return checked(BipartiteOrigami(o.m(), R, L, L * R.inverse() * o.U() * L.inverse() * R, o.D()));
}

BipartiteOrigami delta_ver(const BipartiteOrigami& o) {
  require_valid(o);
  const auto& U = o.U();
  const auto Dinv = o.D().inverse();
  return checked(BipartiteOrigami(o.m(), U * Dinv * o.R(), o.L() * Dinv * U, U * Dinv * U, U));
}

BipartiteOrigami delta_ver_inv(const BipartiteOrigami& o) {
  require_valid(o);
  const auto& D = o.D();
  const auto Uinv = o.U().inverse();
  return checked(BipartiteOrigami(o.m(), D * Uinv * o.R(), o.L() * Uinv * D, D, D * Uinv * D));
}

BipartiteOrigami delta(const BipartiteOrigami& o, DeltaOp op) {
  switch (op) {
    case DeltaOp::Hor: return delta_hor(o);
    case DeltaOp::Ver: return delta_ver(o);
    case DeltaOp::HorInv: return delta_hor_inv(o);
    case DeltaOp::VerInv: return delta_ver_inv(o);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown delta operation");
}

const char* to_string(DeltaOp op) {
  switch (op) {
    case DeltaOp::Hor: return "delta_hor";
    case DeltaOp::Ver: return "delta_ver";
    case DeltaOp::HorInv: return "delta_hor^-1";
    case DeltaOp::VerInv: return "delta_ver^-1";
  }
  return "?";
}

OrigamiOrbitResult origami_orbit(const BipartiteOrigami& o, bool log_edges) {
  std::vector<std::string> names;
  std::vector<std::function<BipartiteOrigami(const BipartiteOrigami&)>> steps;
  for (auto op : {DeltaOp::Hor, DeltaOp::Ver, DeltaOp::HorInv, DeltaOp::VerInv}) {
    names.emplace_back(to_string(op));
    steps.push_back([op](const BipartiteOrigami& x) { return canonical_origami(delta(x, op)); });
  }
  return close_orbit<BipartiteOrigami>({canonical_origami(o)}, names, steps, log_edges);
}

}  // namespace dessinry
