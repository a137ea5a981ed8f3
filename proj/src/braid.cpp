#include "dessinry/braid.hpp"

#include <cctype>
#include <sstream>

#include "dessinry/error.hpp"

namespace dessinry {

FreeWord::FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.generator < 0) throw Error(ErrorKind::IndexOutOfRange, "negative generator index");
    if (l.exponent != 1 && l.exponent != -1) throw Error(ErrorKind::InvalidArgument, "letter exponent must be +1 or -1");
  }
}

FreeWord FreeWord::generator(int nu) { return FreeWord({Letter{nu, 1}}); }

FreeWord FreeWord::parse(const std::string& text) {
  std::vector<Letter> out;
  std::size_t k = 0;
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::Parse, "word '" + text + "': " + why); };
  while (k < text.size()) {
    char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++k;
      continue;
    }
    if (c == '1' && out.empty()) {
      ++k;
      continue;
    }
    if (c != 'x') fail("expected 'x'");
    ++k;
    std::size_t start = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (start == k) fail("missing generator index");
    int nu = std::stoi(text.substr(start, k - start));
    int exponent = 1;
    if (k < text.size() && text[k] == '^') {
      if (text.compare(k, 3, "^-1") == 0) {
        exponent = -1;
        k += 3;
      } else if (text.compare(k, 2, "^1") == 0) {
        k += 2;
      } else {
        fail("only ^1 and ^-1 exponents are allowed");
      }
    }
    out.push_back({nu, exponent});
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::reduced() const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::substitute(const std::vector<FreeWord>& images) const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.generator >= static_cast<int>(images.size()))
      throw Error(ErrorKind::IndexOutOfRange, "x" + std::to_string(l.generator) + " has no image");
    const auto& w = images[static_cast<std::size_t>(l.generator)];
    const auto piece = l.exponent == 1 ? w : w.inverse();
    out.insert(out.end(), piece.letters_.begin(), piece.letters_.end());
  }
  return FreeWord(std::move(out)).reduced();
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    os << (k ? " " : "") << 'x' << letters_[k].generator;
    if (letters_[k].exponent < 0) os << "^-1";
  }
  return os.str();
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return FreeWord(std::move(letters)).reduced();
}

Permutation evaluate_word(const FreeWord& w, const MonodromyTuple& t) {
  Permutation p = Permutation::identity(t.degree());
  for (const auto& l : w.letters()) {
    if (l.generator >= t.n())
      throw Error(ErrorKind::IndexOutOfRange,
                  "x" + std::to_string(l.generator) + " used on a tuple with n = " + std::to_string(t.n()));
    p = p * (l.exponent == 1 ? t[l.generator] : t[l.generator].inverse());
  }
  return p;
}

EndomorphismTable EndomorphismTable::inverse() const {
  if (!has_inverse()) throw Error(ErrorKind::InvalidArgument, "table '" + name + "' has no inverse table");
  std::string inv_name = name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0
                             ? name.substr(0, name.size() - 3)
                             : name + "^-1";
  return EndomorphismTable{n, inv_name, inverse_images, images};
}

EndomorphismTable identity_table(int n) {
  EndomorphismTable e{n, "id", {}, {}};
  for (int nu = 0; nu < n; ++nu) e.images.push_back(FreeWord::generator(nu));
  e.inverse_images = e.images;
  return e;
}

EndomorphismTable compose(const EndomorphismTable& e1, const EndomorphismTable& e2) {
  if (e1.n != e2.n) throw Error(ErrorKind::InvalidArgument, "composing tables with different n");
  EndomorphismTable out{e1.n, e1.name + ";" + e2.name, {}, {}};
  for (const auto& w : e2.images) out.images.push_back(w.substitute(e1.images));
  if (e1.has_inverse() && e2.has_inverse())
    for (const auto& w : e1.inverse_images) out.inverse_images.push_back(w.substitute(e2.inverse_images));
  return out;
}

MonodromyTuple apply_endomorphism(const EndomorphismTable& e, const MonodromyTuple& t) {
  if (e.n != t.n())
    throw Error(ErrorKind::InvalidArgument,
                "table '" + e.name + "' has n = " + std::to_string(e.n) + ", tuple has n = " + std::to_string(t.n()));
  if (static_cast<int>(e.images.size()) != e.n)
    throw Error(ErrorKind::InvalidArgument, "table '" + e.name + "' does not have n images");
  std::vector<Permutation> perms;
  for (const auto& w : e.images) perms.push_back(evaluate_word(w, t));
  MonodromyTuple out(t.n(), t.degree(), std::move(perms));
  auto diag = validate(out);
  if (!diag.ok) throw Error(ErrorKind::InvalidResult, "table '" + e.name + "': " + diag.message);
  return out;
}

EndomorphismTable half_twist(int n, int i) {
  if (i < 0 || i + 1 >= n) throw Error(ErrorKind::IndexOutOfRange, "half twist index out of range");
  auto x = [](int nu) { return FreeWord::generator(nu); };
  EndomorphismTable e = identity_table(n);
  e.name = "s" + std::to_string(i);
  const auto ui = static_cast<std::size_t>(i);
  e.images[ui] = x(i + 1);
  e.images[ui + 1] = x(i + 1).inverse() * x(i) * x(i + 1);
  e.inverse_images[ui] = x(i) * x(i + 1) * x(i).inverse();
  e.inverse_images[ui + 1] = x(i);
  return e;
}

std::vector<EndomorphismTable> preset_pure_generators(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "n must be at least 3");
  std::vector<EndomorphismTable> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      EndomorphismTable e = identity_table(n);
      for (int k = j - 1; k > i; --k) e = compose(e, half_twist(n, k).inverse());
      e = compose(e, half_twist(n, i));
      e = compose(e, half_twist(n, i));
      for (int k = i + 1; k < j; ++k) e = compose(e, half_twist(n, k));
      e.name = "A" + std::to_string(i) + std::to_string(j);
      out.push_back(e);
    }
  return out;
}

std::vector<EndomorphismTable> preset_gamma2_generators() {
  auto s1 = half_twist(4, 1);
  auto s2 = half_twist(4, 2);
  auto ver = compose(s1, s1);
  auto hor = compose(s2.inverse(), s2.inverse());
  hor.name = "delta_hor";
  ver.name = "delta_ver";
  return {hor, ver};
}

OrbitResult braid_orbit(const std::vector<MonodromyTuple>& seeds, const std::vector<EndomorphismTable>& gens,
                        bool log_edges) {
  std::vector<MonodromyTuple> canon;
  for (const auto& s : seeds) canon.push_back(canonical_form(s));
  for (const auto& s : canon)
    if (s.n() != canon.front().n() || s.degree() != canon.front().degree())
      throw Error(ErrorKind::InvalidArgument, "seeds must share n and d");
  std::vector<std::string> names;
  std::vector<std::function<MonodromyTuple(const MonodromyTuple&)>> steps;
  auto add = [&](const EndomorphismTable& e) {
    names.push_back(e.name);
    steps.push_back([e](const MonodromyTuple& t) { return canonical_form(apply_endomorphism(e, t)); });
  };
  for (const auto& g : gens) add(g);
  for (const auto& g : gens)
    if (g.has_inverse()) add(g.inverse());
  return close_orbit(std::move(canon), names, steps, log_edges);
}

std::vector<OrbitResult> orbit_partition(const std::vector<MonodromyTuple>& classes,
                                         const std::vector<EndomorphismTable>& gens) {
  std::set<MonodromyTuple> remaining;
  for (const auto& c : classes) remaining.insert(canonical_form(c));
  std::vector<OrbitResult> out;
  while (!remaining.empty()) {
    auto orbit = braid_orbit({*remaining.begin()}, gens);
    for (const auto& m : orbit.members) remaining.erase(m);
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace dessinry
