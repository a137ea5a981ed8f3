#include "dessinry/io.hpp"

#include <sstream>

#include "dessinry/error.hpp"

namespace dessinry {

namespace {

int get_int(const Json& j, const char* key, ErrorKind kind) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw Error(kind, std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

Permutation perm_from_json(const Json& j, int d, ErrorKind kind, const std::string& what) {
  if (!j.is_array()) throw Error(kind, what + " must be an array");
  std::vector<int> im;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(kind, what + " must contain integers");
    im.push_back(v.get<int>());
  }
  if (static_cast<int>(im.size()) != d) throw Error(kind, what + " must have length " + std::to_string(d));
  try {
    return Permutation(std::move(im));
  } catch (const Error&) {
    throw Error(kind, what + " is not a permutation");
  }
}

Json perm_json(const Permutation& p) { return Json(p.images()); }

}  // namespace

Json to_json(const MonodromyTuple& t) {
  Json perms = Json::array();
  for (const auto& g : t.perms()) perms.push_back(perm_json(g));
  return Json{{"n", t.n()}, {"d", t.degree()}, {"perms", perms}};
}

MonodromyTuple tuple_from_json(const Json& j) {
  const int n = get_int(j, "n", ErrorKind::InvalidTuple);
  const int d = get_int(j, "d", ErrorKind::InvalidTuple);
  if (!j.contains("perms") || !j.at("perms").is_array()) throw Error(ErrorKind::InvalidTuple, "missing array 'perms'");
  if (d < 1) throw Error(ErrorKind::InvalidTuple, "degree must be at least 1");
  std::vector<Permutation> perms;
  int nu = 0;
  for (const auto& p : j.at("perms")) perms.push_back(perm_from_json(p, d, ErrorKind::InvalidTuple, "perms[" + std::to_string(nu++) + "]"));
  return MonodromyTuple(n, d, std::move(perms));
}

Json to_json(const BipartiteOrigami& o) {
  return Json{{"m", o.m()}, {"R", perm_json(o.R())}, {"L", perm_json(o.L())}, {"U", perm_json(o.U())}, {"D", perm_json(o.D())}};
}

BipartiteOrigami origami_from_json(const Json& j) {
  const int m = get_int(j, "m", ErrorKind::InvalidOrigami);
  if (m < 1) throw Error(ErrorKind::InvalidOrigami, "m must be at least 1");
  auto field = [&](const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::InvalidOrigami, std::string("missing field '") + key + "'");
    return perm_from_json(j.at(key), m, ErrorKind::InvalidOrigami, key);
  };
  return BipartiteOrigami(m, field("R"), field("L"), field("U"), field("D"));
}

Json to_json(const RamificationProfile& p) { return Json(p.partitions); }

Json to_json(const DessinClass& c) {
  Json j = to_json(c.canonical);
  j["genus"] = c.genus;
  j["profile"] = to_json(c.profile);
  j["normal"] = c.normal;
  return j;
}

Json to_json(const EnumerationResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(to_json(c));
  return Json{{"n", r.n}, {"d", r.d}, {"class_count", r.classes.size()}, {"marked_count", r.marked_count},
              {"classes", classes}};
}

Json to_json(const EndomorphismTable& e) {
  Json images = Json::array(), inverse = Json::array();
  for (const auto& w : e.images) images.push_back(w.to_string());
  for (const auto& w : e.inverse_images) inverse.push_back(w.to_string());
  Json j{{"n", e.n}, {"name", e.name}, {"images", images}};
  if (e.has_inverse()) j["inverse_images"] = inverse;
  return j;
}

EndomorphismTable table_from_json(const Json& j) {
  EndomorphismTable e;
  e.n = get_int(j, "n", ErrorKind::Parse);
  e.name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "table";
  auto words = [&](const char* key) {
    std::vector<FreeWord> out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw Error(ErrorKind::Parse, std::string("'") + key + "' must be an array");
    for (const auto& w : j.at(key)) {
      if (w.is_string()) {
        out.push_back(FreeWord::parse(w.get<std::string>()));
      } else if (w.is_array()) {
        // [[generator, exponent], ...]
        std::vector<Letter> letters;
        for (const auto& l : w) {
          if (!l.is_array() || l.size() != 2) throw Error(ErrorKind::Parse, "letters must be [generator, exponent] pairs");
          letters.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
        }
        out.emplace_back(std::move(letters));
      } else {
        throw Error(ErrorKind::Parse, "words must be strings or letter lists");
      }
    }
    if (static_cast<int>(out.size()) != e.n)
      throw Error(ErrorKind::Parse, std::string("'") + key + "' must list one word per generator");
    for (const auto& w : out)
      for (const auto& l : w.letters())
        if (l.generator >= e.n) throw Error(ErrorKind::IndexOutOfRange, "word uses x" + std::to_string(l.generator));
    return out;
  };
  e.images = words("images");
  if (e.images.empty()) throw Error(ErrorKind::Parse, "table needs 'images'");
  e.inverse_images = words("inverse_images");
  return e;
}

namespace {

template <class T>
Json orbit_json(const Orbit<T>& r) {
  Json seeds = Json::array(), members = Json::array(), log = Json::array();
  for (const auto& s : r.seeds) seeds.push_back(to_json(s));
  for (const auto& m : r.members) members.push_back(to_json(m));
  for (const auto& e : r.generator_log) log.push_back(Json{{"from", e.from}, {"to", e.to}, {"generator", e.generator}});
  return Json{{"size", r.members.size()}, {"seeds", seeds}, {"orbit", members}, {"generator_log", log}};
}

}  // namespace

Json to_json(const OrbitResult& r) { return orbit_json(r); }
Json to_json(const OrigamiOrbitResult& r) { return orbit_json(r); }

std::string dessin_to_dot(const MonodromyTuple& t) {
  static const char* palette[] = {"black", "white", "red", "blue", "green", "orange", "purple", "brown"};
  std::ostringstream os;
  os << "graph dessin {\n  node [shape=circle, style=filled];\n";
  const int n = t.n();
  // cycle index of each point, per color
  std::vector<std::vector<int>> which(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(t.degree())));
  for (int nu = 0; nu < n; ++nu) {
    auto cycles = t[nu].cycles();
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      for (int x : cycles[c]) which[static_cast<std::size_t>(nu)][static_cast<std::size_t>(x)] = static_cast<int>(c);
      os << "  v" << nu << '_' << c << " [label=\"" << nu << "\", fillcolor=" << palette[nu % 8]
         << (nu % 8 == 0 ? ", fontcolor=white" : "") << ", xlabel=\"" << cycles[c].size() << "\"];\n";
    }
  }
  for (int nu = 0; nu < n; ++nu) {
    const int next = (nu + 1) % n;
    for (int i = 0; i < t.degree(); ++i)
      os << "  v" << nu << '_' << which[static_cast<std::size_t>(nu)][static_cast<std::size_t>(i)] << " -- v" << next
         << '_' << which[static_cast<std::size_t>(next)][static_cast<std::size_t>(i)] << " [label=\"" << i << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string orbit_to_dot(const OrbitResult& r) {
  std::ostringstream os;
  os << "digraph orbit {\n  node [shape=box];\n";
  for (std::size_t k = 0; k < r.members.size(); ++k) {
    os << "  c" << k << " [label=\"";
    const auto& t = r.members[k];
    for (int nu = 0; nu < t.n(); ++nu) os << (nu ? " " : "") << to_cycle_string(t[nu]);
    os << "\"];\n";
  }
  for (const auto& e : r.generator_log)
    os << "  c" << e.from << " -> c" << e.to << " [label=\"" << e.generator << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace dessinry
