#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dessinry/error.hpp"
#include "dessinry/hurwitz.hpp"
#include "dessinry/io.hpp"
#include "dessinry/modular.hpp"
#include "dessinry/qseries.hpp"
#include "dessinry/radical.hpp"
#include "dessinry/table1.hpp"

namespace dessinry::cli {

namespace {

using Real = long double;
using C = std::complex<Real>;

// Bad input files and malformed command data; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("'" + (path.empty() ? std::string("-") : path) + "' is not valid JSON: " + e.what());
  }
}

// Inline JSON, or @FILE.
Json inline_json(const std::string& text) {
  if (!text.empty() && text[0] == '@') return read_json(text.substr(1));
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("not valid JSON: " + text);
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Json with_schema(Json body) {
  Json j{{"schema", kSchema}};
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

std::string number(Real x, int digits = 20) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string complex_text(C z) {
  std::string s = number(z.real());
  if (z.imag() != 0) s += (z.imag() < 0 ? " - " : " + ") + number(std::abs(z.imag())) + "i";
  return s;
}

Json complex_json(C z) { return Json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())}); }

Json modular_json(const ModularValue<Real>& v) {
  return Json{{"value", complex_json(v.value)}, {"value_text", complex_text(v.value)},
              {"trunc_bound", static_cast<double>(v.trunc_bound)}};
}

std::vector<C> complex_list(const Json& j) {
  if (!j.is_array()) throw UsageError("expected a JSON array of numbers or [re, im] pairs");
  std::vector<C> out;
  for (const auto& v : j) {
    if (v.is_number())
      out.emplace_back(v.get<double>(), 0);
    else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    else
      throw UsageError("expected a number or [re, im] pair, got " + v.dump());
  }
  return out;
}

C parse_point(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return C(std::stold(text), 0);
    return C(std::stold(text.substr(0, comma)), std::stold(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw UsageError("expected RE,IM but got '" + text + "'");
  }
}

std::string cycles_text(const MonodromyTuple& t) {
  std::string s;
  for (int nu = 0; nu < t.n(); ++nu) s += (nu ? " " : "") + to_cycle_string(t[nu]);
  return s;
}

std::vector<MonodromyTuple> tuples_from_json(const Json& j) {
  std::vector<MonodromyTuple> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(tuple_from_json(e));
  } else if (j.contains("orbit")) {
    for (const auto& e : j.at("orbit")) out.push_back(tuple_from_json(e));
  } else {
    out.push_back(tuple_from_json(j));
  }
  return out;
}

std::vector<EndomorphismTable> generators(const std::string& spec, int n) {
  if (spec == "preset:pure") return preset_pure_generators(n);
  if (spec == "preset:gamma2") {
    if (n != 4) throw Error(ErrorKind::InvalidArgument, "preset:gamma2 is defined for n = 4 only");
    return preset_gamma2_generators();
  }
  Json j = read_json(spec);
  std::vector<EndomorphismTable> out;
  const Json& list = j.is_array() ? j : j.at("tables");
  for (const auto& e : list) out.push_back(table_from_json(e));
  for (const auto& e : out)
    if (e.n != n) throw Error(ErrorKind::InvalidArgument, "table '" + e.name + "' is for n = " + std::to_string(e.n));
  return out;
}

Real env_tol(Real fallback) {
  if (const char* v = std::getenv("DESSINRY_TOL")) {
    try {
      Real t = std::stold(v);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("DESSINRY_TOL is not a positive number: ") + v);
  }
  return fallback;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with higher dessins d'enfants, origamis and the modular functions lambda*, ap."};
  app.name("dessinry");
  app.require_subcommand(1);
  app.fallthrough(false);

  int n = 0, d = 0, jobs = 1, order = 0;
  std::string format = "table", seed, gens = "preset:pure", dot, input, op, emit = "dessin", lift, rows, poly,
              branch_points, base = "0,2", tau;
  double a = 0, t = 0;
  double tol_flag = 0;
  bool json = false, check = false;

  auto* en = app.add_subcommand("enumerate", "All isomorphism classes of n-dessins of degree d");
  en->add_option("--n", n, "Number of marked points")->required()->check(CLI::Range(3, 64));
  en->add_option("--d", d, "Degree")->required()->check(CLI::Range(1, 64));
  en->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  en->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  auto* orb = app.add_subcommand("orbit", "Orbits under pure braid or delta generators");
  orb->add_option("--n", n, "Number of marked points")->required()->check(CLI::Range(3, 64));
  orb->add_option("--d", d, "Degree")->required()->check(CLI::Range(1, 64));
  orb->add_option("--seed", seed, "JSON file with a tuple or a list of tuples (default: all classes)");
  orb->add_option("--gens", gens, "preset:pure, preset:gamma2, or a JSON file of tables");
  orb->add_option("--dot", dot, "Also write the orbit graph in DOT format to this file");
  orb->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  orb->add_option("--jobs", jobs, "Worker threads for the enumeration")->check(CLI::Range(1, 256));

  auto* ori = app.add_subcommand("origami", "Bipartite origamis");
  ori->require_subcommand(1);
  auto* o_to = ori->add_subcommand("to-dessin", "Origami JSON to 4-dessin tuple");
  auto* o_from = ori->add_subcommand("from-dessin", "4-dessin tuple to origami JSON");
  auto* o_delta = ori->add_subcommand("delta", "Apply a shear");
  auto* o_orbit = ori->add_subcommand("orbit", "Orbit under the shears and their inverses");
  for (auto* s : {o_to, o_from, o_delta, o_orbit}) s->add_option("--input", input, "JSON file (default: stdin)");
  o_delta->add_option("--op", op, "Shear")->required()->check(CLI::IsMember({"hor", "ver", "hor-inv", "ver-inv"}));
  o_orbit->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* hur = app.add_subcommand("hurwitz", "4-dessin attached to a lift of (1, inf)");
  hur->add_option("--a", a, "Point a > 1")->required();
  hur->add_option("--lift", lift, "Lift")->required()->check(CLI::IsMember({"L1", "L2", "L3", "L4"}));
  hur->add_option("--emit", emit, "Output")->check(CLI::IsMember({"dessin", "origami", "dot"}));

  auto* mono = app.add_subcommand("monodromy", "Monodromy of x -> P(x) by root tracking");
  mono->add_option("--poly", poly, "Coefficients of P, ascending, JSON (or @FILE)")->required();
  mono->add_option("--branch-points", branch_points, "Finite branch points, JSON (or @FILE); infinity is color 0")
      ->required();
  mono->add_option("--base", base, "Base point RE,IM");
  mono->add_option("--tol", tol_flag, "Root residual tolerance");
  mono->add_option("--emit", emit, "Output")->check(CLI::IsMember({"dessin", "dot"}));

  auto* ls = app.add_subcommand("lambda-star", "lambda*(tau) by three expressions");
  ls->add_option("--tau", tau, "RE,IM")->required();
  ls->add_option("--tol", tol_flag, "Truncation tolerance");
  ls->add_flag("--json", json, "JSON output");

  auto* apc = app.add_subcommand("ap", "ap(t) = lambda*(i t)");
  apc->add_option("--t", t, "t > 0")->required();
  apc->add_option("--tol", tol_flag, "Truncation tolerance");
  apc->add_flag("--json", json, "JSON output");

  auto* tb = app.add_subcommand("table1", "ap(sqrt(n)) against closed forms");
  tb->add_option("--rows", rows, "Comma-separated n values (default: all)");
  tb->add_flag("--check", check, "Compare with the closed forms; exit 1 on a mismatch");
  tb->add_option("--tol", tol_flag, "Comparison tolerance");
  tb->add_flag("--json", json, "JSON output");

  auto* qs = app.add_subcommand("qseries", "Integer q2-expansion of lambda*");
  qs->add_option("--order", order, "Highest power")->required()->check(CLI::Range(0, 100000));
  qs->add_flag("--json", json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const bool as_json = format == "json";
  try {
    if (en->parsed()) {
      auto r = enumerate(n, d, jobs);
      if (as_json) {
        out << with_schema(to_json(r)).dump(2) << "\n";
      } else {
        out << "n=" << r.n << " d=" << r.d << " classes=" << r.classes.size() << " marked=" << r.marked_count << "\n";
        for (std::size_t k = 0; k < r.classes.size(); ++k) {
          const auto& c = r.classes[k];
          out << k << "\tgenus=" << c.genus << "\tnormal=" << (c.normal ? "yes" : "no") << "\t"
              << to_string(c.profile) << "\t" << cycles_text(c.canonical) << "\n";
        }
      }
      return 0;
    }

    if (orb->parsed()) {
      auto gen = generators(gens, n);
      std::vector<OrbitResult> orbits;
      if (!seed.empty()) {
        auto seeds = tuples_from_json(read_json(seed));
        for (const auto& s : seeds)
          if (s.n() != n || s.degree() != d)
            throw Error(ErrorKind::InvalidArgument, "seed does not have n = " + std::to_string(n) + ", d = " + std::to_string(d));
        orbits.push_back(braid_orbit(seeds, gen));
      } else {
        std::vector<MonodromyTuple> classes;
        for (const auto& c : enumerate(n, d, jobs).classes) classes.push_back(c.canonical);
        orbits = orbit_partition(classes, gen);
      }
      if (!dot.empty()) {
        std::string text;
        for (const auto& o : orbits) text += orbit_to_dot(o);
        write_file(dot, text);
      }
      if (as_json) {
        Json list = Json::array();
        for (const auto& o : orbits) list.push_back(to_json(o));
        Json tables = Json::array();
        for (const auto& g : gen) tables.push_back(to_json(g));
        out << with_schema(Json{{"n", n}, {"d", d}, {"generators", tables}, {"orbit_count", orbits.size()}, {"orbits", list}})
                   .dump(2)
            << "\n";
      } else {
        out << "n=" << n << " d=" << d << " orbits=" << orbits.size() << "\n";
        for (std::size_t k = 0; k < orbits.size(); ++k) {
          out << "orbit " << k << " size=" << orbits[k].members.size() << "\n";
          for (const auto& m : orbits[k].members) out << "  " << cycles_text(m) << "\n";
        }
      }
      return 0;
    }

    if (ori->parsed()) {
      Json in = read_json(input);
      if (o_to->parsed()) {
        out << with_schema(to_json(origami_to_dessin(origami_from_json(in)))).dump() << "\n";
      } else if (o_from->parsed()) {
        out << with_schema(to_json(dessin_to_origami(tuple_from_json(in)))).dump() << "\n";
      } else if (o_delta->parsed()) {
        DeltaOp which = op == "hor" ? DeltaOp::Hor : op == "ver" ? DeltaOp::Ver : op == "hor-inv" ? DeltaOp::HorInv : DeltaOp::VerInv;
        out << with_schema(to_json(delta(origami_from_json(in), which))).dump() << "\n";
      } else {
        auto r = origami_orbit(origami_from_json(in));
        if (as_json) {
          out << with_schema(to_json(r)).dump(2) << "\n";
        } else {
          out << "size=" << r.members.size() << "\n";
          for (const auto& m : r.members) out << "  " << to_json(m).dump() << "\n";
        }
      }
      return 0;
    }

    if (hur->parsed()) {
      const Lift which = parse_lift(lift);
      const Complex s = hurwitz_lift_point(a, which);
      auto tuple = hurwitz_dessin(a, which);
      if (emit == "dot") {
        out << dessin_to_dot(tuple);
      } else if (emit == "origami") {
        out << with_schema(to_json(canonical_origami(dessin_to_origami(tuple)))).dump() << "\n";
      } else {
        Json j = to_json(tuple);
        j["a"] = a;
        j["lift"] = lift;
        j["s"] = Json::array({s.real(), s.imag()});
        j["genus"] = genus(tuple);
        j["profile"] = to_json(cycle_profile(tuple));
        out << with_schema(j).dump() << "\n";
      }
      return 0;
    }

    if (mono->parsed()) {
      auto coeffs = complex_list(inline_json(poly));
      auto points = complex_list(inline_json(branch_points));
      if (coeffs.size() < 2) throw Error(ErrorKind::InvalidArgument, "P must have degree at least 1");
      Eigen::VectorXcd P(static_cast<Eigen::Index>(coeffs.size()));
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        P(static_cast<Eigen::Index>(k)) = Complex(static_cast<double>(coeffs[k].real()), static_cast<double>(coeffs[k].imag()));
      std::vector<Complex> bp;
      for (auto z : points) bp.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      const C b = parse_point(base);
      const double tol = tol_flag > 0 ? tol_flag : static_cast<double>(env_tol(1e-10));
      auto tuple = numerical_monodromy(polynomial_cover(P, bp), Complex(static_cast<double>(b.real()), static_cast<double>(b.imag())), tol);
      if (emit == "dot") {
        out << dessin_to_dot(tuple);
      } else {
        Json j = to_json(tuple);
        j["canonical"] = to_json(canonical_form(tuple));
        j["genus"] = genus(tuple);
        j["profile"] = to_json(cycle_profile(tuple));
        out << with_schema(j).dump() << "\n";
      }
      return 0;
    }

    const Real mod_tol = tol_flag > 0 ? static_cast<Real>(tol_flag) : env_tol(1e-15L);

    if (ls->parsed()) {
      const UpperHalfPoint<Real> p(parse_point(tau));
      auto forms = lambda_star_forms(p, mod_tol);
      auto v = lambda_star(p, mod_tol);
      if (json) {
        Json j = modular_json(v);
        j["tau"] = complex_json(p.tau());
        j["tol"] = static_cast<double>(mod_tol);
        j["expression_disagreement"] = static_cast<double>(forms.max_disagreement);
        out << with_schema(j).dump() << "\n";
      } else {
        out << "lambda*(" << complex_text(p.tau()) << ") = " << complex_text(v.value) << "\n"
            << "truncation bound " << number(v.trunc_bound, 3) << ", expression disagreement "
            << number(forms.max_disagreement, 3) << "\n";
      }
      return 0;
    }

    if (apc->parsed()) {
      auto v = ap<Real>(static_cast<Real>(t), mod_tol);
      if (json) {
        Json j = modular_json(v);
        j["t"] = t;
        out << with_schema(j).dump() << "\n";
      } else {
        out << "ap(" << number(t) << ") = " << complex_text(v.value) << "\ntruncation bound " << number(v.trunc_bound, 3) << "\n";
      }
      return 0;
    }

    if (tb->parsed()) {
      const Real threshold = tol_flag > 0 ? static_cast<Real>(tol_flag) : env_tol(1e-9L);
      std::vector<ApRow> selected;
      if (rows.empty()) {
        selected = table1_rows();
      } else {
        std::stringstream ss(rows);
        std::string item;
        while (std::getline(ss, item, ',')) {
          int want = 0;
          try {
            want = std::stoi(item);
          } catch (const std::exception&) {
            throw UsageError("--rows expects integers, got '" + item + "'");
          }
          auto it = std::find_if(table1_rows().begin(), table1_rows().end(), [&](const ApRow& r) { return r.n == want; });
          if (it == table1_rows().end()) throw UsageError("no table row for n = " + item);
          selected.push_back(*it);
        }
      }
      bool all_ok = true;
      Json list = Json::array();
      for (const auto& row : selected) {
        auto v = ap<Real>(std::sqrt(static_cast<Real>(row.n)), 1e-15L);
        const Real expected = static_cast<Real>(evaluate_radical(row.expression));
        const Real diff = std::abs(v.value - C(expected));
        const bool ok = diff <= threshold && std::abs(v.value.imag()) <= 1e-11L && v.value.real() > 1;
        all_ok = all_ok && ok;
        if (json) {
          Json j{{"n", row.n}, {"ap", static_cast<double>(v.value.real())}, {"ap_text", number(v.value.real())},
                 {"imag", static_cast<double>(v.value.imag())}, {"closed_form", row.expression},
                 {"expected_text", number(expected)}};
          if (check) {
            j["difference"] = static_cast<double>(diff);
            j["pass"] = ok;
          }
          list.push_back(j);
        } else if (check) {
          out << (ok ? "PASS" : "FAIL") << " n=" << row.n << " ap=" << number(v.value.real())
              << " expected=" << number(expected) << " |diff|=" << number(diff, 3) << "\n";
        } else {
          out << "n=" << row.n << " ap=" << number(v.value.real()) << "  " << row.expression << "\n";
        }
      }
      if (json) out << with_schema(Json{{"rows", list}, {"tolerance", static_cast<double>(threshold)}}).dump(2) << "\n";
      return check && !all_ok ? 1 : 0;
    }

    if (qs->parsed()) {
      auto s = lambda_star_qseries(order);
      if (json) {
        Json coeffs = Json::array();
        for (const auto& c : s.coefficients) coeffs.push_back(c.str());
        out << with_schema(Json{{"order", order}, {"variable", "q2"}, {"coefficients", coeffs}}).dump() << "\n";
      } else {
        for (int k = 0; k <= s.order(); ++k) out << k << "\t" << s.coefficients[static_cast<std::size_t>(k)] << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: malformed input: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace dessinry::cli
