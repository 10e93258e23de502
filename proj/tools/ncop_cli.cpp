// Batch front-end: every verb is a thin shell over a library call.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncop/acceptance.hpp"
#include "ncop/borjeson.hpp"
#include "ncop/brick.hpp"
#include "ncop/givental.hpp"
#include "ncop/intersection.hpp"
#include "ncop/zoo.hpp"

using namespace ncop;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kResource = 3;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  void add(std::vector<std::string> r) { rows.push_back(std::move(r)); }
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (std::size_t k = 0; k < t.header.size(); ++k) os << (k ? "," : "") << csv_cell(t.header[k]);
    os << "\n";
    for (auto& r : t.rows) {
      for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csv_cell(r[k]);
      os << "\n";
    }
  } else if (format == "json") {
    ojson a = ojson::array();
    for (auto& r : t.rows) {
      ojson o = ojson::object();
      for (std::size_t k = 0; k < r.size(); ++k) o[t.header[k]] = r[k];
      a.push_back(o);
    }
    os << a.dump() << "\n";
  } else {
    os << "|";
    for (auto& h : t.header) os << " " << h << " |";
    os << "\n|";
    for (std::size_t k = 0; k < t.header.size(); ++k) os << "---|";
    os << "\n";
    for (auto& r : t.rows) {
      os << "|";
      for (auto& c : r) os << " " << c << " |";
      os << "\n";
    }
  }
  return os.str();
}

std::string join(const std::vector<long>& v, const std::string& sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

std::string graded(const std::map<int, long>& m) {
  std::string s;
  for (auto& [d, c] : m) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(c);
  return s;
}

std::string point(const IntPoint& p) { return "(" + join(std::vector<long>(p.begin(), p.end()), ",") + ")"; }

std::string yes(bool b) { return b ? "PASS" : "FAIL"; }

void require_range(const std::string& what, int v, int lo, int hi) {
  if (v < lo) throw CLI::ValidationError(what, "must be at least " + std::to_string(lo));
  if (v > hi) throw ResourceError(what + " = " + std::to_string(v) + " exceeds the guard " + std::to_string(hi));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string x; std::getline(ss, x, sep);)
    if (!x.empty()) out.push_back(x);
  return out;
}

// M<n>, T<n> (upper triangular), P<n>[:deg] (truncated polynomial),
// tensor:<deg,deg,...>:<N>, or a JSON fixture path.
struct LoadedAlgebra {
  Algebra algebra;
  std::unique_ptr<TensorAlgebraTrunc> tensor;
};

LoadedAlgebra load_algebra(const std::string& spec) {
  LoadedAlgebra r;
  auto num = [&](std::size_t from) { return std::stoi(spec.substr(from)); };
  if (spec.rfind("tensor:", 0) == 0) {
    auto parts = split(spec.substr(7), ':');
    if (parts.size() != 2) throw CLI::ValidationError("--algebra", "expected tensor:<degrees>:<N>");
    std::vector<int> degs;
    for (auto& d : split(parts[0], ',')) degs.push_back(std::stoi(d));
    int N = std::stoi(parts[1]);
    require_range("tensor length", N, 1, 7);
    r.tensor = std::make_unique<TensorAlgebraTrunc>(degs, N);
    r.algebra = r.tensor->algebra();
  } else if (spec.size() > 1 && spec[0] == 'M' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    require_range("matrix size", num(1), 1, 3);
    r.algebra = matrix_algebra(num(1));
  } else if (spec.size() > 1 && spec[0] == 'T' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    require_range("matrix size", num(1), 1, 3);
    r.algebra = upper_triangular(num(1));
  } else if (spec.size() > 1 && spec[0] == 'P' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    auto parts = split(spec.substr(1), ':');
    r.algebra = truncated_polynomial(std::stoi(parts[0]), parts.size() > 1 ? std::stoi(parts[1]) : 0);
  } else {
    std::ifstream in(spec);
    if (!in) throw CLI::ValidationError("--algebra", "unknown algebra or unreadable file: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    r.algebra = algebra_from_json(ss.str());
  }
  return r;
}

struct Output {
  std::string format = "markdown";
  std::string path;
  std::ostringstream buf;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative operads: dimension tables, certificates and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t seed = 20240917;
  app.add_option("--format", out.format, "csv | json | markdown")
      ->check(CLI::IsMember({"csv", "json", "markdown"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for random checks")->capture_default_str();
  app.add_option("-o,--output", out.path, "write to a file instead of stdout");

  int status = kOk;
  std::string witness;
  auto fail = [&](const std::string& w) {
    status = kFail;
    if (witness.empty()) witness = w;
  };

  // ---- zoo / dims
  std::string op_name;
  int n_max = 6, n_min = 2;
  auto dims_action = [&] {
    require_range("--n-max", n_max, n_min, 9);
    Certificate c = certify_dimensions(op_name, n_max, n_min);
    if (!c.ok) fail(op_name + ": " + c.first_failure);
    if (out.format == "json") {
      out.buf << c.json() << "\n";
      return;
    }
    Table t{{"arity", "total", "graded", "groebner_total", "brute_total", "closed_total", "status"}, {}};
    std::map<int, std::map<int, long>> by_degree;
    for (auto& r : c.rows)
      if (!r.total) by_degree[r.arity][r.degree] = r.brute;
    for (auto& r : c.rows)
      if (r.total) {
        bool ok = true;
        for (auto& x : c.rows)
          if (x.arity == r.arity) ok = ok && x.agree();
        t.add({std::to_string(r.arity), std::to_string(r.brute), graded(by_degree[r.arity]), std::to_string(r.groebner),
               std::to_string(r.brute), std::to_string(r.closed), yes(ok)});
      }
    out.buf << render(t, out.format);
  };

  auto* zoo = app.add_subcommand("zoo", "named presentations");
  zoo->require_subcommand(1);
  zoo->fallthrough();
  zoo->add_subcommand("list", "list the named operads")->callback([&] {
    Table t{{"name", "generators", "relations", "homogeneity"}, {}};
    for (auto& n : zoo_names()) {
      auto p = presentation_of(n, 5);
      std::string gens;
      for (auto& g : p.alphabet)
        gens += (gens.empty() ? "" : " ") + g.name + "(" + std::to_string(g.arity) + "," + std::to_string(g.degree) + ")";
      const char* h = p.homogeneity() == Homogeneity::Quadratic         ? "quadratic"
                      : p.homogeneity() == Homogeneity::QuadraticLinear ? "quadratic-linear"
                                                                        : "general";
      t.add({n, gens, std::to_string(p.relations.size()), h});
    }
    out.buf << render(t, out.format);
  });
  auto* zrel = zoo->add_subcommand("relations", "print a presentation");
  zrel->add_option("name", op_name)->required();
  zrel->add_option("--n-max", n_max, "arity cap for families")->capture_default_str();
  zrel->callback([&] {
    require_range("--n-max", n_max, 2, 12);
    auto p = presentation_of(op_name, n_max);
    if (out.format == "markdown" || out.format == "csv") {
      Table t{{"relation"}, {}};
      for (auto& r : p.relations) t.add({to_string(r, p.alphabet)});
      out.buf << render(t, out.format);
    } else {
      out.buf << ojson{{"name", p.name}, {"presentation", serialize(p)}}.dump() << "\n";
    }
  });
  auto* zdims = zoo->add_subcommand("dims", "certified dimension table");
  auto* dims = app.add_subcommand("dims", "certified dimension table");
  for (auto* c : {zdims, dims}) {
    c->add_option("name", op_name)->required();
    c->add_option("--n-max", n_max)->capture_default_str();
    c->add_option("--n-min", n_min)->capture_default_str();
    c->callback(dims_action);
  }

  // ---- groebner
  int cap = 5;
  auto* gb = app.add_subcommand("groebner", "complete a presentation and list its rules");
  gb->add_option("name", op_name)->required();
  gb->add_option("--cap", cap, "arity cap")->capture_default_str();
  gb->callback([&] {
    require_range("--cap", cap, 2, 8);
    NamedOperad o = named_operad(op_name, cap);
    if (o.presentation.homogeneity() != Homogeneity::Quadratic && op_name != "ncBV2")
      throw CLI::ValidationError("groebner", op_name + " is not homogeneous; use qncBV");
    GroebnerBasis g = complete(o.presentation, o.preferred_order, cap);
    Table t{{"lead", "rule"}, {}};
    for (auto& r : g.rules()) t.add({to_string(Element(r.lead), g.alphabet()), to_string(r.relation(), g.alphabet())});
    if (out.format == "json")
      out.buf << ojson{{"name", op_name},
                       {"cap", cap},
                       {"complete", g.complete_up_to_cap()},
                       {"additions", g.additions()},
                       {"rules", serialize(g)}}
                     .dump()
              << "\n";
    else
      out.buf << render(t, out.format);
    if (!g.complete_up_to_cap()) fail("completion did not finish below the cap");
  });

  // ---- correlators
  int n = 4;
  bool all_indices = false;
  auto* corr = app.add_subcommand("correlators", "psi-class correlators of one arity");
  corr->add_option("--n", n)->capture_default_str();
  corr->add_flag("--all", all_indices, "include vanishing correlators");
  corr->callback([&] {
    require_range("--n", n, 2, 10);
    Table t{{"correlator", "closed", "trr"}, {}};
    for (auto& i : correlator_indices(n)) {
      long c = correlator_closed(i), r = correlator_trr(i);
      if (c != r) fail(i.to_string() + ": closed " + std::to_string(c) + ", recursion " + std::to_string(r));
      if (c || r || all_indices) t.add({i.to_string(), std::to_string(c), std::to_string(r)});
    }
    out.buf << render(t, out.format);
  });

  // ---- polytope
  std::string which = "loday", checks;
  auto* poly = app.add_subcommand("polytope", "Loday polytope vertices and checks");
  poly->add_option("kind", which)->check(CLI::IsMember({"loday"}))->capture_default_str();
  poly->add_option("--n", n)->capture_default_str();
  poly->add_option("--check", checks, "comma list of minkowski, missing-basis, certified");
  poly->callback([&] {
    require_range("--n", n, 2, 9);
    LatticePolytope p = loday_polytope(n);
    if (checks.empty()) {
      if (out.format == "json") {
        out.buf << p.json() << "\n";
        return;
      }
      Table t{{"tree", "vertex"}, {}};
      for (auto& tr : enumerate_trees(n, true)) t.add({tr.to_string(), point(loday_vertex(tr))});
      out.buf << render(t, out.format);
      return;
    }
    Table t{{"check", "status", "detail"}, {}};
    for (auto& c : split(checks, ',')) {
      bool ok = true;
      std::string detail = std::to_string(p.vertices.size()) + " vertices";
      if (c == "minkowski") {
        ok = loday_via_minkowski(n).vertices == p.vertices;
      } else if (c == "missing-basis") {
        for (auto& tr : enumerate_trees(n, true))
          if (vertex_missing_basis(tr) != loday_vertex(tr)) {
            ok = false;
            detail = tr.to_string();
            break;
          }
      } else if (c == "certified") {
        ok = vertices_certified(p);
      } else {
        throw CLI::ValidationError("--check", "unknown check " + c);
      }
      if (!ok) fail(c + ": " + detail);
      t.add({c, yes(ok), detail});
    }
    out.buf << render(t, out.format);
  });

  // ---- fan
  auto* fan = app.add_subcommand("fan", "normal fan of the Loday polytope");
  fan->add_option("--n", n)->capture_default_str();
  fan->callback([&] {
    require_range("--n", n, 3, 7);
    Fan f = normal_fan(n);
    if (!fan_consistent(f, loday_polytope(n))) fail("fan is not consistent with the polytope");
    if (out.format == "json") {
      out.buf << f.json() << "\n";
      return;
    }
    Table t{{"cone_a", "cone_b", "wall"}, {}};
    for (auto& w : f.walls)
      t.add({f.trees[w.cone_a].to_string(), f.trees[w.cone_b].to_string(),
             "y" + std::to_string(w.left) + " = y" + std::to_string(w.right)});
    out.buf << render(t, out.format);
  });

  // ---- betti
  auto* betti = app.add_subcommand("betti", "h-vectors and Betti numbers of brick manifolds");
  betti->add_option("--n-max", n_max)->capture_default_str();
  betti->callback([&] {
    require_range("--n-max", n_max, 2, 10);
    Table t{{"n", "f_vector", "h_vector", "complex_betti", "real_betti", "euler", "expected"}, {}};
    for (int k = 2; k <= n_max; ++k) {
      long e = euler_characteristic(real_betti(k)), x = real_euler_expected(k);
      if (e != x) fail("n=" + std::to_string(k) + " euler " + std::to_string(e));
      t.add({std::to_string(k), join(f_vector(k)), join(h_vector(k)), join(complex_betti(k)), join(real_betti(k)),
             std::to_string(e), std::to_string(x)});
    }
    out.buf << render(t, out.format);
  });

  // ---- brick
  std::string tree_text, brick_check;
  auto* brick = app.add_subcommand("brick", "sample a brick configuration in a stratum");
  brick->add_option("--tree", tree_text, "planar tree, e.g. (1,(2,3),4)");
  brick->add_option("--n", n, "random tree with n leaves when --tree is absent")->capture_default_str();
  brick->add_option("--check", brick_check, "axioms: run the composition-axiom certificate")
      ->check(CLI::IsMember({"axioms"}));
  brick->callback([&] {
    if (brick_check == "axioms") {
      AcceptanceOptions opt;
      opt.seed = seed;
      auto r = run_criterion(6, opt);
      if (!r.pass) fail(r.detail);
      out.buf << format_result(r) << "\n";
      return;
    }
    ConfigSampler s(seed);
    PlanarTree t;
    if (tree_text.empty()) {
      require_range("--n", n, 1, 12);
      t = s.tree(n);
    } else {
      t = parse_tree(tree_text);
    }
    SubspaceConfig c = s.sample(t);
    PlanarTree back = stratum_of(c);
    if (!c.valid()) fail(c.violation());
    if (back != t) fail("stratum " + back.to_string());
    if (out.format == "json")
      out.buf << ojson{{"tree", t.to_string()},
                       {"valid", c.valid()},
                       {"stratum", back.to_string()},
                       {"dimension", stratum_dimension(t)},
                       {"config", c.serialize()}}
                     .dump()
              << "\n";
    else
      out.buf << render(Table{{"tree", "valid", "stratum", "dimension"},
                              {{t.to_string(), c.valid() ? "yes" : "no", back.to_string(),
                                std::to_string(stratum_dimension(t))}}},
                        out.format)
              << (out.format == "markdown" ? "\n```\n" + c.serialize() + "```\n" : "");
  });

  // ---- borjeson
  std::string algebra_spec = "M2";
  int degree = 0, symbol = 0;
  auto* bj = app.add_subcommand("borjeson", "Borjeson products and the order of a random operator");
  bj->add_option("--algebra", algebra_spec, "M<n>, T<n>, P<n>[:deg], tensor:<degs>:<N> or a JSON file")
      ->capture_default_str();
  bj->add_option("--degree", degree)->capture_default_str();
  bj->add_option("--n-max", n_max)->capture_default_str();
  bj->add_option("--symbol", symbol, "on tensor algebras: rho of a random symbol of this length");
  bj->callback([&] {
    require_range("--n-max", n_max, 1, 7);
    LoadedAlgebra L = load_algebra(algebra_spec);
    const Algebra& A = L.algebra;
    OpSampler rng(seed);
    MultilinearOp D;
    if (symbol > 0) {
      if (!L.tensor) throw CLI::ValidationError("--symbol", "needs a tensor algebra");
      D = rho(*L.tensor, random_symbol(*L.tensor, symbol, degree, rng));
    } else {
      D = rng.unary(A.space, degree, 0.4);
    }
    Table t{{"n", "recursive_eq_closed", "vanishes", "first_nonzero"}, {}};
    for (int k = 1; k <= n_max; ++k) {
      auto rec = borjeson(A, D, k);
      bool eq = rec == borjeson_closed(A, D, k);
      if (!eq) fail("b_" + std::to_string(k) + " recursion differs from the closed form");
      auto w = first_nonzero(rec, k);
      t.add({std::to_string(k), yes(eq), rec.is_zero() ? "yes" : "no", w ? w->to_string(A.space) : ""});
    }
    OrderReport o = nc_order(A, D, n_max);
    t.add({"order", o.to_string(), "", ""});
    out.buf << render(t, out.format);
  });

  // ---- givental
  int kz = 0;
  auto* gv = app.add_subcommand("givental", "infinitesimal Givental action on an associative algebra");
  gv->add_option("--algebra", algebra_spec)->capture_default_str();
  gv->add_option("--degree", degree)->capture_default_str();
  gv->add_option("--k", kz, "power of z")->capture_default_str();
  gv->add_option("--n-max", n_max)->capture_default_str();
  gv->callback([&] {
    require_range("--n-max", n_max, 2, 6);
    require_range("--k", kz, 0, 4);
    LoadedAlgebra L = load_algebra(algebra_spec);
    const Algebra& A = L.algebra;
    if (!A.associative()) throw CLI::ValidationError("--algebra", "the product is not associative");
    OpSampler rng(seed);
    MultilinearOp r = rng.unary(A.space, degree, 0.4);
    auto tau = givental_tau(A.space, r, associative_family(A), kz, n_max);
    Table t{{"n", "recursion_eq_direct", "vanishes"}, {}};
    for (int k = 2; k <= n_max; ++k) {
      auto dir = givental_direct(A, r, kz, k);
      bool eq = tau.at(k) == dir;
      if (!eq) fail("tau_" + std::to_string(k) + " recursion differs from direct evaluation");
      t.add({std::to_string(k), yes(eq), dir.is_zero() ? "yes" : "no"});
    }
    EndoSeries series(kz + 1, MultilinearOp(1, degree));
    series[kz] = r;
    auto pr = preserves_associative(A, series);
    t.add({"preserves", pr.preserved ? "yes" : "no", pr.to_string(A.space)});
    out.buf << render(t, out.format);
  });

  // ---- certify-all
  bool quick = false;
  std::vector<int> only;
  auto* cert = app.add_subcommand("certify-all", "run the acceptance criteria");
  cert->add_flag("--quick", quick, "threshold ranges only (the default run is thorough)");
  cert->add_option("--only", only, "criterion ids")->delimiter(',');
  cert->callback([&] {
    AcceptanceOptions opt;
    opt.thorough = !quick;
    opt.seed = seed;
    opt.only = only;
    Table t{{"id", "status", "title", "checks", "seconds", "detail"}, {}};
    auto res = run_acceptance(opt, [&](const CriterionResult& r) {
      if (out.format == "markdown" && out.path.empty()) std::cerr << format_result(r) << "\n";
    });
    for (auto& r : res) {
      if (!r.pass) fail("criterion " + std::to_string(r.id) + ": " + r.detail);
      std::ostringstream secs;
      secs.precision(2);
      secs << std::fixed << r.seconds;
      t.add({std::to_string(r.id), yes(r.pass), r.title, std::to_string(r.checks), secs.str(), r.detail});
    }
    out.buf << render(t, out.format);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }

  if (out.path.empty()) {
    std::cout << out.buf.str();
  } else {
    std::ofstream f(out.path);
    if (!f) {
      std::cerr << "cannot write " << out.path << "\n";
      return kUsage;
    }
    f << out.buf.str();
  }
  if (status != kOk) std::cerr << "FAIL: " << witness << "\n";
  return status;
}
