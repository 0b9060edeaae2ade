// Command-line front end over the paraf library.
#include "paraf/central_ext.hpp"
#include "paraf/code_lattice.hpp"
#include "paraf/fusion_ring.hpp"
#include "paraf/io.hpp"
#include "paraf/lattice.hpp"
#include "paraf/orbifold_ring.hpp"
#include "paraf/u5a.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#ifndef PARAF_GOLDEN_DIR
#define PARAF_GOLDEN_DIR "golden"
#endif

using namespace paraf;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

// Wrong input detected after parsing; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int level = 0;
  std::string builtin;
  std::string golden_dir = PARAF_GOLDEN_DIR;
  std::vector<std::string> args;
  std::string lattice_path, sublattice_path, code_path, tensor;
  std::string u5a_action;
};

bool json_out(const Options& o) { return o.format == "json"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int finish(const Options& o, const Report& r, const std::string& text) {
  if (json_out(o)) {
    print_json(to_json(r));
  } else {
    std::cout << text;
    for (const auto& f : r.findings) std::cout << "  - " << f << "\n";
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? kOk : kFail;
}

int need_level(const Options& o, int lo, int hi = 1 << 20) {
  if (o.level < lo || o.level > hi)
    throw UsageError("-k/--level: must be in [" + std::to_string(lo) + ", " + (hi == 1 << 20 ? "inf" : std::to_string(hi)) +
                     "], got " + std::to_string(o.level));
  return o.level;
}

json label_json(const IrrLabel& x) { return json::array({x.i, x.j}); }

// Builtin lattice names: A<n>, D<n>, E6/7/8, sqrt2A<n>, LC5B.
Lattice builtin_lattice(const std::string& name) {
  static const std::regex root(R"(([ADE])(\d+))"), scaled(R"(sqrt2A(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, root)) return root_lattice(m[1].str()[0], std::stoi(m[2]));
  if (std::regex_match(name, m, scaled)) return sqrt2_a(std::stoi(m[1]) + 1);
  if (name == "LC5B") return build_lattice(builtin_code("5B")).lattice;
  throw UsageError("--builtin: unknown lattice '" + name + "'");
}

Lattice lattice_arg(const Options& o) {
  if (!o.builtin.empty()) return builtin_lattice(o.builtin);
  if (o.lattice_path.empty()) throw UsageError("a lattice is required: pass --builtin NAME or --lattice FILE");
  return load_lattice(o.lattice_path);
}

int cmd_fuse(const Options& o) {
  int k = need_level(o, 2);
  if (o.args.size() != 2) throw UsageError("fuse needs two labels \"i,j\"");
  IrrLabel a = parse_label(o.args[0], k), b = parse_label(o.args[1], k);
  FusionVector v = fuse(a, b);
  if (json_out(o)) {
    json terms = json::array();
    for (auto it = v.rbegin(); it != v.rend(); ++it) terms.push_back({{"label", label_json(it->first)}, {"mult", it->second}});
    print_json({{"level", k}, {"left", label_json(a)}, {"right", label_json(b)}, {"result", terms}, {"text", to_string(v)}});
  } else {
    std::cout << to_string(v) << "\n";
  }
  return kOk;
}

int cmd_weights(const Options& o) {
  int k = need_level(o, 3);
  Report r = verify_weight_one_tops(k);
  json table = json::array();
  std::ostringstream text;
  for (const auto& x : all_labels(k)) {
    Rational h = conformal_weight(x);
    table.push_back({{"label", label_json(x)}, {"weight", to_string(h)}});
    text << to_string(x) << "  " << to_string(h) << "\n";
  }
  r.payload["weights"] = table;
  text << "weight-one tops, k=" << k << ":\n";
  return finish(o, r, text.str());
}

int cmd_zk(const Options& o) {
  int k = need_level(o, 2);
  return finish(o, verify_zk_grading(k), "Z_" + std::to_string(k) + " grading of the fusion algebra:\n");
}

int cmd_orbifold_table(const Options& o) {
  int k = need_level(o, 3);
  OrbTable t = derive_full_table(k);
  if (json_out(o)) {
    json rows = json::array();
    for (const auto& x : t.basis)
      for (const auto& y : t.basis) {
        json prod = json::array();
        for (auto [z, m] : t.at(x, y)) prod.push_back({{"j", z.j}, {"eps", z.eps}, {"mult", m}});
        rows.push_back({{"x", {x.j, x.eps}}, {"y", {y.j, y.eps}}, {"product", prod}});
      }
    json basis = json::array();
    for (const auto& x : t.basis) basis.push_back({{"j", x.j}, {"eps", x.eps}, {"weight", to_string(orbifold_weight(x))}});
    print_json({{"level", k}, {"basis", basis}, {"products", rows}});
  } else {
    for (const auto& x : t.basis)
      for (const auto& y : t.basis)
        if (x <= y) std::cout << to_string(x) << " * " << to_string(y) << " = " << to_string(t.at(x, y)) << "\n";
  }
  return kOk;
}

int cmd_sigma_check(const Options& o) {
  int k = need_level(o, 3);
  OrbTable t = derive_full_table(k);
  Report all;
  std::ostringstream text;
  for (auto [name, rep] : {std::pair{"table axioms", check_table(t)}, std::pair{"sigma grading", verify_sigma_grading(t)},
                           std::pair{"collapse to fusion ring", verify_collapse(t)},
                           std::pair{"generator rows", verify_generator_rows(t)}}) {
    text << name << ": " << (rep.pass ? "ok" : "violated") << "\n";
    all.merge(rep);
    all.payload[name] = rep.pass;
  }
  return finish(o, all, text.str());
}

int cmd_lattice_info(const Options& o) {
  Lattice l = lattice_arg(o);
  Report r;
  DiscriminantGroup dg = discriminant_group(l);
  Rational mn = min_norm(l);
  std::size_t count = shell(l, mn).size();
  r.payload = {{"rank", l.rank()},          {"det", to_string(det(l))},        {"integral", is_integral(l)},
               {"even", is_even(l)},        {"min_norm", to_string(mn)},       {"min_vectors", count},
               {"gram", to_json(l.gram)}};
  if (is_integral(l)) r.payload["discriminant"] = to_json(dg.invariant_factors);
  std::ostringstream text;
  text << "rank " << l.rank() << "\ndet " << to_string(det(l)) << "\nintegral " << std::boolalpha << is_integral(l)
       << "\neven " << is_even(l) << "\nmin norm " << to_string(mn) << " (" << count << " vectors)\n";
  if (is_integral(l)) {
    text << "discriminant";
    for (const auto& d : dg.invariant_factors) text << " " << d.str();
    text << "\n";
  }
  return finish(o, r, text.str());
}

int cmd_rssd(const Options& o) {
  Lattice l = lattice_arg(o);
  if (o.sublattice_path.empty()) throw UsageError("--sublattice FILE is required");
  json sj = read_json_file(o.sublattice_path);
  if (!sj.contains("rows")) throw LoadError("/rows", "missing");
  QMatrix a = matrix_from_json(sj["rows"], "/rows");
  if (a.cols() != l.rank())
    throw LoadError("/rows/0", "sublattice rows have " + std::to_string(a.cols()) + " entries, lattice rank is " + std::to_string(l.rank()));
  Report r;
  bool rssd = is_rssd(l, a);
  r.payload["rssd"] = rssd;
  std::ostringstream text;
  text << "RSSD " << std::boolalpha << rssd << "\n";
  if (rssd) {
    QMatrix t = rssd_involution(l, a).matrix;
    r.payload["involution"] = to_json(t);
    text << "involution\n" << format(t) << "\n";
  } else {
    r.fail("sublattice is not RSSD");
  }
  return finish(o, r, text.str());
}

int cmd_quotient(const Options& o) {
  int k = need_level(o, 3);
  Report r;
  std::ostringstream text;
  if (o.tensor.empty()) {
    Lattice n = sqrt2_a(k);
    QMatrix x = QMatrix::identity(k - 1) - coxeter_nu(k).matrix;
    Integer q = product(quotient_invariants(n, x));
    QMatrix xdual = inverse(x * n.gram * x.transpose()) * x;
    Integer qd = product(index_invariants(xdual, inverse(n.gram)));
    r.payload = {{"level", k}, {"N_mod_one_minus_nu", q.str()}, {"dual_index", qd.str()}};
    text << "|N/(1-nu)N| = " << q.str() << "\n|((1-nu)N)*/N*| = " << qd.str() << "\n";
    if (q != k) r.fail("|N/(1-nu)N| != k");
    if (qd != k) r.fail("|((1-nu)N)*/N*| != k");
  } else {
    Lattice rr = builtin_lattice(o.tensor);
    Lattice ar = tensor(root_lattice('A', k - 1), rr);
    QMatrix nu = kronecker(coxeter_nu(k).matrix, QMatrix::identity(rr.rank()));
    if (!is_isometry(ar, nu)) throw std::logic_error("nu (x) 1 is not an isometry");
    auto inv = quotient_invariants(ar, QMatrix::identity(ar.rank()) - nu);
    Integer rc = r_cap_p_dual_index(rr, k);
    r.payload = {{"level", k}, {"tensor", o.tensor}, {"invariants", to_json(inv)}, {"order", product(inv).str()},
                 {"r_cap_p_dual_index", rc.str()}};
    text << "|(A_" << k - 1 << " (x) " << o.tensor << ")/(1-nu)| = " << product(inv).str() << "\n|(R ∩ pR*)/pR| = " << rc.str() << "\n";
  }
  return finish(o, r, text.str());
}

int cmd_lift_order(const Options& o) {
  int k = need_level(o, 3, 64);
  Lattice n = sqrt2_a(k);
  auto eps = standard_epsilon(n);
  Lift nu_hat = lift(n, to_z(coxeter_nu(k).matrix), eps);
  Lift theta = lift(n, Integer(-1) * ZMatrix::identity(n.rank()), eps);
  Report r;
  int ord = lift_order(nu_hat), tord = lift_order(theta);
  r.payload = {{"level", k}, {"nu_hat_order", ord}, {"theta_order", tord}};
  if (k % 2 == 0) {
    bool all_zero = true;
    for (std::size_t i = 0; i < n.rank(); ++i) {
      ZVector e(n.rank(), Integer(0));
      e[i] = 1;
      all_zero = all_zero && !even_order_term(nu_hat, e, k);
    }
    r.payload["even_order_term_vanishes"] = all_zero;
    if (!all_zero) r.fail("even-order term does not vanish");
  }
  if (ord != k) r.fail("order of nu_hat is " + std::to_string(ord));
  if (tord != 2) r.fail("order of theta is " + std::to_string(tord));
  return finish(o, r, "order(nu_hat) = " + std::to_string(ord) + "\norder(theta) = " + std::to_string(tord) + "\n");
}

std::string distribution_text(const json& dist) {
  std::string s = "{";
  for (auto it = dist.begin(); it != dist.end(); ++it) s += (s.size() > 1 ? "," : "") + it.key() + ":" + it.value().dump();
  return s + "}";
}

int cmd_lc_verify(const Options& o) {
  if (!o.builtin.empty() && !o.code_path.empty()) throw UsageError("pass either --builtin or --code, not both");
  if (o.builtin.empty() && o.code_path.empty()) throw UsageError("a code is required: pass --builtin 5B or --code FILE");
  if (!o.builtin.empty()) {
    builtin_code(o.builtin);
    Report r = verify_5b(true);
    std::ostringstream text;
    text << "weight distribution " << distribution_text(r.payload["code"]["weight_distribution"]) << "\n"
         << "types I-IV " << r.payload["types"]["invariant"].dump() << "\n"
         << "|L_C(4)| = " << r.payload["shell4"].dump() << "\n";
    return finish(o, r, text.str());
  }
  Code code = load_code(o.code_path);
  Report r = code_properties_report(code);
  CodeLattice lc = build_lattice(code);
  for (const auto& w : lc.warnings) r.note(w);
  r.payload["lattice"] = {{"rank", lc.lattice.rank()}, {"det", to_string(det(lc.lattice))}, {"integral", lc.integral}, {"even", lc.even}};
  std::ostringstream text;
  text << "size " << r.payload["size"].dump() << "\nweight distribution " << distribution_text(r.payload["weight_distribution"])
       << "\nL_C det " << to_string(det(lc.lattice)) << ", even " << std::boolalpha << lc.even << "\n";
  return finish(o, r, text.str());
}

int cmd_u5a(const Options& o) {
  U5aGolden g = load_u5a_golden(o.golden_dir);
  if (o.u5a_action == "table") {
    auto t = u_fusion_table(g);
    if (json_out(o)) {
      json rows = json::array();
      for (int i = 0; i < 9; ++i) {
        json row = json::array();
        for (int j = 0; j < 9; ++j) {
          json cell = json::array();
          for (auto [u, n] : t[i][j])
            for (int c = 0; c < n; ++c) cell.push_back(u);
          row.push_back(cell);
        }
        rows.push_back(row);
      }
      print_json({{"table", rows}});
    } else {
      for (int i = 0; i < 9; ++i)
        for (int j = i; j < 9; ++j) std::cout << i << " x " << j << " = " << to_string(t[i][j]) << "\n";
    }
    return kOk;
  }
  Report r = verify_appendix(g);
  return finish(o, r, "Irr0 size " + r.payload["irr0_size"].dump() + ", table diffs " + r.payload["table_diffs"].dump() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parafermion fusion, orbifold and lattice computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--golden-dir", o.golden_dir, "Directory holding the reference tables");

  auto level = [&](CLI::App* s) { s->add_option("-k,--level", o.level, "Level k")->required(); };
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse two parafermion modules");
  level(fuse_cmd);
  fuse_cmd->add_option("labels", o.args, "Two labels i,j")->expected(2);
  auto* weights_cmd = app.add_subcommand("weights", "Conformal weights and weight-one tops");
  level(weights_cmd);
  auto* zk_cmd = app.add_subcommand("zk-check", "Z_k grading of the fusion algebra");
  level(zk_cmd);
  auto* orb_cmd = app.add_subcommand("orbifold-table", "Fusion table of the theta orbifold");
  level(orb_cmd);
  auto* sigma_cmd = app.add_subcommand("sigma-check", "Orbifold self-checks and sigma grading");
  level(sigma_cmd);
  auto* info_cmd = app.add_subcommand("lattice-info", "Invariants of a lattice");
  auto* rssd_cmd = app.add_subcommand("rssd", "RSSD test and involution");
  for (auto* s : {info_cmd, rssd_cmd}) {
    s->add_option("--builtin", o.builtin, "Builtin lattice (A4, D6, E8, sqrt2A4, LC5B)");
    s->add_option("--lattice", o.lattice_path, "Lattice JSON file");
  }
  rssd_cmd->add_option("--sublattice", o.sublattice_path, "Sublattice JSON file {\"rows\": ...}");
  auto* quot_cmd = app.add_subcommand("quotient", "Index computations for (1-nu)");
  level(quot_cmd);
  quot_cmd->add_option("--tensor", o.tensor, "Root lattice R for A_{k-1} (x) R");
  auto* lift_cmd = app.add_subcommand("lift-order", "Orders of nu_hat and theta");
  level(lift_cmd);
  auto* lc_cmd = app.add_subcommand("lc-verify", "Code lattice verification");
  lc_cmd->add_option("--builtin", o.builtin, "Builtin code (5B)");
  lc_cmd->add_option("--code", o.code_path, "Code JSON file");
  auto* u5a_cmd = app.add_subcommand("u5a", "U_5A modules and fusion table");
  u5a_cmd->add_option("action", o.u5a_action, "table or verify")->required()->check(CLI::IsMember({"table", "verify"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*fuse_cmd) return cmd_fuse(o);
    if (*weights_cmd) return cmd_weights(o);
    if (*zk_cmd) return cmd_zk(o);
    if (*orb_cmd) return cmd_orbifold_table(o);
    if (*sigma_cmd) return cmd_sigma_check(o);
    if (*info_cmd) return cmd_lattice_info(o);
    if (*rssd_cmd) return cmd_rssd(o);
    if (*quot_cmd) return cmd_quotient(o);
    if (*lift_cmd) return cmd_lift_order(o);
    if (*lc_cmd) return cmd_lc_verify(o);
    if (*u5a_cmd) return cmd_u5a(o);
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
