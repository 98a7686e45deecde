#include <chowkit_cli/cli.hpp>

#include <chowkit/abindex.hpp>
#include <chowkit/fixtures.hpp>
#include <chowkit/json_io.hpp>
#include <chowkit/kls.hpp>
#include <chowkit/matroid.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace chowkit::cli {

namespace {

using nlohmann::json;

json coeffs(const Polynomial& p) { return json::parse(polynomial_to_json(p))["coeffs"]; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ":1: cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string gamma_text(const GammaExpansion& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.gammas.size(); ++i) {
    if (i) out += ", ";
    out += g.gammas[i].str();
  }
  return out + ")";
}

json gamma_json(const GammaExpansion& g) {
  json gammas = json::array();
  for (const auto& c : g.gammas) gammas.push_back(c.str());
  return {{"center_degree", g.center_degree}, {"gammas", gammas}};
}

std::string roots_text(const Polynomial& p) {
  if (p.is_zero()) return "zero polynomial";
  const int real = count_real_roots(p);
  const std::string count = std::to_string(real) + (real == 1 ? " real root" : " real roots");
  if (is_real_rooted(p)) return "real-rooted, " + count;
  return "not real-rooted, exactly " + count;
}

json roots_json(const Polynomial& p) {
  if (p.is_zero()) throw InputError("real roots of the zero polynomial are undefined");
  return {{"degree", p.degree()}, {"distinct_real_roots", count_real_roots(p)}, {"real_rooted", is_real_rooted(p)}};
}

struct Options {
  std::string format = "text";
  bool dump = false;
};

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") {
    out << j.dump() << "\n";
  } else {
    out << text << "\n";
  }
}

int emit_report(std::ostream& out, std::ostream& err, const Options& o, const std::string& title,
                const VerificationReport& r) {
  const Check* bad = r.first_failure();
  if (o.format == "json") {
    json j = {{"suite", title}, {"checks", r.checks.size()}, {"passed", r.passed()}};
    if (bad) j["first_failure"] = {{"name", bad->name}, {"detail", bad->detail}};
    out << j.dump() << "\n";
  } else if (bad) {
    out << "FAIL " << bad->name << "\n";
    if (!bad->detail.empty()) out << "  " << bad->detail << "\n";
  } else {
    out << title << ": " << r.checks.size() << " checks passed\n";
  }
  if (bad) {
    err << "verification failed: " << bad->name << "\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

// ---- poset ------------------------------------------------------------------

struct PosetInput {
  std::string file;
  std::string fixture;

  Poset load() const {
    if (file.empty() == fixture.empty()) throw InputError("give exactly one of a poset file or --fixture");
    if (!fixture.empty()) return poset_fixture(fixture);
    return poset_from_json(read_file(file), file);
  }
};

using IncidenceSelector = std::function<IncidenceFunction(const KernelContext&)>;

const std::map<std::string, IncidenceSelector>& incidence_invariants() {
  static const std::map<std::string, IncidenceSelector> table = {
      {"kernel", [](const KernelContext& c) { return c.kernel(); }},
      {"mobius", [](const KernelContext& c) { return mobius(c.poset()); }},
      {"kls", [](const KernelContext& c) { return c.right_kls(); }},
      {"left-kls", [](const KernelContext& c) { return c.left_kls(); }},
      {"chow", [](const KernelContext& c) { return c.chow(); }},
      {"aug-chow", [](const KernelContext& c) { return c.right_augmented(); }},
      {"left-aug-chow", [](const KernelContext& c) { return c.left_augmented(); }},
      {"z", [](const KernelContext& c) { return c.z(); }},
      {"dual-kls", [](const KernelContext& c) { return c.dual().right_kls(); }},
      {"dual-left-kls", [](const KernelContext& c) { return c.dual().left_kls(); }},
      {"dual-chow", [](const KernelContext& c) { return c.dual().chow(); }},
      {"dual-aug-chow", [](const KernelContext& c) { return c.dual().right_augmented(); }},
      {"dual-left-aug-chow", [](const KernelContext& c) { return c.dual().left_augmented(); }},
      {"dual-z", [](const KernelContext& c) { return c.dual().z(); }},
  };
  return table;
}

std::vector<std::string> poset_invariant_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : incidence_invariants()) names.push_back(k);
  for (const char* extra : {"ab-index", "gamma", "roots"}) names.push_back(extra);
  return names;
}

int run_poset(std::ostream& out, const Options& o, const PosetInput& in, const std::string& invariant,
              const std::string& kernel, bool all_intervals) {
  const Poset p = in.load();
  if (o.dump) {
    out << poset_to_json(p) << "\n";
    return kSuccess;
  }
  if (invariant.empty()) throw InputError("--invariant is required");
  const KernelContext ctx = kernel == "eulerian" ? KernelContext::eulerian(p) : KernelContext::characteristic(p);

  if (invariant == "ab-index") {
    if (!all_intervals) {
      const AbPolynomial a = ab_index(p);
      emit(out, o, json::parse(ab_polynomial_to_json(a)), a.to_string());
      return kSuccess;
    }
    json rows = json::array();
    std::string text;
    for (int k = 0; k < p.interval_count(); ++k) {
      const auto [s, t] = p.interval_at(k);
      const AbPolynomial a = ab_index(p, s, t);
      rows.push_back({{"lower", p.label(s)}, {"upper", p.label(t)}, {"terms", json::parse(ab_polynomial_to_json(a))}});
      text += (k ? "\n" : "") + ("[" + p.label(s) + ", " + p.label(t) + "]: " + a.to_string());
    }
    emit(out, o, {{"intervals", rows}}, text);
    return kSuccess;
  }
  if (invariant == "gamma" || invariant == "roots") {
    if (all_intervals) throw InputError("--all-intervals is not available for --invariant " + invariant);
    const Polynomial h = ctx.dual().chow().value();
    if (invariant == "roots") {
      emit(out, o, roots_json(h), roots_text(h));
      return kSuccess;
    }
    if (p.rank() < 1) throw InputError("gamma expansion needs positive rank");
    const GammaExpansion g = gamma_expansion(h, p.rank() - 1);
    emit(out, o, gamma_json(g), "gamma = " + gamma_text(g));
    return kSuccess;
  }
  const auto it = incidence_invariants().find(invariant);
  if (it == incidence_invariants().end()) throw InputError("unknown poset invariant '" + invariant + "'");
  const IncidenceFunction f = it->second(ctx);
  if (!all_intervals) {
    emit(out, o, {{"coeffs", coeffs(f.value())}}, f.value().to_string());
    return kSuccess;
  }
  json rows = json::array();
  std::string text;
  for (int k = 0; k < p.interval_count(); ++k) {
    const auto [s, t] = p.interval_at(k);
    rows.push_back({{"lower", p.label(s)}, {"upper", p.label(t)}, {"coeffs", coeffs(f(s, t))}});
    text += (k ? "\n" : "") + ("[" + p.label(s) + ", " + p.label(t) + "]: " + f(s, t).to_string());
  }
  emit(out, o, {{"intervals", rows}}, text);
  return kSuccess;
}

// ---- matroid ----------------------------------------------------------------

struct MatroidInput {
  std::string file;
  std::string uniform;
  int boolean = -1;
  std::string named;

  Matroid load() const {
    const int sources = !file.empty() + !uniform.empty() + (boolean >= 0) + !named.empty();
    if (sources != 1) throw InputError("give exactly one of a matroid file, --uniform, --boolean or --named");
    if (!file.empty()) return matroid_from_json(read_file(file), file);
    if (!named.empty()) return matroid_fixture(named);
    if (boolean >= 0) return Matroid::boolean(boolean);
    const auto comma = uniform.find(',');
    int r = 0, n = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("");
      std::size_t used = 0;
      r = std::stoi(uniform.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("");
      n = std::stoi(uniform.substr(comma + 1), &used);
      if (used != uniform.size() - comma - 1) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw InputError("--uniform expects r,n");
    }
    return Matroid::uniform(r, n);
  }
};

int run_matroid(std::ostream& out, std::ostream& err, const Options& o, const MatroidInput& in,
                const std::string& invariant, const std::string& verify) {
  const Matroid m = in.load();
  if (o.dump) {
    out << matroid_to_json(m) << "\n";
    return kSuccess;
  }
  if (invariant.empty() == verify.empty()) throw InputError("give exactly one of --invariant or --verify");
  if (m.has_loops()) throw InputError("matroid has loops");
  if (!invariant.empty()) {
    if (invariant == "gamma") {
      if (m.rank() < 1) throw InputError("gamma expansion needs positive rank");
      const GammaExpansion g = gamma_expansion(dual_chow(m), m.rank() - 1);
      emit(out, o, gamma_json(g), "gamma = " + gamma_text(g));
      return kSuccess;
    }
    static const std::map<std::string, std::function<Polynomial(const Matroid&)>> table = {
        {"dual-chow", dual_chow},   {"dual-aug-chow", dual_aug_chow},
        {"chow", chow},             {"bergman-h", bergman_h},
        {"char-poly", characteristic_polynomial},
    };
    const auto it = table.find(invariant);
    if (it == table.end()) throw InputError("unknown matroid invariant '" + invariant + "'");
    const Polynomial value = it->second(m);
    emit(out, o, {{"coeffs", coeffs(value)}}, value.to_string());
    return kSuccess;
  }

  const bool all = verify == "all";
  if (!all && verify != "deletion" && verify != "ab-deletion" && verify != "extended-deletion" &&
      verify != "bergman-deletion") {
    throw InputError("unknown verification '" + verify + "'");
  }
  VerificationReport r;
  for (int i : admissible_elements(m)) {
    if (all || verify == "ab-deletion") r.merge(verify_ab_deletion(m, i));
    if (all || verify == "extended-deletion") r.merge(verify_extended_deletions(m, i));
    if (all || verify == "deletion") r.merge(verify_dual_chow_deletion(m, i));
  }
  if (all || verify == "deletion") {
    r.expect_equal("dual Chow by deletion recursion", dual_chow_by_deletion(m), dual_chow(m));
    r.expect_equal("dual augmented Chow by deletion recursion", dual_aug_chow_by_deletion(m), dual_aug_chow(m));
  }
  if (all || verify == "bergman-deletion") {
    for (int i = 0; i < m.size(); ++i) {
      if (!m.is_coloop(i)) r.merge(verify_bergman_deletion(m, i));
    }
  }
  return emit_report(out, err, o, verify, r);
}

// ---- verify -----------------------------------------------------------------

int run_verify(std::ostream& out, std::ostream& err, const Options& o, const PosetInput& in,
               const std::string& suite, const std::string& kernel, const std::string& partner) {
  const Poset p = in.load();
  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "truncation" && suite != "operations") {
    throw InputError("unknown suite '" + suite + "'");
  }
  VerificationReport r;
  if (all || suite == "identities") {
    const KernelContext ctx = KernelContext::characteristic(p);
    r.merge(kernel_identities(ctx), "characteristic: ");
    r.merge(characteristic_identities(ctx));
    if (is_graded(p)) r.merge(abindex_identities(p));
    if (kernel == "eulerian") {
      const KernelContext e = KernelContext::eulerian(p);
      r.merge(kernel_identities(e), "eulerian: ");
      r.add("eulerian kernel is skew-symmetric", satisfies_skew_symmetry(e.kernel()));
      r.expect_equal("eulerian H = H*", e.chow(), e.dual().chow());
    }
  }
  if ((all || suite == "truncation") && is_graded(p) && p.rank() >= 2) {
    r.merge(truncation_identities(p));
    r.merge(truncation_ab_identities(p));
  }
  if ((all || suite == "operations") && is_graded(p)) {
    r.merge(operation_identities(p, poset_fixture(partner)));
  }
  if (r.checks.empty()) throw InputError("no checks apply to this poset for suite '" + suite + "'");
  return emit_report(out, err, o, suite, r);
}

// ---- table ------------------------------------------------------------------

int run_table(std::ostream& out, const Options& o, const std::string& family, int max) {
  json rows = json::array();
  std::ostringstream text;
  auto dual_pair = [](const Poset& p) {
    const KernelContext ctx = KernelContext::characteristic(p);
    return std::make_pair(ctx.dual().chow().value(), ctx.dual().right_augmented().value());
  };
  if (family == "partition") {
    if (max < 1 || max > 7) throw InputError("--max must lie in [1, 7] for the partition family");
    for (int n = 1; n <= max; ++n) {
      const Polynomial h = dual_chow_polynomial(partition_lattice(n));
      rows.push_back({{"n", n}, {"dual_chow", coeffs(h)}});
      text << "Pi_" << n << ": " << h << "\n";
    }
  } else if (family == "uniform") {
    if (max < 1 || max > 9) throw InputError("--max must lie in [1, 9] for the uniform family");
    for (int n = 1; n <= max; ++n) {
      for (int r = 1; r <= n; ++r) {
        const auto [h, f] = dual_pair(Matroid::uniform(r, n).flats().poset);
        rows.push_back({{"r", r}, {"n", n}, {"dual_chow", coeffs(h)}, {"dual_aug_chow", coeffs(f)}});
        text << "U(" << r << "," << n << "): H* = " << h << "; F* = " << f << "\n";
      }
    }
  } else if (family == "boolean") {
    if (max < 0 || max > 8) throw InputError("--max must lie in [0, 8] for the boolean family");
    for (int r = 0; r <= max; ++r) {
      const auto [h, f] = dual_pair(boolean_lattice(r));
      rows.push_back({{"r", r}, {"dual_chow", coeffs(h)}, {"dual_aug_chow", coeffs(f)}});
      text << "B_" << r << ": H* = " << h << "; F* = " << f << "\n";
    }
  } else {
    throw InputError("unknown family '" + family + "'");
  }
  if (o.format == "json") {
    out << json{{"family", family}, {"rows", rows}}.dump() << "\n";
  } else {
    out << text.str();
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow functions of posets and matroids", "chowkit"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  PosetInput poset_in;
  std::string invariant, kernel = "characteristic";
  bool all_intervals = false;
  auto* poset_cmd = app.add_subcommand("poset", "Invariants of a poset");
  poset_cmd->add_option("file", poset_in.file, "Poset JSON file");
  poset_cmd->add_option("--fixture", poset_in.fixture, "Named poset");
  poset_cmd->add_option("--invariant", invariant, "Invariant to compute")->check(CLI::IsMember(poset_invariant_names()));
  poset_cmd->add_option("--kernel", kernel, "Kernel")->check(CLI::IsMember({"characteristic", "eulerian"}));
  poset_cmd->add_flag("--all-intervals", all_intervals, "Report every interval [s, t]");
  poset_cmd->add_flag("--dump", o.dump, "Print the poset as JSON");
  add_format(poset_cmd);

  MatroidInput matroid_in;
  std::string verify;
  auto* matroid_cmd = app.add_subcommand("matroid", "Invariants and deletion identities of a matroid");
  matroid_cmd->add_option("file", matroid_in.file, "Matroid JSON file");
  matroid_cmd->add_option("--uniform", matroid_in.uniform, "Uniform matroid r,n");
  matroid_cmd->add_option("--boolean", matroid_in.boolean, "Boolean matroid of rank n");
  matroid_cmd->add_option("--named", matroid_in.named, "Named matroid")->check(CLI::IsMember(matroid_fixture_names()));
  matroid_cmd->add_option("--invariant", invariant, "Invariant to compute")
      ->check(CLI::IsMember({"dual-chow", "dual-aug-chow", "chow", "bergman-h", "char-poly", "gamma"}));
  matroid_cmd->add_option("--verify", verify, "Deletion identities to verify")
      ->check(CLI::IsMember({"deletion", "ab-deletion", "extended-deletion", "bergman-deletion", "all"}));
  matroid_cmd->add_flag("--dump", o.dump, "Print the matroid as JSON");
  add_format(matroid_cmd);

  PosetInput verify_in;
  std::string suite, partner = "b2";
  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites on a poset");
  verify_cmd->add_option("file", verify_in.file, "Poset JSON file");
  verify_cmd->add_option("--fixture", verify_in.fixture, "Named poset");
  verify_cmd->add_option("--suite", suite, "Suite")->required()->check(
      CLI::IsMember({"identities", "truncation", "operations", "all"}));
  verify_cmd->add_option("--kernel", kernel, "Also check this kernel")->check(CLI::IsMember({"characteristic", "eulerian"}));
  verify_cmd->add_option("--with", partner, "Second poset for the operation identities (named fixture)");
  add_format(verify_cmd);

  std::string family;
  int max = 0;
  auto* table_cmd = app.add_subcommand("table", "Tables of dual Chow polynomials");
  table_cmd->add_option("--family", family, "Family")->required()->check(CLI::IsMember({"partition", "uniform", "boolean"}));
  table_cmd->add_option("--max", max, "Largest parameter")->required();
  add_format(table_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (poset_cmd->parsed()) return run_poset(out, o, poset_in, invariant, kernel, all_intervals);
    if (matroid_cmd->parsed()) return run_matroid(out, err, o, matroid_in, invariant, verify);
    if (verify_cmd->parsed()) return run_verify(out, err, o, verify_in, suite, kernel, partner);
    return run_table(out, o, family, max);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace chowkit::cli
