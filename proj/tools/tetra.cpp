// Command line front end: element computation, verification suites, table export.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tetra/io/json.hpp"
#include "tetra/qgroup.hpp"
#include "tetra/reduction.hpp"
#include "tetra/spectral.hpp"
#include "tetra/threedim_r.hpp"

namespace {

using namespace tetra;
using io::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr const char* kOutDirEnv = "TETRA_OUT_DIR";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Reads key = value / TOML files through CLI11 and JSON objects (nested
/// objects address subcommands) through nlohmann. Top-level keys that are not
/// global options go to the subcommand named on the command line.
class ConfigAny : public CLI::ConfigTOML {
 public:
  std::vector<std::string> target;
  std::vector<std::string> globals;

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::string text((std::istreambuf_iterator<char>(input)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    std::vector<CLI::ConfigItem> out;
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream is(text);
      out = CLI::ConfigTOML::from_config(is);
    } else {
      walk(json::parse(text), {}, out);
    }
    for (auto& item : out)
      if (item.parents.empty() && std::find(globals.begin(), globals.end(), item.name) == globals.end())
        item.parents = target;
    return out;
  }

 private:
  static std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
  static void walk(const json& obj, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& out) {
    for (const auto& [key, v] : obj.items()) {
      if (v.is_object()) {
        auto p = parents;
        p.push_back(key);
        walk(v, p, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (v.is_array()) {
        std::string joined;
        for (const auto& x : v) joined += (joined.empty() ? "" : ",") + scalar_text(x);
        item.inputs = {joined};
      } else {
        item.inputs = {scalar_text(v)};
      }
      out.push_back(std::move(item));
    }
  }
};

struct Output {
  std::string path;
  std::string format = "json";
  unsigned jobs = 0;

  void emit(const std::string& stem, const json& doc, const std::string& csv) const {
    const bool as_csv = format == "csv";
    const std::string text = as_csv ? csv : doc.dump(2) + "\n";
    std::string target = path;
    if (target.empty())
      if (const char* dir = std::getenv(kOutDirEnv); dir && *dir)
        target = std::string(dir) + "/" + stem + (as_csv ? ".csv" : ".json");
    if (target.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(target, std::ios::binary);
    if (!os) throw UsageError("cannot open output file " + target);
    os << text;
  }
};

std::string report_csv(const std::vector<Report>& reps) {
  std::ostringstream os;
  os << "id,pass,checked,failures,skipped\n";
  for (const auto& r : reps)
    os << r.id << "," << (r.pass() ? "true" : "false") << "," << r.checked << "," << r.failures << "," << r.skipped
       << "\n";
  return os.str();
}

/// Writes the reports and returns the exit code.
int finish(const Output& out, const std::string& stem, const json& params, const std::vector<Report>& reps) {
  json arr = json::array();
  bool pass = true;
  for (const auto& r : reps) {
    arr.push_back(io::to_json(r));
    pass = pass && r.pass();
  }
  out.emit(stem, io::document(stem, params, {{"pass", pass}, {"reports", arr}}), report_csv(reps));
  if (!pass)
    for (const auto& r : reps)
      if (r.first_failure) {
        std::cerr << r.id << ": " << r.first_failure->where << " fails at " << to_string(r.first_failure->indices)
                  << "\n";
        break;
      }
  return pass ? 0 : kExitFail;
}

std::optional<std::pair<int, int>> parse_pair(const std::vector<int>& v, const std::string& what) {
  if (v.empty()) return std::nullopt;
  if (v.size() != 2) throw UsageError(what + " takes two comma separated values");
  return std::pair{v[0], v[1]};
}

json parity_json(const std::optional<std::pair<int, int>>& p) {
  return p ? json{p->first, p->second} : json(nullptr);
}

struct Catalog {
  std::string name, anchor;
};

const std::vector<Catalog>& catalog() {
  static const std::vector<Catalog> c{
      {"tetrahedron", "tetrahedron equation for the 3d R matrix"},
      {"involution", "R = R^{-1}"},
      {"symmetries", "R^{abc}_{ijk} symmetries"},
      {"boundary", "boundary vector eigen-relations, ket and bra sides"},
      {"recursions", "A_q(sl3) intertwiner recursions for R elements"},
      {"lemma-li", "linear identity Li"},
      {"lemma-ask", "linear identity Ask"},
      {"lemma-ngm", "linear identity Ngm"},
      {"lemma-ymi", "linear identity Ymi"},
      {"lemma-air", "quadratic identity air"},
      {"lemma-hmk", "linear identity hmk"},
      {"lemma-hnt", "linear identity hnt"},
      {"lemma-szk", "quadratic identity szk"},
      {"intertwiner-aq", "A_q(sl3) intertwining relation"},
      {"ybe", "Yang-Baxter equation for S^{s,t}(z)"},
      {"reversal", "reversal relation S^{2,1} vs S^{1,2}"},
      {"relations", "defining relations of U_q (Chevalley generators, q-Serre)"},
      {"theorem", "S^{s,t}(z) equals the gauge transformed quantum R matrix"},
      {"str", "S^tr(z): Yang-Baxter, normalization and U_q(A^{(1)}_{n-1}) intertwining"},
      {"spectral-D2", "spectral decomposition of PR(z) for U_q(D^{(2)}_{n+1})"},
      {"spectral-A2", "spectral decomposition of PR(z) for U_q(A^{(2)}_{2n})"},
      {"spectral-C1", "spectral decomposition of PR(z) for U_q(C^{(1)}_n)"},
      {"singular", "singular vectors of V (x) V for U_q(B_n) and U_q(C_n)"},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the 3d R matrix and the quantum R matrices it reduces to"};
  auto config = std::make_shared<ConfigAny>();
  config->globals = {"out", "format", "jobs", "config"};
  app.config_formatter(config);
  app.set_config("--config", "", "Read options from a key=value or JSON file");
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--out", out.path, "Output file (default: $" + std::string(kOutDirEnv) + "/<command>.<ext> or stdout)");
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-j,--jobs", out.jobs, "Worker threads (0 = all cores)");

  int code = 0;
  auto run = [&](auto&& body) {
    return [&, body]() {
      parallelism().store(out.jobs);
      code = body();
    };
  };

  // relem
  std::vector<int> idx;
  auto* relem = app.add_subcommand("relem", "Matrix element R^{abc}_{ijk} of the 3d R matrix");
  relem->add_option("--idx", idx, "a,b,c,i,j,k")->required()->delimiter(',')->expected(6);
  relem->callback(run([&] {
    for (int x : idx)
      if (x < 0) throw UsageError("indices must be nonnegative");
    const Scalar v = r_element(idx[0], idx[1], idx[2], idx[3], idx[4], idx[5]);
    std::ostringstream csv;
    csv << io::csv_header("");
    io::csv_rows(csv, "", Series(v, 0));
    out.emit("relem", io::document("relem", {{"idx", idx}}, {{"value", io::to_json(v)}}), csv.str());
    return 0;
  }));

  // selem
  SSpec sspec;
  std::vector<int> a, b, i, j, parity;
  bool raw = false;
  auto add_labels = [&](CLI::App* c) {
    c->add_option("--a", a, "output label a")->required()->delimiter(',');
    c->add_option("--b", b, "output label b")->required()->delimiter(',');
    c->add_option("--i", i, "input label i")->required()->delimiter(',');
    c->add_option("--j", j, "input label j")->required()->delimiter(',');
  };
  auto* selem = app.add_subcommand("selem", "Matrix element S^{s,t}(z)^{ab}_{ij} as a series in z");
  selem->add_option("--s", sspec.s, "boundary kind s")->check(CLI::Range(1, 2));
  selem->add_option("--t", sspec.t, "boundary kind t")->check(CLI::Range(1, 2));
  selem->add_option("--order", sspec.order, "series order N")->check(CLI::NonNegativeNumber);
  selem->add_option("--parity", parity, "parity block e1,e2 for S^{2,2}")->delimiter(',');
  selem->add_flag("--raw", raw, "omit the normalization factor");
  add_labels(selem);
  selem->callback(run([&] {
    sspec.n = static_cast<int>(i.size());
    sspec.parity = parse_pair(parity, "--parity");
    const Series v = raw ? s_element_raw(sspec.s, sspec.t, a, b, i, j, sspec.order) : s_element(sspec, a, b, i, j);
    std::ostringstream csv;
    csv << io::csv_header("");
    io::csv_rows(csv, "", v);
    json params{{"s", sspec.s}, {"t", sspec.t}, {"order", sspec.order}, {"parity", parity_json(sspec.parity)},
                {"raw", raw}, {"a", a}, {"b", b}, {"i", i}, {"j", j}};
    out.emit("selem", io::document("selem", params, {{"value", io::to_json(v)}}), csv.str());
    return 0;
  }));

  // strelem
  int order = 6;
  auto* strelem = app.add_subcommand("strelem", "Matrix element S^tr(z)^{ab}_{ij} as a series in z");
  strelem->add_option("--order", order, "series order N")->check(CLI::NonNegativeNumber);
  add_labels(strelem);
  strelem->callback(run([&] {
    const Series v = str_element(a, b, i, j, order);
    std::ostringstream csv;
    csv << io::csv_header("");
    io::csv_rows(csv, "", v);
    json params{{"order", order}, {"a", a}, {"b", b}, {"i", i}, {"j", j}};
    out.emit("strelem", io::document("strelem", params, {{"value", io::to_json(v)}}), csv.str());
    return 0;
  }));

  // smatrix
  int weight_sel = -1;
  int degree = 2;
  auto* smatrix = app.add_subcommand("smatrix", "All columns of S^{s,t}(z) on a sector");
  smatrix->add_option("--s", sspec.s)->check(CLI::Range(1, 2));
  smatrix->add_option("--t", sspec.t)->check(CLI::Range(1, 2));
  smatrix->add_option("--n", sspec.n, "rank n")->check(CLI::PositiveNumber);
  smatrix->add_option("--order", sspec.order)->check(CLI::NonNegativeNumber);
  smatrix->add_option("--parity", parity)->delimiter(',');
  auto* wopt = smatrix->add_option("--weight", weight_sel, "columns with |i| + |j| = weight");
  smatrix->add_option("--degree", degree, "columns with |i| + |j| <= degree")->excludes(wopt);
  smatrix->callback(run([&] {
    sspec.parity = parse_pair(parity, "--parity");
    SectorConstraint sc;
    if (weight_sel >= 0) sc.weight = weight_sel;
    else sc.max_degree = degree;
    const auto m = s_matrix(sspec, sc);
    json cols = json::array();
    std::ostringstream csv;
    csv << io::csv_header("input,output");
    for (const auto& [ij, col] : m) {
      cols.push_back({{"input", ij}, {"entries", io::to_json(col)}});
      for (const auto& [ab, v] : col.terms()) io::csv_rows(csv, io::label_text(ij) + "," + io::label_text(ab), v);
    }
    json params{{"s", sspec.s}, {"t", sspec.t}, {"n", sspec.n}, {"order", sspec.order},
                {"parity", parity_json(sspec.parity)}};
    if (weight_sel >= 0) params["weight"] = weight_sel;
    else params["degree"] = degree;
    out.emit("smatrix", io::document("smatrix", params, {{"columns", cols}}), csv.str());
    return 0;
  }));

  // spectral
  std::string alg_name = "D2";
  int n = 2, l = 0, eps = 0;
  auto* spectral = app.add_subcommand("spectral", "Eigenvalue of P R(z) on one singular vector");
  spectral->add_option("--alg", alg_name)->check(CLI::IsMember({"D2", "A2", "C1"}));
  spectral->add_option("--n", n)->check(CLI::PositiveNumber);
  spectral->add_option("--l", l)->check(CLI::NonNegativeNumber);
  spectral->add_option("--eps", eps, "sign for A2 and C1 labels")->check(CLI::IsMember({-1, 0, 1}));
  spectral->add_option("--order", order)->check(CLI::NonNegativeNumber);
  spectral->callback(run([&] {
    const AlgebraType t = parse_algebra(alg_name);
    if (t != AlgebraType::D2 && eps == 0) eps = 1;
    const SpectralLabel lab{l, eps};
    const int s = t == AlgebraType::C1 ? 2 : 1;
    const int tt = t == AlgebraType::D2 ? 1 : 2;
    const Report rep = check_spectral({.s = s, .t = tt, .n = n, .order = order}, t, lab);
    const Series rho = eigenvalue_product(t, lab, order);
    std::ostringstream csv;
    csv << io::csv_header("");
    io::csv_rows(csv, "", rho);
    json params{{"alg", alg_name}, {"n", n}, {"l", l}, {"eps", eps}, {"order", order}};
    out.emit("spectral", io::document("spectral", params, {{"label", {{"l", l}, {"eps", eps}}},
                                                             {"eigenvalue", io::to_json(rho)},
                                                             {"pass", rep.pass()}, {"report", io::to_json(rep)}}),
             csv.str());
    return rep.pass() ? 0 : kExitFail;
  }));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);

  int max_level = 2;
  auto* v_te = verify->add_subcommand("tetrahedron", "Tetrahedron equation on all 6-tuples with entries <= max");
  v_te->add_option("--max", max_level)->check(CLI::NonNegativeNumber);
  v_te->callback(run([&] { return finish(out, "verify-tetrahedron", {{"max", max_level}}, {check_tetrahedron(max_level)}); }));

  int range = 4;
  int bs = 0;
  auto* v_bd = verify->add_subcommand("boundary", "Boundary vector eigen-relations, both sides");
  v_bd->add_option("--s", bs, "boundary kind (default both)")->check(CLI::Range(1, 2));
  v_bd->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  v_bd->callback(run([&] {
    std::vector<Report> reps;
    for (int s : bs ? std::vector<int>{bs} : std::vector<int>{1, 2})
      for (Side side : {Side::ket, Side::bra}) reps.push_back(check_boundary_eigen(s, side, degree));
    return finish(out, "verify-boundary", {{"s", bs ? json(bs) : json("all")}, {"degree", degree}}, reps);
  }));

  std::string id;
  auto* v_rec = verify->add_subcommand("recursions", "Involution, symmetries and the A_q(sl3) recursions");
  v_rec->add_option("--range", range)->check(CLI::NonNegativeNumber);
  v_rec->add_option("--id", id, "single recursion id");
  v_rec->callback(run([&] {
    std::vector<Report> reps;
    if (id.empty()) {
      reps.push_back(check_involution(range));
      reps.push_back(check_symmetries(range));
      for (const auto& r : recursion_ids()) reps.push_back(check_recursion(r, range));
    } else {
      reps.push_back(check_recursion(id, range));
    }
    return finish(out, "verify-recursions", {{"range", range}, {"id", id}}, reps);
  }));

  bool literal = false;
  auto* v_lem = verify->add_subcommand("lemmas", "Lemma and quadratic identities for R elements");
  v_lem->add_option("--range", range)->check(CLI::NonNegativeNumber);
  v_lem->add_option("--id", id, "single identity id");
  v_lem->add_flag("--literal", literal, "check every identity at all indices as printed");
  v_lem->callback(run([&] {
    std::vector<Report> reps;
    for (const auto& x : id.empty() ? lemma_ids() : std::vector<std::string>{id})
      reps.push_back(check_lemma_identity(x, range, literal));
    return finish(out, "verify-lemmas", {{"range", range}, {"id", id}, {"literal", literal}}, reps);
  }));

  auto* v_aq = verify->add_subcommand("intertwiner-aq", "A_q(sl3) intertwining relation for all nine generators");
  v_aq->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  v_aq->callback(run([&] {
    return finish(out, "verify-intertwiner-aq", {{"degree", degree}}, {check_aq_intertwiner(all_tgens(), degree)});
  }));

  auto* v_ybe = verify->add_subcommand("ybe", "Yang-Baxter equation for S^{s,t}(z)");
  v_ybe->add_option("--s", sspec.s)->check(CLI::Range(1, 2));
  v_ybe->add_option("--t", sspec.t)->check(CLI::Range(1, 2));
  v_ybe->add_option("--n", sspec.n)->check(CLI::PositiveNumber);
  v_ybe->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  v_ybe->add_option("--order", order)->check(CLI::NonNegativeNumber);
  v_ybe->add_option("--parity", parity)->delimiter(',');
  v_ybe->callback(run([&] {
    sspec.parity = parse_pair(parity, "--parity");
    sspec.order = order;
    json params{{"s", sspec.s}, {"t", sspec.t}, {"n", sspec.n}, {"degree", degree}, {"order", order},
                {"parity", parity_json(sspec.parity)}};
    return finish(out, "verify-ybe", params, {check_ybe(sspec, degree, order)});
  }));

  int rt = 2, rs = 1;
  auto* v_rev = verify->add_subcommand("reversal", "Reversal relation between S^{t,s} and S^{s,t}");
  v_rev->add_option("--t", rt)->check(CLI::Range(1, 2));
  v_rev->add_option("--s", rs)->check(CLI::Range(1, 2));
  v_rev->add_option("--n", n)->check(CLI::PositiveNumber);
  v_rev->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  v_rev->add_option("--order", order)->check(CLI::NonNegativeNumber);
  v_rev->callback(run([&] {
    json params{{"t", rt}, {"s", rs}, {"n", n}, {"degree", degree}, {"order", order}};
    return finish(out, "verify-reversal", params, {check_reversal(rt, rs, n, degree, order)});
  }));

  int cutoff = 6;
  int margin = -1;
  auto* v_rel = verify->add_subcommand("relations", "Defining relations on the q-oscillator representation");
  v_rel->add_option("--alg", alg_name)->check(CLI::IsMember({"D2", "A2", "C1", "A1"}));
  v_rel->add_option("--n", n)->check(CLI::PositiveNumber);
  v_rel->add_option("--cutoff", cutoff, "Fock cutoff M")->check(CLI::NonNegativeNumber);
  v_rel->add_option("--margin", margin, "truncation margin (default: the required one)");
  v_rel->callback(run([&] {
    const AlgebraSpec spec{parse_algebra(alg_name), n};
    const int m = margin < 0 ? required_margin(spec) : margin;
    json params{{"alg", alg_name}, {"n", n}, {"cutoff", cutoff}, {"margin", m}};
    return finish(out, "verify-relations", params, {check_defining_relations(spec, cutoff, m)});
  }));

  std::vector<int> pair{1, 1};
  auto* v_thm = verify->add_subcommand("theorem", "S^{s,t}(z) against the gauge transformed quantum R matrix");
  v_thm->add_option("--pair", pair, "s,t")->delimiter(',')->expected(2);
  v_thm->add_option("--n", n)->check(CLI::PositiveNumber);
  v_thm->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  v_thm->add_option("--order", order)->check(CLI::NonNegativeNumber);
  v_thm->add_option("--parity", parity)->delimiter(',');
  v_thm->callback(run([&] {
    const SSpec spec{.s = pair[0], .t = pair[1], .n = n, .order = order, .parity = parse_pair(parity, "--parity")};
    json params{{"pair", pair}, {"n", n}, {"degree", degree}, {"order", order}, {"parity", parity_json(spec.parity)}};
    return finish(out, "verify-theorem", params, {check_theorem_main(spec, degree)});
  }));

  int max_weight = 2;
  auto* v_str = verify->add_subcommand("str", "S^tr(z): Yang-Baxter and U_q(A^{(1)}_{n-1}) intertwining");
  v_str->add_option("--n", n)->check(CLI::Range(2, 16));
  v_str->add_option("--max-weight", max_weight, "weight bound per block")->check(CLI::NonNegativeNumber);
  v_str->add_option("--order", order)->check(CLI::NonNegativeNumber);
  v_str->callback(run([&] {
    json params{{"n", n}, {"max_weight", max_weight}, {"order", order}};
    return finish(out, "verify-str", params,
                  {check_str_ybe(n, max_weight, order), check_str_intertwining(n, max_weight, order)});
  }));

  int max_l = 3;
  auto* v_sp = verify->add_subcommand("spectral", "Singular vectors and P R(z) eigenvalues");
  v_sp->add_option("--alg", alg_name)->check(CLI::IsMember({"D2", "A2", "C1"}));
  v_sp->add_option("--n", n)->check(CLI::PositiveNumber);
  v_sp->add_option("--max-l", max_l)->check(CLI::NonNegativeNumber);
  v_sp->add_option("--max-weight", max_weight, "weight bound for the singular vector search")
      ->check(CLI::NonNegativeNumber);
  v_sp->add_option("--order", order)->check(CLI::NonNegativeNumber);
  v_sp->callback(run([&] {
    const AlgebraType t = parse_algebra(alg_name);
    json params{{"alg", alg_name}, {"n", n}, {"max_l", max_l}, {"max_weight", max_weight}, {"order", order}};
    return finish(out, "verify-spectral", params,
                  {check_singular_completeness({t, n}, max_weight), check_spectral_all(t, n, max_l, order)});
  }));

  auto* list = app.add_subcommand("list-suites", "Catalog of verification suites");
  list->callback(run([&] {
    json cat = json::object();
    std::ostringstream csv;
    csv << "suite,anchor\n";
    for (const auto& c : catalog()) {
      cat[c.name] = c.anchor;
      csv << c.name << ",\"" << c.anchor << "\"\n";
    }
    out.emit("list-suites", io::document("list-suites", json::object(), {{"suites", cat}}), csv.str());
    return 0;
  }));

  CLI::App* cur = &app;
  for (int k = 1; k < argc; ++k)
    for (auto* sub : cur->get_subcommands({}))
      if (sub->get_name() == argv[k]) {
        config->target.push_back(sub->get_name());
        cur = sub;
        break;
      }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFail;
  }
  return code;
}
