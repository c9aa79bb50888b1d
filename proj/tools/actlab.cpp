// Command-line front end: analyze monoids, check acts, evaluate formulas,
// build witnesses, build and classify families, run the invariant corpus.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "actlab/actlab.hpp"

namespace fs = std::filesystem;
using json   = nlohmann::json;
using namespace actlab;

namespace {

  enum Exit : int { kOk = 0, kFailure = 1, kParse = 2, kVerify = 3, kPrecondition = 4 };

  struct Output {
    std::string format = "json";
    std::string path;

    void emit(std::string const& text) const {
      if (path.empty()) {
        std::cout << text;
        return;
      }
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw Error("cannot write " + path);
      }
      out << text;
    }
  };

  void write_file(fs::path const& p, std::string const& text) {
    if (p.has_parent_path()) {
      fs::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + p.string());
    }
    out << text;
  }

  // Generic text view of a JSON document: one "path: value" line per leaf.
  void flatten(json const& j, std::string const& prefix, std::ostringstream& out) {
    if (j.is_object() && !j.empty()) {
      for (auto const& [k, v] : j.items()) {
        flatten(v, prefix.empty() ? k : prefix + "." + k, out);
      }
    } else if (j.is_array() && !j.empty()
               && std::any_of(j.begin(), j.end(), [](json const& x) { return x.is_object(); })) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
      }
    } else {
      out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  }

  std::string render(json const& doc, std::string const& format) {
    if (format == "text") {
      std::ostringstream out;
      flatten(doc, "", out);
      return out.str();
    }
    return doc.dump(2) + "\n";
  }

  std::vector<Elem> parse_list(std::string const& text) {
    std::vector<Elem> out;
    std::stringstream ss(text);
    std::string       tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) {
        continue;
      }
      std::size_t used = 0;
      unsigned long v  = 0;
      try {
        v = std::stoul(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw TextParseError("bad list entry '" + tok + "'", 1, 1);
      }
      out.push_back(static_cast<Elem>(v));
    }
    return out;
  }

  json pattern_json(std::vector<std::vector<bool>> const& p) {
    json rows = json::array();
    for (auto const& r : p) {
      json row = json::array();
      for (bool b : r) {
        row.push_back(b ? 1 : 0);
      }
      rows.push_back(row);
    }
    return rows;
  }

  bool lower_triangular(std::vector<std::vector<bool>> const& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p[i].size(); ++j) {
        if (p[i][j] != (i >= j)) {
          return false;
        }
      }
    }
    return true;
  }

  // A witness source is either a monoid file (its regular representation) or
  // an act file.
  struct Source {
    fs::path                 monoid_path;
    MonoidPtr                monoid;
    std::vector<std::string> names;
    FiniteAct                act;
  };

  Source load_source(fs::path const& p) {
    if (p.extension() == ".act") {
      auto af = read_act(p);
      return Source{af.monoid_path, af.act.monoid_ptr(), af.monoid_names, af.act};
    }
    auto mf = read_monoid(p);
    auto mp = share(std::move(mf.monoid));
    auto rep = regular_representation(mp);
    return Source{p, mp, mf.names, rep};
  }

  // Writes PREFIX.mon, PREFIX.act, PREFIX.json and, on request, PREFIX.dot.
  void write_artifacts(std::string const& prefix, Source const& src, FiniteAct const& act, json const& doc,
                       bool dot) {
    fs::path base(prefix);
    auto     mon = base;
    mon += ".mon";
    write_file(mon, write_monoid(*src.monoid, src.names));
    auto a = base;
    a += ".act";
    write_file(a, write_act(act, mon.filename().string()));
    auto j = base;
    j += ".json";
    write_file(j, doc.dump(2) + "\n");
    if (dot) {
      auto d = base;
      d += ".dot";
      write_file(d, act_dot(act, src.names));
    }
  }

  ClassifyConfig config_from(std::size_t closure, std::size_t congruences, std::size_t witness_n,
                             std::uint64_t seed) {
    ClassifyConfig c;
    c.cap_closure     = closure;
    c.cap_congruences = congruences;
    c.witness_n       = witness_n;
    c.seed            = seed;
    return c;
  }

  std::size_t thread_count() {
    if (char const* env = std::getenv("ACTLAB_THREADS")) {
      try {
        auto n = std::stoul(env);
        if (n > 0) {
          return n;
        }
      } catch (std::exception const&) {
      }
      std::cerr << "warning: ignoring ACTLAB_THREADS=" << env << "\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  // ---- corpus

  struct CorpusRow {
    std::string              name;
    std::string              order = "-";
    std::vector<std::string> cells;
    std::vector<std::string> details;
    bool                     ok = true;
  };

  CorpusRow run_corpus_entry(std::string name, std::function<FiniteMonoid()> const& load,
                             ClassifyConfig const& cfg) {
    CorpusRow row{std::move(name), "-", {}, {}, true};
    MonoidPtr mp;
    try {
      mp = share(load());
    } catch (std::exception const& e) {
      row.ok = false;
      row.cells.assign(suite_names().size(), "-");
      row.details.push_back(std::string("parse: ") + e.what());
      return row;
    }
    row.order = std::to_string(mp->order());
    for (auto& r : run_suites(mp, cfg)) {
      row.cells.push_back(r.violations.empty() ? "ok" : "FAIL(" + std::to_string(r.violations.size()) + ")");
      for (auto& v : r.violations) {
        row.ok = false;
        row.details.push_back(r.name + ": " + v);
      }
    }
    return row;
  }

  int cmd_corpus(fs::path const& dir, std::size_t generate, ClassifyConfig const& cfg, Output const& out) {
    using Entry = std::pair<std::string, std::function<FiniteMonoid()>>;
    std::vector<Entry> entries;
    if (!fs::is_directory(dir)) {
      throw Error("not a directory: " + dir.string());
    }
    for (auto const& de : fs::directory_iterator(dir)) {
      if (de.is_regular_file() && de.path().extension() == ".mon") {
        auto p = de.path();
        entries.emplace_back(p.filename().string(), [p] { return read_monoid(p).monoid; });
      }
    }
    for (std::size_t n = 1; n <= generate; ++n) {
      auto ms = generate_monoids(n);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "gen/%zu_%03zu", n, k);
        entries.emplace_back(buf, [m = ms[k]] { return m; });
      }
    }
    std::sort(entries.begin(), entries.end(), [](Entry const& a, Entry const& b) { return a.first < b.first; });

    std::vector<CorpusRow>   rows(entries.size());
    std::atomic<std::size_t> next{0};
    auto                     worker = [&] {
      for (std::size_t i = next++; i < entries.size(); i = next++) {
        rows[i] = run_corpus_entry(entries[i].first, entries[i].second, cfg);
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(thread_count(), entries.size()); ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }

    bool ok = std::all_of(rows.begin(), rows.end(), [](CorpusRow const& r) { return r.ok; });
    std::ostringstream text;
    if (out.format == "json") {
      json arr = json::array();
      for (auto const& r : rows) {
        json suites = json::object();
        for (std::size_t i = 0; i < r.cells.size(); ++i) {
          suites[suite_names()[i]] = r.cells[i];
        }
        arr.push_back({{"file", r.name}, {"order", r.order}, {"suites", suites}, {"ok", r.ok},
                       {"failures", r.details}});
      }
      text << json{{"monoids", arr}, {"ok", ok}}.dump(2) << "\n";
    } else {
      text << "file\torder";
      for (auto const& s : suite_names()) {
        text << "\t" << s;
      }
      text << "\tstatus\n";
      for (auto const& r : rows) {
        text << r.name << "\t" << r.order;
        for (auto const& c : r.cells) {
          text << "\t" << c;
        }
        text << "\t" << (r.ok ? "pass" : "FAIL") << "\n";
      }
      for (auto const& r : rows) {
        for (auto const& d : r.details) {
          text << "# " << r.name << "\t" << d << "\n";
        }
      }
    }
    out.emit(text.str());
    return ok ? kOk : kFailure;
  }

  // ---- act-check

  json act_summary(FiniteAct const& a, std::vector<std::string> const& names) {
    json pts  = json::array();
    auto cert = regularity_certificate(a);
    for (Point x = 0; x < a.size(); ++x) {
      json p{{"point", x}, {"label", a.label(x)}, {"orbit", to_json(orbit(a, x))},
             {"regular", cert[x].idempotent.has_value()}};
      if (cert[x].idempotent) {
        Elem e               = *cert[x].idempotent;
        p["idempotent"]      = e;
        p["idempotent_name"] = e < names.size() ? names[e] : std::to_string(e);
        if (!verify_point_regularity(a, cert[x])) {
          throw VerificationFailed("regularity certificate for point " + std::to_string(x) + " does not verify");
        }
      }
      pts.push_back(p);
    }
    auto core = regular_core(a);
    return {{"points", pts}, {"regular_core", to_json(core)}, {"regular", core.size() == a.size()},
            {"size", a.size()}, {"monoid", a.monoid().fingerprint()}};
  }

  // ---- witness commands

  json grid_json(GridWitness const& w) {
    auto pat = verify_order_pattern(w);
    return {{"kind", "grid"},
            {"a", w.a},
            {"t", w.t},
            {"s", w.s},
            {"n", w.n},
            {"formula", w.phi.to_string()},
            {"b_points", w.b_points},
            {"c_points", w.c_points},
            {"pattern", pattern_json(pat)},
            {"lower_triangular", lower_triangular(pat)},
            {"points", w.act.size()}};
  }

  json tree_json(TreeWitness const& w) {
    auto sep    = tree_separation(w);
    json leaves = json::array();
    for (std::size_t i = 0; i < w.leaves.size(); ++i) {
      leaves.push_back({{"sequence", w.leaves[i]}, {"point", w.leaf_points[i]}});
    }
    bool all = true;
    for (std::size_t i = 0; i < sep.size(); ++i) {
      for (std::size_t j = 0; j < sep[i].size(); ++j) {
        all = all && (i == j || sep[i][j]);
      }
    }
    return {{"kind", "tree"},
            {"a", w.a},
            {"chain", w.chain},
            {"kappa", w.kappa},
            {"depth", w.depth},
            {"level_elements", w.level_elems},
            {"leaves", leaves},
            {"separated", pattern_json(sep)},
            {"all_pairs_separated", all},
            {"points", w.act.size()}};
  }

  json triple_json(Triple const& t) {
    return {{"idempotent", t.idempotent}, {"theta", t.theta.labels()}, {"ideal", to_json(t.ideal)}, {"alpha", t.alpha}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"actlab: regular acts over finite monoids"};
  app.require_subcommand(1);

  Output        out;
  std::size_t   cap_closure = 4096, cap_congruences = 100000, witness_n = 4, window = 3;
  std::uint64_t seed = 0;
  std::string corpus_format = "tsv";
  auto common = [&](CLI::App* sub, std::vector<std::string> formats, std::string* format = nullptr) {
    sub->add_option("--format", format ? *format : out.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", out.path, "output file (stdout if absent)");
    sub->add_option("--seed", seed, "seed recorded in reports and used by randomized checks");
    sub->add_option("--cap-closure", cap_closure, "cap on closure families")->check(CLI::PositiveNumber);
    sub->add_option("--cap-congruences", cap_congruences, "cap on congruence enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--witness-N,-N", witness_n, "grid witness size")->check(CLI::PositiveNumber);
  };

  // analyze
  auto*       analyze = app.add_subcommand("analyze", "classify a monoid file");
  std::string monoid_file;
  bool        empty_core = false;
  analyze->add_option("monoid", monoid_file, "monoid file")->required();
  analyze->add_flag("--empty-core", empty_core, "classify against an empty regular core");
  common(analyze, {"json", "text"});

  // act-check
  auto*       act_check = app.add_subcommand("act-check", "regularity summary of an act file");
  std::string act_file;
  act_check->add_option("act", act_file, "act file")->required();
  common(act_check, {"json", "text", "dot"});

  // eval
  auto*                    eval_cmd = app.add_subcommand("eval", "evaluate a formula on an act");
  std::string              formula_text;
  std::vector<std::string> binds;
  eval_cmd->add_option("act", act_file, "act or monoid file")->required();
  eval_cmd->add_option("--formula,-f", formula_text, "formula")->required();
  eval_cmd->add_option("--bind", binds, "variable=point");
  common(eval_cmd, {"json", "text"});

  // witness
  auto* witness = app.add_subcommand("witness", "build and verify witness acts");
  witness->require_subcommand(1);
  std::string prefix;
  bool        want_dot = false;
  std::string src_file;
  Elem        wa = 0, wt = 0, ws = 0;
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("source", src_file, "monoid file (regular representation) or act file")->required();
    sub->add_option("--prefix", prefix, "write PREFIX.mon/.act/.json");
    sub->add_flag("--dot", want_dot, "also write PREFIX.dot");
    common(sub, {"json", "text"});
  };
  auto* grid = witness->add_subcommand("grid", "order-property grid");
  add_source(grid);
  grid->add_option("--a", wa, "base point")->required();
  grid->add_option("--t", wt, "row element")->required();
  grid->add_option("--s", ws, "column element")->required();

  auto*       tree = witness->add_subcommand("tree", "branching tree over a strict chain");
  std::string chain_text;
  std::size_t kappa = 2, tree_depth = 2;
  add_source(tree);
  tree->add_option("--a", wa, "base point")->required();
  tree->add_option("--chain", chain_text, "comma-separated chain points a_0,a_1,...")->required();
  tree->add_option("--kappa", kappa, "branching")->check(CLI::PositiveNumber);
  tree->add_option("--depth", tree_depth, "levels")->check(CLI::PositiveNumber);

  auto*       counting = witness->add_subcommand("counting", "counting acts M_K");
  Elem        cb = 0, cc = 0, calpha = 0, cbeta = 0;
  std::size_t cn = 1, cbound = 3;
  std::string phi_text, k_text;
  add_source(counting);
  counting->add_option("--a", wa, "element a")->required();
  counting->add_option("--b", cb, "element b")->required();
  counting->add_option("--c", cc, "element c")->required();
  counting->add_option("--alpha", calpha, "b = alpha·a")->required();
  counting->add_option("--beta", cbeta, "c = beta·b")->required();
  counting->add_option("--phi", phi_text, "formula in x, y, z")->required();
  counting->add_option("--n", cn, "multiplicity")->check(CLI::PositiveNumber);
  counting->add_option("--K", k_text, "comma-separated index set");
  counting->add_option("--bound", cbound, "largest index probed");

  auto* triples = witness->add_subcommand("triples", "enumerate and re-verify triples");
  std::optional<Elem> triple_e;
  add_source(triples);
  triples->add_option("--e", triple_e, "restrict to one cover idempotent");

  auto*       extract = witness->add_subcommand("extract", "read a triple off a point");
  std::string subact_text;
  Point       b0 = 0;
  add_source(extract);
  extract->add_option("--subact", subact_text, "points of the subact A")->required();
  extract->add_option("--b0", b0, "point of B")->required();

  // families
  auto* families = app.add_subcommand("families", "parametric and rule-defined families");
  families->require_subcommand(1);
  auto*       fam_list  = families->add_subcommand("list", "list family names");
  auto*       fam_build = families->add_subcommand("build", "emit a finite monoid or lazy descriptor");
  std::string fam_name;
  std::size_t p_m = 2, p_k = 1, p_rows = 2, p_cols = 2, p_copies = 1;
  bool        p_shifts = false;
  fam_build->add_option("name", fam_name, "family name")->required();
  fam_build->add_option("--m", p_m, "group order")->check(CLI::PositiveNumber);
  fam_build->add_option("--k", p_k, "top level (chain_of_groups)");
  fam_build->add_option("--rows", p_rows, "rows (rect_band)")->check(CLI::PositiveNumber);
  fam_build->add_option("--cols", p_cols, "columns (rect_band)")->check(CLI::PositiveNumber);
  fam_build->add_option("--copies", p_copies, "copies (layered)")->check(CLI::PositiveNumber);
  fam_build->add_flag("--shifts", p_shifts, "adjoin the shift quotient (chain_of_groups)");
  fam_build->add_option("--window", window, "window (lazy families)")->check(CLI::PositiveNumber);
  fam_build->add_option("-o,--output", out.path, "output file (stdout if absent)");
  auto* fam_classify = families->add_subcommand("classify", "bounded classification of a lazy family");
  fam_classify->add_option("name", fam_name, "family name or descriptor file")->required();
  fam_classify->add_option("--window", window, "window")->check(CLI::PositiveNumber);
  common(fam_classify, {"json", "text"});

  // corpus
  auto*       corpus = app.add_subcommand("corpus", "run invariant suites over a directory of monoid files");
  std::string corpus_dir;
  std::size_t generate = 0;
  corpus->add_option("dir", corpus_dir, "directory of .mon files")->required();
  corpus->add_option("--generate", generate, "also check all monoids up to this order")
      ->check(CLI::Range(0, 5));
  common(corpus, {"tsv", "json"}, &corpus_format);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    auto cfg = config_from(cap_closure, cap_congruences, witness_n, seed);

    if (analyze->parsed()) {
      auto mf  = read_monoid(monoid_file);
      auto mp  = share(std::move(mf.monoid));
      auto rep = (empty_core ? classify_with_core(mp, {}, cfg, mf.names) : classify(mp, cfg, mf.names)).to_json();
      if (!empty_core) {
        auto bad = verify_report(mp, rep);
        if (!bad.empty()) {
          for (auto const& b : bad) {
            std::cerr << "verification: " << b << "\n";
          }
          return kVerify;
        }
      }
      out.emit(out.format == "text" ? render_text(rep) : rep.dump(2) + "\n");
      return kOk;
    }

    if (act_check->parsed()) {
      auto af = read_act(act_file);
      if (out.format == "dot") {
        out.emit(act_dot(af.act, af.monoid_names));
      } else {
        out.emit(render(act_summary(af.act, af.monoid_names), out.format));
      }
      return kOk;
    }

    if (eval_cmd->parsed()) {
      auto               src = load_source(act_file);
      auto               f   = fo::parse(formula_text);
      fo::Valuation      val;
      for (auto const& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw TextParseError("binding must be var=point: " + b, 1, 1);
        }
        auto pts = parse_list(b.substr(eq + 1));
        if (pts.size() != 1 || pts[0] >= src.act.size()) {
          throw TextParseError("bad point in binding " + b, 1, eq + 2);
        }
        val[b.substr(0, eq)] = pts[0];
      }
      bool r = fo::eval(src.act, f, val);
      out.emit(render({{"formula", f.to_string()}, {"value", r}}, out.format));
      return kOk;
    }

    if (witness->parsed()) {
      auto src = load_source(src_file);
      json doc;
      std::optional<FiniteAct> built;
      if (grid->parsed()) {
        auto w = build_grid(src.act, wa, wt, ws, witness_n);
        doc    = grid_json(w);
        built  = w.act;
      } else if (tree->parsed()) {
        auto chain = parse_list(chain_text);
        auto w     = build_tree(src.act, wa, chain, kappa, tree_depth);
        doc        = tree_json(w);
        built      = w.act;
      } else if (counting->parsed()) {
        CountingSpec spec{wa, cb, cc, calpha, cbeta, fo::parse(phi_text), cn};
        auto         ks = ElementSet(parse_list(k_text));
        auto         w  = build_counting(src.monoid, spec, ks, cbound);
        json         formulas = json::array();
        for (auto const& f : w.formulas) {
          formulas.push_back(f.to_string());
        }
        doc   = {{"kind", "counting"},
                 {"K", to_json(w.k_set)},
                 {"bound", w.bound},
                 {"c_point", w.c_point},
                 {"pattern", w.pattern},
                 {"formulas", formulas},
                 {"matches_K", [&] {
                    for (std::size_t i = 0; i <= w.bound; ++i) {
                      if (w.pattern[i] != w.k_set.contains(static_cast<Elem>(i))) {
                        return false;
                      }
                    }
                    return true;
                  }()},
                 {"points", w.act.size()}};
        built = w.act;
      } else if (triples->parsed()) {
        auto list = triple_e ? enumerate_triples_at(src.act, *triple_e, cap_congruences)
                             : enumerate_triples(src.act, cap_congruences);
        json per  = json::object();
        json items = json::array();
        for (auto const& t : list.items) {
          if (auto bad = triple_violation(src.act, t)) {
            throw VerificationFailed("enumerated triple fails: " + *bad);
          }
          auto key = std::to_string(t.idempotent);
          per[key] = per.value(key, 0) + 1;
          items.push_back(triple_json(t));
        }
        doc = {{"kind", "triples"},
               {"cover", list.cover},
               {"count", list.items.size()},
               {"per_idempotent", per},
               {"overflow", list.overflow},
               {"triples", items}};
      } else if (extract->parsed()) {
        auto ex = extract_triple(src.act, ElementSet(parse_list(subact_text)), b0);
        doc     = {{"kind", "extract"},
                   {"triple", triple_json(ex.triple)},
                   {"subact", ex.target.embed},
                   {"witness_idempotent", ex.witness_idempotent},
                   {"verified", true}};
      }
      if (!prefix.empty() && built) {
        write_artifacts(prefix, src, *built, doc, want_dot);
      }
      out.emit(render(doc, out.format));
      return kOk;
    }

    if (fam_list->parsed()) {
      std::ostringstream s;
      for (auto const* n : {"trivial", "rz2_plus1", "cg21", "b22_plus1", "column_band_z2", "nil3", "layered_z2",
                            "chain3", "chain_of_groups", "rect_band", "layered", "cyclic"}) {
        s << n << "\tfinite\n";
      }
      for (auto const& n : lazy_family_names()) {
        s << n << "\tlazy\n";
      }
      out.emit(s.str());
      return kOk;
    }

    if (fam_build->parsed()) {
      static std::map<std::string, std::function<NamedMonoid()>> const fixed{
          {"trivial", fixtures::trivial},     {"rz2_plus1", fixtures::rz2_plus1},
          {"cg21", fixtures::cg21},           {"b22_plus1", fixtures::b22_plus1},
          {"column_band_z2", fixtures::column_band_z2}, {"nil3", fixtures::nil3},
          {"layered_z2", fixtures::layered_z2}, {"chain3", fixtures::chain3}};
      std::optional<NamedMonoid> nm;
      if (auto it = fixed.find(fam_name); it != fixed.end()) {
        nm = it->second();
      } else if (fam_name == "chain_of_groups") {
        nm = chain_of_groups(p_m, p_k, p_shifts);
      } else if (fam_name == "rect_band") {
        nm = rect_band_monoid(cyclic_group(p_m), p_rows, p_cols, std::vector<Elem>(p_rows * p_cols, 0));
      } else if (fam_name == "layered") {
        nm = layered_monoid(cyclic_group(p_m), p_copies);
      } else if (fam_name == "cyclic") {
        nm = named(cyclic_group(p_m));
      }
      if (nm) {
        out.emit(write_monoid(*nm->monoid, nm->names));
        return kOk;
      }
      auto l = lazy_family(fam_name, window);
      out.emit(json{{"family", l->family()}, {"window", l->window()}, {"lazy", true}}.dump(2) + "\n");
      return kOk;
    }

    if (fam_classify->parsed()) {
      std::string name = fam_name;
      std::size_t w    = window;
      if (fs::is_regular_file(fam_name)) {
        json desc;
        try {
          desc = json::parse(io_detail::read_file(fam_name));
          name = desc.at("family").get<std::string>();
          if (fam_classify->count("--window") == 0) {
            w = desc.at("window").get<std::size_t>();
          }
        } catch (json::exception const& e) {
          throw TextParseError(std::string("descriptor: ") + e.what(), 1, 1);
        }
      }
      auto l   = lazy_family(name, w);
      auto rep = bounded_classify(*l, LazyBounds{6, seed}).to_json();
      out.emit(out.format == "text" ? render_text(rep) : rep.dump(2) + "\n");
      return kOk;
    }

    if (corpus->parsed()) {
      out.format = corpus_format;
      return cmd_corpus(corpus_dir, generate, cfg, out);
    }
  } catch (TextParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (fo::ParseError const& e) {
    std::cerr << "formula parse error: " << e.what() << "\n";
    return kParse;
  } catch (VerificationFailed const& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerify;
  } catch (PreconditionFailed const& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (fo::FormulaError const& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (NotIdempotent const& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
