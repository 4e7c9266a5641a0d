#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fqloop/corpus.hpp"
#include "fqloop/endo.hpp"
#include "fqloop/equivalence.hpp"
#include "fqloop/genmodule.hpp"
#include "fqloop/structure.hpp"

using namespace fqloop;

namespace {

struct Globals {
  std::string tier = "fast";
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;

  bool slow() const { return tier == "slow"; }
};

struct Failure {
  int code;
  Json body;
};

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Failure{2, {{"error", {{"kind", "Io"}, {"message", "cannot read " + path}}}}};
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  os << text;
  if (!os) throw Failure{2, {{"error", {{"kind", "Io"}, {"message", "cannot write " + path}}}}};
}

bool is_module_text(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto lead = line.find_first_not_of(" \t");
    if (lead != std::string::npos && line.compare(lead, 4, "phi:") == 0) return true;
  }
  return false;
}

Json subset_json(const Subset& s) { return Json{{"size", s.size()}, {"members", s}}; }

Json report_rows(const Report& r) { return r.to_json(); }

// --- check -----------------------------------------------------------------

struct CheckFlags {
  bool quasigroup = false, loop = false, moufang = false, f = false, nk = false, a_loop = false, lemmas = false,
       module = false;
};

int cmd_check(const std::string& path, CheckFlags flags, const Globals& g) {
  const std::string text = read_file(path);
  const bool module_file = is_module_text(text);
  std::optional<ModuleFile> mf;
  std::optional<QuasigroupTable> q;
  if (module_file) {
    mf.emplace(parse_module_file(text));
    q = mf->module.loop().base();
  } else {
    q = parse_table_file(text).table;
  }
  if (!(flags.quasigroup || flags.loop || flags.moufang || flags.f || flags.nk || flags.a_loop || flags.lemmas ||
        flags.module))
    flags.quasigroup = true;

  Report r;
  std::optional<LoopTable> loop;
  Json loop_error = nullptr;
  try {
    loop.emplace(*q);
  } catch (const AlgebraError& e) {
    loop_error = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  }
  auto needs_loop = [&](const char* name) {
    if (loop) return true;
    r.add(name, false, loop_error);
    return false;
  };

  if (flags.quasigroup) r.add("quasigroup", true, Json{{"order", q->order()}});
  if (flags.loop) r.add("loop", loop.has_value(), loop ? Json{{"zero", loop->zero()}} : loop_error);
  if (flags.f) {
    const auto res = is_f_quasigroup(*q);
    Json w = nullptr;
    if (res.witness)
      w = {{"law", res.failed_law == FLaw::Left ? "left" : "right"},
           {"x", res.witness->x},
           {"y", res.witness->y},
           {"z", res.witness->z}};
    r.add("f_quasigroup", res.holds, w);
  }
  if (flags.moufang && needs_loop("moufang")) {
    const auto res = is_moufang(*loop);
    Json w = nullptr;
    if (res.witness) w = {{"x", res.witness->x}, {"y", res.witness->y}, {"z", res.witness->z}};
    r.add("moufang", res.holds, w);
  }
  if (flags.nk && needs_loop("nk")) {
    const auto res = is_nk_loop(*loop);
    r.add("nk", res.holds, res.holds ? Json(nullptr) : Json{{"x", res.failing.value_or(kNoElement)}});
  }
  if (flags.a_loop && needs_loop("a_loop")) r.add("a_loop", is_a_loop(*loop));
  Json lemma_rows = nullptr;
  if (flags.lemmas && needs_loop("lemmas")) {
    LemmaSuiteOptions opts;
    opts.seed = g.seed;
    const auto lr = check_lemma_suite(*loop, opts);
    r.add("lemmas", lr.all_pass());
    lemma_rows = lr.to_json();
  }
  Json module_rows = nullptr;
  if (flags.module) {
    if (!mf) {
      r.add("module", false, Json{{"message", "not a module file"}});
    } else {
      const auto ax = verify_module_axioms(mf->module, g.seed);
      const auto cm = verify_class_m(mf->module);
      r.add("module_axioms", ax.all_pass());
      r.add("class_m", cm.all_pass());
      module_rows = {{"axioms", ax.to_json()}, {"class_m", cm.to_json()}};
      if (mf->point) r.add("nuclearly_pointed", is_nuclearly_pointed({mf->module, *mf->point}));
    }
  }

  Json out{{"file", path}, {"pass", r.all_pass()}, {"checks", report_rows(r)}};
  if (!lemma_rows.is_null()) out["lemma_rows"] = lemma_rows;
  if (!module_rows.is_null()) out["module_rows"] = module_rows;
  std::cout << out.dump(2) << "\n";
  return r.all_pass() ? 0 : 1;
}

// --- analyze ---------------------------------------------------------------

Json count_or_error(const std::function<std::size_t()>& count) {
  try {
    return count();
  } catch (const AlgebraError& e) {
    if (e.kind() != ErrorKind::SearchTooLarge && e.kind() != ErrorKind::GroupTooLarge) throw;
    return Json{{"error", to_string(e.kind())}};
  }
}

Json quotient_json(const LoopTable& l, const SubsetWitness& s) {
  if (!is_normal_subloop(l, s.members)) return Json{{"normal", false}};
  const auto qt = quotient(l, s);
  const LoopTable ql(qt.table);
  Json j{{"normal", true},
         {"order", ql.order()},
         {"commutative", is_commutative(ql.base())},
         {"associative", is_associative(ql.base()).holds},
         {"moufang", is_moufang(ql).holds}};
  try {
    j["exponent"] = exponent(ql);
  } catch (const AlgebraError&) {
    j["exponent"] = nullptr;
  }
  return j;
}

int cmd_analyze(const std::string& path, const Globals& g) {
  const std::string text = read_file(path);
  const QuasigroupTable q =
      is_module_text(text) ? parse_module_file(text).module.loop().base() : parse_table_file(text).table;
  Json out{{"file", path}, {"order", q.order()}};
  out["commutative"] = is_commutative(q);
  out["associative"] = is_associative(q).holds;
  out["f_quasigroup"] = is_f_quasigroup(q).holds;
  const auto m = m_set(q);
  out["M"] = subset_json(m.members);
  if (!m.members.empty()) {
    try {
      const auto qt = quotient(q, m.members);
      out["quotient_by_M"] = {{"normal", true},
                              {"order", qt.table.order()},
                              {"associative", is_associative(qt.table).holds}};
    } catch (const AlgebraError& e) {
      if (e.kind() != ErrorKind::NotNormal) throw;
      out["quotient_by_M"] = {{"normal", false}};
    }
  }

  std::optional<LoopTable> loop;
  try {
    loop.emplace(q);
  } catch (const AlgebraError& e) {
    if (e.kind() != ErrorKind::NotLoop) throw;
  }
  out["loop"] = loop.has_value();
  if (loop) {
    const LoopTable& l = *loop;
    out["zero"] = l.zero();
    out["N"] = subset_json(l.nucleus());
    out["K"] = subset_json(l.moufang_center());
    out["Z"] = subset_json(l.center());
    out["commutant"] = subset_json(commutant(l));
    out["moufang"] = is_moufang(l).holds;
    const bool nk = is_nk_loop(l).holds;
    out["nk"] = nk;
    out["quotient_by_N"] = quotient_json(l, nucleus(l));
    out["quotient_by_K"] = quotient_json(l, moufang_center(l));

    constexpr std::size_t cap = 200'000;
    const EndoContext ctx(l);
    Json counts;
    counts["endomorphisms"] = count_or_error([&] { return enumerate_endomorphisms(l, cap).size(); });
    counts["automorphisms"] = count_or_error([&] { return enumerate_automorphisms(l, cap).size(); });
    counts["central"] = count_or_error([&] { return ctx.central_endomorphisms(cap).size(); });
    counts["quasicentral"] = count_or_error([&] { return ctx.quasicentral_endomorphisms(cap).size(); });
    if (nk) {
      counts["special"] = count_or_error([&] { return ctx.special_endomorphisms(cap).size(); });
      counts["condition_f_automorphisms"] =
          count_or_error([&] { return ctx.condition_f_automorphisms(cap).size(); });
    }
    out["endomorphism_counts"] = counts;
  }
  (void)g;
  std::cout << out.dump(2) << "\n";
  return 0;
}

// --- rho / sigma / roundtrip -----------------------------------------------

int cmd_rho(const std::string& path, std::optional<Element> point, const std::string& out_path, bool all_forms) {
  const TableFile tf = parse_table_file(read_file(path));
  const auto p = point ? point : tf.point;
  if (!p) throw Failure{2, {{"error", {{"kind", "Malformed"}, {"message", "no point given"}}}}};
  const PointedFQ pfq{tf.table, *p};
  const auto forms = recover_form(pfq);
  const PointedGenModule pm = rho(pfq, forms.front().form);
  const std::string text = serialize_module(pm.module, pm.point);
  Json out{{"file", path}, {"point", *p}, {"forms_found", forms.size()}, {"module_point", pm.point}};
  if (all_forms) {
    Json arr = Json::array();
    for (const auto& rf : forms) {
      Json j = to_json(rf.form);
      j["u"] = rf.u;
      j["v"] = rf.v;
      arr.push_back(j);
    }
    out["forms"] = arr;
  }
  if (out_path.empty()) {
    out["module"] = text;
  } else {
    write_file(out_path, text);
    out["written"] = out_path;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sigma(const std::string& path, std::optional<Element> point, const std::string& out_path) {
  const ModuleFile mf = parse_module_file(read_file(path));
  const auto p = point ? point : mf.point;
  if (!p) throw Failure{2, {{"error", {{"kind", "Malformed"}, {"message", "no point given"}}}}};
  const PointedFQ fq = sigma(PointedGenModule{mf.module, *p});
  const std::string text = serialize_table(fq.q, fq.point);
  Json out{{"file", path}, {"point", fq.point}};
  if (out_path.empty()) {
    out["table"] = text;
  } else {
    write_file(out_path, text);
    out["written"] = out_path;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct Tally {
  std::size_t total = 0, identical = 0;
  Json failures = Json::array();

  void add(const std::string& label, const RoundTrip& rt) {
    ++total;
    if (rt.identical)
      ++identical;
    else if (failures.size() < 20)
      failures.push_back({{"instance", label}, {"difference", rt.first_difference}});
  }
  void add_error(const std::string& label, const AlgebraError& e) {
    ++total;
    if (failures.size() < 20)
      failures.push_back({{"instance", label}, {"error", to_string(e.kind())}, {"message", e.what()}});
  }
  Json to_json() const {
    return {{"total", total}, {"identical", identical}, {"pass", total == identical}, {"failures", failures}};
  }
};

int cmd_roundtrip_corpus(const Globals& g) {
  Tally fq_tally, mod_tally;
  const std::size_t max_n = g.slow() ? 5 : 4;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto pointed = search_f_quasigroups(n, g.jobs);
    for (std::size_t i = 0; i < pointed.size(); ++i) {
      const std::string label = "search" + std::to_string(n) + "#" + std::to_string(i);
      try {
        fq_tally.add(label, roundtrip_fq(pointed[i]));
      } catch (const AlgebraError& e) {
        fq_tally.add_error(label, e);
      }
    }
  }
  for (const auto& nq : f_quasigroup_corpus(g.slow()))
    for (Element p = 0; p < nq.table.order(); ++p) {
      const std::string label = nq.name + "@" + std::to_string(p);
      try {
        fq_tally.add(label, roundtrip_fq({nq.table, p}));
      } catch (const AlgebraError& e) {
        fq_tally.add_error(label, e);
      }
    }
  for (const auto& gl : group_tables()) {
    const auto forms = enumerate_forms(gl.loop, 500);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const std::string label = gl.name + "-form#" + std::to_string(i);
      try {
        const PointedGenModule pm = rho(PointedFQ{build_fq(forms[i]), gl.loop.zero()}, forms[i]);
        mod_tally.add(label, roundtrip_module(pm));
      } catch (const AlgebraError& e) {
        mod_tally.add_error(label, e);
      }
    }
  }
  const bool pass = fq_tally.total == fq_tally.identical && mod_tally.total == mod_tally.identical;
  Json out{{"tier", g.tier}, {"pass", pass}, {"sigma_rho", fq_tally.to_json()}, {"rho_sigma", mod_tally.to_json()}};
  std::cout << out.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_roundtrip(const std::string& path, std::optional<Element> point, const Globals& g) {
  if (path.empty()) return cmd_roundtrip_corpus(g);
  const std::string text = read_file(path);
  Tally t;
  if (is_module_text(text)) {
    const ModuleFile mf = parse_module_file(text);
    const auto p = point ? point : mf.point;
    if (!p) throw Failure{2, {{"error", {{"kind", "Malformed"}, {"message", "no point given"}}}}};
    t.add(path, roundtrip_module({mf.module, *p}));
  } else {
    const TableFile tf = parse_table_file(text);
    const auto p = point ? point : tf.point;
    if (p) {
      t.add(path + "@" + std::to_string(*p), roundtrip_fq({tf.table, *p}));
    } else {
      for (Element k = 0; k < tf.table.order(); ++k) t.add(path + "@" + std::to_string(k), roundtrip_fq({tf.table, k}));
    }
  }
  Json out{{"file", path}, {"pass", t.total == t.identical}, {"roundtrip", t.to_json()}};
  std::cout << out.dump(2) << "\n";
  return t.total == t.identical ? 0 : 1;
}

// --- search / corpus -------------------------------------------------------

int cmd_search(std::size_t n, const std::string& out_dir, const Globals& g) {
  if (n == 5 && !g.slow())
    throw Failure{2, {{"error", {{"kind", "SearchTooLarge"}, {"message", "order 5 needs --tier slow"}}}}};
  const auto res = scan_f_quasigroups(n, g.jobs);
  Json out{{"order", n}, {"latin_squares", res.latin_squares}, {"f_quasigroups", res.f_quasigroups.size()}};
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < res.f_quasigroups.size(); ++i) {
      const auto file = std::filesystem::path(out_dir) / ("f" + std::to_string(n) + "-" + std::to_string(i) + ".tbl");
      write_file(file.string(), serialize_table(res.f_quasigroups[i]));
    }
    out["written"] = res.f_quasigroups.size();
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_corpus(const std::string& dir) {
  Json files = Json::array();
  for (const auto& p : write_corpus(dir)) files.push_back(p.string());
  std::cout << Json{{"dir", dir}, {"files", files}}.dump(2) << "\n";
  return 0;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quasigroup and loop toolkit"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--tier", g.tier, "fast or slow")->check(CLI::IsMember({"fast", "slow"}));
    sub->add_option("--seed", g.seed, "seed for randomized sampling");
    sub->add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  std::string path, out_path;
  std::optional<Element> point;
  CheckFlags flags;
  bool all_forms = false;
  std::size_t order = 0;

  auto* check = app.add_subcommand("check", "Run predicates on a table or module file");
  check->add_option("file", path)->required();
  check->add_flag("--quasigroup", flags.quasigroup);
  check->add_flag("--loop", flags.loop);
  check->add_flag("--moufang", flags.moufang);
  check->add_flag("--f", flags.f);
  check->add_flag("--nk", flags.nk);
  check->add_flag("--a-loop", flags.a_loop);
  check->add_flag("--lemmas", flags.lemmas);
  check->add_flag("--module", flags.module, "module axioms and class M (module files)");
  add_globals(check);

  auto* analyze = app.add_subcommand("analyze", "Report N, K, Z, M(Q), quotients and endomorphism counts");
  analyze->add_option("file", path)->required();
  add_globals(analyze);

  auto* rho_cmd = app.add_subcommand("rho", "Pointed F-quasigroup to generalized module");
  rho_cmd->add_option("file", path)->required();
  rho_cmd->add_option("--point", point);
  rho_cmd->add_option("-o,--out", out_path);
  rho_cmd->add_flag("--all-forms", all_forms);
  add_globals(rho_cmd);

  auto* sigma_cmd = app.add_subcommand("sigma", "Generalized module to pointed F-quasigroup");
  sigma_cmd->add_option("file", path)->required();
  sigma_cmd->add_option("--point", point);
  sigma_cmd->add_option("-o,--out", out_path);
  add_globals(sigma_cmd);

  auto* rt = app.add_subcommand("roundtrip", "Round trip one file, or the whole corpus when no file is given");
  rt->add_option("file", path);
  rt->add_option("--point", point);
  add_globals(rt);

  auto* search = app.add_subcommand("search", "Scan all Latin squares of an order for F-quasigroups");
  search->add_option("order", order)->required()->check(CLI::Range(1, 5));
  search->add_option("-o,--out", out_path, "directory for the found tables");
  add_globals(search);

  auto* corpus = app.add_subcommand("corpus", "Write the corpus table files");
  corpus->add_option("dir", path)->required();
  add_globals(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("Usage", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    if (*check) return cmd_check(path, flags, g);
    if (*analyze) return cmd_analyze(path, g);
    if (*rho_cmd) return cmd_rho(path, point, out_path, all_forms);
    if (*sigma_cmd) return cmd_sigma(path, point, out_path);
    if (*rt) return cmd_roundtrip(path, point, g);
    if (*search) return cmd_search(order, out_path, g);
    if (*corpus) return cmd_corpus(path);
  } catch (const Failure& f) {
    std::cout << f.body.dump(2) << "\n";
    return f.code;
  } catch (const AlgebraError& e) {
    std::cout << error_json(std::string(to_string(e.kind())), e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << error_json("Internal", e.what()).dump(2) << "\n";
    return 2;
  }
  return 2;
}
