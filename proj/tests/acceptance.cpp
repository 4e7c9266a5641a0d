#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fqloop/corpus.hpp"
#include "fqloop/endo.hpp"
#include "fqloop/equivalence.hpp"
#include "fqloop/genmodule.hpp"
#include "fqloop/structure.hpp"
#include "oracles.hpp"

using namespace fqloop;

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  void record_error(const std::string& what, const std::exception& e) { record(false, what + ": " + e.what()); }
};

struct Criterion {
  int number;
  std::string title;
  Outcome outcome;
  double seconds = 0;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string label(const std::string& name, Element point) { return name + "@" + std::to_string(point); }

struct Instance {
  std::string name;
  PointedFQ fq;
};

// --- 1 ---------------------------------------------------------------------

Outcome small_order_theorem(std::size_t max_n, unsigned jobs, std::vector<Instance>& instances) {
  Outcome o;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto res = scan_f_quasigroups(n, jobs);
    for (std::size_t i = 0; i < res.f_quasigroups.size(); ++i) {
      const auto& q = res.f_quasigroups[i];
      for (Element p = 0; p < n; ++p) {
        const std::string what = label("order" + std::to_string(n) + "#" + std::to_string(i), p);
        const PointedFQ pfq{q, p};
        try {
          const auto forms = recover_form(pfq);
          bool ok = !forms.empty();
          for (const auto& rf : forms)
            ok = ok && is_nk_loop(rf.form.loop).holds && verify_form(rf.form).all_pass() && build_fq(rf.form) == q;
          o.record(ok, what);
        } catch (const std::exception& e) {
          o.record_error(what, e);
        }
        instances.push_back({what, pfq});
      }
    }
  }
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome round_trips(const std::vector<Instance>& instances, const std::vector<NamedLoop>& groups) {
  Outcome o;
  for (const auto& inst : instances) {
    try {
      const auto rt = roundtrip_fq(inst.fq);
      o.record(rt.identical, inst.name + " " + rt.first_difference.dump());
    } catch (const std::exception& e) {
      o.record_error(inst.name, e);
    }
  }
  for (const auto& g : groups) {
    const auto forms = enumerate_forms(g.loop, 500);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const std::string what = g.name + "-form#" + std::to_string(i);
      try {
        const PointedFQ p{build_fq(forms[i]), g.loop.zero()};
        const auto fq_rt = roundtrip_fq(p);
        o.record(fq_rt.identical, what + " sigma(rho) " + fq_rt.first_difference.dump());
        const auto mod_rt = roundtrip_module(rho(p, forms[i]));
        o.record(mod_rt.identical, what + " rho(sigma) " + mod_rt.first_difference.dump());
      } catch (const std::exception& e) {
        o.record_error(what, e);
      }
    }
  }
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome lemma_suites(const std::vector<NamedLoop>& groups, const LoopTable& cml, std::uint64_t seed) {
  Outcome o;
  LemmaSuiteOptions opts;
  opts.seed = seed;
  auto run = [&](const std::string& name, const LoopTable& l) {
    try {
      const auto r = check_lemma_suite(l, opts);
      for (const auto& row : r.rows)
        o.record(row.pass, name + ": " + row.lemma + " " + row.counterexample.dump());
    } catch (const std::exception& e) {
      o.record_error(name, e);
    }
  };
  for (const auto& g : groups) run(g.name, g.loop);
  run("K(cml81)", restrict_to(cml, cml.moufang_center()).loop);
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome structural_facts(const std::vector<NamedLoop>& groups, const LoopTable& cml,
                         const std::vector<Instance>& instances, const std::vector<NamedQuasigroup>& fqs) {
  Outcome o;
  auto nk_facts = [&](const std::string& name, const LoopTable& l) {
    const auto r = verify_nk_facts(l);
    for (const auto& row : r.rows) o.record(row.pass, name + ": " + row.name);
  };
  for (const auto& g : groups) nk_facts(g.name, g.loop);
  nk_facts("cml81", cml);
  nk_facts("cml81xz2", direct_product(cml, cyclic(2)));

  auto m_quotient = [&](const std::string& name, const QuasigroupTable& q) {
    try {
      const auto m = m_set(q);
      if (m.members.empty()) return o.record(false, name + ": M(Q) empty");
      const auto qt = quotient(q, m.members);
      o.record(is_associative(qt.table).holds, name + ": Q/M(Q) not associative");
    } catch (const std::exception& e) {
      o.record_error(name, e);
    }
  };
  for (const auto& nq : fqs) m_quotient(nq.name, nq.table);
  // Each table once; instances repeat it for every point.
  for (const auto& inst : instances)
    if (inst.fq.point == 0) m_quotient(inst.name, inst.fq.q);
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome class_membership(const std::vector<Instance>& instances, std::uint64_t seed) {
  Outcome o;
  for (const auto& inst : instances) {
    try {
      const auto pm = rho(inst.fq);
      o.record(verify_module_axioms(pm.module, seed).all_pass(), inst.name + ": module axioms");
      o.record(verify_class_m(pm.module).all_pass(), inst.name + ": class M");
      o.record(is_nuclearly_pointed(pm), inst.name + ": point not nuclear");
      o.record(check_fm_mc(inst.fq).all_pass(), inst.name + ": M(Q) / Z biconditional");
    } catch (const std::exception& e) {
      o.record_error(inst.name, e);
    }
  }
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome oracle_equivalences(std::size_t max_loop_order) {
  Outcome o;
  for (std::size_t n = 1; n <= max_loop_order; ++n) {
    std::size_t index = 0;
    oracle::for_each_reduced_square(n, [&](const oracle::Table& t) {
      const std::string what = "loop" + std::to_string(n) + "#" + std::to_string(index++);
      try {
        const LoopTable l(QuasigroupTable(t.n, t.cells));
        std::vector<oracle::Cells> got;
        for (const auto& e : enumerate_endomorphisms(l)) got.push_back(e.map);
        o.record(got == oracle::all_map_endomorphisms(t), what + ": endomorphisms differ");
      } catch (const std::exception& e) {
        o.record_error(what, e);
      }
    });
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t index = 0;
    for_each_latin_square(n, [&](const QuasigroupTable& q) {
      const oracle::Table t{n, {q.cells().begin(), q.cells().end()}};
      o.record(is_f_quasigroup(q).holds == oracle::literal_f_quasigroup(t),
               "square" + std::to_string(n) + "#" + std::to_string(index++) + ": F-law verdicts differ");
      return true;
    });
  }
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome cml81_self_check() {
  Outcome o;
  try {
    const LoopTable c = cml81();
    o.record(is_commutative(c.base()), "commutative");
    o.record(is_moufang(c).holds, "Moufang");
    o.record(!is_associative(c.base()).holds, "nonassociative");
    bool exp3 = true;
    for (Element x = 0; x < c.order(); ++x) exp3 = exp3 && power(c, x, 3) == c.zero();
    o.record(exp3 && exponent(c) == 3, "exponent 3");
    o.record(is_nk_loop(c).holds, "NK");
    o.record(is_a_loop(c), "A-loop");
  } catch (const std::exception& e) {
    o.record_error("cml81", e);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string tier = "fast";
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  app.add_option("--tier", tier)->check(CLI::IsMember({"fast", "slow"}));
  app.add_option("--seed", seed);
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  const bool slow = tier == "slow";

  const auto groups = group_tables();
  const LoopTable cml = cml81();
  const auto fqs = f_quasigroup_corpus(true);
  std::vector<Instance> instances;
  std::vector<Criterion> results;
  auto run = [&](int number, std::string title, auto&& body) {
    Clock clock;
    Criterion c{number, std::move(title), body(), 0};
    c.seconds = clock.seconds();
    results.push_back(std::move(c));
    const auto& r = results.back();
    std::ostringstream line;
    line << "criterion " << r.number << " [" << r.title << "]: " << (r.outcome.failed == 0 ? "PASS" : "FAIL") << " ("
         << r.outcome.checked - r.outcome.failed << "/" << r.outcome.checked << " checks, " << r.seconds << " s)";
    if (r.outcome.failed) line << " first failure: " << r.outcome.first_failure;
    std::cout << line.str() << std::endl;
  };

  run(1, std::string("small-order theorem check, orders <= ") + (slow ? "5" : "4"),
      [&] { return small_order_theorem(slow ? 5 : 4, jobs, instances); });
  for (const auto& nq : fqs) {
    const auto n = static_cast<Element>(nq.table.order());
    // Every point of the small tables; three points of the order-81 one.
    const std::vector<Element> points = n <= 20 ? std::vector<Element>{} : std::vector<Element>{0, n / 2, n - 1};
    if (points.empty())
      for (Element p = 0; p < n; ++p) instances.push_back({label(nq.name, p), {nq.table, p}});
    for (Element p : points) instances.push_back({label(nq.name, p), {nq.table, p}});
  }
  run(2, "round-trip identity", [&] { return round_trips(instances, groups); });
  run(3, "lemma suites", [&] { return lemma_suites(groups, cml, seed); });
  run(4, "structural facts", [&] { return structural_facts(groups, cml, instances, fqs); });
  run(5, "class membership", [&] { return class_membership(instances, seed); });
  run(6, "oracle equivalences", [&] { return oracle_equivalences(6); });
  run(7, "CML81 self-verification", [] { return cml81_self_check(); });

  bool all = true;
  for (const auto& r : results) all = all && r.outcome.failed == 0;
  std::cout << "tier " << tier << ": " << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
