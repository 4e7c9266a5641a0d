#include <algorithm>
#include <random>

#include "fqloop/endo.hpp"

namespace fqloop {

bool LemmaReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const LemmaRow& r) { return r.pass; });
}

const LemmaRow* LemmaReport::find(const std::string& lemma) const {
  for (const auto& r : rows)
    if (r.lemma == lemma) return &r;
  return nullptr;
}

Json LemmaReport::to_json() const {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row{{"lemma", r.lemma}, {"instances_checked", r.instances_checked}, {"pass", r.pass}};
    if (!r.pass) row["counterexample"] = r.counterexample;
    if (!r.note.empty()) row["note"] = r.note;
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

class Row {
 public:
  explicit Row(std::string name) { row_.lemma = std::move(name); }

  template <class Cex>
  void check(bool ok, Cex&& cex) {
    ++row_.instances_checked;
    if (!ok && row_.pass) {
      row_.pass = false;
      row_.counterexample = cex();
    }
  }
  void note(std::string s) { row_.note = std::move(s); }
  LemmaRow finish() { return std::move(row_); }

 private:
  LemmaRow row_;
};

class Sampler {
 public:
  Sampler(const LemmaSuiteOptions& opts) : opts_(opts), rng_(opts.seed) {}

  template <class Fn>
  void pairs(std::size_t k, Fn&& fn) {
    if (k == 0) return;
    if (k * k <= opts_.pair_cap) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) fn(i, j);
    } else {
      std::uniform_int_distribution<std::size_t> d(0, k - 1);
      for (std::size_t s = 0; s < opts_.pair_cap; ++s) fn(d(rng_), d(rng_));
    }
  }

  template <class Fn>
  void triples(std::size_t k, Fn&& fn) {
    if (k == 0) return;
    if (k * k * k <= opts_.triple_cap) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t l = 0; l < k; ++l) fn(i, j, l);
    } else {
      std::uniform_int_distribution<std::size_t> d(0, k - 1);
      for (std::size_t s = 0; s < opts_.triple_cap; ++s) fn(d(rng_), d(rng_), d(rng_));
    }
  }

 private:
  const LemmaSuiteOptions& opts_;
  std::mt19937_64 rng_;
};

Json cex(std::initializer_list<std::pair<const char*, const Endo*>> maps, Json extra = nullptr) {
  Json out = Json::object();
  for (const auto& [name, f] : maps) out[name] = to_json(*f);
  if (!extra.is_null()) out["detail"] = std::move(extra);
  return out;
}

bool contains(const std::vector<long long>& w, long long m) { return std::binary_search(w.begin(), w.end(), m); }

Endo raw_delta(const LoopTable& l, const Endo& f) {
  Endo h{std::vector<Element>(l.order())};
  for (Element x = 0; x < l.order(); ++x) h.map[x] = l.add(l.neg(x), f(x));
  return h;
}

// Sum/negation/zero laws and the ring axioms shared by ZEnd, QEnd (commutative
// loops) and SEnd; `member` decides membership in the class under test.
template <class Member>
void ring_rows(std::vector<LemmaRow>& out, const std::string& prefix, const EndoContext& ctx,
               const std::vector<Endo>& set, Member&& member, Sampler& sampler) {
  const LoopTable& l = ctx.loop();
  const Endo zero = zero_endo(l);

  Row sum_closed(prefix + ".sum_closed");
  Row sum_comm(prefix + ".sum_commutative");
  Row prod_closed(prefix + ".product_closed");
  sampler.pairs(set.size(), [&](std::size_t i, std::size_t j) {
    const Endo& f = set[i];
    const Endo& g = set[j];
    const Endo fg = endo_add(l, f, g);
    sum_closed.check(member(fg), [&] { return cex({{"f", &f}, {"g", &g}, {"f+g", &fg}}); });
    const Endo gf = endo_add(l, g, f);
    sum_comm.check(fg == gf, [&] { return cex({{"f", &f}, {"g", &g}}); });
    const Endo prod = endo_compose(f, g);
    prod_closed.check(member(prod), [&] { return cex({{"f", &f}, {"g", &g}, {"fg", &prod}}); });
  });

  Row neg_closed(prefix + ".neg_closed");
  Row neg_zero(prefix + ".inverse_and_zero");
  for (const Endo& f : set) {
    const Endo nf = endo_neg(l, f);
    neg_closed.check(member(nf), [&] { return cex({{"f", &f}, {"-f", &nf}}); });
    neg_zero.check(endo_add(l, f, nf) == zero && endo_add(l, f, zero) == f, [&] { return cex({{"f", &f}}); });
  }

  Row sum_assoc(prefix + ".sum_associative");
  Row ring(prefix + ".ring_axioms");
  sampler.triples(set.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Endo& f = set[i];
    const Endo& g = set[j];
    const Endo& h = set[k];
    sum_assoc.check(endo_add(l, f, endo_add(l, g, h)) == endo_add(l, endo_add(l, f, g), h),
                    [&] { return cex({{"f", &f}, {"g", &g}, {"h", &h}}); });
    const Endo gh = endo_add(l, g, h);
    const bool left = endo_compose(f, gh) == endo_add(l, endo_compose(f, g), endo_compose(f, h));
    const bool right = endo_compose(gh, f) == endo_add(l, endo_compose(g, f), endo_compose(h, f));
    const bool assoc = endo_compose(endo_compose(f, g), h) == endo_compose(f, endo_compose(g, h));
    ring.check(left && right && assoc, [&] {
      return cex({{"f", &f}, {"g", &g}, {"h", &h}}, {{"left_distributive", left},
                                                     {"right_distributive", right},
                                                     {"composition_associative", assoc}});
    });
  });

  for (Row* r : {&sum_closed, &sum_comm, &prod_closed, &neg_closed, &neg_zero, &sum_assoc, &ring})
    out.push_back(r->finish());
}

}  // namespace

LemmaReport check_lemma_suite(const LoopTable& l, const LemmaSuiteOptions& opts) {
  LemmaReport report;
  auto& rows = report.rows;
  Sampler sampler(opts);
  const EndoContext ctx(l);
  const std::size_t n = l.order();
  const Endo id = identity_endo(n);
  const Endo zero = zero_endo(l);

  const auto zend = ctx.central_endomorphisms(opts.node_cap);
  const auto qend = ctx.quasicentral_endomorphisms(opts.node_cap);
  std::vector<std::vector<long long>> qw;
  qw.reserve(qend.size());
  for (const auto& f : qend) qw.push_back(ctx.witnesses(f));

  // Every endomorphism when the full search is cheap, else the union of the
  // constrained lists.
  std::vector<Endo> pool;
  try {
    pool = enumerate_endomorphisms(l, std::size_t{200'000});
  } catch (const AlgebraError& e) {
    if (e.kind() != ErrorKind::SearchTooLarge) throw;
    pool = qend;
  }

  // Central endomorphisms form a ring.
  {
    Row zero_central("cend_ring.zero_central");
    zero_central.check(ctx.is_central(zero), [&] { return cex({{"zero", &zero}}); });
    rows.push_back(zero_central.finish());
    ring_rows(
        rows, "cend_ring", ctx, zend, [&](const Endo& f) { return ctx.is_endomorphism(f) && ctx.is_central(f); },
        sampler);
  }

  // 0-quasicentral iff central; ZEnd ⊂ QEnd; Id is (-1)-quasicentral.
  {
    Row zero_iff("quasi.zero_quasicentral_iff_central");
    for (const auto& f : pool)
      zero_iff.check(ctx.is_m_quasicentral(f, 0) == ctx.is_central(f), [&] { return cex({{"f", &f}}); });
    Row subset("quasi.central_subset_quasicentral");
    for (const auto& f : zend)
      subset.check(std::binary_search(qend.begin(), qend.end(), f), [&] { return cex({{"f", &f}}); });
    Row ident("quasi.identity_minus_one");
    ident.check(ctx.is_m_quasicentral(id, -1), [&] { return cex({{"id", &id}}); });
    for (Row* r : {&zero_iff, &subset, &ident}) rows.push_back(r->finish());
  }

  // Products of quasicentral endomorphisms: fg is (-mn)-quasicentral.
  {
    Row witness("quasi2.product_witness");
    Row closed("quasi2.product_quasicentral");
    sampler.pairs(qend.size(), [&](std::size_t i, std::size_t j) {
      const Endo fg = endo_compose(qend[i], qend[j]);
      const auto w = ctx.witnesses(fg);
      closed.check(ctx.is_endomorphism(fg) && !w.empty(),
                   [&] { return cex({{"f", &qend[i]}, {"g", &qend[j]}, {"fg", &fg}}); });
      for (long long m : qw[i])
        for (long long k : qw[j])
          witness.check(contains(w, ctx.reduce(-m * k)), [&] {
            return cex({{"f", &qend[i]}, {"g", &qend[j]}}, {{"m", m}, {"n", k}, {"fg_witnesses", w}});
          });
    });
    rows.push_back(witness.finish());
    rows.push_back(closed.finish());
  }

  // Commutative lemmas on l itself or on (K, +).
  {
    const EndoContext* cctx = nullptr;
    std::string where;
    if (is_commutative(l.base())) {
      cctx = &ctx;
      where = "loop";
    } else if (ctx.is_nk() && is_commutative(ctx.moufang_center_context().loop().base())) {
      cctx = &ctx.moufang_center_context();
      where = "moufang_center";
    }
    Row neg_w("quasi_comm.neg_witness");
    Row sum_w("quasi_comm.sum_witness");
    Row unity("quasi_comm_ring.identity_is_unity");
    std::vector<LemmaRow> ring;
    if (cctx) {
      const LoopTable& cl = cctx->loop();
      const auto cq = cctx->quasicentral_endomorphisms(opts.node_cap);
      std::vector<std::vector<long long>> cw;
      for (const auto& f : cq) cw.push_back(cctx->witnesses(f));
      for (std::size_t i = 0; i < cq.size(); ++i) {
        const Endo nf = endo_neg(cl, cq[i]);
        const auto w = cctx->witnesses(nf);
        for (long long m : cw[i])
          neg_w.check(contains(w, cctx->reduce(-m)), [&] { return cex({{"f", &cq[i]}}, {{"m", m}}); });
      }
      sampler.pairs(cq.size(), [&](std::size_t i, std::size_t j) {
        const Endo s = endo_add(cl, cq[i], cq[j]);
        const bool endo = cctx->is_endomorphism(s);
        const auto w = cctx->witnesses(s);
        for (long long m : cw[i])
          for (long long k : cw[j])
            sum_w.check(endo && contains(w, cctx->reduce(m + k)), [&] {
              return cex({{"f", &cq[i]}, {"g", &cq[j]}, {"f+g", &s}}, {{"m", m}, {"n", k}, {"is_endomorphism", endo}});
            });
      });
      const Endo cid = identity_endo(cl.order());
      const bool id_in = std::binary_search(cq.begin(), cq.end(), cid);
      for (const auto& f : cq)
        unity.check(id_in && endo_compose(cid, f) == f && endo_compose(f, cid) == f,
                    [&] { return cex({{"f", &f}}, {{"identity_quasicentral", id_in}}); });
      ring_rows(
          ring, "quasi_comm2", *cctx, cq,
          [&](const Endo& f) { return cctx->is_endomorphism(f) && !cctx->witnesses(f).empty(); }, sampler);
      for (auto& r : ring) r.note = "on " + where;
    }
    for (Row* r : {&neg_w, &sum_w, &unity}) {
      if (!cctx) r->note("skipped: neither the loop nor its Moufang center is commutative");
      else r->note("on " + where);
      rows.push_back(r->finish());
    }
    rows.insert(rows.end(), ring.begin(), ring.end());
  }

  // kx ∈ Z for a fixed k ∈ {1,2,3}: witnesses in {0, 1, -1}; inverses of
  // quasicentral automorphisms are quasicentral.
  {
    std::optional<int> k;
    for (int c = 1; c <= 3 && !k; ++c) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) ok = l.in_center(ctx.multiple(x, c));
      if (ok) k = c;
    }
    Row small("quasi3.witness_in_zero_one_minus_one");
    Row inv("quasi3.inverse_quasicentral");
    if (k) {
      const long long minus_one = ctx.reduce(-1);
      for (std::size_t i = 0; i < qend.size(); ++i) {
        const auto& w = qw[i];
        small.check(contains(w, 0) || contains(w, 1) || contains(w, minus_one),
                    [&] { return cex({{"f", &qend[i]}}, {{"witnesses", w}}); });
        if (is_bijective(qend[i])) {
          const Endo fi = endo_inverse(qend[i]);
          inv.check(ctx.is_endomorphism(fi) && !ctx.witnesses(fi).empty(),
                    [&] { return cex({{"f", &qend[i]}, {"f_inverse", &fi}}); });
        }
      }
      small.note("k = " + std::to_string(*k));
      inv.note("k = " + std::to_string(*k));
    } else {
      small.note("skipped: no k in {1,2,3} with kx central for all x");
      inv.note("skipped: no k in {1,2,3} with kx central for all x");
    }
    rows.push_back(small.finish());
    rows.push_back(inv.finish());
  }

  if (!ctx.is_nk()) return report;

  // Special endomorphisms form a ring.
  const auto send = ctx.special_endomorphisms(opts.node_cap);
  ring_rows(rows, "special", ctx, send, [&](const Endo& f) { return ctx.is_special(f); }, sampler);

  const auto fend = ctx.condition_f_endomorphisms(opts.node_cap);
  {
    Row hs("h_send.delta_special");
    for (const auto& f : fend) {
      const Endo h = raw_delta(l, f);
      hs.check(ctx.is_special(h), [&] { return cex({{"f", &f}, {"h", &h}}); });
    }
    rows.push_back(hs.finish());

    std::vector<Endo> deltas;
    for (const auto& f : fend) deltas.push_back(raw_delta(l, f));
    Row sc("send_commute.iff");
    sampler.pairs(fend.size(), [&](std::size_t i, std::size_t j) {
      const bool hk = endo_compose(deltas[i], deltas[j]) == endo_compose(deltas[j], deltas[i]);
      const bool fg = endo_compose(fend[i], fend[j]) == endo_compose(fend[j], fend[i]);
      sc.check(hk == fg, [&] { return cex({{"f", &fend[i]}, {"g", &fend[j]}}, {{"hk_eq_kh", hk}, {"fg_eq_gf", fg}}); });
    });
    rows.push_back(sc.finish());
  }

  const auto faut = ctx.condition_f_automorphisms(opts.node_cap);
  {
    Row special("aut_f.deltas_special");
    Row annihilate("aut_f.hp_commute_and_sum_zero");
    std::vector<Endo> hs, ps;
    for (const auto& f : faut) {
      const Endo h = raw_delta(l, f);
      const Endo p = raw_delta(l, endo_inverse(f));
      special.check(ctx.is_special(h) && ctx.is_special(p), [&] { return cex({{"f", &f}, {"h", &h}, {"p", &p}}); });
      const Endo hp = endo_compose(h, p);
      const bool commute = hp == endo_compose(p, h);
      const bool sum_zero = endo_add(l, endo_add(l, h, p), hp) == zero;
      annihilate.check(commute && sum_zero, [&] {
        return cex({{"f", &f}, {"h", &h}, {"p", &p}}, {{"hp_eq_ph", commute}, {"h+p+hp_zero", sum_zero}});
      });
      hs.push_back(h);
      ps.push_back(p);
    }
    Row pairwise("aut_f.pairwise_commute_when_fg_gf");
    sampler.pairs(faut.size(), [&](std::size_t i, std::size_t j) {
      if (endo_compose(faut[i], faut[j]) != endo_compose(faut[j], faut[i])) return;
      const Endo* maps[4] = {&hs[i], &hs[j], &ps[i], &ps[j]};
      bool ok = true;
      for (int a = 0; a < 4 && ok; ++a)
        for (int b = a + 1; b < 4 && ok; ++b) ok = endo_compose(*maps[a], *maps[b]) == endo_compose(*maps[b], *maps[a]);
      pairwise.check(ok, [&] { return cex({{"f", &faut[i]}, {"g", &faut[j]}}); });
    });
    for (Row* r : {&special, &annihilate, &pairwise}) rows.push_back(r->finish());
  }
  return report;
}

}  // namespace fqloop
