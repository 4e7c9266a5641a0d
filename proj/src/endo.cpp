#include "fqloop/endo.hpp"

#include <algorithm>
#include <numeric>

namespace fqloop {

Endo identity_endo(std::size_t n) {
  Endo f{std::vector<Element>(n)};
  std::iota(f.map.begin(), f.map.end(), Element{0});
  return f;
}

Endo zero_endo(const LoopTable& l) { return Endo{std::vector<Element>(l.order(), l.zero())}; }

bool is_endomorphism(const LoopTable& l, const Endo& f) {
  const std::size_t n = l.order();
  if (f.carrier_order() != n) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (f(l.add(x, y)) != l.add(f(x), f(y))) return false;
  return true;
}

bool is_bijective(const Endo& f) {
  std::vector<std::uint8_t> hit(f.carrier_order(), 0);
  for (Element v : f.map) {
    if (v >= hit.size() || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

namespace {

void require_carrier(std::size_t n, const Endo& f) {
  if (f.carrier_order() != n)
    throw AlgebraError(ErrorKind::CarrierMismatch, "map on " + std::to_string(f.carrier_order()) +
                                                       " points used on a carrier of order " + std::to_string(n));
}

}  // namespace

Endo endo_add(const LoopTable& l, const Endo& f, const Endo& g) {
  require_carrier(l.order(), f);
  require_carrier(l.order(), g);
  Endo out{std::vector<Element>(l.order())};
  for (Element x = 0; x < l.order(); ++x) out.map[x] = l.add(f(x), g(x));
  return out;
}

Endo endo_neg(const LoopTable& l, const Endo& f) {
  require_carrier(l.order(), f);
  Endo out{std::vector<Element>(l.order())};
  for (Element x = 0; x < l.order(); ++x) out.map[x] = l.neg(f(x));
  return out;
}

Endo endo_compose(const Endo& f, const Endo& g) {
  require_carrier(f.carrier_order(), g);
  Endo out{std::vector<Element>(g.carrier_order())};
  for (Element x = 0; x < g.carrier_order(); ++x) out.map[x] = f(g(x));
  return out;
}

Endo endo_inverse(const Endo& f) {
  if (!is_bijective(f)) throw AlgebraError(ErrorKind::InvariantViolation, "map is not a bijection");
  Endo out{std::vector<Element>(f.carrier_order())};
  for (Element x = 0; x < f.carrier_order(); ++x) out.map[f(x)] = x;
  return out;
}

Json to_json(const Endo& f) { return Json(f.map); }

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Element> generating_set(const LoopTable& l) {
  std::vector<Element> gens;
  auto generated = generated_subloop(l, gens);
  for (Element x = 0; x < l.order(); ++x) {
    if (generated.contains(x)) continue;
    gens.push_back(x);
    generated = generated_subloop(l, gens);
  }
  return gens;
}

namespace {

struct PartialMap {
  std::vector<Element> image;
  std::vector<Element> known;
  std::vector<std::uint8_t> used;  // images already taken, for injective search
};

class EndoSearch {
 public:
  EndoSearch(const LoopTable& l, const EnumerationOptions& opts)
      : l_(l), opts_(opts), gens_(generating_set(l)) {}

  std::vector<Endo> run() {
    PartialMap start{std::vector<Element>(l_.order(), kNoElement), {}, std::vector<std::uint8_t>(l_.order(), 0)};
    if (assign(start, l_.zero(), l_.zero())) descend(std::move(start), 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // Sets image[x] = y and closes the known domain under +; false on conflict.
  bool assign(PartialMap& s, Element x, Element y) {
    std::vector<std::pair<Element, Element>> pending{{x, y}};
    while (!pending.empty()) {
      const auto [a, fa] = pending.back();
      pending.pop_back();
      if (s.image[a] != kNoElement) {
        if (s.image[a] != fa) return false;
        continue;
      }
      if (opts_.injective_only) {
        if (s.used[fa]) return false;
        s.used[fa] = 1;
      }
      s.image[a] = fa;
      s.known.push_back(a);
      // Pairs of a with everything known so far (including a itself).
      for (std::size_t i = 0; i < s.known.size(); ++i) {
        const Element b = s.known[i];
        const Element fb = s.image[b];
        pending.emplace_back(l_.add(a, b), l_.add(fa, fb));
        pending.emplace_back(l_.add(b, a), l_.add(fb, fa));
      }
    }
    return true;
  }

  void descend(PartialMap s, std::size_t depth) {
    if (depth == gens_.size()) {
      out_.push_back(Endo{std::move(s.image)});
      return;
    }
    const Element g = gens_[depth];
    for (Element y = 0; y < l_.order(); ++y) {
      if (opts_.filter && !opts_.filter(g, y)) continue;
      if (++nodes_ > opts_.node_cap)
        throw AlgebraError(ErrorKind::SearchTooLarge,
                           "endomorphism search exceeded " + std::to_string(opts_.node_cap) + " nodes");
      PartialMap next = s;
      if (assign(next, g, y)) descend(std::move(next), depth + 1);
    }
  }

  const LoopTable& l_;
  const EnumerationOptions& opts_;
  std::vector<Element> gens_;
  std::vector<Endo> out_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<Endo> enumerate_endomorphisms(const LoopTable& l, const EnumerationOptions& opts) {
  return EndoSearch(l, opts).run();
}

std::vector<Endo> enumerate_endomorphisms(const LoopTable& l, std::size_t node_cap) {
  EnumerationOptions opts;
  opts.node_cap = node_cap;
  return enumerate_endomorphisms(l, opts);
}

std::vector<Endo> enumerate_automorphisms(const LoopTable& l, std::size_t node_cap) {
  EnumerationOptions opts;
  opts.node_cap = node_cap;
  opts.injective_only = true;
  return enumerate_endomorphisms(l, opts);
}

// ---------------------------------------------------------------------------
// EndoContext

EndoContext::EndoContext(const LoopTable& l) : EndoContext(l, false) {}

EndoContext::EndoContext(const LoopTable& l, bool nested) : loop_(l) {
  const std::size_t n = loop_.order();
  exponent_ = fqloop::exponent(loop_);
  multiples_.resize(exponent_ * n);
  for (Element x = 0; x < n; ++x) {
    Element acc = loop_.zero();
    for (std::size_t m = 0; m < exponent_; ++m) {
      multiples_[m * n + x] = acc;
      acc = loop_.add(acc, x);
    }
  }
  nk_ = is_nk_loop(loop_).holds;
  if (nk_ && !nested) {
    k_sub_ = std::make_shared<const Subloop>(restrict_to(loop_, loop_.moufang_center()));
    k_ctx_ = std::shared_ptr<const EndoContext>(new EndoContext(k_sub_->loop, true));
  }
}

long long EndoContext::reduce(long long m) const noexcept {
  const auto e = static_cast<long long>(exponent_);
  return ((m % e) + e) % e;
}

Element EndoContext::multiple(Element x, long long m) const noexcept {
  return multiples_[static_cast<std::size_t>(reduce(m)) * loop_.order() + x];
}

bool EndoContext::is_endomorphism(const Endo& f) const { return fqloop::is_endomorphism(loop_, f); }

bool EndoContext::is_central(const Endo& f) const {
  require_carrier(loop_.order(), f);
  return std::all_of(f.map.begin(), f.map.end(), [&](Element v) { return loop_.in_center(v); });
}

bool EndoContext::is_m_quasicentral(const Endo& f, long long m) const {
  require_carrier(loop_.order(), f);
  for (Element x = 0; x < loop_.order(); ++x)
    if (!loop_.in_center(loop_.add(multiple(x, m), f(x)))) return false;
  return true;
}

std::vector<long long> EndoContext::witnesses(const Endo& f) const {
  std::vector<long long> out;
  for (long long m = 0; m < static_cast<long long>(exponent_); ++m)
    if (is_m_quasicentral(f, m)) out.push_back(m);
  return out;
}

QuasicentralWitness EndoContext::quasicentral_witnesses(const Endo& f) const { return {f, witnesses(f)}; }

void EndoContext::require_nk() const {
  if (!nk_) throw AlgebraError(ErrorKind::NotNKLoop, "loop is not an NK-loop");
}

const Subloop& EndoContext::moufang_center_subloop() const {
  require_nk();
  return *k_sub_;
}

const EndoContext& EndoContext::moufang_center_context() const {
  require_nk();
  return *k_ctx_;
}

Endo EndoContext::restrict_to_moufang_center(const Endo& f) const {
  const Subloop& k = moufang_center_subloop();
  Endo out{std::vector<Element>(k.embed.size())};
  for (Element i = 0; i < k.embed.size(); ++i) {
    const Element img = k.local[f(k.embed[i])];
    if (img == kNoElement) throw AlgebraError(ErrorKind::InvariantViolation, "map does not preserve K");
    out.map[i] = img;
  }
  return out;
}

bool EndoContext::is_special(const Endo& f) const {
  require_nk();
  require_carrier(loop_.order(), f);
  if (!is_endomorphism(f)) return false;
  for (Element x = 0; x < loop_.order(); ++x)
    if (!loop_.in_moufang_center(f(x))) return false;
  for (Element a : loop_.nucleus())
    if (!loop_.in_nucleus(f(a))) return false;
  const Endo fk = restrict_to_moufang_center(f);
  return !k_ctx_->witnesses(fk).empty();
}

ConditionFResult EndoContext::condition_f(const Endo& f) const {
  require_carrier(loop_.order(), f);
  ConditionFResult r;
  for (Element x = 0; x < loop_.order(); ++x) {
    const bool ok = loop_.in_moufang_center(loop_.add(loop_.neg(x), f(x))) && loop_.in_nucleus(loop_.add(x, f(x)));
    if (!ok) {
      r.holds = false;
      r.failing = x;
      break;
    }
  }
  for (Element a : loop_.moufang_center()) r.maps_k_into_k = r.maps_k_into_k && loop_.in_moufang_center(f(a));
  for (Element a : loop_.nucleus()) r.maps_n_into_n = r.maps_n_into_n && loop_.in_nucleus(f(a));
  return r;
}

Endo EndoContext::delta_map(const Endo& f) const {
  const auto cf = condition_f(f);
  if (!cf.holds)
    throw AlgebraError(ErrorKind::ConditionFViolated,
                       "condition (F) fails at x = " + std::to_string(cf.failing.value_or(0)));
  Endo h{std::vector<Element>(loop_.order())};
  for (Element x = 0; x < loop_.order(); ++x) h.map[x] = loop_.add(loop_.neg(x), f(x));
  if (!is_special(h)) throw AlgebraError(ErrorKind::InvariantViolation, "-x + f(x) is not a special endomorphism");
  return h;
}

namespace {

std::vector<Endo> merge_sorted(std::vector<std::vector<Endo>> parts) {
  std::vector<Endo> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Endo> EndoContext::central_endomorphisms(std::size_t node_cap) const {
  EnumerationOptions opts;
  opts.node_cap = node_cap;
  opts.filter = [&](Element, Element y) { return loop_.in_center(y); };
  auto all = enumerate_endomorphisms(loop_, opts);
  std::erase_if(all, [&](const Endo& f) { return !is_central(f); });
  return all;
}

std::vector<Endo> EndoContext::quasicentral_endomorphisms(std::size_t node_cap) const {
  std::vector<std::vector<Endo>> parts;
  for (long long m = 0; m < static_cast<long long>(exponent_); ++m) {
    EnumerationOptions opts;
    opts.node_cap = node_cap;
    opts.filter = [&, m](Element g, Element y) { return loop_.in_center(loop_.add(multiple(g, m), y)); };
    auto found = enumerate_endomorphisms(loop_, opts);
    std::erase_if(found, [&](const Endo& f) { return !is_m_quasicentral(f, m); });
    parts.push_back(std::move(found));
  }
  return merge_sorted(std::move(parts));
}

std::vector<Endo> EndoContext::special_endomorphisms(std::size_t node_cap) const {
  require_nk();
  const Subloop& k = *k_sub_;
  const EndoContext& kc = *k_ctx_;
  std::vector<std::vector<Endo>> parts;
  for (long long m = 0; m < static_cast<long long>(kc.exponent()); ++m) {
    EnumerationOptions opts;
    opts.node_cap = node_cap;
    opts.filter = [&, m](Element g, Element y) {
      if (!loop_.in_moufang_center(y)) return false;
      if (loop_.in_nucleus(g) && !loop_.in_center(y)) return false;
      if (loop_.in_moufang_center(g)) {
        const Element lg = k.local[g];
        const Element ly = k.local[y];
        return kc.loop().in_center(kc.loop().add(kc.multiple(lg, m), ly));
      }
      return true;
    };
    auto found = enumerate_endomorphisms(loop_, opts);
    std::erase_if(found, [&](const Endo& f) { return !is_special(f); });
    parts.push_back(std::move(found));
  }
  return merge_sorted(std::move(parts));
}

std::vector<Endo> EndoContext::condition_f_endomorphisms(std::size_t node_cap) const {
  EnumerationOptions opts;
  opts.node_cap = node_cap;
  opts.filter = [&](Element g, Element y) {
    return loop_.in_moufang_center(loop_.add(loop_.neg(g), y)) && loop_.in_nucleus(loop_.add(g, y));
  };
  auto found = enumerate_endomorphisms(loop_, opts);
  std::erase_if(found, [&](const Endo& f) { return !condition_f(f).holds; });
  return found;
}

std::vector<Endo> EndoContext::condition_f_automorphisms(std::size_t node_cap) const {
  EnumerationOptions opts;
  opts.node_cap = node_cap;
  opts.injective_only = true;
  opts.filter = [&](Element g, Element y) {
    return loop_.in_moufang_center(loop_.add(loop_.neg(g), y)) && loop_.in_nucleus(loop_.add(g, y));
  };
  auto found = enumerate_endomorphisms(loop_, opts);
  std::erase_if(found, [&](const Endo& f) { return !condition_f(f).holds; });
  return found;
}

// ---------------------------------------------------------------------------

bool is_central(const LoopTable& l, const Endo& f) { return EndoContext(l).is_central(f); }
bool is_m_quasicentral(const LoopTable& l, const Endo& f, long long m) {
  return EndoContext(l).is_m_quasicentral(f, m);
}
QuasicentralWitness quasicentral_witnesses(const LoopTable& l, const Endo& f) {
  return EndoContext(l).quasicentral_witnesses(f);
}
bool is_special(const LoopTable& l, const Endo& f) { return EndoContext(l).is_special(f); }
ConditionFResult satisfies_condition_f(const LoopTable& l, const Endo& f) { return EndoContext(l).condition_f(f); }
Endo delta_map(const LoopTable& l, const Endo& f) { return EndoContext(l).delta_map(f); }

}  // namespace fqloop
