#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqloop/cayley.hpp"
#include "fqloop/report.hpp"
#include "fqloop/structure.hpp"

namespace fqloop {

/// A self-map of a loop's carrier. Whether it is a homomorphism is a separate
/// question answered by `is_endomorphism`; sums of endomorphisms need not be.
struct Endo {
  std::vector<Element> map;

  std::size_t carrier_order() const noexcept { return map.size(); }
  Element operator()(Element x) const noexcept { return map[x]; }

  auto operator<=>(const Endo&) const = default;
};

Endo identity_endo(std::size_t n);
Endo zero_endo(const LoopTable& l);

bool is_endomorphism(const LoopTable& l, const Endo& f);
bool is_bijective(const Endo& f);

// Standard operations. All throw CarrierMismatch on size mismatch.
Endo endo_add(const LoopTable& l, const Endo& f, const Endo& g);
Endo endo_neg(const LoopTable& l, const Endo& f);
Endo endo_compose(const Endo& f, const Endo& g);
/// Inverse permutation; throws InvariantViolation when f is not bijective.
Endo endo_inverse(const Endo& f);

Json to_json(const Endo& f);

inline constexpr std::size_t kDefaultNodeCap = 20'000'000;

/// Greedy generating set: smallest elements not yet in the generated subloop.
std::vector<Element> generating_set(const LoopTable& l);

/// Per-generator filter on candidate images: (generator, image) -> allowed.
using ImageFilter = std::function<bool(Element, Element)>;

struct EnumerationOptions {
  std::size_t node_cap = kDefaultNodeCap;
  bool injective_only = false;
  ImageFilter filter;  // empty: every image allowed
};

/// Backtracking over generator images with closure propagation; results are
/// sorted and duplicate free. Throws SearchTooLarge past `node_cap` nodes.
std::vector<Endo> enumerate_endomorphisms(const LoopTable& l, const EnumerationOptions& opts);
std::vector<Endo> enumerate_endomorphisms(const LoopTable& l, std::size_t node_cap = kDefaultNodeCap);
std::vector<Endo> enumerate_automorphisms(const LoopTable& l, std::size_t node_cap = kDefaultNodeCap);

struct QuasicentralWitness {
  Endo endo;
  /// Residues m in 0..exponent-1 with mx + f(x) ∈ Z for all x.
  std::vector<long long> witnesses_m;

  bool quasicentral() const noexcept { return !witnesses_m.empty(); }
  bool central() const noexcept { return !witnesses_m.empty() && witnesses_m.front() == 0; }
};

struct ConditionFResult {
  bool holds = true;
  std::optional<Element> failing;
  bool maps_k_into_k = true;
  bool maps_n_into_n = true;
};

/// Cached per-loop data for endomorphism predicates: exponent, multiples
/// table, subset masks and, for NK-loops, the Moufang center as a loop.
class EndoContext {
 public:
  explicit EndoContext(const LoopTable& l);

  const LoopTable& loop() const noexcept { return loop_; }
  std::size_t exponent() const noexcept { return exponent_; }
  bool is_nk() const noexcept { return nk_; }

  /// m·x with m reduced modulo the exponent.
  Element multiple(Element x, long long m) const noexcept;
  long long reduce(long long m) const noexcept;

  bool is_endomorphism(const Endo& f) const;
  bool is_central(const Endo& f) const;
  bool is_m_quasicentral(const Endo& f, long long m) const;
  std::vector<long long> witnesses(const Endo& f) const;
  QuasicentralWitness quasicentral_witnesses(const Endo& f) const;

  /// Throw NotNKLoop on loops that are not NK.
  bool is_special(const Endo& f) const;
  ConditionFResult condition_f(const Endo& f) const;
  /// x ↦ -x + f(x); throws ConditionFViolated unless f satisfies (F), and
  /// InvariantViolation if the result is not special.
  Endo delta_map(const Endo& f) const;

  /// The Moufang center K as a loop with its own context (NK-loops only).
  const Subloop& moufang_center_subloop() const;
  const EndoContext& moufang_center_context() const;
  Endo restrict_to_moufang_center(const Endo& f) const;

  std::vector<Endo> central_endomorphisms(std::size_t node_cap = kDefaultNodeCap) const;
  std::vector<Endo> quasicentral_endomorphisms(std::size_t node_cap = kDefaultNodeCap) const;
  std::vector<Endo> special_endomorphisms(std::size_t node_cap = kDefaultNodeCap) const;
  std::vector<Endo> condition_f_endomorphisms(std::size_t node_cap = kDefaultNodeCap) const;
  std::vector<Endo> condition_f_automorphisms(std::size_t node_cap = kDefaultNodeCap) const;

 private:
  EndoContext(const LoopTable& l, bool nested);
  void require_nk() const;

  LoopTable loop_;
  std::size_t exponent_ = 1;
  std::vector<Element> multiples_;  // multiples_[m * n + x] = m·x, m < exponent
  bool nk_ = false;
  std::shared_ptr<const Subloop> k_sub_;
  std::shared_ptr<const EndoContext> k_ctx_;
};

bool is_central(const LoopTable& l, const Endo& f);
bool is_m_quasicentral(const LoopTable& l, const Endo& f, long long m);
QuasicentralWitness quasicentral_witnesses(const LoopTable& l, const Endo& f);
bool is_special(const LoopTable& l, const Endo& f);
ConditionFResult satisfies_condition_f(const LoopTable& l, const Endo& f);
Endo delta_map(const LoopTable& l, const Endo& f);

struct LemmaRow {
  std::string lemma;
  std::size_t instances_checked = 0;
  bool pass = true;
  Json counterexample;  // null when pass
  std::string note;
};

struct LemmaReport {
  std::vector<LemmaRow> rows;

  bool all_pass() const;
  const LemmaRow* find(const std::string& lemma) const;
  Json to_json() const;
};

struct LemmaSuiteOptions {
  std::size_t node_cap = kDefaultNodeCap;
  /// Pair and triple scans beyond these sizes are sampled with `seed`.
  std::size_t pair_cap = std::size_t{1} << 20;
  std::size_t triple_cap = std::size_t{1} << 21;
  std::uint64_t seed = 0xF00D;
};

/// Instance checks of the ring and quasicentrality lemmas over the
/// enumerated central, quasicentral, special and (F) endomorphisms of `l`.
/// Commutative-only lemmas run on `l` itself when it is commutative and on
/// its Moufang center otherwise.
LemmaReport check_lemma_suite(const LoopTable& l, const LemmaSuiteOptions& opts = {});

}  // namespace fqloop
