#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fqloop/cayley.hpp"
#include "fqloop/report.hpp"

namespace fqloop {

enum class SubsetKind { Nucleus, MoufangCenter, Center, MSet, Subloop, NormalSubloop };

std::string_view to_string(SubsetKind kind);

struct SubsetWitness {
  Subset members;
  SubsetKind kind = SubsetKind::Subloop;
  std::size_t parent_order = 0;

  bool contains(Element x) const;
  std::size_t size() const noexcept { return members.size(); }
};

SubsetWitness nucleus(const LoopTable& l);
SubsetWitness moufang_center(const LoopTable& l);
SubsetWitness center(const LoopTable& l);
/// M(Q) = {a : xa·yx = xy·ax for all x, y}.
SubsetWitness m_set(const QuasigroupTable& q);
/// {a : a + x = x + a for all x}.
Subset commutant(const LoopTable& l);

bool is_closed(const QuasigroupTable& q, const Subset& s);
SubsetWitness generated_subloop(const LoopTable& l, std::span<const Element> generators);

/// A subloop re-indexed as a loop of its own. `embed[i]` is the parent index
/// of local element i; `local[x]` is the local index of parent element x, or
/// kNoElement outside the subloop.
struct Subloop {
  LoopTable loop;
  std::vector<Element> embed;
  std::vector<Element> local;
};

/// Throws Malformed when `s` is not a subloop containing zero.
Subloop restrict_to(const LoopTable& l, const Subset& s);

struct QuotientTable {
  std::vector<Subset> cosets;  // sorted by least member
  QuasigroupTable table;
  std::vector<Element> projection;
};

/// Congruence generated by S×S. Throws NotNormal unless S is exactly one of
/// its classes.
QuotientTable quotient(const QuasigroupTable& q, const Subset& s);
QuotientTable quotient(const LoopTable& l, const SubsetWitness& s);

/// Normality of a subloop by invariance under the standard generators of the
/// inner mapping group (T_x, L_{x,y}, R_{x,y}).
bool is_normal_subloop(const LoopTable& l, const Subset& s);

using Permutation = std::vector<Element>;

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

/// Closure of all left and right translations; sorted. Throws GroupTooLarge
/// once more than `cap` permutations are found.
std::vector<Permutation> multiplication_group(const LoopTable& l, std::size_t cap = kDefaultGroupCap);
/// Zero-stabilizer inside multiplication_group; sorted.
std::vector<Permutation> inner_mappings(const LoopTable& l, std::size_t cap = kDefaultGroupCap);
/// T_x, L_{x,y}, R_{x,y}, deduplicated and sorted.
std::vector<Permutation> inner_mapping_generators(const LoopTable& l);

bool is_automorphism(const LoopTable& l, std::span<const Element> map);
/// Every element of inner_mappings(l) is an automorphism.
bool is_a_loop(const LoopTable& l, std::size_t cap = kDefaultGroupCap);

struct NKDecomposition {
  bool holds = true;
  /// (u, v) with x = u + v = v + u, u ∈ N, v ∈ K; filled only when holds.
  std::vector<std::pair<Element, Element>> parts;
  std::optional<Element> failing;
};

NKDecomposition is_nk_loop(const LoopTable& l);

/// Structural facts of NK-loops as report rows.
Report verify_nk_facts(const LoopTable& l);

}  // namespace fqloop
