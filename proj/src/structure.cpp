#include "fqloop/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace fqloop {

std::string_view to_string(SubsetKind kind) {
  switch (kind) {
    case SubsetKind::Nucleus: return "nucleus";
    case SubsetKind::MoufangCenter: return "moufang_center";
    case SubsetKind::Center: return "center";
    case SubsetKind::MSet: return "m_set";
    case SubsetKind::Subloop: return "subloop";
    case SubsetKind::NormalSubloop: return "normal_subloop";
  }
  return "unknown";
}

bool SubsetWitness::contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }

SubsetWitness nucleus(const LoopTable& l) { return {l.nucleus(), SubsetKind::Nucleus, l.order()}; }
SubsetWitness moufang_center(const LoopTable& l) { return {l.moufang_center(), SubsetKind::MoufangCenter, l.order()}; }
SubsetWitness center(const LoopTable& l) { return {l.center(), SubsetKind::Center, l.order()}; }

SubsetWitness m_set(const QuasigroupTable& q) {
  const std::size_t n = q.order();
  SubsetWitness out{{}, SubsetKind::MSet, n};
  for (Element a = 0; a < n; ++a) {
    bool member = true;
    for (Element x = 0; x < n && member; ++x) {
      const Element xa = q.op(x, a);
      const Element ax = q.op(a, x);
      for (Element y = 0; y < n; ++y)
        if (q.op(xa, q.op(y, x)) != q.op(q.op(x, y), ax)) {
          member = false;
          break;
        }
    }
    if (member) out.members.push_back(a);
  }
  return out;
}

Subset commutant(const LoopTable& l) {
  Subset out;
  for (Element a = 0; a < l.order(); ++a) {
    bool ok = true;
    for (Element x = 0; x < l.order() && ok; ++x) ok = l.add(a, x) == l.add(x, a);
    if (ok) out.push_back(a);
  }
  return out;
}

bool is_closed(const QuasigroupTable& q, const Subset& s) {
  std::vector<std::uint8_t> in(q.order(), 0);
  for (Element x : s) in[x] = 1;
  for (Element x : s)
    for (Element y : s)
      if (!in[q.op(x, y)]) return false;
  return true;
}

SubsetWitness generated_subloop(const LoopTable& l, std::span<const Element> generators) {
  std::vector<std::uint8_t> in(l.order(), 0);
  std::vector<Element> members{l.zero()};
  in[l.zero()] = 1;
  for (Element g : generators)
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element s : {l.add(members[i], members[j]), l.add(members[j], members[i])})
        if (!in[s]) {
          in[s] = 1;
          members.push_back(s);
        }
  std::sort(members.begin(), members.end());
  return {std::move(members), SubsetKind::Subloop, l.order()};
}

Subloop restrict_to(const LoopTable& l, const Subset& s) {
  if (!std::binary_search(s.begin(), s.end(), l.zero()) || !is_closed(l.base(), s))
    throw AlgebraError(ErrorKind::Malformed, "subset is not a subloop");
  std::vector<Element> local(l.order(), kNoElement);
  for (Element i = 0; i < s.size(); ++i) local[s[i]] = i;
  auto table = QuasigroupTable::from_operation(s.size(), [&](Element a, Element b) {
    return local[l.add(s[a], s[b])];
  });
  return Subloop{LoopTable(std::move(table)), s, std::move(local)};
}

// ---------------------------------------------------------------------------
// Congruences and quotients

namespace {

struct UnionFind {
  std::vector<Element> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Element{0}); }
  Element find(Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

QuotientTable quotient(const QuasigroupTable& q, const Subset& s) {
  const std::size_t n = q.order();
  if (s.empty()) throw AlgebraError(ErrorKind::Malformed, "empty subset");
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> work;
  for (Element x : s)
    if (uf.unite(s.front(), x)) work.emplace_back(s.front(), x);
  // Each recorded merge (a, b) forces ac ~ bc and ca ~ cb; processing the
  // merges that created the partition is enough to reach the fixpoint.
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    for (Element c = 0; c < n; ++c) {
      if (uf.unite(q.op(a, c), q.op(b, c))) work.emplace_back(q.op(a, c), q.op(b, c));
      if (uf.unite(q.op(c, a), q.op(c, b))) work.emplace_back(q.op(c, a), q.op(c, b));
    }
  }

  const Element root = uf.find(s.front());
  std::size_t class_size = 0;
  for (Element x = 0; x < n; ++x)
    if (uf.find(x) == root) ++class_size;
  if (class_size != s.size())
    throw AlgebraError(ErrorKind::NotNormal, "congruence generated by the subset has a class of size " +
                                                 std::to_string(class_size) + " around it, not " +
                                                 std::to_string(s.size()));

  // Roots are least members, so scanning x upward orders cosets by least member.
  std::vector<Element> coset_of_root(n, kNoElement);
  std::vector<Subset> cosets;
  std::vector<Element> projection(n);
  for (Element x = 0; x < n; ++x) {
    const Element r = uf.find(x);
    if (coset_of_root[r] == kNoElement) {
      coset_of_root[r] = static_cast<Element>(cosets.size());
      cosets.emplace_back();
    }
    projection[x] = coset_of_root[r];
    cosets[projection[x]].push_back(x);
  }
  const std::size_t m = cosets.size();
  auto table = QuasigroupTable::from_operation(m, [&](Element i, Element j) {
    return projection[q.op(cosets[i].front(), cosets[j].front())];
  });
  // Well-definedness of the induced operation on every pair of representatives.
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (projection[q.op(x, y)] != table.op(projection[x], projection[y]))
        throw AlgebraError(ErrorKind::InvariantViolation, "coset operation is not well defined");
  return QuotientTable{std::move(cosets), std::move(table), std::move(projection)};
}

QuotientTable quotient(const LoopTable& l, const SubsetWitness& s) { return quotient(l.base(), s.members); }

bool is_normal_subloop(const LoopTable& l, const Subset& s) {
  if (!std::binary_search(s.begin(), s.end(), l.zero()) || !is_closed(l.base(), s)) return false;
  const std::size_t n = l.order();
  std::vector<std::uint8_t> in(n, 0);
  for (Element x : s) in[x] = 1;
  for (Element x = 0; x < n; ++x) {
    for (Element z : s)
      if (!in[l.right_sub(l.add(x, z), x)]) return false;  // T_x
    for (Element y = 0; y < n; ++y) {
      const Element xy = l.add(x, y);
      for (Element z : s) {
        if (!in[l.left_sub(xy, l.add(x, l.add(y, z)))]) return false;   // L_{x,y}
        if (!in[l.right_sub(l.add(l.add(z, x), y), xy)]) return false;  // R_{x,y}
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Permutation groups

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element e : p) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

std::vector<Permutation> multiplication_group(const LoopTable& l, std::size_t cap) {
  const std::size_t n = l.order();
  std::vector<Permutation> gens;
  for (Element x = 0; x < n; ++x) {
    Permutation left(n), right(n);
    for (Element y = 0; y < n; ++y) {
      left[y] = l.add(x, y);
      right[y] = l.add(y, x);
    }
    gens.push_back(std::move(left));
    gens.push_back(std::move(right));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Permutation id(n);
  std::iota(id.begin(), id.end(), Element{0});
  std::unordered_set<Permutation, PermHash> seen{id};
  std::vector<Permutation> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      auto p = compose(g, elements[i]);
      if (seen.insert(p).second) {
        elements.push_back(std::move(p));
        if (elements.size() > cap)
          throw AlgebraError(ErrorKind::GroupTooLarge,
                             "multiplication group exceeds " + std::to_string(cap) + " permutations");
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Permutation> inner_mappings(const LoopTable& l, std::size_t cap) {
  auto all = multiplication_group(l, cap);
  std::vector<Permutation> out;
  for (auto& p : all)
    if (p[l.zero()] == l.zero()) out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> inner_mapping_generators(const LoopTable& l) {
  const std::size_t n = l.order();
  std::vector<Permutation> out;
  for (Element x = 0; x < n; ++x) {
    Permutation t(n);
    for (Element z = 0; z < n; ++z) t[z] = l.right_sub(l.add(x, z), x);
    out.push_back(std::move(t));
    for (Element y = 0; y < n; ++y) {
      const Element xy = l.add(x, y);
      Permutation lm(n), rm(n);
      for (Element z = 0; z < n; ++z) {
        lm[z] = l.left_sub(xy, l.add(x, l.add(y, z)));
        rm[z] = l.right_sub(l.add(l.add(z, x), y), xy);
      }
      out.push_back(std::move(lm));
      out.push_back(std::move(rm));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_automorphism(const LoopTable& l, std::span<const Element> map) {
  const std::size_t n = l.order();
  if (map.size() != n) return false;
  std::vector<std::uint8_t> hit(n, 0);
  for (Element v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (map[l.add(x, y)] != l.add(map[x], map[y])) return false;
  return true;
}

bool is_a_loop(const LoopTable& l, std::size_t cap) {
  for (const auto& p : inner_mappings(l, cap))
    if (!is_automorphism(l, p)) return false;
  return true;
}

NKDecomposition is_nk_loop(const LoopTable& l) {
  NKDecomposition out;
  out.parts.reserve(l.order());
  for (Element x = 0; x < l.order(); ++x) {
    bool found = false;
    for (Element u : l.nucleus()) {
      const Element v = l.left_sub(u, x);
      if (l.in_moufang_center(v) && l.add(v, u) == x) {
        out.parts.emplace_back(u, v);
        found = true;
        break;
      }
    }
    if (!found) {
      out.holds = false;
      out.parts.clear();
      out.failing = x;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Subset lift(const Subloop& sub, const Subset& local) {
  Subset out;
  for (Element i : local) out.push_back(sub.embed[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Json subset_json(const Subset& s) { return Json(s); }

}  // namespace

Report verify_nk_facts(const LoopTable& l) {
  Report r;
  const auto nk = is_nk_loop(l);
  r.add("nk_decomposition", nk.holds, nk.failing ? Json{{"x", *nk.failing}} : Json(nullptr));

  const auto mouf = is_moufang(l);
  r.add("moufang", mouf.holds,
        mouf.witness ? Json{{"x", mouf.witness->x}, {"y", mouf.witness->y}, {"z", mouf.witness->z}} : Json(nullptr));

  std::optional<Element> bad3;
  for (Element x = 0; x < l.order() && !bad3; ++x) {
    const Element x3 = l.add(l.add(x, x), x);
    if (!l.in_nucleus(x3)) bad3 = x;
  }
  r.add("three_x_in_nucleus", !bad3, bad3 ? Json{{"x", *bad3}} : Json(nullptr));

  const bool n_normal = is_normal_subloop(l, l.nucleus());
  r.add("nucleus_normal", n_normal);
  if (n_normal) {
    const auto qn = quotient(l, nucleus(l));
    const LoopTable ql(qn.table);
    bool exp3 = true;
    for (Element c = 0; c < ql.order(); ++c)
      exp3 = exp3 && ql.add(ql.add(c, c), c) == ql.zero();
    r.add("quotient_by_nucleus_commutative", is_commutative(ql.base()));
    r.add("quotient_by_nucleus_moufang", is_moufang(ql).holds);
    r.add("quotient_by_nucleus_exponent_3", exp3, Json{{"quotient_order", ql.order()}});
  }

  const bool k_normal = is_normal_subloop(l, l.moufang_center());
  r.add("moufang_center_normal", k_normal);
  if (k_normal) {
    const auto qk = quotient(l, moufang_center(l));
    const auto assoc = is_associative(qk.table);
    r.add("quotient_by_moufang_center_associative", assoc.holds, Json{{"quotient_order", qk.table.order()}});
  }

  const Subloop n_sub = restrict_to(l, l.nucleus());
  const Subloop k_sub = restrict_to(l, l.moufang_center());
  const Subset& z = l.center();
  const auto check_eq = [&](const char* name, const Subset& other) {
    r.add(name, other == z, Json{{"center", subset_json(z)}, {"other", subset_json(other)}});
  };
  check_eq("center_eq_center_of_nucleus", lift(n_sub, n_sub.loop.center()));
  check_eq("center_eq_moufang_center_of_nucleus", lift(n_sub, n_sub.loop.moufang_center()));
  check_eq("center_eq_center_of_moufang_center", lift(k_sub, k_sub.loop.center()));
  check_eq("center_eq_nucleus_of_moufang_center", lift(k_sub, k_sub.loop.nucleus()));

  const Subset comm = commutant(l);
  r.add("moufang_center_eq_commutant", comm == l.moufang_center(),
        Json{{"moufang_center", subset_json(l.moufang_center())}, {"commutant", subset_json(comm)}});
  return r;
}

}  // namespace fqloop
