#include "fqloop/corpus.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <thread>

#include "fqloop/endo.hpp"

namespace fqloop {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw AlgebraError(ErrorKind::ConstructionInvalid, what); }

std::size_t mod(long long a, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

}  // namespace

LoopTable cyclic(std::size_t n) {
  return LoopTable(QuasigroupTable::from_operation(n, [n](Element x, Element y) { return (x + y) % n; }));
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const std::size_t nb = b.order();
  return LoopTable(QuasigroupTable::from_operation(a.order() * nb, [&](Element x, Element y) {
    return a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb);
  }));
}

LoopTable permutation_group(const std::vector<Permutation>& generators) {
  if (generators.empty()) return cyclic(1);
  const std::size_t k = generators.front().size();
  Permutation id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = static_cast<Element>(i);
  auto compose = [k](const Permutation& p, const Permutation& q) {
    Permutation r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = p[q[i]];
    return r;
  };

  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Permutation> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      auto p = compose(elems[i], g);
      if (index.try_emplace(p, static_cast<Element>(elems.size())).second) elems.push_back(std::move(p));
    }
  return LoopTable(QuasigroupTable::from_operation(
      elems.size(), [&](Element x, Element y) { return index.at(compose(elems[x], elems[y])); }));
}

LoopTable quaternion_group() {
  // Units 1, i, j, k as 0..3; element = unit + 4 * sign.
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return LoopTable(QuasigroupTable::from_operation(8, [](Element x, Element y) {
    const unsigned ux = x % 4, uy = y % 4;
    const unsigned s = (x / 4 + y / 4 + sign[ux][uy]) % 2;
    return unit[ux][uy] + 4 * s;
  }));
}

std::vector<NamedLoop> group_tables() {
  std::vector<NamedLoop> out;
  for (std::size_t n = 1; n <= 9; ++n) out.push_back({"z" + std::to_string(n), cyclic(n)});
  const LoopTable z2 = cyclic(2), z3 = cyclic(3);
  const LoopTable s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  out.push_back({"z2xz2", direct_product(z2, z2)});
  out.push_back({"z2xz2xz2", direct_product(direct_product(z2, z2), z2)});
  out.push_back({"z4xz2", direct_product(cyclic(4), z2)});
  out.push_back({"z3xz3", direct_product(z3, z3)});
  out.push_back({"s3", s3});
  out.push_back({"d4", permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}})});
  out.push_back({"q8", quaternion_group()});
  out.push_back({"s3xz3", direct_product(s3, z3)});
  for (const auto& g : out)
    if (!is_associative(g.loop.base()).holds) invalid(g.name + " is not associative");
  return out;
}

LoopTable cml81() {
  auto digit = [](Element x, int i) { return static_cast<long long>(x / (i == 0 ? 27 : i == 1 ? 9 : i == 2 ? 3 : 1) % 3); };
  LoopTable l(QuasigroupTable::from_operation(81, [&](Element x, Element y) {
    const long long a = digit(x, 0), b = digit(x, 1), c = digit(x, 2), d = digit(x, 3);
    const long long a2 = digit(y, 0), b2 = digit(y, 1), c2 = digit(y, 2), d2 = digit(y, 3);
    return mod(a + a2, 3) * 27 + mod(b + b2, 3) * 9 + mod(c + c2, 3) * 3 +
           mod(d + d2 + (a - a2) * (b * c2 - b2 * c), 3);
  }));
  if (!is_commutative(l.base())) invalid("cml81 is not commutative");
  if (!is_moufang(l).holds) invalid("cml81 is not Moufang");
  if (is_associative(l.base()).holds) invalid("cml81 is associative");
  for (Element x = 0; x < 81; ++x)
    if (power(l, x, 3) != l.zero()) invalid("cml81 does not have exponent 3");
  if (!is_nk_loop(l).holds) invalid("cml81 is not an NK-loop");
  return l;
}

LoopTable chein_loop(const LoopTable& group) {
  const std::size_t n = group.order();
  return LoopTable(QuasigroupTable::from_operation(2 * n, [&](Element x, Element y) -> Element {
    const Element g = x % n, h = y % n;
    const bool bx = x >= n, by = y >= n;
    if (!bx && !by) return group.add(g, h);
    if (!bx && by) return group.add(h, g) + n;
    if (bx && !by) return group.add(g, group.neg(h)) + n;
    return group.add(group.neg(h), g);
  }));
}

QuasigroupTable linear_fq(std::size_t n, long long a, long long b, long long c) {
  return QuasigroupTable::from_operation(n, [&](Element x, Element y) {
    return mod(a * static_cast<long long>(x) + b * static_cast<long long>(y) + c, n);
  });
}

std::vector<ArithmeticForm> enumerate_forms(const LoopTable& l, std::size_t cap, std::size_t node_cap) {
  if (!is_nk_loop(l).holds) throw AlgebraError(ErrorKind::NotNKLoop, "enumerate_forms needs an NK-loop");
  const EndoContext ctx(l);
  const auto autos = ctx.condition_f_automorphisms(node_cap);
  std::vector<ArithmeticForm> out;
  for (const auto& f : autos)
    for (const auto& g : autos) {
      if (endo_compose(f, g) != endo_compose(g, f)) continue;
      for (Element e : l.nucleus()) {
        if (out.size() >= cap) return out;
        out.push_back(ArithmeticForm{l, f, g, e});
      }
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Filler {
  std::size_t n;
  std::vector<Element> cells;
  std::vector<std::uint32_t> row_used, col_used;

  explicit Filler(std::size_t n_) : n(n_), cells(n_ * n_, kNoElement), row_used(n_), col_used(n_) {}

  void place(std::size_t pos, Element v) {
    cells[pos] = v;
    row_used[pos / n] |= 1u << v;
    col_used[pos % n] |= 1u << v;
  }
  void clear(std::size_t pos) {
    const Element v = cells[pos];
    row_used[pos / n] &= ~(1u << v);
    col_used[pos % n] &= ~(1u << v);
    cells[pos] = kNoElement;
  }

  /// Fills cells [pos, stop) in order, skipping preset ones; calls visit on
  /// each completion. Returns false once visit has asked to stop.
  template <class Visit>
  bool run(std::size_t pos, std::size_t stop, Visit& visit) {
    while (pos < stop && cells[pos] != kNoElement) ++pos;
    if (pos == stop) return visit(*this);
    const std::uint32_t used = row_used[pos / n] | col_used[pos % n];
    for (Element v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      place(pos, v);
      const bool go = run(pos + 1, stop, visit);
      clear(pos);
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_latin_square(std::size_t n, const std::function<bool(const QuasigroupTable&)>& visit) {
  if (n == 0) return;
  Filler f(n);
  auto cb = [&](Filler& s) { return visit(QuasigroupTable(n, s.cells)); };
  f.run(0, n * n, cb);
}

std::vector<PointedFQ> FSearchResult::pointed() const {
  std::vector<PointedFQ> out;
  for (const auto& q : f_quasigroups)
    for (Element p = 0; p < q.order(); ++p) out.push_back(PointedFQ{q, p});
  return out;
}

FSearchResult scan_f_quasigroups(std::size_t n, unsigned jobs) {
  if (n == 0 || n > 5) throw AlgebraError(ErrorKind::SearchTooLarge, "Latin square scan supports orders 1 to 5");
  const std::size_t depth = std::min(2 * n, n * n);

  std::vector<std::vector<Element>> prefixes;
  {
    Filler f(n);
    auto collect = [&](Filler& s) {
      prefixes.push_back(s.cells);
      return true;
    };
    f.run(0, depth, collect);
  }

  struct Part {
    std::size_t squares = 0;
    std::vector<QuasigroupTable> found;
  };
  std::vector<Part> parts(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      Filler f(n);
      for (std::size_t pos = 0; pos < depth; ++pos) f.place(pos, prefixes[i][pos]);
      Part& part = parts[i];
      auto cb = [&](Filler& s) {
        ++part.squares;
        QuasigroupTable q(n, s.cells);
        if (is_f_quasigroup(q).holds) part.found.push_back(std::move(q));
        return true;
      };
      f.run(depth, n * n, cb);
    }
  };
  const unsigned threads = std::max(1u, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  FSearchResult out;
  for (auto& p : parts) {
    out.latin_squares += p.squares;
    for (auto& q : p.found) out.f_quasigroups.push_back(std::move(q));
  }
  return out;
}

std::vector<PointedFQ> search_f_quasigroups(std::size_t n, unsigned jobs) {
  return scan_f_quasigroups(n, jobs).pointed();
}

std::optional<LoopTable> first_loop_where(std::size_t n, const std::function<bool(const LoopTable&)>& pred) {
  if (n == 0 || n > 32) throw AlgebraError(ErrorKind::SearchTooLarge, "reduced square search supports orders 1 to 32");
  Filler f(n);
  for (Element i = 0; i < n; ++i) {
    f.place(i, i);
    if (i > 0) f.place(i * n, i);
  }
  std::optional<LoopTable> found;
  auto cb = [&](Filler& s) {
    LoopTable l(QuasigroupTable(n, s.cells));
    if (!pred(l)) return true;
    found.emplace(std::move(l));
    return false;
  };
  f.run(0, n * n, cb);
  return found;
}

// ---------------------------------------------------------------------------

std::vector<NamedQuasigroup> f_quasigroup_corpus(bool include_slow) {
  std::vector<NamedQuasigroup> out;
  for (const auto& g : group_tables()) out.push_back({g.name, g.loop.base()});
  out.push_back({"z5-2x3y", linear_fq(5, 2, 3, 0)});
  out.push_back({"z7-3x5y2", linear_fq(7, 3, 5, 2)});
  out.push_back({"z9-4x7y", linear_fq(9, 4, 7, 0)});
  out.push_back({"z8-3x5y1", linear_fq(8, 3, 5, 1)});

  const LoopTable s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  const Endo id = identity_endo(s3.order());
  out.push_back({"s3-shift3", build_fq(ArithmeticForm{s3, id, id, 3})});

  if (include_slow) {
    const LoopTable l = cml81();
    const Endo neg = endo_neg(l, identity_endo(l.order()));
    const Element e = l.nucleus().back();
    out.push_back({"cml81-neg", build_fq(ArithmeticForm{l, neg, neg, e})});
  }
  return out;
}

std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& name, const QuasigroupTable& q, std::optional<Element> point) {
    const auto path = dir / (name + ".tbl");
    std::ofstream os(path);
    os << "# " << name << "\n" << serialize_table(q, point);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    written.push_back(path);
  };
  for (const auto& g : group_tables()) write(g.name, g.loop.base(), std::nullopt);
  write("cml81", cml81().base(), std::nullopt);
  write("chein-s3", chein_loop(permutation_group({{1, 0, 2}, {1, 2, 0}})).base(), std::nullopt);
  write("z5-2x3y", linear_fq(5, 2, 3, 0), Element{0});
  write("z7-3x5y2", linear_fq(7, 3, 5, 2), Element{0});
  return written;
}

}  // namespace fqloop
