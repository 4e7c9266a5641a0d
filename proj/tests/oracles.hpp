#pragma once

// Brute-force reference implementations used to cross-check the library.
// They read only raw cell vectors and share no code with src/.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Cells = std::vector<std::uint32_t>;

struct Table {
  std::size_t n;
  Cells cells;

  std::uint32_t op(std::uint32_t x, std::uint32_t y) const { return cells[x * n + y]; }
};

/// Both F-laws, literally: x·(y·z) = (x·y)·(a·z) with x·a = x, and
/// (z·y)·x = (z·b)·(y·x) with b·x = x, with a and b found by search.
inline bool literal_f_quasigroup(const Table& t) {
  const auto n = static_cast<std::uint32_t>(t.n);
  std::vector<std::uint32_t> a(n), b(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t c = 0; c < n; ++c) {
      if (t.op(x, c) == x) a[x] = c;
      if (t.op(c, x) == x) b[x] = c;
    }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        if (t.op(x, t.op(y, z)) != t.op(t.op(x, y), t.op(a[x], z))) return false;
        if (t.op(t.op(z, y), x) != t.op(t.op(z, b[x]), t.op(y, x))) return false;
      }
  return true;
}

/// Every map f: Q -> Q with f(x·y) = f(x)·f(y), in lexicographic order.
inline std::vector<Cells> all_map_endomorphisms(const Table& t) {
  const auto n = static_cast<std::uint32_t>(t.n);
  std::vector<Cells> out;
  Cells f(n, 0);
  while (true) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        if (f[t.op(x, y)] != t.op(f[x], f[y])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(f);
    std::uint32_t i = n;
    while (i > 0) {
      --i;
      if (++f[i] < n) break;
      f[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

inline bool associates(const Table& t, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  return t.op(t.op(x, y), z) == t.op(x, t.op(y, z));
}

/// {a : a associates in all three positions}.
inline std::vector<std::uint32_t> nucleus(const Table& t) {
  const auto n = static_cast<std::uint32_t>(t.n);
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    bool in = true;
    for (std::uint32_t x = 0; x < n && in; ++x)
      for (std::uint32_t y = 0; y < n && in; ++y)
        in = associates(t, a, x, y) && associates(t, x, a, y) && associates(t, x, y, a);
    if (in) out.push_back(a);
  }
  return out;
}

/// {a : (a+a)+(x+y) = (a+x)+(a+y)}.
inline std::vector<std::uint32_t> moufang_center(const Table& t) {
  const auto n = static_cast<std::uint32_t>(t.n);
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    bool in = true;
    for (std::uint32_t x = 0; x < n && in; ++x)
      for (std::uint32_t y = 0; y < n && in; ++y) in = t.op(t.op(a, a), t.op(x, y)) == t.op(t.op(a, x), t.op(a, y));
    if (in) out.push_back(a);
  }
  return out;
}

/// {a : xa·yx = xy·ax}.
inline std::vector<std::uint32_t> m_set(const Table& t) {
  const auto n = static_cast<std::uint32_t>(t.n);
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    bool in = true;
    for (std::uint32_t x = 0; x < n && in; ++x)
      for (std::uint32_t y = 0; y < n && in; ++y) in = t.op(t.op(x, a), t.op(y, x)) == t.op(t.op(x, y), t.op(a, x));
    if (in) out.push_back(a);
  }
  return out;
}

/// Every reduced Latin square (first row and column 0..n-1) of order n.
inline void for_each_reduced_square(std::size_t n, const std::function<void(const Table&)>& visit) {
  Table t{n, Cells(n * n, n)};
  for (std::uint32_t i = 0; i < n; ++i) t.cells[i] = t.cells[i * n] = i;
  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    while (pos < n * n && t.cells[pos] != n) ++pos;
    if (pos == n * n) {
      visit(t);
      return;
    }
    const std::size_t r = pos / n, c = pos % n;
    for (std::uint32_t v = 0; v < n; ++v) {
      bool clash = false;
      for (std::size_t k = 0; k < n && !clash; ++k)
        clash = (k < c && t.cells[r * n + k] == v) || (k < r && t.cells[k * n + c] == v) ||
                (k == 0 && (t.cells[r * n] == v || t.cells[c] == v));
      if (clash) continue;
      t.cells[pos] = v;
      fill(pos + 1);
      t.cells[pos] = static_cast<std::uint32_t>(n);
    }
  };
  fill(0);
}

}  // namespace oracle
