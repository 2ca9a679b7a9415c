#include "dynrefl/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace dynrefl {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("EmptyCarrier", "carrier has no elements");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw Error("DuplicateLabel", "duplicate label '" + l + "'", {l});
}

std::optional<Index> Carrier::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index Carrier::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw Error("UnknownLabel", "unknown label '" + label + "'", {label});
}

namespace {

void check_square(std::size_t n, const std::vector<Index>& table) {
  if (table.size() != n * n)
    throw Error("SizeMismatch", "table must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
  for (Index v : table)
    if (v >= n) throw Error("SizeMismatch", "table entry out of range");
}

}  // namespace

LeftQuasigroup LeftQuasigroup::validate(std::vector<std::string> labels,
                                        std::vector<Index> table, Index unit) {
  LeftQuasigroup q;
  q.carrier_ = Carrier(std::move(labels));
  const std::size_t n = q.carrier_.size();
  check_square(n, table);
  if (unit >= n) throw Error("SizeMismatch", "unit out of range");
  q.table_ = std::move(table);
  q.unit_ = unit;
  q.ldiv_.assign(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    std::vector<bool> hit(n, false);
    for (Index b = 0; b < n; ++b) {
      Index c = q.table_[a * n + b];
      if (hit[c])
        throw Error("RowNotPermutation",
                    "row '" + q.carrier_.label(a) + "' is not a permutation",
                    {q.carrier_.label(a)});
      hit[c] = true;
      q.ldiv_[a * n + c] = b;
    }
  }
  for (Index a = 0; a < n; ++a)
    if (q.mul(unit, a) != a || q.mul(a, unit) != a)
      throw Error("UnitLawViolated",
                  "unit law fails at '" + q.carrier_.label(a) + "'",
                  {q.carrier_.label(a)});
  return q;
}

std::optional<std::array<Index, 3>> LeftQuasigroup::associativity_witness() const {
  const Index n = static_cast<Index>(size());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return std::array{a, b, c};
  return std::nullopt;
}

FiniteGroup FiniteGroup::validate(std::vector<std::string> labels,
                                  std::vector<Index> table) {
  FiniteGroup g;
  g.carrier_ = Carrier(std::move(labels));
  const Index n = static_cast<Index>(g.carrier_.size());
  check_square(n, table);
  g.table_ = std::move(table);
  const auto& L = g.carrier_;

  std::optional<Index> unit;
  for (Index u = 0; u < n && !unit; ++u) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = g.mul(u, a) == a && g.mul(a, u) == a;
    if (ok) unit = u;
  }
  if (!unit) throw Error("NoUnit", "no two-sided unit");
  g.unit_ = *unit;

  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error("NotAssociative",
                      "(" + L.label(a) + "," + L.label(b) + "," + L.label(c) +
                          ") violates associativity",
                      {L.label(a), L.label(b), L.label(c)});

  g.inv_.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    bool found = false;
    for (Index b = 0; b < n && !found; ++b)
      if (g.mul(a, b) == g.unit_ && g.mul(b, a) == g.unit_) {
        g.inv_[a] = b;
        found = true;
      }
    if (!found)
      throw Error("NoInverse", "'" + L.label(a) + "' has no inverse", {L.label(a)});
  }
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < size(); ++a)
    for (Index b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::string> cycles_to_word(const std::string& s, unsigned n) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 1u);
  if (s == "id" || s == "e" || s == "()") goto done;
  {
    std::size_t i = 0;
    if (s.empty()) return std::nullopt;
    std::vector<bool> used(n + 1, false);
    while (i < s.size()) {
      if (s[i] != '(') return std::nullopt;
      ++i;
      std::vector<unsigned> cyc;
      while (i < s.size() && s[i] != ')') {
        if (s[i] == ' ' || s[i] == ',') { ++i; continue; }
        if (s[i] < '1' || s[i] > '9') return std::nullopt;
        unsigned v = static_cast<unsigned>(s[i] - '0');
        if (v > n || used[v]) return std::nullopt;
        used[v] = true;
        cyc.push_back(v);
        ++i;
      }
      if (i >= s.size()) return std::nullopt;
      ++i;
      for (std::size_t k = 0; k < cyc.size(); ++k)
        img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
  }
done:
  std::string w;
  for (unsigned v : img) w += static_cast<char>('0' + v);
  return w;
}

Index FiniteGroup::resolve(const std::string& label) const {
  if (auto i = carrier_.find(label)) return *i;
  if (sym_degree_ > 0)
    if (auto w = cycles_to_word(label, sym_degree_))
      if (auto i = carrier_.find(*w)) return *i;
  throw Error("UnknownLabel", "unknown group element '" + label + "'", {label});
}

FiniteGroup symmetric_group(unsigned n) {
  if (n == 0 || n > 9) throw Error("SizeMismatch", "symmetric degree must be 1..9");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t N = perms.size();
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string w;
    for (unsigned v : q) w += static_cast<char>('1' + v);
    labels.push_back(w);
  }
  auto index_of = [&](const std::vector<unsigned>& q) {
    return static_cast<Index>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Index> table(N * N);
  std::vector<unsigned> r(n);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      for (unsigned i = 0; i < n; ++i) r[i] = perms[a][perms[b][i]];
      table[a * N + b] = index_of(r);
    }
  FiniteGroup g = FiniteGroup::validate(std::move(labels), std::move(table));
  g.sym_degree_ = n;
  return g;
}

FiniteGroup cyclic_group(unsigned n) {
  if (n == 0) throw Error("EmptyCarrier", "cyclic group of order 0");
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Index> table(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteGroup::validate(std::move(labels), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const std::size_t na = A.size(), nb = B.size(), N = na * nb;
  std::vector<std::string> labels;
  for (Index a = 0; a < na; ++a)
    for (Index b = 0; b < nb; ++b)
      labels.push_back("(" + A.carrier().label(a) + "," + B.carrier().label(b) + ")");
  std::vector<Index> table(N * N);
  for (Index x = 0; x < N; ++x)
    for (Index y = 0; y < N; ++y)
      table[x * N + y] = static_cast<Index>(
          A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb));
  return FiniteGroup::validate(std::move(labels), std::move(table));
}

FiniteGroup build_named_group(const GroupSpec& spec) {
  return std::visit(
      [](const auto& k) -> FiniteGroup {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ExplicitGroup>)
          return FiniteGroup::validate(k.labels, k.table);
        else if constexpr (std::is_same_v<T, SymmetricGroup>)
          return symmetric_group(k.n);
        else if constexpr (std::is_same_v<T, CyclicGroup>)
          return cyclic_group(k.n);
        else
          return direct_product(build_named_group(*k.left),
                                build_named_group(*k.right));
      },
      spec.kind);
}

PairedStructure PairedStructure::validate(LeftQuasigroup L, FiniteGroup G,
                                          std::vector<Index> pi) {
  const std::size_t n = L.size();
  if (G.size() != n)
    throw Error("SizeMismatch", "|L| = " + std::to_string(n) + " but |G| = " +
                                    std::to_string(G.size()));
  if (pi.size() != n) throw Error("SizeMismatch", "pi must map every element of L");
  PairedStructure P;
  P.pi_inv_.assign(n, static_cast<Index>(n));
  for (Index a = 0; a < n; ++a) {
    if (pi[a] >= n || P.pi_inv_[pi[a]] != n)
      throw Error("NotABijection", "pi is not a bijection at '" +
                                       L.carrier().label(a) + "'",
                  {L.carrier().label(a)});
    P.pi_inv_[pi[a]] = a;
  }
  P.lambda0_ = P.pi_inv_[G.unit()];
  P.L_ = std::move(L);
  P.G_ = std::move(G);
  P.pi_ = std::move(pi);
  return P;
}

void validate_endomorphism(const FiniteGroup& G, const GroupEndomorphism& f) {
  const Index n = static_cast<Index>(G.size());
  if (f.map.size() != n) throw Error("SizeMismatch", "endomorphism must be total");
  for (Index v : f.map)
    if (v >= n) throw Error("SizeMismatch", "endomorphism image out of range");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (f.map[G.mul(a, b)] != G.mul(f.map[a], f.map[b]))
        throw Error("NotAHomomorphism",
                    "f(ab) != f(a)f(b) at (" + G.carrier().label(a) + "," +
                        G.carrier().label(b) + ")",
                    {G.carrier().label(a), G.carrier().label(b)});
}

std::vector<GroupEndomorphism> enumerate_endomorphisms(const FiniteGroup& G,
                                                       std::size_t cap) {
  const Index n = static_cast<Index>(G.size());
  if (n > cap)
    throw Error("CapExceeded", "|G| = " + std::to_string(n) +
                                   " exceeds endomorphism cap " + std::to_string(cap));

  // Greedy generating set: add the least element outside the current span.
  std::vector<Index> gens;
  std::vector<bool> span(n, false);
  span[G.unit()] = true;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (Index a = 0; a < n; ++a)
        if (span[a])
          for (Index g : gens)
            if (!span[G.mul(a, g)]) span[G.mul(a, g)] = grew = true;
    }
  };
  for (Index a = 0; a < n; ++a)
    if (!span[a]) {
      gens.push_back(a);
      close();
    }

  std::vector<GroupEndomorphism> out;
  std::vector<Index> imgs(gens.size(), 0);
  while (true) {
    // Extend generator images along words; reject on conflict.
    std::vector<Index> map(n, n);
    map[G.unit()] = G.unit();
    std::vector<Index> queue{G.unit()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      Index h = queue[q];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        Index hg = G.mul(h, gens[i]);
        Index v = G.mul(map[h], imgs[i]);
        if (map[hg] == n) {
          map[hg] = v;
          queue.push_back(hg);
        } else if (map[hg] != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      for (Index a = 0; a < n && ok; ++a)
        for (Index b = 0; b < n && ok; ++b)
          ok = map[G.mul(a, b)] == G.mul(map[a], map[b]);
      if (ok) out.push_back({map});
    }
    std::size_t i = imgs.size();
    while (i > 0 && ++imgs[i - 1] == n) imgs[--i] = 0;
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.map < b.map; });
  return out;
}

}  // namespace dynrefl
