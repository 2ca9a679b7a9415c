#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dynrefl/error.hpp"

namespace dynrefl {

using Index = std::uint32_t;

/// Ordered list of distinct element names. Elements are addressed by index.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(const std::string& label) const;
  /// Like find, but throws UnknownLabel.
  Index index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
};

class LeftQuasigroup {
 public:
  /// table is row-major n*n: table[a*n+b] = a·b.
  static LeftQuasigroup validate(std::vector<std::string> labels,
                                 std::vector<Index> table, Index unit);

  std::size_t size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  Index unit() const { return unit_; }
  Index mul(Index a, Index b) const { return table_[a * size() + b]; }
  /// The unique b with a·b = c.
  Index ldiv(Index a, Index c) const { return ldiv_[a * size() + c]; }
  const std::vector<Index>& table() const { return table_; }

  /// Least (a,b,c) with (ab)c != a(bc), scanning a, then b, then c.
  std::optional<std::array<Index, 3>> associativity_witness() const;

 private:
  Carrier carrier_;
  std::vector<Index> table_;
  std::vector<Index> ldiv_;
  Index unit_ = 0;
};

class FiniteGroup {
 public:
  static FiniteGroup validate(std::vector<std::string> labels,
                              std::vector<Index> table);

  std::size_t size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  Index unit() const { return unit_; }
  Index mul(Index a, Index b) const { return table_[a * size() + b]; }
  Index inv(Index a) const { return inv_[a]; }
  /// a b^-1 c
  Index mu1(Index a, Index b, Index c) const { return mul(mul(a, inv(b)), c); }
  bool is_abelian() const;
  const std::vector<Index>& table() const { return table_; }

  /// Degree n when built as symmetric(n); enables cycle-notation input.
  unsigned symmetric_degree() const { return sym_degree_; }
  /// Accepts canonical labels, and for symmetric groups also cycle notation
  /// such as "(123)", "(12)(34)", "()", "id" or "e".
  Index resolve(const std::string& label) const;

 private:
  friend FiniteGroup symmetric_group(unsigned);
  Carrier carrier_;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  Index unit_ = 0;
  unsigned sym_degree_ = 0;
};

struct GroupSpec;
struct ExplicitGroup {
  std::vector<std::string> labels;
  std::vector<Index> table;
};
struct SymmetricGroup { unsigned n; };
struct CyclicGroup { unsigned n; };
struct ProductGroup {
  std::shared_ptr<GroupSpec> left, right;
};
struct GroupSpec {
  std::variant<ExplicitGroup, SymmetricGroup, CyclicGroup, ProductGroup> kind;
};

/// Elements ordered lexicographically by one-line image word ("123" first).
/// The product pq applies q first.
FiniteGroup symmetric_group(unsigned n);
FiniteGroup cyclic_group(unsigned n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup build_named_group(const GroupSpec& spec);

/// Convert cycle notation to a one-line image word of degree n.
std::optional<std::string> cycles_to_word(const std::string& cycles, unsigned n);

class PairedStructure {
 public:
  static PairedStructure validate(LeftQuasigroup L, FiniteGroup G,
                                  std::vector<Index> pi);

  const LeftQuasigroup& L() const { return L_; }
  const FiniteGroup& G() const { return G_; }
  std::size_t size() const { return L_.size(); }
  Index pi(Index a) const { return pi_[a]; }
  Index pi_inv(Index g) const { return pi_inv_[g]; }
  Index lambda0() const { return lambda0_; }
  const std::vector<Index>& pi_table() const { return pi_; }

  // Shorthands used throughout the formulas.
  Index mul(Index a, Index b) const { return L_.mul(a, b); }
  Index ldiv(Index a, Index c) const { return L_.ldiv(a, c); }
  Index e() const { return L_.unit(); }

 private:
  LeftQuasigroup L_;
  FiniteGroup G_;
  std::vector<Index> pi_, pi_inv_;
  Index lambda0_ = 0;
};

using PairedRef = std::shared_ptr<const PairedStructure>;

struct GroupEndomorphism {
  std::vector<Index> map;
  bool operator==(const GroupEndomorphism&) const = default;
};

/// Throws NotAHomomorphism with the least failing pair.
void validate_endomorphism(const FiniteGroup& G, const GroupEndomorphism& f);

/// All endomorphisms in lexicographic order of image tuples.
std::vector<GroupEndomorphism> enumerate_endomorphisms(const FiniteGroup& G,
                                                       std::size_t cap = 12);

}  // namespace dynrefl
