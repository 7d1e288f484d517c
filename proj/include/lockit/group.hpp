#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lockit/element_set.hpp"
#include "lockit/error.hpp"

namespace lockit {

// Size caps. Configuration values; the CLI overrides max_group_order from LOCKIT_MAX_ORDER.
struct Limits {
  std::size_t max_group_order = 10000;
  std::size_t max_subgroup_enumeration_order = 1000;
};

// Zero-based image list; composition is left-to-right (apply `a`, then `b`).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  // Parses cycle notation over {1..degree}, e.g. "(1 2)(3 4 5)" or "()".
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  std::string to_cycles() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// A finite group materialized as a full multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<Element> table, std::vector<std::string> labels,
              std::vector<Permutation> permutations = {});

  std::size_t order() const { return order_; }
  std::size_t universe() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  // x^g = g^-1 x g
  Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }
  Element element_order(Element a) const;

  const std::string& label(Element e) const { return labels_[e]; }
  bool has_permutations() const { return !permutations_.empty(); }
  const Permutation& permutation(Element e) const { return permutations_[e]; }
  std::size_t degree() const { return permutations_.empty() ? 0 : permutations_.front().degree(); }
  std::optional<Element> find(const Permutation& p) const;

  ElementSet all() const { return ElementSet::full(order_); }

  // Exhaustive associativity/identity/inverse check; intended for order <= 500.
  bool verify_axioms() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Permutation> permutations_;
};

// A subgroup, identified by its member set.
struct Subgroup {
  ElementSet members;

  std::size_t order() const { return members.count(); }
  bool contains(Element e) const { return members.contains(e); }
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup& o) const { return members <=> o.members; }
};

// Anything with a (total on the members in question) multiplication table.
template <class G>
concept GroupTable = requires(const G& g, Element a) {
  { g.mul(a, a) } -> std::convertible_to<Element>;
  { g.inv(a) } -> std::convertible_to<Element>;
  { g.universe() } -> std::convertible_to<std::size_t>;
};

FiniteGroup group_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                    const Limits& limits = {});
// Convenience: generators in cycle notation.
FiniteGroup group_from_cycles(std::size_t degree, std::span<const std::string> generators,
                              const Limits& limits = {});

Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& seed);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& p, Element by);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& p);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& p);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {});
std::vector<Subgroup> p_subgroups(const FiniteGroup& g, unsigned p, const Limits& limits = {});
std::vector<Subgroup> sylow_p(const FiniteGroup& g, unsigned p, const Limits& limits = {});

bool is_prime(unsigned p);
bool is_p_power(std::size_t n, unsigned p);
std::size_t p_part(std::size_t n, unsigned p);

}  // namespace lockit
