#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lockit/element_set.hpp"
#include "lockit/group.hpp"

namespace lockit {

using Word = std::vector<Element>;

std::string format_word(std::span<const Element> w);

// A partial group: elements 0..size()-1 with 0 the identity, an involutory inversion, and a
// product defined on the domain D of words. D is decided by a predicate, never stored.
class PartialGroup {
 public:
  virtual ~PartialGroup() = default;

  virtual std::size_t size() const = 0;
  Element identity() const { return 0; }
  virtual Element invert(Element x) const = 0;
  virtual bool in_domain(std::span<const Element> w) const = 0;
  // Throws Error(domain) when w is not in D.
  virtual Element product(std::span<const Element> w) const = 0;
  virtual std::string label(Element x) const { return std::to_string(x); }

  std::optional<Element> try_product(std::span<const Element> w) const;
  // x^g = Π(g⁻¹, x, g) when defined.
  std::optional<Element> conjugate(Element x, Element g) const;
  Word invert_word(std::span<const Element> w) const;
  ElementSet all() const { return ElementSet::full(size()); }
};

// A FiniteGroup with D = W(G) and the multivariable product.
class GroupView final : public PartialGroup {
 public:
  explicit GroupView(const FiniteGroup& g) : g_(&g) {}
  std::size_t size() const override { return g_->order(); }
  Element invert(Element x) const override { return g_->inv(x); }
  bool in_domain(std::span<const Element>) const override { return true; }
  Element product(std::span<const Element> w) const override;
  std::string label(Element x) const override { return g_->label(x); }

 private:
  const FiniteGroup* g_;
};

// Elements {1, a, b} = {0, 1, 2}; D is the set of words whose non-identity entries alternate.
class FreeOneGenerator final : public PartialGroup {
 public:
  static constexpr Element one = 0;
  static constexpr Element a = 1;
  static constexpr Element b = 2;

  std::size_t size() const override { return 3; }
  Element invert(Element x) const override { return x == one ? one : (x == a ? b : a); }
  bool in_domain(std::span<const Element> w) const override;
  Element product(std::span<const Element> w) const override;
  std::string label(Element x) const override;
};

// Full-domain structure given by a binary table, with the product a left fold. Used to
// exhibit axiom violations when the table is not associative.
class TablePartialGroup final : public PartialGroup {
 public:
  TablePartialGroup(std::size_t n, std::vector<Element> table, std::vector<Element> inverse);
  std::size_t size() const override { return n_; }
  Element invert(Element x) const override { return inverse_[x]; }
  bool in_domain(std::span<const Element>) const override { return true; }
  Element product(std::span<const Element> w) const override;
  void set(Element x, Element y, Element value) { table_[x * n_ + y] = value; }

 private:
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

struct Violation {
  std::string rule;  // e.g. "substitution", "cancellation"
  Word word;
  std::string detail;
};

struct AxiomOptions {
  std::size_t max_len = 6;
  // Upper bound on words enumerated per length; lengths beyond it are reported as uncovered.
  std::size_t word_budget = 4'000'000;
  std::size_t max_recorded = 25;
};

struct AxiomReport {
  std::string method;             // "all-words" or "word-states"
  std::size_t max_len = 0;        // requested bound
  std::size_t covered_len = 0;    // every word of length <= covered_len was checked
  std::size_t checked = 0;        // words (or state tuples) examined
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first max_recorded

  bool complete() const { return covered_len >= max_len; }
  bool passed() const { return violation_count == 0; }
  void add(Violation v, std::size_t cap) {
    ++violation_count;
    if (violations.size() < cap) violations.push_back(std::move(v));
  }
};

// The partial group axioms and their derived product laws, tested over every word of length
// <= max_len (within the word budget). Localities are routed to the word-state check, which is
// exact at the same bound.
AxiomReport check_axioms(const PartialGroup& pg, const AxiomOptions& options = {});
// Word-by-word enumeration, for any PartialGroup.
AxiomReport check_axioms_all_words(const PartialGroup& pg, const AxiomOptions& options = {});

// Smallest subset containing X and 1 closed under inversion and defined binary products.
ElementSet generated_partial_subgroup(const PartialGroup& pg, const ElementSet& x);
bool is_partial_subgroup(const PartialGroup& pg, const ElementSet& h);
bool is_partial_normal_in(const PartialGroup& pg, const ElementSet& h);

struct PartialHomomorphism {
  const PartialGroup* source = nullptr;
  const PartialGroup* target = nullptr;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
  Word apply(std::span<const Element> w) const;
};

struct HomomorphismReport {
  std::size_t covered_len = 0;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  bool passed() const { return violation_count == 0; }
};

// (H1) Dβ* ⊆ D' and (H2) Π(w)β = Π'(wβ*) over domain words up to max_len.
HomomorphismReport check_homomorphism(const PartialHomomorphism& phi, const AxiomOptions& options = {});
ElementSet kernel(const PartialHomomorphism& phi);
// Bijective and Dβ* = D' (both directions tested up to max_len).
bool is_isomorphism(const PartialHomomorphism& phi, const AxiomOptions& options = {});

}  // namespace lockit
