#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lockit/group.hpp"
#include "lockit/partial_group.hpp"

namespace lockit {

// Subset of S, as a bitmask over the positions of S's elements (|S| <= 64).
using Mask = std::uint64_t;

enum class DeltaMode { explicit_list, overclosure, all_nonidentity, all };
const char* to_string(DeltaMode mode);

struct DeltaSpec {
  DeltaMode mode = DeltaMode::all_nonidentity;
  std::vector<ElementSet> seeds;  // ambient element sets; used by explicit_list and overclosure
};

inline constexpr std::int32_t kUndefined = -1;

// A locality (L, Δ, S) given by tables over local ids 0..n-1, with 0 the identity.
//
// Every locality carries an ambient finite group G together with a representative map
// rep: L -> G and a fiber map G -> L (partial). For localities built from G, rep is the
// inclusion. For quotients, rep(Nf) = rep(f) for the canonical ↑-maximal f, and the product
// of a domain word is fiber(rep(w_1)...rep(w_n)), which is the block of the product of the
// lifted word.
class Locality final : public PartialGroup {
 public:
  struct Tables {
    std::string name;
    std::string kind;  // ambient, restriction, normalizer, expansion, ns, quotient, sublocality
    unsigned prime = 2;
    std::shared_ptr<const FiniteGroup> ambient;
    std::vector<Element> rep;
    std::vector<std::int32_t> fiber;  // indexed by ambient element
    std::vector<Element> inverse;
    std::vector<std::string> labels;
    std::vector<Element> s_elements;  // local ids of S, ascending; position = index
    std::vector<Mask> delta;
    std::vector<std::uint8_t> letter;  // n x |S|: image position of s under conjugation, or 0xFF
    DeltaMode delta_mode = DeltaMode::explicit_list;
    bool auto_closed = false;
  };

  explicit Locality(Tables t);

  // PartialGroup
  std::size_t size() const override { return n_; }
  Element invert(Element x) const override { return t_.inverse[x]; }
  bool in_domain(std::span<const Element> w) const override;
  Element product(std::span<const Element> w) const override;
  std::string label(Element x) const override { return t_.labels[x]; }

  const std::string& name() const { return t_.name; }
  const std::string& kind() const { return t_.kind; }
  unsigned prime() const { return t_.prime; }
  DeltaMode delta_mode() const { return t_.delta_mode; }
  bool auto_closed() const { return t_.auto_closed; }

  // Ambient data.
  const FiniteGroup& ambient() const { return *t_.ambient; }
  std::shared_ptr<const FiniteGroup> ambient_ptr() const { return t_.ambient; }
  Element rep(Element x) const { return t_.rep[x]; }
  std::optional<Element> fiber(Element a) const {
    const auto v = t_.fiber[a];
    return v < 0 ? std::nullopt : std::optional<Element>(static_cast<Element>(v));
  }

  // S and its subgroups.
  std::size_t s_order() const { return k_; }
  const std::vector<Element>& s_elements() const { return t_.s_elements; }
  const ElementSet& s_set() const { return s_set_; }
  int s_pos(Element x) const { return s_pos_[x]; }
  Mask full_mask() const { return full_; }
  Mask trivial_mask() const { return Mask{1} << s_pos_[0]; }
  ElementSet to_set(Mask m) const;
  Mask to_mask(const ElementSet& x) const;  // requires x ⊆ S
  const std::vector<Mask>& s_subgroups() const { return subgroups_; }  // canonical order
  bool is_s_subgroup(Mask m) const { return subgroup_index_.contains(m); }
  std::size_t subgroup_index(Mask m) const;
  // Multiplication inside S, by position.
  int s_mul(int a, int b) const { return s_mul_[static_cast<std::size_t>(a) * k_ + b]; }
  int s_inv(int a) const { return s_inv_[a]; }

  // Δ.
  bool in_delta(Mask m) const { return delta_set_.contains(m); }
  const std::vector<Mask>& delta() const { return t_.delta; }

  // Conjugation maps.
  int letter(Element g, int pos) const { return t_.letter[static_cast<std::size_t>(g) * k_ + pos]; }
  Mask s_g_mask(Element g) const { return s_g_[g]; }
  Mask s_w_mask(std::span<const Element> w) const;
  // X^g for X ⊆ S_g.
  Mask image(Mask x, Element g) const;
  // X^w for X ⊆ S_w.
  Mask image(Mask x, std::span<const Element> w) const;

  // Checked accessors returning element sets.
  ElementSet s_g(Element g) const;
  ElementSet s_w(std::span<const Element> w) const;

  // Binary product table: kUndefined if (x,y) ∉ D.
  std::int32_t mul(Element x, Element y) const { return mul_[static_cast<std::size_t>(x) * n_ + y]; }
  // x^g = Π(g⁻¹,x,g), or kUndefined.
  std::int32_t conj(Element x, Element g) const { return conj_[static_cast<std::size_t>(x) * n_ + g]; }
  // Pairs (x,y) ∈ D whose ambient product falls outside the carrier; nonzero only for
  // hand-built triples that are not localities.
  std::size_t escaping_products() const { return escaping_; }

  // N_L(P) = {g : P ≤ S_g, P^g = P} and N_L(P,Q) = {g : P ≤ S_g, P^g ≤ Q}, for P,Q ≤ S.
  ElementSet normalizer(Mask p) const;
  ElementSet transporter(Mask p, Mask q) const;
  // Subsets of L on which the binary product is total and closed form subgroups.
  bool is_subgroup(const ElementSet& h) const;

  const Tables& tables() const { return t_; }

 private:
  Tables t_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  Mask full_ = 0;
  ElementSet s_set_;
  std::vector<int> s_pos_;
  std::vector<int> s_mul_;
  std::vector<int> s_inv_;
  std::vector<Mask> subgroups_;
  std::unordered_map<Mask, std::size_t> subgroup_index_;
  std::unordered_set<Mask> delta_set_;
  std::vector<Mask> s_g_;
  std::vector<std::int32_t> mul_;
  std::vector<std::int32_t> conj_;
  std::size_t escaping_ = 0;
};

// Adapter exposing the locality through the abstract contract.
inline const PartialGroup& as_partial_group(const Locality& loc) { return loc; }

// Group-table view of a subset of L on which products are total (S, N_L(P), ...).
struct LocalityGroupView {
  const Locality* loc;
  std::size_t universe() const { return loc->size(); }
  Element mul(Element a, Element b) const { return static_cast<Element>(loc->mul(a, b)); }
  Element inv(Element a) const { return loc->invert(a); }
};

int popcount(Mask m);

// L = {g ∈ G : S ∩ S^g ∈ Δ}, D = {w : S_w ∈ Δ}, with Δ closed under
// G-conjugation into S and overgroups in S.
Locality build_locality(std::shared_ptr<const FiniteGroup> g, unsigned p, const Subgroup& s, const DeltaSpec& spec,
                        std::string name = "L", const Limits& limits = {});
// The least (by sorted member list) Sylow p-subgroup.
Subgroup sylow_auto(const FiniteGroup& g, unsigned p, const Limits& limits = {});

// Restriction of the tables to a carrier L' ⊆ L containing S, with objects Δ'. D' = {w ∈ W(L') : S_w ∈ Δ'}.
Locality sublocality(const Locality& parent, const ElementSet& carrier, std::vector<Mask> delta, std::string kind);
// Restriction to Γ ⊆ Δ: carrier {g : S_g ∈ Γ}; Γ must be F-closed.
Locality restrict_to(const Locality& loc, const std::vector<Mask>& gamma);
// Normalizer locality: carrier N_L(T), T ⊴ S.
Locality normalizer_locality(const Locality& loc, Mask t);
// (NS, Δ, S) for N partial normal.
Locality ns_locality(const Locality& loc, const ElementSet& n);

// Δ is F-closed: X ∈ Δ, X ≤ S_g, X^g ≤ Y ≤ S implies Y ∈ Δ.
bool is_f_closed_family(const Locality& loc, const std::vector<Mask>& family);

struct Finding {
  std::string rule;
  std::string detail;
};

// Outcome of a property suite: the number of instances examined and the failures found.
struct CheckReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<Finding> findings;  // first kMaxFindings failures

  static constexpr std::size_t kMaxFindings = 25;
  bool passed() const { return failures == 0; }
  void fail(std::string rule, std::string detail) {
    ++failures;
    if (findings.size() < kMaxFindings) findings.push_back({std::move(rule), std::move(detail)});
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    for (const auto& f : other.findings)
      if (findings.size() < kMaxFindings) findings.push_back(f);
    failures += other.failures;
  }
};

struct ValidationReport {
  std::vector<Finding> findings;
  std::size_t chain_words_checked = 0;
  bool passed() const { return findings.empty(); }
};

struct ValidationOptions {
  std::size_t sample_words = 4000;  // per length, for lengths 3 and 4
  std::uint64_t seed = 0x10ca11;
};

// (O2), carrier closure, the chain form of D_Δ against S_w ∈ Δ, (L1), and table consistency.
ValidationReport validate_locality(const Locality& loc, const ValidationOptions& options = {});

// Exact axiom check over all words of length <= max_len through compositional word states.
AxiomReport check_axioms(const Locality& loc, const AxiomOptions& options = {});

}  // namespace lockit
