#pragma once

#include <vector>

#include "lockit/locality.hpp"
#include "lockit/normal.hpp"
#include "lockit/omega.hpp"

namespace lockit {

// A map between the carriers of two localities.
struct Projection {
  const Locality* source = nullptr;
  const Locality* target = nullptr;
  std::vector<Element> map;
  // For each target element, a preimage used to lift target words (↑-maximal with respect to
  // the kernel when the map comes from a quotient).
  std::vector<Element> lift;
};

// L/N with its canonical projection ρ. Elements of L/N are the maximal cosets, numbered in
// the order of CosetPartition; block 0 is N.
struct QuotientLocality {
  std::shared_ptr<const Locality> locality;
  ElementSet n;
  ElementSet up_max;
  CosetPartition cosets;
  std::vector<Element> rho;   // parent element -> block
  std::vector<Element> lift;  // block -> its representative

  Projection projection(const Locality& parent) const { return {&parent, locality.get(), rho, lift}; }
};

// D̄ = {w̄ : the lift of w̄ through the representatives lies in D}, with product the block of the
// lifted product. Every pair (x,y) ∈ D is checked against the block product at construction.
QuotientLocality quotient(const Locality& loc, const ElementSet& n);

// Exact over words of every length, by closure of joint word states:
// (H1) Dβ* ⊆ D', (H2) Π(w)β = Π'(wβ*), lifts through `lift` of words in D' lie in D, and
// Δ' = {Pβ : P ∈ Δ}.
CheckReport check_projection(const Projection& beta, std::size_t state_budget = 2'000'000);

ElementSet kernel(const Projection& beta);

// The fibers of ρ are the maximal cosets with ρ⁻¹(1) = N; for words with ↑-maximal entries
// the image of S_w is S̄_w̄ and w ∈ D ⟺ w̄ ∈ D̄; ρ maps N_L(P,Q) onto N_L̄(P̄,Q̄) for
// T ≤ P ∩ Q, as a homomorphism when P = Q; ρ is bijective iff N = 1; ρ is a projection; and
// every pair in D̄ lifts to a pair in D, so (H2) leaves no alternative product value.
CheckReport quotient_properties(const Locality& parent, const QuotientLocality& q);

struct FirstIsomorphism {
  std::vector<Element> gamma;  // L/N -> L'
  bool isomorphism = false;
  CheckReport report;
};

// γ: L/N → L' with ρ∘γ = β, for N ⊆ Ker(β). Checks well-definedness, that γ is a projection,
// and that γ is an isomorphism iff N = Ker(β).
FirstIsomorphism first_isomorphism(const Locality& parent, const Projection& beta, const QuotientLocality& q);

// Consistency test for N1 ⊆ N2: L → L/N1 → (L/N1)/(N2ρ1) has kernel N2 and factors through an
// isomorphism from L/N2.
CheckReport check_third_isomorphism(const Locality& loc, const ElementSet& n1, const ElementSet& n2);

// Partial subgroups of L containing `base`, by adjoining one element at a time and closing.
// Throws a resource error past `cap` results.
std::vector<ElementSet> partial_subgroups_over(const Locality& loc, const ElementSet& base, std::size_t cap = 4096);

// H ↦ Hρ is a bijection between partial subgroups of L containing N and partial subgroups of
// L/N, inverse to the preimage, and preserves normality both ways.
CheckReport subgroup_correspondence(const Locality& parent, const QuotientLocality& q, std::size_t cap = 4096);

// (X∩H)ρ = Xρ ∩ Hρ over sampled X and all H ⊇ N; (S∩M)ρ is a maximal p-subgroup of Mρ for
// partial normal M ⊇ N; ρ restricted to N_L(T) is a projection.
CheckReport check_image_lemmas(const Locality& parent, const QuotientLocality& q, const std::vector<ElementSet>& normals,
                               std::size_t samples = 64, std::uint64_t seed = 0x5eed, std::size_t cap = 4096);

// (NS, Δ, S) is a locality.
CheckReport check_ns_locality(const Locality& loc, const ElementSet& n);

// For P ≤ S and X ⊆ S with P ⊆ X and P^x ⊆ X for all x ∈ X: X = P or P < X ∩ N_S(P^⋆). X is
// sampled as the closure of P and random elements of S.
CheckReport check_invariant_subsets(const Locality& loc, const OmegaPoset& omega, std::size_t samples = 200,
                                    std::uint64_t seed = 0x5eed);

}  // namespace lockit
