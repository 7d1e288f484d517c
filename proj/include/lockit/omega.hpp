#pragma once

#include <cstdint>
#include <vector>

#include "lockit/locality.hpp"

namespace lockit {

// Ω = {S_w : w ∈ W(L)}, with dim(X) the length of the longest strict chain in Ω below X.
struct OmegaPoset {
  std::vector<Mask> members;   // canonical subgroup order
  std::vector<std::size_t> dims;
  std::vector<Word> witnesses;  // a shortest word w with S_w = member

  bool contains(Mask m) const;
  std::size_t index_of(Mask m) const;
  std::size_t dim_of(Mask m) const { return dims[index_of(m)]; }
  std::size_t dimension() const { return dims.back(); }  // dim(S); S is the largest member
};

// Every chase map φ_w, w ∈ W(L), as images of S positions (kNoImage outside S_w).
using FusionMap = std::vector<std::uint8_t>;

struct FusionData {
  std::vector<FusionMap> maps;  // sorted
  std::vector<Word> witnesses;  // parallel to maps
};

OmegaPoset compute_omega(const Locality& loc);
FusionData compute_fusion(const Locality& loc);

// X^⋆: the intersection of the members of Ω containing X.
Mask star(const Locality& loc, const OmegaPoset& omega, Mask x);
// O_p(L) = 1^⋆.
Mask o_p(const Locality& loc, const OmegaPoset& omega);

// Hom_F(P,Q): restrictions to P of the maps φ_w with P ≤ S_w and P^w ≤ Q, as sorted maps.
std::vector<FusionMap> fusion_morphisms(const Locality& loc, const FusionData& fusion, Mask p, Mask q);
// The single-element maps c_g with P ≤ S_g and P^g ≤ Q.
std::vector<FusionMap> conjugation_morphisms(const Locality& loc, Mask p, Mask q);
std::vector<Mask> f_conjugates(const Locality& loc, const FusionData& fusion, Mask x);
// dim(N_S(X)) = dim_Ω(N_S(X)^⋆).
std::size_t normalizer_dim(const Locality& loc, const OmegaPoset& omega, Mask x);
bool is_fully_normalized(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion, Mask x);
bool is_strongly_closed(const Locality& loc, Mask r);
// Closed under F-isomorphisms (orbit closure).
bool is_f_invariant(const Locality& loc, const FusionData& fusion, const std::vector<Mask>& family);
// Closed under images of F-morphisms and overgroups in S.
bool is_f_closed(const Locality& loc, const std::vector<Mask>& family);

// Same carrier, with Δ replaced by {P ≤ S : P^⋆ ∈ Δ}.
Locality expand_delta(const Locality& loc, const OmegaPoset& omega);

// Subgroups of the carrier: subsets on which the product is total and closed. Each lies in
// N_L(P) for some P ∈ Δ, so the union of the subgroup lattices of these groups is searched.
std::vector<ElementSet> locality_subgroups(const Locality& loc, unsigned only_p = 0, const Limits& limits = {});

// S is a maximal p-subgroup of L and every p-subgroup of L is conjugate into S.
CheckReport check_sylow(const Locality& loc, const Limits& limits = {});
// Ω is intersection-closed, dim is strictly monotone, ⋆ is idempotent and monotone, and
// dim(X) = dim(X^w).
CheckReport check_omega(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion);
// S_{u∘v} = ((S_u)^u ∩ S_v)^{u⁻¹} and S_u ∩ S_v = S_{u∘u⁻¹∘v} for |u|, |v| <= max_len.
CheckReport check_domain_identities(const Locality& loc, std::size_t max_len = 2);
// (X^⋆)^u = (X^u)^⋆ for all X ≤ S_u, |u| <= max_len.
CheckReport check_star_conjugation(const Locality& loc, const OmegaPoset& omega, std::size_t max_len = 2);
// Every subgroup H of L normalizes P = S_u ∈ Δ ∩ Ω for some u ∈ W(H), and P contains every
// subgroup of S normalized by H.
CheckReport check_normalized_objects(const Locality& loc, const OmegaPoset& omega, const Limits& limits = {});

}  // namespace lockit
