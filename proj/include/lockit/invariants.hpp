#pragma once

#include <cstdint>
#include <vector>

#include "lockit/locality.hpp"
#include "lockit/normal.hpp"
#include "lockit/omega.hpp"
#include "lockit/quotient.hpp"

namespace lockit {

// Consequences of the theory that are not used by the constructions themselves, checked on
// concrete instances.

// Conjugation in a partial group: 1 ∈ D(g) with 1^g = 1, D(g) closed under inversion,
// (x^g)^{g⁻¹} = x, conjugation by 1 is trivial, and f^g = f with f ∈ D(g), g ∈ D(f) implies
// fg = gf and g^f = g.
CheckReport check_conjugation_laws(const PartialGroup& pg);

// For partial subgroups H, K, A in `family` with HK a partial subgroup: K ≤ A implies
// A ∩ HK = (A∩H)K, and H ≤ A implies A ∩ HK = H(A∩K). With A ≤ HK these read A = (A∩H)K and
// A = H(A∩K).
CheckReport check_dedekind(const Locality& loc, const std::vector<ElementSet>& family);

// The image of every subgroup of L under ρ is a subgroup of L/N.
CheckReport check_subgroup_images(const Locality& parent, const QuotientLocality& q, const Limits& limits = {});

// c_g maps N_L(X) isomorphically onto N_L(X^g) for X, X^g ∈ Δ, and c_{g1}∘c_{g2} = c_{g1g2} on
// N_L(S_w) for w = (g1,g2) ∈ D; for (a,b,c) ∈ D, bc = a⁻¹(abc) and ab = (abc)c⁻¹ (sampled);
// X^{fg} = (X^f)^g; D is an N_L(S)-biset on words of length <= 2.
CheckReport check_objective_laws(const Locality& loc, std::size_t samples = 20000, std::uint64_t seed = 0x0b1ec7);

// V < N_X(V^⋆) for V < X, X a p-subgroup of L; dim(P) < dim(N_Q(P)) for P = N_{S_w}(V) < Q = N_S(V),
// V ∈ Ω; N_S(P) is Sylow in N_L(P) iff P is fully normalized, for P ∈ Δ; maximal p-subgroups of
// each N_L(P) have equal order; T = R∩K is Sylow in K and H = N_H(T)K for K ⊴ H = N_L(P);
// ⟨X^⋆,Y^⋆⟩ ≤ ⟨X,Y⟩^⋆; and for each F-closed Γ ⊆ Δ, X ↦ X^⋆ embeds Ω of L|Γ into Ω.
CheckReport check_omega_laws(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion,
                             const Limits& limits = {});

// For N partial normal with T = S ∩ N: the N_L(T)-commutation identities for x ∈ N, the
// conjugated-word domain identities, the Frattini calculus on sampled alternating words,
// propagation of ↑-maximality, unique factorization along ↑, the sufficient condition for
// N_L(T) to consist of ↑-maximal elements, N_L(T)-invariant normal subgroups of N, and that
// partial subgroups containing N are unions of maximal cosets.
CheckReport check_normal_laws(const Locality& loc, const ElementSet& n, const ElementSet& up_max,
                              const CosetPartition& cosets, std::size_t samples = 2000, std::uint64_t seed = 0xf7a7,
                              std::size_t cap = 4096);

}  // namespace lockit
