#pragma once

#include <string>
#include <vector>

#include "lockit/locality.hpp"
#include "lockit/omega.hpp"

namespace lockit {

// Kernels with an OpenMP implementation keep a serial reference with identical output.
enum class Exec { serial, parallel };

struct PartialNormalSubgroup {
  ElementSet members;
  Mask t = 0;  // S ∩ N
};

PartialNormalSubgroup make_partial_normal(const Locality& loc, const ElementSet& n);

// Closed under inversion and defined binary products, and x^g ∈ N whenever (g⁻¹,x,g) ∈ D.
bool is_partial_normal(const Locality& loc, const ElementSet& n);
// The smallest partial normal subgroup containing X.
ElementSet normal_closure(const Locality& loc, const ElementSet& x);

struct NormalEnumeration {
  std::vector<ElementSet> normals;  // sorted by size, then members
  bool complete = false;            // confirmed by the exhaustive class-union filter
  std::size_t classes = 0;          // conjugation classes of L other than {1}
};

// Normal closures of single elements, closed under joins. When L has at most max_classes
// conjugation classes, every union of classes is also tested, which confirms completeness.
NormalEnumeration enumerate_partial_normals(const Locality& loc, std::size_t max_classes = 18,
                                            Exec exec = Exec::parallel);

// dim(P) = dim_Ω(P^⋆).
std::size_t subgroup_dim(const Locality& loc, const OmegaPoset& omega, Mask p);

// The two readings of (f,P) ↑ (g,Q): some x ∈ N_N(P,Q), y ∈ N_N(P^f,Q^g) with xg = fy, or with
// (x,g,y⁻¹,f⁻¹) ∈ D via P and Π = 1.
struct UpRelation {
  bool equation = false;
  bool commuting_square = false;
};
UpRelation up_relation(const Locality& loc, const ElementSet& n, Element f, Mask p, Element g, Mask q);
bool up_related(const Locality& loc, const ElementSet& n, Element f, Mask p, Element g, Mask q);

ElementSet up_maximal_elements(const Locality& loc, const ElementSet& n, const OmegaPoset& omega,
                               Exec exec = Exec::parallel);
ElementSet up_maximal_elements(const Locality& loc, const ElementSet& n, Exec exec = Exec::parallel);

struct CosetPartition {
  std::vector<ElementSet> blocks;           // ordered by least element
  std::vector<Element> representatives;     // least ↑-maximal element of each block
  std::vector<std::uint32_t> block_of;      // element -> block index
};

// Blocks Nf = {Π(x,f) : x ∈ N, (x,f) ∈ D} for ↑-maximal f.
CosetPartition maximal_cosets(const Locality& loc, const ElementSet& n, const ElementSet& up_max);
CosetPartition maximal_cosets(const Locality& loc, const ElementSet& n);

// Nf = fN = NfN for ↑-maximal f, g ∈ Nf ⟺ (g,S_g) ↑ (f,S_f), and the blocks partition L.
CheckReport check_cosets(const Locality& loc, const ElementSet& n, const ElementSet& up_max,
                         const CosetPartition& cosets);
// Every f ∈ L is Π(x,g) and Π(g',y) with x, y ∈ N and g, g' ↑-maximal in N_L(T).
CheckReport check_frattini(const Locality& loc, const ElementSet& n, const ElementSet& up_max,
                           Exec exec = Exec::parallel);
// S_{(x,f)} = S_{xf} = S_{(f,x^f)} for x ∈ N, f ↑-maximal, (x,f) ∈ D.
CheckReport check_splitting(const Locality& loc, const ElementSet& n, const ElementSet& up_max);
// T is strongly closed, PT = P^x T for x ∈ N and P ≤ S_x, T is a maximal p-subgroup of N,
// T ≤ S_f for ↑-maximal f, and N_L(S) ⊆ ↑-maximal elements, closed under inversion.
CheckReport check_normal_properties(const Locality& loc, const ElementSet& n, const ElementSet& up_max,
                                    const Limits& limits = {});
// The equation and commuting-square readings of ↑ agree on all pairs (f,S_f), (g,S_g).
CheckReport check_up_readings(const Locality& loc, const ElementSet& n);

}  // namespace lockit
