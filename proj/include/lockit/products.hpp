#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lockit/normal.hpp"
#include "lockit/quotient.hpp"

namespace lockit {

// M, N partial normal; K = M ∩ N, T = S ∩ K, U = S ∩ M, V = S ∩ N, and L/K.
struct ProductContext {
  ElementSet m;
  ElementSet n;
  ElementSet k;
  Mask t = 0;
  Mask u = 0;
  Mask v = 0;
  std::shared_ptr<const QuotientLocality> by_k;
};

ProductContext product_context(const Locality& loc, const ElementSet& m, const ElementSet& n);

// {Π(x,y) : x ∈ M, y ∈ N, (x,y) ∈ D}.
ElementSet product_set(const Locality& loc, const ElementSet& m, const ElementSet& n);

// The least (x,y) by id with x ∈ M, y ∈ N, (x,y) ∈ D, xy = g and S_{(x,y)} = S_g.
std::optional<std::pair<Element, Element>> find_decomposition(const Locality& loc, const ElementSet& m,
                                                               const ElementSet& n, Element g);
// As above; throws invalid-input if g ∉ MN.
std::pair<Element, Element> mn_decomposition(const Locality& loc, const ElementSet& m, const ElementSet& n, Element g);

// A decomposition reached through L/K: decompose ḡ in L̄ with M̄ ∩ N̄ = 1, lift to ↑-maximal
// x, y, then absorb the K-part z of g = z(xy) into x.
std::optional<std::pair<Element, Element>> decomposition_via_quotient(const Locality& loc, const ProductContext& ctx,
                                                                      Element g);

// MN = NM is partial normal, S ∩ MN = UV, and every g ∈ MN has a decomposition. Both the
// direct search and the route through L/K are run; they must agree on MN, on S ∩ MN, and on
// the existence of decompositions.
CheckReport check_product_theorem(const Locality& loc, const ElementSet& m, const ElementSet& n,
                                  Exec exec = Exec::parallel);

// When M ∩ N ≤ S, M ≤ N_L(V) and N ≤ N_L(U); when M ∩ N = 1, S ∩ MN = UV; every ḡ ∈ M̄N̄ is
// x̄ȳ with x ∈ M, y ∈ N, (x,y) ∈ D, x, y, xy ↑-maximal with respect to K and S_{xy} = S_{(x,y)}.
CheckReport check_product_lemmas(const Locality& loc, const ElementSet& m, const ElementSet& n);

// Iterated pairwise product in list order.
ElementSet join_family(const Locality& loc, const std::vector<ElementSet>& family);

// The join is partial normal, contains every member, does not depend on the order of the
// list, and consists of the products Π(w) of order-respecting words w ∈ D of length <= max_len
// (exactly when the family has at most max_len members, as a subset otherwise).
CheckReport check_join_family(const Locality& loc, const std::vector<ElementSet>& family, std::size_t max_len = 3);

// (MN)P = M(NP).
CheckReport check_product_associativity(const Locality& loc, const ElementSet& m, const ElementSet& n,
                                        const ElementSet& p);

}  // namespace lockit
