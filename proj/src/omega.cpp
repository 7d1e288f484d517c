#include "lockit/omega.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "lockit/group_algorithms.hpp"
#include "lockit/word_states.hpp"

namespace lockit {

namespace {

// Breadth-first search over the chase maps of all words, from the identity map.
struct MapSearch {
  MapTable table;
  std::vector<std::uint32_t> order;  // discovery order
  std::unordered_map<std::uint32_t, Word> witness;

  explicit MapSearch(const Locality& loc) : table(loc.s_order()) {
    WordStates ws(loc);
    std::vector<std::uint32_t> letters(loc.size());
    for (Element g = 0; g < loc.size(); ++g) {
      const std::uint8_t* img = ws.maps().images(ws.letter(g).phi);
      letters[g] = table.intern(img);
    }
    witness.emplace(table.identity(), Word{});
    order.push_back(table.identity());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::uint32_t m = order[i];
      for (Element g = 0; g < loc.size(); ++g) {
        const std::uint32_t c = table.compose(m, letters[g]);
        if (witness.contains(c)) continue;
        Word w = witness.at(m);
        w.push_back(g);
        witness.emplace(c, std::move(w));
        order.push_back(c);
      }
    }
  }

  FusionMap map(std::uint32_t id) const {
    const std::uint8_t* img = table.images(id);
    return FusionMap(img, img + table.width());
  }
};

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

Mask apply(const FusionMap& m, Mask x) {
  Mask out = 0;
  for (; x; x &= x - 1) out |= Mask{1} << m[std::countr_zero(x)];
  return out;
}

FusionMap restrict(const FusionMap& m, Mask p) {
  FusionMap out(m.size(), kNoImage);
  for (Mask x = p; x; x &= x - 1) out[std::countr_zero(x)] = m[std::countr_zero(x)];
  return out;
}

Mask domain_of(const FusionMap& m) {
  Mask out = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != kNoImage) out |= Mask{1} << i;
  return out;
}

std::string show(const Locality& loc, Mask m) {
  std::string out = "{";
  bool first = true;
  for (Element x : loc.to_set(m)) {
    out += (first ? "" : ",") + loc.label(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

bool OmegaPoset::contains(Mask m) const { return std::find(members.begin(), members.end(), m) != members.end(); }

std::size_t OmegaPoset::index_of(Mask m) const {
  const auto it = std::find(members.begin(), members.end(), m);
  if (it == members.end()) fail(ErrorKind::invalid_input, "subgroup is not a member of Ω");
  return static_cast<std::size_t>(it - members.begin());
}

OmegaPoset compute_omega(const Locality& loc) {
  MapSearch search(loc);
  std::map<std::size_t, std::pair<Mask, Word>> found;  // keyed by canonical subgroup index
  for (std::uint32_t id : search.order) {
    const Mask d = search.table.domain(id);
    if (!loc.is_s_subgroup(d)) fail(ErrorKind::internal, "S_w is not a subgroup of S");
    found.try_emplace(loc.subgroup_index(d), d, search.witness.at(id));
  }
  OmegaPoset out;
  for (auto& [idx, entry] : found) {
    out.members.push_back(entry.first);
    out.witnesses.push_back(std::move(entry.second));
  }
  out.dims.assign(out.members.size(), 0);
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (out.members[j] != out.members[i] && subset(out.members[j], out.members[i]))
        out.dims[i] = std::max(out.dims[i], out.dims[j] + 1);
  LOCKIT_ENSURE(out.members.back() == loc.full_mask(), "S is the largest member of Ω");
  for (Mask a : out.members)
    for (Mask b : out.members) LOCKIT_ENSURE(out.contains(a & b), "Ω is closed under intersection");
  return out;
}

FusionData compute_fusion(const Locality& loc) {
  MapSearch search(loc);
  std::vector<std::pair<FusionMap, Word>> all;
  for (std::uint32_t id : search.order) all.emplace_back(search.map(id), search.witness.at(id));
  std::sort(all.begin(), all.end());
  FusionData out;
  for (auto& [m, w] : all) {
    out.maps.push_back(std::move(m));
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

Mask star(const Locality& loc, const OmegaPoset& omega, Mask x) {
  if (!loc.is_s_subgroup(x)) fail(ErrorKind::invalid_input, "X is not a subgroup of S");
  Mask out = loc.full_mask();
  for (Mask m : omega.members)
    if (subset(x, m)) out &= m;
  return out;
}

Mask o_p(const Locality& loc, const OmegaPoset& omega) {
  const Mask out = star(loc, omega, loc.trivial_mask());
  for (Element g = 0; g < loc.size(); ++g)
    LOCKIT_ENSURE(subset(out, loc.s_g_mask(g)) && loc.image(out, g) == out, "O_p(L) is normalized by every g");
  return out;
}

std::vector<FusionMap> fusion_morphisms(const Locality& loc, const FusionData& fusion, Mask p, Mask q) {
  if (!loc.is_s_subgroup(p) || !loc.is_s_subgroup(q)) fail(ErrorKind::invalid_input, "P and Q must be subgroups of S");
  std::vector<FusionMap> out;
  for (const auto& m : fusion.maps)
    if (subset(p, domain_of(m)) && subset(apply(m, p), q)) out.push_back(restrict(m, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FusionMap> conjugation_morphisms(const Locality& loc, Mask p, Mask q) {
  std::vector<FusionMap> out;
  for (Element g = 0; g < loc.size(); ++g) {
    if (!subset(p, loc.s_g_mask(g)) || !subset(loc.image(p, g), q)) continue;
    FusionMap m(loc.s_order(), kNoImage);
    for (Mask x = p; x; x &= x - 1) m[std::countr_zero(x)] = static_cast<std::uint8_t>(loc.letter(g, std::countr_zero(x)));
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> f_conjugates(const Locality& loc, const FusionData& fusion, Mask x) {
  if (!loc.is_s_subgroup(x)) fail(ErrorKind::invalid_input, "X is not a subgroup of S");
  std::vector<Mask> out;
  for (const auto& m : fusion.maps)
    if (subset(x, domain_of(m))) out.push_back(apply(m, x));
  std::sort(out.begin(), out.end(), [&](Mask a, Mask b) { return loc.subgroup_index(a) < loc.subgroup_index(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t normalizer_dim(const Locality& loc, const OmegaPoset& omega, Mask x) {
  Mask n = 0;
  for (std::size_t pos = 0; pos < loc.s_order(); ++pos) {
    const Element s = loc.s_elements()[pos];
    if (loc.image(x, s) == x) n |= Mask{1} << pos;
  }
  return omega.dim_of(star(loc, omega, n));
}

bool is_fully_normalized(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion, Mask x) {
  const std::size_t d = normalizer_dim(loc, omega, x);
  for (Mask y : f_conjugates(loc, fusion, x))
    if (normalizer_dim(loc, omega, y) > d) return false;
  return true;
}

bool is_strongly_closed(const Locality& loc, Mask r) {
  if (!loc.is_s_subgroup(r)) fail(ErrorKind::invalid_input, "R is not a subgroup of S");
  for (Element g = 0; g < loc.size(); ++g) {
    const Mask part = r & loc.s_g_mask(g);
    if (!subset(loc.image(part, g), r)) return false;
  }
  return true;
}

bool is_f_invariant(const Locality& loc, const FusionData& fusion, const std::vector<Mask>& family) {
  for (Mask x : family)
    for (Mask y : f_conjugates(loc, fusion, x))
      if (std::find(family.begin(), family.end(), y) == family.end()) return false;
  return true;
}

bool is_f_closed(const Locality& loc, const std::vector<Mask>& family) { return is_f_closed_family(loc, family); }

Locality expand_delta(const Locality& loc, const OmegaPoset& omega) {
  std::vector<Mask> delta;
  for (Mask p : loc.s_subgroups())
    if (loc.in_delta(star(loc, omega, p))) delta.push_back(p);
  Locality out = sublocality(loc, loc.all(), std::move(delta), "expansion");
  LOCKIT_ENSURE(out.size() == loc.size(), "expansion keeps the carrier");
  return out;
}

std::vector<ElementSet> locality_subgroups(const Locality& loc, unsigned only_p, const Limits& limits) {
  const LocalityGroupView view{&loc};
  std::vector<ElementSet> out;
  std::unordered_set<ElementSet> seen;
  for (Mask p : loc.delta()) {
    const ElementSet np = loc.normalizer(p);
    if (!loc.is_subgroup(np)) fail(ErrorKind::domain, "N_L(P) is not a subgroup for an object P");
    if (np.count() > limits.max_subgroup_enumeration_order)
      fail(ErrorKind::resource, "|N_L(P)| = " + std::to_string(np.count()) + " exceeds the subgroup enumeration cap");
    for (auto& h : algo::subgroups_of(view, np, only_p))
      if (seen.insert(h).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport check_sylow(const Locality& loc, const Limits& limits) {
  CheckReport rep;
  if (!is_p_power(loc.s_order(), loc.prime())) rep.fail("sylow", "S is not a p-group");
  for (const auto& h : locality_subgroups(loc, loc.prime(), limits)) {
    ++rep.checked;
    if (h.count() > loc.s_order()) {
      rep.fail("sylow", "a p-subgroup of L is larger than S");
      continue;
    }
    bool found = false;
    for (Element g = 0; g < loc.size() && !found; ++g) {
      bool ok = true;
      for (Element x : h) {
        const auto y = loc.conj(x, g);
        if (y < 0 || loc.s_pos(static_cast<Element>(y)) < 0) {
          ok = false;
          break;
        }
      }
      found = ok;
    }
    if (!found) rep.fail("sylow", "a p-subgroup of order " + std::to_string(h.count()) + " is not conjugate into S");
  }
  return rep;
}

CheckReport check_omega(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion) {
  CheckReport rep;
  for (Mask a : omega.members)
    for (Mask b : omega.members) {
      ++rep.checked;
      if (!omega.contains(a & b)) rep.fail("omega-intersection", show(loc, a) + " ∩ " + show(loc, b) + " ∉ Ω");
      if (a != b && subset(a, b) && omega.dim_of(a) >= omega.dim_of(b))
        rep.fail("omega-dimension", "dim is not strictly monotone at " + show(loc, a));
    }
  for (Mask x : loc.s_subgroups()) {
    ++rep.checked;
    const Mask xs = star(loc, omega, x);
    if (!subset(x, xs) || star(loc, omega, xs) != xs) rep.fail("star-closure", "⋆ is not a closure at " + show(loc, x));
    for (Mask y : loc.s_subgroups())
      if (subset(x, y) && !subset(xs, star(loc, omega, y))) rep.fail("star-monotone", show(loc, x));
  }
  for (std::size_t i = 0; i < omega.members.size(); ++i)
    for (const auto& m : fusion.maps) {
      const Mask x = omega.members[i];
      if (!subset(x, domain_of(m))) continue;
      ++rep.checked;
      const Mask y = apply(m, x);
      if (!omega.contains(y) || omega.dim_of(y) != omega.dims[i])
        rep.fail("omega-conjugation", "dim(X) ≠ dim(X^w) for X = " + show(loc, x));
    }
  return rep;
}

CheckReport check_domain_identities(const Locality& loc, std::size_t max_len) {
  CheckReport rep;
  WordStates ws(loc);
  std::vector<Element> alphabet(loc.size());
  for (Element x = 0; x < loc.size(); ++x) alphabet[x] = x;
  const StateCatalog cat = explore_states(ws, alphabet, max_len);
  auto& maps = ws.maps();
  // Images of a subset under a state's chase map and its inverse.
  auto forward = [&](const WordState& s, Mask x) { return maps.image_of(s.phi, x); };
  auto backward = [&](const WordState& s, Mask x) { return maps.image_of(s.psi, x); };
  for (std::size_t i = 0; i < cat.states.size(); ++i) {
    const WordState& u = cat.states[i];
    const Mask su = ws.s_w(u);
    const Mask su_inv = ws.s_w(ws.inverse(u));
    if (forward(u, su) != su_inv) rep.fail("s_w-inverse", "S_{u⁻¹} ≠ (S_u)^u for u = " + format_word(cat.words[i]));
    for (std::size_t j = 0; j < cat.states.size(); ++j) {
      const WordState& v = cat.states[j];
      ++rep.checked;
      const Mask sv = ws.s_w(v);
      const Mask suv = ws.s_w(ws.concat(u, v));
      const Mask formula = backward(u, su_inv & sv);
      if (suv != formula)
        rep.fail("s_w-concatenation", "S_{u∘v} ≠ ((S_u)^u ∩ S_v)^{u⁻¹} for " + format_word(cat.words[i]) + ", " +
                                          format_word(cat.words[j]));
      const Mask back = ws.s_w(ws.concat(ws.concat(u, ws.inverse(u)), v));
      if ((su & sv) != back)
        rep.fail("s_w-intersection", "S_u ∩ S_v ≠ S_{u∘u⁻¹∘v} for " + format_word(cat.words[i]) + ", " +
                                         format_word(cat.words[j]));
    }
  }
  return rep;
}

CheckReport check_star_conjugation(const Locality& loc, const OmegaPoset& omega, std::size_t max_len) {
  CheckReport rep;
  WordStates ws(loc);
  std::vector<Element> alphabet(loc.size());
  for (Element x = 0; x < loc.size(); ++x) alphabet[x] = x;
  const StateCatalog cat = explore_states(ws, alphabet, max_len);
  std::unordered_set<std::uint32_t> done;
  for (std::size_t i = 0; i < cat.states.size(); ++i) {
    const WordState& u = cat.states[i];
    if (!done.insert(u.phi).second) continue;
    const Mask su = ws.s_w(u);
    for (Mask x : loc.s_subgroups()) {
      if (!subset(x, su)) continue;
      ++rep.checked;
      const Mask xs = star(loc, omega, x);
      if (!subset(xs, su)) {
        rep.fail("star-conjugation", "X^⋆ ⊄ S_u for u = " + format_word(cat.words[i]));
        continue;
      }
      if (ws.maps().image_of(u.phi, xs) != star(loc, omega, ws.maps().image_of(u.phi, x)))
        rep.fail("star-conjugation", "(X^⋆)^u ≠ (X^u)^⋆ for X = " + show(loc, x) + ", u = " + format_word(cat.words[i]));
    }
  }
  return rep;
}

CheckReport check_normalized_objects(const Locality& loc, const OmegaPoset& omega, const Limits& limits) {
  CheckReport rep;
  WordStates ws(loc);
  for (const auto& h : locality_subgroups(loc, 0, limits)) {
    ++rep.checked;
    // Domains S_u for u ∈ W(H).
    MapTable& maps = ws.maps();
    std::unordered_set<std::uint32_t> seen{maps.identity()};
    std::vector<std::uint32_t> frontier{maps.identity()};
    Mask meet = loc.full_mask();
    std::vector<Mask> domains{loc.full_mask()};
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (auto m : frontier)
        for (Element a : h) {
          const auto c = maps.compose(m, ws.letter(a).phi);
          if (seen.insert(c).second) {
            next.push_back(c);
            domains.push_back(maps.domain(c));
            meet &= maps.domain(c);
          }
        }
      frontier = std::move(next);
    }
    const std::string where = "H of order " + std::to_string(h.count());
    if (std::find(domains.begin(), domains.end(), meet) == domains.end()) {
      rep.fail("normalized-object", "⋂ S_u over W(H) is not attained for " + where);
      continue;
    }
    if (!loc.in_delta(meet) || !omega.contains(meet)) rep.fail("normalized-object", "P ∉ Δ ∩ Ω for " + where);
    const ElementSet np = loc.normalizer(meet);
    if (!h.is_subset_of(np)) rep.fail("normalized-object", "H does not normalize P for " + where);
    for (Mask q : loc.s_subgroups()) {
      if (subset(q, meet)) continue;
      bool normalized = true;
      for (Element a : h)
        if (!subset(q, loc.s_g_mask(a)) || loc.image(q, a) != q) {
          normalized = false;
          break;
        }
      if (normalized) rep.fail("normalized-object", "a subgroup of S normalized by H is not contained in P for " + where);
    }
  }
  return rep;
}

}  // namespace lockit
