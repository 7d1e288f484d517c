#include "lockit/normal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "lockit/word_states.hpp"

namespace lockit {

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

void require_carrier_set(const Locality& loc, const ElementSet& n) {
  if (n.universe() != loc.size()) fail(ErrorKind::invalid_input, "subset of the carrier has the wrong universe");
}

// x ∈ N with P ≤ S_x and P^x ≤ Q.
std::vector<Element> transporters_in(const Locality& loc, const std::vector<Element>& n, Mask p, Mask q) {
  std::vector<Element> out;
  for (Element x : n)
    if (subset(p, loc.s_g_mask(x)) && subset(loc.image(p, x), q)) out.push_back(x);
  return out;
}

// Some x ∈ N_N(P,Q), y ∈ N_N(P^f,Q^g) with xg = fy.
bool equation_holds(const Locality& loc, const std::vector<Element>& n, Element f, Mask p, Element g, Mask q) {
  ElementSet reach(loc.size());
  for (Element x : transporters_in(loc, n, p, q)) {
    const auto v = loc.mul(x, g);
    if (v >= 0) reach.insert(static_cast<Element>(v));
  }
  if (reach.empty()) return false;
  for (Element y : transporters_in(loc, n, loc.image(p, f), loc.image(q, g))) {
    const auto v = loc.mul(f, y);
    if (v >= 0 && reach.contains(static_cast<Element>(v))) return true;
  }
  return false;
}

Mask product_mask(const Locality& loc, Mask a, Mask b) {
  Mask out = 0;
  for (Mask x = a; x; x &= x - 1)
    for (Mask y = b; y; y &= y - 1) out |= Mask{1} << loc.s_mul(std::countr_zero(x), std::countr_zero(y));
  return out;
}

}  // namespace

PartialNormalSubgroup make_partial_normal(const Locality& loc, const ElementSet& n) {
  if (!is_partial_normal(loc, n)) fail(ErrorKind::invalid_input, "not a partial normal subgroup");
  return PartialNormalSubgroup{n, loc.to_mask(n & loc.s_set())};
}

bool is_partial_normal(const Locality& loc, const ElementSet& n) {
  require_carrier_set(loc, n);
  if (!n.contains(loc.identity())) return false;
  const auto members = n.to_vector();
  for (Element x : members) {
    if (!n.contains(loc.invert(x))) return false;
    for (Element y : members) {
      const auto m = loc.mul(x, y);
      if (m >= 0 && !n.contains(static_cast<Element>(m))) return false;
    }
    for (Element g = 0; g < loc.size(); ++g) {
      const auto c = loc.conj(x, g);
      if (c >= 0 && !n.contains(static_cast<Element>(c))) return false;
    }
  }
  return true;
}

ElementSet normal_closure(const Locality& loc, const ElementSet& x) {
  require_carrier_set(loc, x);
  ElementSet h(loc.size());
  std::vector<Element> members;
  std::vector<Element> queue;
  auto add = [&](std::int32_t v) {
    if (v < 0 || h.contains(static_cast<Element>(v))) return;
    h.insert(static_cast<Element>(v));
    members.push_back(static_cast<Element>(v));
    queue.push_back(static_cast<Element>(v));
  };
  add(static_cast<std::int32_t>(loc.identity()));
  for (Element e : x) add(static_cast<std::int32_t>(e));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element e = queue[i];
    add(static_cast<std::int32_t>(loc.invert(e)));
    for (std::size_t j = 0; j < members.size(); ++j) {
      add(loc.mul(e, members[j]));
      add(loc.mul(members[j], e));
    }
    for (Element g = 0; g < loc.size(); ++g) add(loc.conj(e, g));
  }
  LOCKIT_ENSURE(is_partial_normal(loc, h), "the normal closure is partial normal");
  return h;
}

NormalEnumeration enumerate_partial_normals(const Locality& loc, std::size_t max_classes, Exec exec) {
  const std::size_t n = loc.size();
  NormalEnumeration out;

  std::vector<ElementSet> found;
  std::unordered_set<ElementSet> seen;
  auto keep = [&](ElementSet s) {
    if (seen.insert(s).second) found.push_back(std::move(s));
  };
  for (Element x = 0; x < n; ++x) keep(normal_closure(loc, ElementSet(n, {x})));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) keep(normal_closure(loc, found[i] | found[j]));
  std::sort(found.begin(), found.end());

  // Conjugation classes: the partition generated by x ~ x^g.
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto root = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Element x = 0; x < n; ++x)
    for (Element g = 0; g < n; ++g) {
      const auto c = loc.conj(x, g);
      if (c >= 0) parent[root(static_cast<Element>(c))] = root(x);
    }
  std::vector<ElementSet> classes;
  std::vector<std::int32_t> class_of(n, -1);
  for (Element x = 0; x < n; ++x) {
    const Element r = root(x);
    if (root(loc.identity()) == r) continue;
    if (class_of[r] < 0) {
      class_of[r] = static_cast<std::int32_t>(classes.size());
      classes.emplace_back(n);
    }
    classes[class_of[r]].insert(x);
  }
  out.classes = classes.size();
  ElementSet base(n);
  for (Element x = 0; x < n; ++x)
    if (root(x) == root(loc.identity())) base.insert(x);

  if (classes.size() <= max_classes) {
    const std::uint64_t total = std::uint64_t{1} << classes.size();
    std::vector<ElementSet> filtered;
    auto test = [&](std::uint64_t m, std::vector<ElementSet>& sink) {
      ElementSet u = base;
      for (std::uint64_t b = m; b; b &= b - 1) u |= classes[std::countr_zero(b)];
      if (is_partial_normal(loc, u)) sink.push_back(std::move(u));
    };
    if (exec == Exec::parallel) {
#pragma omp parallel
      {
        std::vector<ElementSet> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(total); ++m) test(static_cast<std::uint64_t>(m), local);
#pragma omp critical
        filtered.insert(filtered.end(), local.begin(), local.end());
      }
    } else {
      for (std::uint64_t m = 0; m < total; ++m) test(m, filtered);
    }
    std::sort(filtered.begin(), filtered.end());
    LOCKIT_ENSURE(filtered == found, "closure-generated partial normals agree with the exhaustive filter");
    out.complete = true;
  }
  out.normals = std::move(found);
  return out;
}

std::size_t subgroup_dim(const Locality& loc, const OmegaPoset& omega, Mask p) {
  return omega.dim_of(star(loc, omega, p));
}

UpRelation up_relation(const Locality& loc, const ElementSet& n, Element f, Mask p, Element g, Mask q) {
  require_carrier_set(loc, n);
  if (f >= loc.size() || g >= loc.size()) fail(ErrorKind::invalid_input, "element outside the carrier");
  if (!loc.in_delta(p) || !loc.in_delta(q) || !subset(p, loc.s_g_mask(f)) || !subset(q, loc.s_g_mask(g)))
    fail(ErrorKind::invalid_input, "(f,P) and (g,Q) must satisfy P ≤ S_f, Q ≤ S_g with P, Q ∈ Δ");
  const auto members = n.to_vector();
  const auto xs = transporters_in(loc, members, p, q);
  const auto ys = transporters_in(loc, members, loc.image(p, f), loc.image(q, g));
  UpRelation out;
  const Element finv = loc.invert(f);
  for (Element x : xs)
    for (Element y : ys) {
      const auto l = loc.mul(x, g);
      const auto r = loc.mul(f, y);
      if (l >= 0 && l == r) out.equation = true;
      const Element w[4] = {x, g, loc.invert(y), finv};
      if (subset(p, loc.s_w_mask(w)) && loc.in_domain(w) && loc.product(w) == loc.identity())
        out.commuting_square = true;
      if (out.equation && out.commuting_square) return out;
    }
  return out;
}

bool up_related(const Locality& loc, const ElementSet& n, Element f, Mask p, Element g, Mask q) {
  require_carrier_set(loc, n);
  if (!loc.in_delta(p) || !loc.in_delta(q) || !subset(p, loc.s_g_mask(f)) || !subset(q, loc.s_g_mask(g)))
    fail(ErrorKind::invalid_input, "(f,P) and (g,Q) must satisfy P ≤ S_f, Q ≤ S_g with P, Q ∈ Δ");
  return equation_holds(loc, n.to_vector(), f, p, g, q);
}

ElementSet up_maximal_elements(const Locality& loc, const ElementSet& n, const OmegaPoset& omega, Exec exec) {
  require_carrier_set(loc, n);
  const std::size_t size = loc.size();
  const auto members = n.to_vector();
  std::vector<std::size_t> dim(size);
  for (Element f = 0; f < size; ++f) dim[f] = subgroup_dim(loc, omega, loc.s_g_mask(f));
  std::vector<char> maximal(size, 1);

  // (f,S_f) ↑ (g,S_g) with dim(S_g) > dim(S_f) refutes maximality of f.
  auto examine = [&](Element f) {
    for (Element g = 0; g < size; ++g)
      if (dim[g] > dim[f] && equation_holds(loc, members, f, loc.s_g_mask(f), g, loc.s_g_mask(g))) {
        maximal[f] = 0;
        return;
      }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t f = 0; f < static_cast<std::int64_t>(size); ++f) examine(static_cast<Element>(f));
  } else {
    for (Element f = 0; f < size; ++f) examine(f);
  }

  ElementSet out(size);
  for (Element f = 0; f < size; ++f)
    if (maximal[f]) out.insert(f);
  LOCKIT_ENSURE(loc.normalizer(loc.full_mask()).is_subset_of(out), "N_L(S) consists of ↑-maximal elements");
  for (Element f : out) LOCKIT_ENSURE(out.contains(loc.invert(f)), "↑-maximality is closed under inversion");
  return out;
}

ElementSet up_maximal_elements(const Locality& loc, const ElementSet& n, Exec exec) {
  return up_maximal_elements(loc, n, compute_omega(loc), exec);
}

CosetPartition maximal_cosets(const Locality& loc, const ElementSet& n, const ElementSet& up_max) {
  require_carrier_set(loc, n);
  const std::size_t size = loc.size();
  const auto members = n.to_vector();
  CosetPartition out;
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  out.block_of.assign(size, kNone);
  std::vector<std::pair<ElementSet, Element>> blocks;
  for (Element f : up_max) {
    ElementSet b(size);
    for (Element x : members) {
      const auto v = loc.mul(x, f);
      if (v >= 0) b.insert(static_cast<Element>(v));
    }
    const auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& e) { return e.first == b; });
    if (it != blocks.end()) continue;  // f is not least in its block; the block is already recorded
    for (const auto& [other, rep] : blocks)
      LOCKIT_ENSURE(!other.intersects(b), "maximal cosets are disjoint");
    blocks.emplace_back(std::move(b), f);
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.first.first() < b.first.first(); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Element e : blocks[i].first) out.block_of[e] = static_cast<std::uint32_t>(i);
    out.blocks.push_back(std::move(blocks[i].first));
    out.representatives.push_back(blocks[i].second);
  }
  for (Element e = 0; e < size; ++e) LOCKIT_ENSURE(out.block_of[e] != kNone, "maximal cosets cover L");
  return out;
}

CosetPartition maximal_cosets(const Locality& loc, const ElementSet& n) {
  return maximal_cosets(loc, n, up_maximal_elements(loc, n));
}

CheckReport check_cosets(const Locality& loc, const ElementSet& n, const ElementSet& up_max,
                         const CosetPartition& cosets) {
  CheckReport rep;
  const std::size_t size = loc.size();
  const auto members = n.to_vector();
  std::size_t covered = 0;
  for (std::size_t i = 0; i < cosets.blocks.size(); ++i) {
    covered += cosets.blocks[i].count();
    for (std::size_t j = 0; j < i; ++j)
      if (cosets.blocks[i].intersects(cosets.blocks[j])) rep.fail("coset-partition", "two blocks overlap");
  }
  if (covered != size) rep.fail("coset-partition", "blocks do not cover L exactly once");

  for (Element f : up_max) {
    ++rep.checked;
    ElementSet nf(size), fn(size), nfn(size);
    for (Element x : members) {
      if (const auto v = loc.mul(x, f); v >= 0) nf.insert(static_cast<Element>(v));
      if (const auto v = loc.mul(f, x); v >= 0) fn.insert(static_cast<Element>(v));
      for (Element y : members) {
        const Element w[3] = {x, f, y};
        if (loc.in_domain(w)) nfn.insert(loc.product(w));
      }
    }
    if (nf != fn || nf != nfn) rep.fail("coset-sides", "Nf, fN and NfN differ for f = " + loc.label(f));
    if (nf != cosets.blocks[cosets.block_of[f]]) rep.fail("coset-partition", "Nf is not the block of f = " + loc.label(f));
    const Mask sf = loc.s_g_mask(f);
    for (Element g = 0; g < size; ++g) {
      const bool related = equation_holds(loc, members, g, loc.s_g_mask(g), f, sf);
      if (related != nf.contains(g))
        rep.fail("coset-relation", "g ∈ Nf and (g,S_g) ↑ (f,S_f) disagree for g = " + loc.label(g) +
                                       ", f = " + loc.label(f));
    }
  }
  return rep;
}

CheckReport check_frattini(const Locality& loc, const ElementSet& n, const ElementSet& up_max, Exec exec) {
  CheckReport rep;
  const std::size_t size = loc.size();
  const auto members = n.to_vector();
  const Mask t = loc.to_mask(n & loc.s_set());
  const ElementSet nt = loc.normalizer(t);
  std::vector<Element> heads;
  for (Element g : up_max)
    if (nt.contains(g)) heads.push_back(g);
  std::vector<char> left(size, 0), right(size, 0);
  auto search = [&](Element f) {
    for (Element g : heads)
      for (Element x : members) {
        if (!left[f] && loc.mul(x, g) == static_cast<std::int32_t>(f)) left[f] = 1;
        if (!right[f] && loc.mul(g, x) == static_cast<std::int32_t>(f)) right[f] = 1;
        if (left[f] && right[f]) return;
      }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t f = 0; f < static_cast<std::int64_t>(size); ++f) search(static_cast<Element>(f));
  } else {
    for (Element f = 0; f < size; ++f) search(f);
  }
  for (Element f = 0; f < size; ++f) {
    ++rep.checked;
    if (!left[f]) rep.fail("frattini", loc.label(f) + " is not in N N_L(T)");
    if (!right[f]) rep.fail("frattini", loc.label(f) + " is not in N_L(T) N");
  }
  return rep;
}

CheckReport check_splitting(const Locality& loc, const ElementSet& n, const ElementSet& up_max) {
  CheckReport rep;
  for (Element x : n)
    for (Element f : up_max) {
      const auto xf = loc.mul(x, f);
      if (xf < 0) continue;
      ++rep.checked;
      const Element w1[2] = {x, f};
      const Mask a = loc.s_w_mask(w1);
      const Mask b = loc.s_g_mask(static_cast<Element>(xf));
      const auto c = loc.conj(x, f);
      if (c < 0) {
        rep.fail("splitting", "x^f undefined for x = " + loc.label(x) + ", f = " + loc.label(f));
        continue;
      }
      const Element w2[2] = {f, static_cast<Element>(c)};
      const Mask d = loc.s_w_mask(w2);
      if (a != b || b != d)
        rep.fail("splitting", "S_(x,f), S_xf and S_(f,x^f) differ for x = " + loc.label(x) + ", f = " + loc.label(f));
    }
  return rep;
}

CheckReport check_normal_properties(const Locality& loc, const ElementSet& n, const ElementSet& up_max,
                                    const Limits& limits) {
  CheckReport rep;
  const ElementSet ts = n & loc.s_set();
  const Mask t = loc.to_mask(ts);
  ++rep.checked;
  if (!loc.is_s_subgroup(t)) rep.fail("sylow-intersection", "S ∩ N is not a subgroup");
  if (!is_strongly_closed(loc, t)) rep.fail("strongly-closed", "S ∩ N is not strongly closed");

  for (Element x : n) {
    const Mask sx = loc.s_g_mask(x);
    for (Mask p : loc.s_subgroups()) {
      if (!subset(p, sx)) continue;
      ++rep.checked;
      if (product_mask(loc, p, t) != product_mask(loc, loc.image(p, x), t))
        rep.fail("t-translation", "PT ≠ P^x T for x = " + loc.label(x));
    }
  }

  for (const auto& h : locality_subgroups(loc, loc.prime(), limits)) {
    if (!h.is_subset_of(n) || !ts.is_subset_of(h)) continue;
    ++rep.checked;
    if (h != ts) rep.fail("sylow-intersection", "S ∩ N is not a maximal p-subgroup of N");
  }

  for (Element f : up_max) {
    ++rep.checked;
    if (!subset(t, loc.s_g_mask(f))) rep.fail("up-maximal-contains-t", "T ⊄ S_f for f = " + loc.label(f));
    if (!up_max.contains(loc.invert(f))) rep.fail("up-maximal-inverse", "f⁻¹ not ↑-maximal for f = " + loc.label(f));
  }
  if (!loc.normalizer(loc.full_mask()).is_subset_of(up_max))
    rep.fail("up-maximal-normalizer", "an element of N_L(S) is not ↑-maximal");
  return rep;
}

CheckReport check_up_readings(const Locality& loc, const ElementSet& n) {
  CheckReport rep;
  for (Element f = 0; f < loc.size(); ++f)
    for (Element g = 0; g < loc.size(); ++g) {
      ++rep.checked;
      const auto r = up_relation(loc, n, f, loc.s_g_mask(f), g, loc.s_g_mask(g));
      if (r.equation != r.commuting_square)
        rep.fail("up-readings", "xg = fy and the commuting square disagree for f = " + loc.label(f) +
                                    ", g = " + loc.label(g));
    }
  return rep;
}

}  // namespace lockit
