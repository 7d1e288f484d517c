#include "lockit/quotient.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <unordered_set>

#include "lockit/omega.hpp"
#include "lockit/word_states.hpp"

namespace lockit {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<WordState, WordState>& p) const {
    return WordStateHash{}(p.first) * 31 + WordStateHash{}(p.second);
  }
};

// Visits every pair (state(w), state(wβ*)) for words w over the given letters, each with a
// shortest source word. Returns false if the state budget was reached.
template <class Visit>
bool joint_closure(WordStates& a, WordStates& b, const std::vector<std::pair<Element, Element>>& letters,
                   std::size_t budget, Visit&& visit) {
  using Joint = std::pair<WordState, WordState>;
  std::unordered_set<Joint, PairHash> seen;
  std::deque<std::pair<Joint, Word>> queue;
  const Joint start{a.empty(), b.empty()};
  seen.insert(start);
  queue.push_back({start, {}});
  while (!queue.empty()) {
    auto [cur, word] = std::move(queue.front());
    queue.pop_front();
    visit(cur.first, cur.second, word);
    for (const auto& [x, y] : letters) {
      Joint next{a.concat(cur.first, a.letter(x)), b.concat(cur.second, b.letter(y))};
      if (!seen.insert(next).second) continue;
      if (seen.size() > budget) return false;
      Word w = word;
      w.push_back(x);
      queue.push_back({std::move(next), std::move(w)});
    }
  }
  return true;
}

// Image of a subset of S under β as a mask over S'; nullopt if some element leaves S'.
std::optional<Mask> map_mask(const Projection& beta, Mask m) {
  Mask out = 0;
  for (; m; m &= m - 1) {
    const Element x = beta.source->s_elements()[std::countr_zero(m)];
    const int pos = beta.target->s_pos(beta.map[x]);
    if (pos < 0) return std::nullopt;
    out |= Mask{1} << pos;
  }
  return out;
}

ElementSet image_set(const std::vector<Element>& map, std::size_t universe, const ElementSet& x) {
  ElementSet out(universe);
  for (Element e : x) out.insert(map[e]);
  return out;
}

ElementSet preimage_set(const std::vector<Element>& map, std::size_t universe, const ElementSet& y) {
  ElementSet out(universe);
  for (Element e = 0; e < universe; ++e)
    if (y.contains(map[e])) out.insert(e);
  return out;
}

// Adds x to a closed partial subgroup h and closes under inversion and binary products.
ElementSet close_with(const Locality& loc, ElementSet h, const std::vector<Element>& adjoin) {
  std::vector<Element> members = h.to_vector();
  std::vector<Element> work;
  auto add = [&](Element e) {
    if (h.contains(e)) return;
    h.insert(e);
    work.push_back(e);
  };
  for (Element x : adjoin) add(x);
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    members.push_back(x);
    add(loc.invert(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Element y = members[i];
      if (const auto p = loc.mul(x, y); p >= 0) add(static_cast<Element>(p));
      if (const auto p = loc.mul(y, x); p >= 0) add(static_cast<Element>(p));
    }
  }
  return h;
}

std::string label_set(const Locality& loc, const ElementSet& x) {
  std::string out = "{";
  bool first = true;
  for (Element e : x) {
    if (!first) out += ",";
    out += loc.label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

QuotientLocality quotient(const Locality& loc, const ElementSet& n) {
  if (!is_partial_normal(loc, n)) fail(ErrorKind::invalid_input, "quotient by a subset that is not partial normal");
  QuotientLocality q;
  q.n = n;
  q.up_max = up_maximal_elements(loc, n);
  q.cosets = maximal_cosets(loc, n, q.up_max);
  const std::size_t m = q.cosets.blocks.size();
  q.rho.assign(q.cosets.block_of.begin(), q.cosets.block_of.end());
  q.lift = q.cosets.representatives;
  LOCKIT_ENSURE(q.rho[loc.identity()] == 0, "the identity lies in block 0");

  const auto& pt = loc.tables();
  Locality::Tables t;
  t.name = loc.name() + "/N";
  t.kind = "quotient";
  t.prime = loc.prime();
  t.ambient = pt.ambient;
  t.delta_mode = DeltaMode::explicit_list;
  t.rep.resize(m);
  t.inverse.resize(m);
  t.labels.resize(m);
  for (std::size_t b = 0; b < m; ++b) {
    t.rep[b] = loc.rep(q.lift[b]);
    t.inverse[b] = q.rho[loc.invert(q.lift[b])];
    t.labels[b] = "[" + loc.label(q.lift[b]) + "]";
  }
  t.fiber.assign(pt.fiber.size(), kUndefined);
  for (std::size_t a = 0; a < pt.fiber.size(); ++a)
    if (pt.fiber[a] >= 0) t.fiber[a] = static_cast<std::int32_t>(q.rho[static_cast<Element>(pt.fiber[a])]);

  std::vector<int> sbar_pos(m, -1);
  for (Element s : loc.s_elements()) sbar_pos[q.rho[s]] = 0;
  for (std::size_t b = 0; b < m; ++b)
    if (sbar_pos[b] == 0) {
      sbar_pos[b] = static_cast<int>(t.s_elements.size());
      t.s_elements.push_back(static_cast<Element>(b));
    }
  const std::size_t k = loc.s_order();
  const std::size_t kq = t.s_elements.size();
  auto bar = [&](int pos) { return sbar_pos[q.rho[loc.s_elements()[pos]]]; };

  // The letter of Nf is the conjugation map of f pushed through ρ.
  t.letter.assign(m * kq, kNoImage);
  for (std::size_t b = 0; b < m; ++b) {
    const Element f = q.lift[b];
    for (std::size_t i = 0; i < k; ++i) {
      const int j = loc.letter(f, static_cast<int>(i));
      if (j == kNoImage) continue;
      auto& slot = t.letter[b * kq + bar(static_cast<int>(i))];
      const auto img = static_cast<std::uint8_t>(bar(j));
      LOCKIT_ENSURE(slot == kNoImage || slot == img, "conjugation by a representative is well defined modulo N");
      slot = img;
    }
  }
  for (Mask p : loc.delta()) {
    Mask img = 0;
    for (Mask x = p; x; x &= x - 1) img |= Mask{1} << bar(std::countr_zero(x));
    t.delta.push_back(img);
  }
  q.locality = std::make_shared<const Locality>(Locality(std::move(t)));

  const Locality& ql = *q.locality;
  for (Element x = 0; x < loc.size(); ++x)
    for (Element y = 0; y < loc.size(); ++y) {
      const auto xy = loc.mul(x, y);
      if (xy < 0) continue;
      const auto bxy = ql.mul(q.rho[x], q.rho[y]);
      if (bxy < 0 || static_cast<Element>(bxy) != q.rho[static_cast<Element>(xy)])
        fail(ErrorKind::internal, "block product is not well defined at (" + loc.label(x) + "," + loc.label(y) + ")");
    }
  return q;
}

ElementSet kernel(const Projection& beta) {
  ElementSet out(beta.source->size());
  for (Element x = 0; x < beta.source->size(); ++x)
    if (beta.map[x] == beta.target->identity()) out.insert(x);
  return out;
}

CheckReport check_projection(const Projection& beta, std::size_t state_budget) {
  const Locality& src = *beta.source;
  const Locality& tgt = *beta.target;
  if (beta.map.size() != src.size() || beta.lift.size() != tgt.size())
    fail(ErrorKind::invalid_input, "projection tables have the wrong size");
  CheckReport rep;
  for (Element y = 0; y < tgt.size(); ++y) {
    ++rep.checked;
    if (beta.map[beta.lift[y]] != y) rep.fail("surjective", "lift of " + tgt.label(y) + " does not map back");
  }
  for (Element x = 0; x < src.size(); ++x) {
    ++rep.checked;
    if (beta.map[src.invert(x)] != tgt.invert(beta.map[x]))
      rep.fail("inverse", "image of the inverse of " + src.label(x));
  }

  WordStates a(src);
  WordStates b(tgt);
  std::vector<std::pair<Element, Element>> all;
  for (Element x = 0; x < src.size(); ++x) all.push_back({x, beta.map[x]});
  const bool complete_all = joint_closure(a, b, all, state_budget, [&](const WordState& u, const WordState& v, const Word& w) {
    ++rep.checked;
    if (!a.in_domain(u)) return;
    if (!b.in_domain(v)) {
      rep.fail("H1", format_word(w) + " ∈ D but its image is not in D'");
      return;
    }
    const auto pu = a.product(u);
    const auto pv = b.product(v);
    if (!pu || !pv || beta.map[*pu] != *pv) rep.fail("H2", "product of " + format_word(w) + " is not preserved");
  });
  if (!complete_all) rep.fail("state-budget", "joint closure over all letters exceeded the state budget");

  std::vector<std::pair<Element, Element>> lifted;
  for (Element y = 0; y < tgt.size(); ++y) lifted.push_back({beta.lift[y], y});
  const bool complete_lift = joint_closure(a, b, lifted, state_budget, [&](const WordState& u, const WordState& v, const Word& w) {
    ++rep.checked;
    if (b.in_domain(v) && !a.in_domain(u))
      rep.fail("domain-surjective", "image of " + format_word(w) + " lies in D' but the lift is not in D");
  });
  if (!complete_lift) rep.fail("state-budget", "joint closure over lifted letters exceeded the state budget");

  std::unordered_set<Mask> images;
  for (Mask p : src.delta()) {
    ++rep.checked;
    const auto img = map_mask(beta, p);
    if (!img) {
      rep.fail("objects", "an object is not mapped into S'");
      continue;
    }
    images.insert(*img);
    if (!tgt.in_delta(*img)) rep.fail("objects", "the image of an object is not in Δ'");
  }
  for (Mask p : tgt.delta()) {
    ++rep.checked;
    if (!images.contains(p)) rep.fail("objects", "a member of Δ' is not the image of an object");
  }
  return rep;
}

CheckReport quotient_properties(const Locality& parent, const QuotientLocality& q) {
  const Locality& ql = *q.locality;
  const Projection rho = q.projection(parent);
  CheckReport rep;

  for (std::size_t b = 0; b < q.cosets.blocks.size(); ++b) {
    ++rep.checked;
    ElementSet fiber(parent.size());
    for (Element x = 0; x < parent.size(); ++x)
      if (q.rho[x] == b) fiber.insert(x);
    if (fiber != q.cosets.blocks[b]) rep.fail("fibers", "fiber " + ql.label(static_cast<Element>(b)) + " is not a maximal coset");
    if (!q.up_max.contains(q.lift[b])) rep.fail("fibers", "representative is not ↑-maximal");
  }
  ++rep.checked;
  if (kernel(rho) != q.n) rep.fail("kernel", "ρ⁻¹(1) differs from N");

  // Words of ↑-maximal elements: S_w maps onto S̄_w̄ and membership in D is preserved both ways.
  {
    WordStates a(parent);
    WordStates b(ql);
    std::vector<std::pair<Element, Element>> letters;
    for (Element f : q.up_max) letters.push_back({f, q.rho[f]});
    const bool complete = joint_closure(a, b, letters, 2'000'000, [&](const WordState& u, const WordState& v, const Word& w) {
      ++rep.checked;
      const auto img = map_mask(rho, a.s_w(u));
      if (!img || *img != b.s_w(v)) rep.fail("maximal-words", "image of S_w differs from S̄_w̄ for " + format_word(w));
      if (a.in_domain(u) != b.in_domain(v)) rep.fail("maximal-words", "D membership differs for " + format_word(w));
    });
    if (!complete) rep.fail("state-budget", "joint closure over ↑-maximal letters exceeded the state budget");
  }

  const Mask t = parent.to_mask(q.n & parent.s_set());
  for (Mask p : parent.delta())
    for (Mask r : parent.delta()) {
      if ((t & ~(p & r)) != 0) continue;
      ++rep.checked;
      const auto pb = map_mask(rho, p);
      const auto rb = map_mask(rho, r);
      if (!pb || !rb) {
        rep.fail("transporters", "an object leaves S̄");
        continue;
      }
      const ElementSet img = image_set(q.rho, ql.size(), parent.transporter(p, r));
      if (img != ql.transporter(*pb, *rb)) rep.fail("transporters", "ρ(N_L(P,Q)) differs from N_L̄(P̄,Q̄)");
      if (p != r) continue;
      const auto np = parent.normalizer(p).to_vector();
      for (Element x : np)
        for (Element y : np) {
          const auto xy = parent.mul(x, y);
          if (xy < 0 || ql.mul(q.rho[x], q.rho[y]) != static_cast<std::int32_t>(q.rho[static_cast<Element>(xy)]))
            rep.fail("transporters", "ρ is not a homomorphism on N_L(P)");
        }
    }

  ++rep.checked;
  const bool bijective = ql.size() == parent.size();
  if (bijective != (q.n.count() == 1)) rep.fail("bijective", "ρ is bijective iff N = 1 fails");

  for (Element a = 0; a < ql.size(); ++a)
    for (Element b = 0; b < ql.size(); ++b) {
      if (ql.mul(a, b) < 0) continue;
      ++rep.checked;
      if (parent.mul(q.lift[a], q.lift[b]) < 0)
        rep.fail("uniqueness", "(" + ql.label(a) + "," + ql.label(b) + ") ∈ D̄ has no lift in D");
    }

  rep.merge(check_projection(rho));
  return rep;
}

FirstIsomorphism first_isomorphism(const Locality& parent, const Projection& beta, const QuotientLocality& q) {
  if (beta.source != &parent) fail(ErrorKind::invalid_input, "β does not start at L");
  const ElementSet ker = kernel(beta);
  if (!q.n.is_subset_of(ker)) fail(ErrorKind::invalid_input, "N is not contained in Ker(β)");
  const Locality& ql = *q.locality;
  FirstIsomorphism out;
  out.gamma.resize(ql.size());
  for (Element b = 0; b < ql.size(); ++b) out.gamma[b] = beta.map[q.lift[b]];
  for (Element x = 0; x < parent.size(); ++x) {
    ++out.report.checked;
    if (out.gamma[q.rho[x]] != beta.map[x]) out.report.fail("factorization", "γ(ρ(x)) ≠ β(x) at " + parent.label(x));
  }
  std::vector<Element> lift(beta.target->size());
  for (Element y = 0; y < lift.size(); ++y) lift[y] = q.rho[beta.lift[y]];
  out.report.merge(check_projection(Projection{&ql, beta.target, out.gamma, lift}));
  std::vector<Element> sorted = out.gamma;
  std::sort(sorted.begin(), sorted.end());
  out.isomorphism = sorted.size() == beta.target->size() &&
                    std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && out.report.passed();
  ++out.report.checked;
  if (out.isomorphism != (q.n == ker)) out.report.fail("isomorphism", "γ is an isomorphism iff N = Ker(β) fails");
  return out;
}

CheckReport check_third_isomorphism(const Locality& loc, const ElementSet& n1, const ElementSet& n2) {
  if (!n1.is_subset_of(n2)) fail(ErrorKind::invalid_input, "N1 is not contained in N2");
  CheckReport rep;
  const QuotientLocality q1 = quotient(loc, n1);
  const ElementSet n2bar = image_set(q1.rho, q1.locality->size(), n2);
  ++rep.checked;
  if (!is_partial_normal(*q1.locality, n2bar)) {
    rep.fail("third-isomorphism", "the image of N2 is not partial normal in L/N1");
    return rep;
  }
  const QuotientLocality q12 = quotient(*q1.locality, n2bar);
  const QuotientLocality q2 = quotient(loc, n2);
  Projection beta{&loc, q12.locality.get(), {}, {}};
  for (Element x = 0; x < loc.size(); ++x) beta.map.push_back(q12.rho[q1.rho[x]]);
  for (Element y = 0; y < q12.locality->size(); ++y) beta.lift.push_back(q1.lift[q12.lift[y]]);
  rep.merge(check_projection(beta));
  ++rep.checked;
  if (kernel(beta) != n2) rep.fail("third-isomorphism", "kernel of the composite differs from N2");
  const FirstIsomorphism iso = first_isomorphism(loc, beta, q2);
  rep.merge(iso.report);
  ++rep.checked;
  if (!iso.isomorphism) rep.fail("third-isomorphism", "L/N2 is not isomorphic to (L/N1)/(N2/N1)");
  return rep;
}

std::vector<ElementSet> partial_subgroups_over(const Locality& loc, const ElementSet& base, std::size_t cap) {
  const ElementSet start = close_with(loc, ElementSet(loc.size(), {loc.identity()}), base.to_vector());
  std::vector<ElementSet> out{start};
  std::unordered_set<ElementSet> seen{start};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element x = 0; x < loc.size(); ++x) {
      if (out[i].contains(x)) continue;
      ElementSet h = close_with(loc, out[i], {x});
      if (!seen.insert(h).second) continue;
      if (out.size() >= cap)
        fail(ErrorKind::resource, "more than " + std::to_string(cap) + " partial subgroups over the base");
      out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport subgroup_correspondence(const Locality& parent, const QuotientLocality& q, std::size_t cap) {
  const Locality& ql = *q.locality;
  CheckReport rep;
  const auto above = partial_subgroups_over(parent, q.n, cap);
  const auto below = partial_subgroups_over(ql, ElementSet(ql.size(), {ql.identity()}), cap);
  const std::unordered_set<ElementSet> below_set(below.begin(), below.end());
  ++rep.checked;
  if (above.size() != below.size())
    rep.fail("correspondence", std::to_string(above.size()) + " partial subgroups over N but " +
                                   std::to_string(below.size()) + " in L/N");
  for (const auto& h : above) {
    ++rep.checked;
    const ElementSet img = image_set(q.rho, ql.size(), h);
    if (!below_set.contains(img)) {
      rep.fail("correspondence", "image of " + label_set(parent, h) + " is not a partial subgroup");
      continue;
    }
    if (preimage_set(q.rho, parent.size(), img) != h) rep.fail("correspondence", "preimage of the image differs");
    if (is_partial_normal(parent, h) != is_partial_normal(ql, img))
      rep.fail("correspondence", "normality of " + label_set(parent, h) + " is not preserved");
  }
  for (const auto& hb : below) {
    ++rep.checked;
    const ElementSet pre = preimage_set(q.rho, parent.size(), hb);
    if (image_set(q.rho, ql.size(), pre) != hb) rep.fail("correspondence", "image of the preimage differs");
  }
  return rep;
}

CheckReport check_image_lemmas(const Locality& parent, const QuotientLocality& q, const std::vector<ElementSet>& normals,
                               std::size_t samples, std::uint64_t seed, std::size_t cap) {
  const Locality& ql = *q.locality;
  const std::size_t n = parent.size();
  CheckReport rep;

  std::vector<ElementSet> xs{parent.s_set(), parent.normalizer(parent.full_mask())};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    ElementSet x(n);
    for (Element e = 0; e < n; ++e)
      if (rng() & 1U) x.insert(e);
    xs.push_back(std::move(x));
  }
  for (const auto& h : partial_subgroups_over(parent, q.n, cap)) {
    const ElementSet hb = image_set(q.rho, ql.size(), h);
    for (const auto& x : xs) {
      ++rep.checked;
      if (image_set(q.rho, ql.size(), x & h) != (image_set(q.rho, ql.size(), x) & hb))
        rep.fail("image-intersection", "(X∩H)ρ ≠ Xρ ∩ Hρ for H = " + label_set(parent, h));
    }
  }

  const auto p_subgroups = locality_subgroups(ql, ql.prime());
  for (const auto& m : normals) {
    if (!q.n.is_subset_of(m)) continue;
    ++rep.checked;
    const ElementSet mb = image_set(q.rho, ql.size(), m);
    const ElementSet tb = image_set(q.rho, ql.size(), parent.s_set() & m);
    bool is_p = false;
    bool maximal = true;
    for (const auto& h : p_subgroups) {
      if (h == tb) is_p = true;
      if (h.count() > tb.count() && tb.is_subset_of(h) && h.is_subset_of(mb)) maximal = false;
    }
    if (!is_p || !maximal)
      rep.fail("image-maximal-p", "(S∩M)ρ is not a maximal p-subgroup of Mρ for M = " + label_set(parent, m));
  }

  const Mask t = parent.to_mask(q.n & parent.s_set());
  const ElementSet nt = parent.normalizer(t);
  const Locality lt = normalizer_locality(parent, t);
  const auto ids = nt.to_vector();
  std::vector<std::int32_t> local(n, kUndefined);
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<std::int32_t>(i);
  Projection restricted{&lt, &ql, {}, {}};
  for (Element x : ids) restricted.map.push_back(q.rho[x]);
  bool lifts_ok = true;
  for (Element b = 0; b < ql.size(); ++b) {
    const auto l = local[q.lift[b]];
    if (l < 0) {
      lifts_ok = false;
      break;
    }
    restricted.lift.push_back(static_cast<Element>(l));
  }
  ++rep.checked;
  if (!lifts_ok) rep.fail("normalizer-projection", "a representative lies outside N_L(T)");
  else rep.merge(check_projection(restricted));
  return rep;
}

}  // namespace lockit

namespace lockit {

CheckReport check_ns_locality(const Locality& loc, const ElementSet& n) {
  CheckReport rep;
  const Locality ns = ns_locality(loc, n);
  ++rep.checked;
  const ValidationReport v = validate_locality(ns);
  for (const auto& f : v.findings) rep.fail("ns-locality", f.rule + ": " + f.detail);
  return rep;
}

CheckReport check_invariant_subsets(const Locality& loc, const OmegaPoset& omega, std::size_t samples,
                                    std::uint64_t seed) {
  CheckReport rep;
  const std::size_t k = loc.s_order();
  std::mt19937_64 rng(seed);
  auto conj_in_s = [&](Mask p, int x) {
    Mask out = 0;
    const int xi = loc.s_inv(x);
    for (Mask m = p; m; m &= m - 1) out |= Mask{1} << loc.s_mul(loc.s_mul(xi, std::countr_zero(m)), x);
    return out;
  };
  const auto& subs = loc.s_subgroups();
  for (std::size_t i = 0; i < samples; ++i) {
    const Mask p = subs[rng() % subs.size()];
    Mask x = p;
    const std::size_t extra = rng() % 3;
    for (std::size_t e = 0; e < extra; ++e) x |= Mask{1} << (rng() % k);
    for (Mask prev = 0; prev != x;) {
      prev = x;
      for (Mask m = prev; m; m &= m - 1) x |= conj_in_s(p, std::countr_zero(m));
    }
    ++rep.checked;
    if (x == p) continue;
    const Mask ps = star(loc, omega, p);
    Mask norm = 0;
    for (std::size_t s = 0; s < k; ++s)
      if (conj_in_s(ps, static_cast<int>(s)) == ps) norm |= Mask{1} << s;
    const Mask meet = x & norm;
    if ((p & ~meet) != 0 || meet == p) rep.fail("invariant-subset", "P is not a proper subset of X ∩ N_S(P^⋆)");
  }
  return rep;
}

}  // namespace lockit
