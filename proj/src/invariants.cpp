#include "lockit/invariants.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

#include "lockit/group_algorithms.hpp"
#include "lockit/products.hpp"

namespace lockit {

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// x^s for a subgroup X ≤ S and s ∈ S, by position.
Mask conj_in_s(const Locality& loc, Mask x, int s) {
  Mask out = 0;
  const int si = loc.s_inv(s);
  for (; x; x &= x - 1) out |= Mask{1} << loc.s_mul(loc.s_mul(si, std::countr_zero(x)), s);
  return out;
}

Mask generated_in_s(const Locality& loc, Mask x) {
  Mask h = x | loc.trivial_mask();
  for (Mask prev = 0; prev != h;) {
    prev = h;
    for (Mask a = prev; a; a &= a - 1)
      for (Mask b = prev; b; b &= b - 1) h |= Mask{1} << loc.s_mul(std::countr_zero(a), std::countr_zero(b));
  }
  return h;
}

// N_Y(X) for subgroups X, Y ≤ S.
Mask normalizer_in(const Locality& loc, Mask y, Mask x) {
  Mask out = 0;
  for (Mask m = y; m; m &= m - 1)
    if (conj_in_s(loc, x, std::countr_zero(m)) == x) out |= Mask{1} << std::countr_zero(m);
  return out;
}

std::size_t p_part_of(std::size_t n, unsigned p) { return p_part(n, p); }

Mask pair_mask(const Locality& loc, Element x, Element y) {
  const Element w[2] = {x, y};
  return loc.s_w_mask(w);
}

}  // namespace

CheckReport check_conjugation_laws(const PartialGroup& pg) {
  CheckReport rep;
  const Element one = pg.identity();
  for (Element g = 0; g < pg.size(); ++g) {
    ++rep.checked;
    if (pg.conjugate(one, g) != std::optional<Element>(one)) rep.fail("identity-conjugate", "1^g ≠ 1 for " + pg.label(g));
    if (pg.conjugate(g, one) != std::optional<Element>(g)) rep.fail("identity-conjugate", "conjugation by 1 moves " + pg.label(g));
    for (Element x = 0; x < pg.size(); ++x) {
      const auto xg = pg.conjugate(x, g);
      if (!xg) continue;
      ++rep.checked;
      const auto inv = pg.conjugate(pg.invert(x), g);
      if (!inv || *inv != pg.invert(*xg)) rep.fail("conjugate-inverse", "D(g) is not closed under inversion");
      if (pg.conjugate(*xg, pg.invert(g)) != std::optional<Element>(x))
        rep.fail("conjugate-inverse", "conjugation by g⁻¹ does not undo conjugation by g");
      if (*xg != x) continue;
      const auto gx = pg.conjugate(g, x);
      if (!gx) continue;
      const Element fg[2] = {x, g};
      const Element gf[2] = {g, x};
      const auto a = pg.try_product(fg);
      const auto b = pg.try_product(gf);
      if (!a || !b || *a != *b || *gx != g)
        rep.fail("commuting-pair", "f^g = f without fg = gf for (" + pg.label(x) + "," + pg.label(g) + ")");
    }
  }
  return rep;
}

CheckReport check_dedekind(const Locality& loc, const std::vector<ElementSet>& family) {
  CheckReport rep;
  std::vector<ElementSet> subs;
  for (const auto& h : family)
    if (is_partial_subgroup(loc, h)) subs.push_back(h);
  for (const auto& h : subs)
    for (const auto& k : subs) {
      const ElementSet hk = product_set(loc, h, k);
      if (!is_partial_subgroup(loc, hk)) continue;
      for (const auto& a : subs) {
        if (k.is_subset_of(a)) {
          ++rep.checked;
          if (product_set(loc, a & h, k) != (a & hk)) rep.fail("dedekind", "A ∩ HK ≠ (A∩H)K with K ≤ A");
        }
        if (h.is_subset_of(a)) {
          ++rep.checked;
          if (product_set(loc, h, a & k) != (a & hk)) rep.fail("dedekind", "A ∩ HK ≠ H(A∩K) with H ≤ A");
        }
      }
    }
  return rep;
}

CheckReport check_subgroup_images(const Locality& parent, const QuotientLocality& q, const Limits& limits) {
  CheckReport rep;
  const Locality& ql = *q.locality;
  for (const auto& h : locality_subgroups(parent, 0, limits)) {
    ++rep.checked;
    ElementSet img(ql.size());
    for (Element x : h) img.insert(q.rho[x]);
    if (!ql.is_subgroup(img)) rep.fail("subgroup-image", "the image of a subgroup is not a subgroup");
  }
  return rep;
}

CheckReport check_objective_laws(const Locality& loc, std::size_t samples, std::uint64_t seed) {
  CheckReport rep;
  const std::size_t n = loc.size();

  for (Element g = 0; g < n; ++g)
    for (Mask x : loc.delta()) {
      if (!subset(x, loc.s_g_mask(g))) continue;
      ++rep.checked;
      const Mask y = loc.image(x, g);
      if (!loc.in_delta(y)) {
        rep.fail("normalizer-isomorphism", "X^g ∉ Δ");
        continue;
      }
      const auto nx = loc.normalizer(x).to_vector();
      ElementSet img(n);
      bool defined = true;
      for (Element a : nx) {
        const auto c = loc.conj(a, g);
        if (c < 0) defined = false;
        else img.insert(static_cast<Element>(c));
      }
      if (!defined) {
        rep.fail("normalizer-isomorphism", "N_L(X) ⊄ D(" + loc.label(g) + ")");
        continue;
      }
      if (img != loc.normalizer(y) || img.count() != nx.size())
        rep.fail("normalizer-isomorphism", "c_g is not a bijection N_L(X) → N_L(X^g)");
      for (Element a : nx)
        for (Element b : nx) {
          const auto ab = loc.mul(a, b);
          if (ab < 0 || loc.conj(static_cast<Element>(ab), g) != loc.mul(static_cast<Element>(loc.conj(a, g)),
                                                                         static_cast<Element>(loc.conj(b, g))))
            rep.fail("normalizer-isomorphism", "c_g is not a homomorphism on N_L(X)");
        }
    }

  for (Element g1 = 0; g1 < n; ++g1)
    for (Element g2 = 0; g2 < n; ++g2) {
      const auto g12 = loc.mul(g1, g2);
      if (g12 < 0) continue;
      ++rep.checked;
      const Mask x0 = pair_mask(loc, g1, g2);
      for (Element a : loc.normalizer(x0)) {
        const auto c1 = loc.conj(a, g1);
        const auto c2 = c1 < 0 ? kUndefined : loc.conj(static_cast<Element>(c1), g2);
        if (c2 < 0 || c2 != loc.conj(a, static_cast<Element>(g12)))
          rep.fail("conjugation-composite", "c_{g1}∘c_{g2} ≠ c_{g1g2} on N_L(S_w)");
      }
      for (Mask x : loc.delta()) {
        if (!subset(x, loc.s_g_mask(g1)) || !subset(x, loc.s_g_mask(static_cast<Element>(g12)))) continue;
        ++rep.checked;
        const Mask xf = loc.image(x, g1);
        if (!subset(xf, loc.s_g_mask(g2)) || loc.image(xf, g2) != loc.image(x, static_cast<Element>(g12)))
          rep.fail("object-conjugate", "X^{fg} ≠ (X^f)^g");
      }
    }

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Element w[3] = {static_cast<Element>(rng() % n), static_cast<Element>(rng() % n),
                          static_cast<Element>(rng() % n)};
    if (!loc.in_domain(w)) continue;
    ++rep.checked;
    const Element d = loc.product(w);
    const auto bc = loc.mul(w[1], w[2]);
    const auto ab = loc.mul(w[0], w[1]);
    if (bc < 0 || bc != loc.mul(loc.invert(w[0]), d)) rep.fail("triple-cancellation", "bc ≠ a⁻¹d for " + format_word(w));
    if (ab < 0 || ab != loc.mul(d, loc.invert(w[2]))) rep.fail("triple-cancellation", "ab ≠ dc⁻¹ for " + format_word(w));
  }

  const auto ns = loc.normalizer(loc.full_mask()).to_vector();
  std::vector<Word> words{{}};
  for (Element x = 0; x < n; ++x) {
    words.push_back({x});
    for (Element y = 0; y < n; ++y)
      if (loc.mul(x, y) >= 0) words.push_back({x, y});
  }
  for (const auto& w : words)
    for (Element g : ns)
      for (Element h : ns) {
        ++rep.checked;
        Word v{g};
        v.insert(v.end(), w.begin(), w.end());
        v.push_back(h);
        if (!loc.in_domain(v)) rep.fail("normalizer-biset", format_word(v) + " ∉ D");
      }
  return rep;
}

CheckReport check_omega_laws(const Locality& loc, const OmegaPoset& omega, const FusionData& fusion,
                             const Limits& limits) {
  CheckReport rep;
  const unsigned p = loc.prime();
  const auto& subs = loc.s_subgroups();

  for (const auto& x : locality_subgroups(loc, p, limits))
    for (Mask v : subs) {
      const ElementSet vs = loc.to_set(v);
      if (!vs.is_subset_of(x) || vs == x) continue;
      ++rep.checked;
      const Mask vstar = star(loc, omega, v);
      ElementSet nx(loc.size());
      ElementSet nv(loc.size());
      for (Element a : x) {
        if (subset(vstar, loc.s_g_mask(a)) && loc.image(vstar, a) == vstar) nx.insert(a);
        if (subset(v, loc.s_g_mask(a)) && loc.image(v, a) == v) nv.insert(a);
      }
      if (!vs.is_subset_of(nx) || vs == nx) rep.fail("normalizer-growth", "V is not proper in N_X(V^⋆)");
      if (omega.contains(v) && (!vs.is_subset_of(nv) || vs == nv))
        rep.fail("normalizer-growth", "V ∈ Ω is not proper in N_X(V)");
    }

  for (Mask v : omega.members)
    for (Mask w : omega.members) {
      if (!subset(v, w)) continue;
      const Mask pm = normalizer_in(loc, w, v);
      const Mask qm = normalizer_in(loc, loc.full_mask(), v);
      if (pm == qm) continue;
      ++rep.checked;
      if (subgroup_dim(loc, omega, pm) >= subgroup_dim(loc, omega, normalizer_in(loc, qm, pm)))
        rep.fail("dimension-growth", "dim(P) ≥ dim(N_Q(P))");
    }

  std::unordered_set<ElementSet> groups_seen;
  for (Mask pm : loc.delta()) {
    const ElementSet h = loc.normalizer(pm);
    const Mask ns = normalizer_in(loc, loc.full_mask(), pm);
    ++rep.checked;
    const bool sylow = static_cast<std::size_t>(popcount(ns)) == p_part_of(h.count(), p);
    if (sylow != is_fully_normalized(loc, omega, fusion, pm))
      rep.fail("sylow-normalizer", "N_S(P) ∈ Syl_p(N_L(P)) disagrees with full normalization");
    if (!groups_seen.insert(h).second) continue;
    if (h.count() > limits.max_subgroup_enumeration_order) continue;

    const LocalityGroupView view{&loc};
    const auto psubs = algo::subgroups_of(view, h, p);
    std::size_t best = 0;
    for (const auto& r : psubs) best = std::max(best, r.count());
    for (const auto& r : psubs) {
      bool maximal = true;
      for (const auto& r2 : psubs)
        if (r2.count() > r.count() && r.is_subset_of(r2)) maximal = false;
      if (!maximal) continue;
      ++rep.checked;
      if (r.count() != p_part_of(h.count(), p)) rep.fail("maximal-p-subgroups", "a maximal p-subgroup of N_L(P) is not Sylow");
    }
    ElementSet r(loc.size());
    for (const auto& cand : psubs)
      if (cand.count() == best) {
        r = cand;
        break;
      }
    const auto hv = h.to_vector();
    for (const auto& k : algo::subgroups_of(view, h, 0)) {
      bool normal = true;
      for (Element a : hv)
        for (Element x : k)
          if (!k.contains(static_cast<Element>(loc.mul(loc.mul(loc.invert(a), x), a)))) normal = false;
      if (!normal) continue;
      ++rep.checked;
      const ElementSet t = r & k;
      if (t.count() != p_part_of(k.count(), p)) rep.fail("sylow-intersection", "R ∩ K is not Sylow in K");
      ElementSet nt(loc.size());
      for (Element a : hv) {
        bool fixes = true;
        for (Element x : t)
          if (!t.contains(static_cast<Element>(loc.mul(loc.mul(loc.invert(a), x), a)))) fixes = false;
        if (fixes) nt.insert(a);
      }
      if (product_set(loc, nt, k) != h) rep.fail("frattini-argument", "H ≠ N_H(T)K");
    }
  }

  for (Mask x : subs)
    for (Mask y : subs) {
      ++rep.checked;
      const Mask lhs = generated_in_s(loc, star(loc, omega, x) | star(loc, omega, y));
      if (!subset(lhs, star(loc, omega, generated_in_s(loc, x | y))))
        rep.fail("star-join", "⟨X^⋆,Y^⋆⟩ ⊄ ⟨X,Y⟩^⋆");
    }

  std::vector<std::vector<Mask>> families{loc.delta()};
  for (Mask pm : loc.delta()) {
    std::vector<Mask> gamma;
    const auto conjugates = f_conjugates(loc, fusion, pm);
    for (Mask q : loc.delta())
      for (Mask c : conjugates)
        if (subset(c, q)) {
          gamma.push_back(q);
          break;
        }
    std::sort(gamma.begin(), gamma.end());
    if (std::find(families.begin(), families.end(), gamma) == families.end() && is_f_closed_family(loc, gamma))
      families.push_back(std::move(gamma));
  }
  for (const auto& gamma : families) {
    const Locality h = restrict_to(loc, gamma);
    const OmegaPoset oh = compute_omega(h);
    std::unordered_set<Mask> images;
    for (Mask x : oh.members) {
      ++rep.checked;
      const Mask sx = star(loc, omega, x);
      if (!images.insert(sx).second) rep.fail("omega-embedding", "X ↦ X^⋆ is not injective on a restriction");
      for (Mask y : oh.members)
        if (subset(x, y) && !subset(sx, star(loc, omega, y)))
          rep.fail("omega-embedding", "X ↦ X^⋆ is not order preserving on a restriction");
    }
    ++rep.checked;
    if (oh.dimension() > omega.dimension()) rep.fail("omega-embedding", "a restriction has larger dimension");
    if (oh.dimension() == omega.dimension() && !subset(o_p(h, oh), o_p(loc, omega)))
      rep.fail("omega-embedding", "equal dimension without O_p containment");
  }
  return rep;
}

CheckReport check_normal_laws(const Locality& loc, const ElementSet& n, const ElementSet& up_max,
                              const CosetPartition& cosets, std::size_t samples, std::uint64_t seed, std::size_t cap) {
  CheckReport rep;
  const std::size_t size = loc.size();
  const Mask t = loc.to_mask(n & loc.s_set());
  const ElementSet nt_set = loc.normalizer(t);
  const auto nt = nt_set.to_vector();
  const auto nv = n.to_vector();

  for (Element x : nv)
    for (Element f : nt) {
      if (loc.mul(x, f) >= 0) {
        ++rep.checked;
        const Word w{f, loc.invert(f), x, f};
        const auto xf = loc.conj(x, f);
        if (!loc.in_domain(w) || xf < 0) {
          rep.fail("commutation", "(f,f⁻¹,x,f) ∉ D");
        } else {
          const Element xfe = static_cast<Element>(xf);
          if (loc.mul(x, f) != loc.mul(f, xfe)) rep.fail("commutation", "xf ≠ f·x^f");
          const Mask a = pair_mask(loc, x, f);
          if (a != pair_mask(loc, f, xfe) || a != (loc.s_g_mask(x) & loc.s_g_mask(f)))
            rep.fail("commutation", "S_{(x,f)}, S_{(f,x^f)} and S_x ∩ S_f differ");
        }
      }
      const Element y = x;
      if (loc.mul(f, y) >= 0) {
        ++rep.checked;
        const Word w{f, y, loc.invert(f), f};
        const auto yf = loc.conj(y, loc.invert(f));
        if (!loc.in_domain(w) || yf < 0) {
          rep.fail("commutation", "(f,y,f⁻¹,f) ∉ D");
        } else {
          const Element yfe = static_cast<Element>(yf);
          if (loc.mul(f, y) != loc.mul(yfe, f)) rep.fail("commutation", "fy ≠ y^{f⁻¹}f");
          const Mask a = pair_mask(loc, f, y);
          if (a != pair_mask(loc, yfe, f) || a != (loc.s_g_mask(yfe) & loc.s_g_mask(f)))
            rep.fail("commutation", "S_{(f,y)}, S_{(y^{f⁻¹},f)} and S_{y^{f⁻¹}} ∩ S_f differ");
        }
      }
    }

  std::vector<Word> ws;
  for (Element a : nt) {
    ws.push_back({a});
    for (Element b : nt)
      if (loc.mul(a, b) >= 0) ws.push_back({a, b});
  }
  for (const auto& w : ws) {
    const Element g = loc.product(w);
    const Word winv = loc.invert_word(w);
    for (Element x : nv) {
      Word xw{x};
      xw.insert(xw.end(), w.begin(), w.end());
      if (loc.in_domain(xw)) {
        ++rep.checked;
        const Mask pm = loc.s_w_mask(xw);
        Word u = winv;
        u.insert(u.end(), xw.begin(), xw.end());
        if (!loc.in_domain(u) || !subset(pm, loc.s_g_mask(g)) || loc.s_w_mask(u) != loc.image(pm, g))
          rep.fail("conjugated-words", "S_{w⁻¹∘(x)∘w} ≠ P^g");
      }
      Word wy = w;
      wy.push_back(x);
      if (loc.in_domain(wy)) {
        ++rep.checked;
        const Mask qm = loc.s_w_mask(wy);
        Word v = wy;
        v.insert(v.end(), winv.begin(), winv.end());
        if (!loc.in_domain(v) || loc.s_w_mask(v) != qm) rep.fail("conjugated-words", "S_{w∘(y)∘w⁻¹} ≠ Q");
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::size_t found = 0;
  for (std::size_t attempt = 0; attempt < samples * 50 && found < samples; ++attempt) {
    const std::size_t len = 1 + attempt % 3;
    std::vector<Element> f(len), g(len);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      f[i] = nt[rng() % nt.size()];
      g[i] = nv[rng() % nv.size()];
      w.push_back(f[i]);
      w.push_back(g[i]);
    }
    if (!loc.in_domain(w)) continue;
    ++found;
    ++rep.checked;
    const Element pi = loc.product(w);
    Word wa(f.begin(), f.end());
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      Word u;
      for (std::size_t j = len; j-- > i + 1;) u.push_back(loc.invert(f[j]));
      u.push_back(g[i]);
      for (std::size_t j = i + 1; j < len; ++j) u.push_back(f[j]);
      if (!loc.in_domain(u)) ok = false;
      else wa.push_back(loc.product(u));
    }
    if (!ok || !loc.in_domain(wa) || loc.s_w_mask(wa) != loc.s_w_mask(w) || loc.product(wa) != pi)
      rep.fail("frattini-calculus", "rearranged word differs for " + format_word(w));
    Word wb;
    for (std::size_t i = 0; i < len && ok; ++i) {
      Word u(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i + 1));
      u.push_back(g[i]);
      for (std::size_t j = i + 1; j-- > 0;) u.push_back(loc.invert(f[j]));
      if (!loc.in_domain(u)) ok = false;
      else wb.push_back(loc.product(u));
    }
    wb.insert(wb.end(), f.begin(), f.end());
    if (!ok || !loc.in_domain(wb) || loc.product(wb) != pi)
      rep.fail("frattini-calculus", "left-rearranged word differs for " + format_word(w));
  }

  for (Element f : up_max)
    for (Element g = 0; g < size; ++g)
      for (Mask q : loc.delta()) {
        if (!subset(q, loc.s_g_mask(g)) || !up_related(loc, n, f, loc.s_g_mask(f), g, q)) continue;
        ++rep.checked;
        if (!up_max.contains(g) || q != loc.s_g_mask(g)) rep.fail("maximality-propagates", "↑ from a maximal pair leaves the maximal pairs");
      }

  for (Element g = 0; g < size; ++g)
    for (Element h = 0; h < size; ++h) {
      const Mask q = loc.s_g_mask(g);
      const Mask r = loc.s_g_mask(h);
      if (!subset(t, r) || !up_related(loc, n, g, q, h, r)) continue;
      ++rep.checked;
      std::vector<Element> ys;
      for (Element y : nv)
        if (loc.mul(y, h) == static_cast<std::int32_t>(g)) ys.push_back(y);
      if (ys.size() != 1) {
        rep.fail("unique-factor", std::to_string(ys.size()) + " elements y ∈ N with g = yh");
        continue;
      }
      const Element y = ys.front();
      if (!subset(q, loc.s_g_mask(y)) || !subset(loc.image(q, y), r) || !subset(q, pair_mask(loc, y, h)))
        rep.fail("unique-factor", "Q^y ≰ R or Q ≰ S_{(y,h)}");
      auto sylow_in_n = [&](Mask x) {
        std::size_t nn = 0;
        for (Element a : nv)
          if (subset(x, loc.s_g_mask(a)) && loc.image(x, a) == x) ++nn;
        return static_cast<std::size_t>(popcount(normalizer_in(loc, t, x))) == p_part_of(nn, loc.prime());
      };
      if (subset(q, loc.s_g_mask(y)) && sylow_in_n(loc.image(q, g)) && !sylow_in_n(loc.image(q, y)))
        rep.fail("unique-factor", "N_T(Q^y) is not Sylow in N_N(Q^y)");
    }

  {
    Mask cst = 0;
    for (std::size_t s = 0; s < loc.s_order(); ++s) {
      bool central = true;
      for (Mask m = t; m; m &= m - 1) {
        const int a = std::countr_zero(m);
        if (loc.s_mul(static_cast<int>(s), a) != loc.s_mul(a, static_cast<int>(s))) central = false;
      }
      if (central) cst |= Mask{1} << s;
    }
    const ElementSet nnt = n & nt_set;
    if (generated_in_s(loc, cst | t) == loc.full_mask() && nnt.is_subset_of(loc.normalizer(loc.full_mask()))) {
      ++rep.checked;
      if (!nt_set.is_subset_of(up_max)) rep.fail("normalizer-maximal", "an element of N_L(T) is not ↑-maximal");
    }
  }

  {
    std::unordered_set<ElementSet> seen;
    std::vector<Element> conjugators = nv;
    conjugators.insert(conjugators.end(), nt.begin(), nt.end());
    for (Element x : nv) {
      ElementSet k(size, {loc.identity(), x});
      for (bool grew = true; grew;) {
        grew = false;
        const auto members = k.to_vector();
        auto add = [&](std::int32_t e) {
          if (e >= 0 && !k.contains(static_cast<Element>(e))) {
            k.insert(static_cast<Element>(e));
            grew = true;
          }
        };
        for (Element a : members) {
          add(static_cast<std::int32_t>(loc.invert(a)));
          for (Element b : members) add(loc.mul(a, b));
          for (Element h : conjugators) add(loc.conj(a, h));
        }
      }
      if (!seen.insert(k).second) continue;
      ++rep.checked;
      if (!is_partial_normal(loc, k)) rep.fail("invariant-normal", "an N_L(T)-invariant normal subgroup of N is not normal in L");
    }
  }

  for (const auto& h : partial_subgroups_over(loc, n, cap))
    for (const auto& b : cosets.blocks) {
      ++rep.checked;
      if (b.intersects(h) && !b.is_subset_of(h)) rep.fail("coset-union", "a partial subgroup over N splits a maximal coset");
    }
  return rep;
}

}  // namespace lockit
