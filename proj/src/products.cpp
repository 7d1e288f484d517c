#include "lockit/products.hpp"

#include <algorithm>
#include <bit>

namespace lockit {

namespace {

Mask product_mask(const Locality& loc, Mask a, Mask b) {
  Mask out = 0;
  for (Mask x = a; x; x &= x - 1)
    for (Mask y = b; y; y &= y - 1) out |= Mask{1} << loc.s_mul(std::countr_zero(x), std::countr_zero(y));
  return out;
}

Mask pair_mask(const Locality& loc, Element x, Element y) {
  const Element w[2] = {x, y};
  return loc.s_w_mask(w);
}

bool is_decomposition(const Locality& loc, const ElementSet& m, const ElementSet& n, Element g, Element x, Element y) {
  return m.contains(x) && n.contains(y) && loc.mul(x, y) == static_cast<std::int32_t>(g) &&
         pair_mask(loc, x, y) == loc.s_g_mask(g);
}

ElementSet image_of(const QuotientLocality& q, const ElementSet& x) {
  ElementSet out(q.locality->size());
  for (Element e : x) out.insert(q.rho[e]);
  return out;
}

std::string label_set(const Locality& loc, const ElementSet& x) {
  std::string out = "{";
  for (Element e : x) out += (out.size() > 1 ? "," : "") + loc.label(e);
  return out + "}";
}

}  // namespace

ProductContext product_context(const Locality& loc, const ElementSet& m, const ElementSet& n) {
  if (!is_partial_normal(loc, m) || !is_partial_normal(loc, n))
    fail(ErrorKind::invalid_input, "product of subsets that are not partial normal");
  ProductContext ctx;
  ctx.m = m;
  ctx.n = n;
  ctx.k = m & n;
  LOCKIT_ENSURE(is_partial_normal(loc, ctx.k), "M ∩ N is partial normal");
  ctx.t = loc.to_mask(ctx.k & loc.s_set());
  ctx.u = loc.to_mask(m & loc.s_set());
  ctx.v = loc.to_mask(n & loc.s_set());
  ctx.by_k = std::make_shared<const QuotientLocality>(quotient(loc, ctx.k));
  return ctx;
}

ElementSet product_set(const Locality& loc, const ElementSet& m, const ElementSet& n) {
  ElementSet out(loc.size());
  for (Element x : m)
    for (Element y : n)
      if (const auto p = loc.mul(x, y); p >= 0) out.insert(static_cast<Element>(p));
  return out;
}

std::optional<std::pair<Element, Element>> find_decomposition(const Locality& loc, const ElementSet& m,
                                                               const ElementSet& n, Element g) {
  for (Element x : m)
    for (Element y : n)
      if (is_decomposition(loc, m, n, g, x, y)) return std::pair{x, y};
  return std::nullopt;
}

std::pair<Element, Element> mn_decomposition(const Locality& loc, const ElementSet& m, const ElementSet& n, Element g) {
  if (!product_set(loc, m, n).contains(g)) fail(ErrorKind::invalid_input, loc.label(g) + " is not in MN");
  const auto d = find_decomposition(loc, m, n, g);
  if (!d) fail(ErrorKind::internal, "no decomposition for " + loc.label(g));
  return *d;
}

std::optional<std::pair<Element, Element>> decomposition_via_quotient(const Locality& loc, const ProductContext& ctx,
                                                                      Element g) {
  const QuotientLocality& q = *ctx.by_k;
  const Locality& ql = *q.locality;
  const ElementSet mb = image_of(q, ctx.m);
  const ElementSet nb = image_of(q, ctx.n);
  const Element gb = q.rho[g];
  const auto db = find_decomposition(ql, mb, nb, gb);
  if (!db) return std::nullopt;
  const Element x = q.lift[db->first];
  const Element y = q.lift[db->second];
  const auto h = loc.mul(x, y);
  if (h < 0) return std::nullopt;
  for (Element z : ctx.k) {
    if (loc.mul(z, static_cast<Element>(h)) != static_cast<std::int32_t>(g)) continue;
    const auto zx = loc.mul(z, x);
    if (zx >= 0 && is_decomposition(loc, ctx.m, ctx.n, g, static_cast<Element>(zx), y))
      return std::pair{static_cast<Element>(zx), y};
  }
  return std::nullopt;
}

CheckReport check_product_theorem(const Locality& loc, const ElementSet& m, const ElementSet& n, Exec exec) {
  CheckReport rep;
  const ProductContext ctx = product_context(loc, m, n);
  const ElementSet mn = product_set(loc, m, n);
  const ElementSet nm = product_set(loc, n, m);

  ++rep.checked;
  if (mn != nm) rep.fail("product-commutes", "MN ≠ NM");
  ++rep.checked;
  if (!is_partial_normal(loc, mn)) rep.fail("product-normal", "MN is not partial normal");
  ++rep.checked;
  if (loc.to_mask(mn & loc.s_set()) != product_mask(loc, ctx.u, ctx.v)) rep.fail("product-sylow", "S ∩ MN ≠ UV");

  const QuotientLocality& q = *ctx.by_k;
  const Locality& ql = *q.locality;
  const ElementSet mb = image_of(q, m);
  const ElementSet nb = image_of(q, n);
  const ElementSet mnb = product_set(ql, mb, nb);
  ++rep.checked;
  if ((mb & nb) != ElementSet(ql.size(), {ql.identity()})) rep.fail("routes-agree", "M̄ ∩ N̄ is not trivial in L/K");
  ++rep.checked;
  if (!is_partial_normal(ql, mnb)) rep.fail("product-normal", "M̄N̄ is not partial normal in L/K");
  ElementSet pre(loc.size());
  for (Element x = 0; x < loc.size(); ++x)
    if (mnb.contains(q.rho[x])) pre.insert(x);
  ++rep.checked;
  if (pre != mn) rep.fail("routes-agree", "the preimage of M̄N̄ differs from MN");
  ++rep.checked;
  if (ql.to_mask(mnb & ql.s_set()) != product_mask(ql, ql.to_mask(mb & ql.s_set()), ql.to_mask(nb & ql.s_set())))
    rep.fail("product-sylow", "S̄ ∩ M̄N̄ ≠ ŪV̄ in L/K");

  const std::vector<Element> gs = mn.to_vector();
  std::vector<char> direct(gs.size(), 0);
  std::vector<char> routed(gs.size(), 0);
  auto work = [&](std::size_t i) {
    direct[i] = find_decomposition(loc, m, n, gs[i]).has_value();
    routed[i] = decomposition_via_quotient(loc, ctx, gs[i]).has_value();
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < gs.size(); ++i) work(i);
  } else {
    for (std::size_t i = 0; i < gs.size(); ++i) work(i);
  }
  for (std::size_t i = 0; i < gs.size(); ++i) {
    ++rep.checked;
    if (!direct[i]) rep.fail("decomposition", "no (M,N)-decomposition for " + loc.label(gs[i]));
    if (!routed[i]) rep.fail("routes-agree", "the route through L/K finds no decomposition for " + loc.label(gs[i]));
  }
  return rep;
}

CheckReport check_product_lemmas(const Locality& loc, const ElementSet& m, const ElementSet& n) {
  CheckReport rep;
  const ProductContext ctx = product_context(loc, m, n);
  if (ctx.k.is_subset_of(loc.s_set())) {
    const ElementSet nv = loc.normalizer(ctx.v);
    const ElementSet nu = loc.normalizer(ctx.u);
    ++rep.checked;
    if (!m.is_subset_of(nv)) rep.fail("normalizes-v", "M is not contained in N_L(V)");
    ++rep.checked;
    if (!n.is_subset_of(nu)) rep.fail("normalizes-u", "N is not contained in N_L(U)");
  }
  if (ctx.k.count() == 1) {
    ++rep.checked;
    if (loc.to_mask(product_set(loc, m, n) & loc.s_set()) != product_mask(loc, ctx.u, ctx.v))
      rep.fail("trivial-meet-sylow", "S ∩ MN ≠ UV with M ∩ N = 1");
  }

  const QuotientLocality& q = *ctx.by_k;
  const Locality& ql = *q.locality;
  const ElementSet target = product_set(ql, image_of(q, m), image_of(q, n));
  ElementSet witnessed(ql.size());
  for (Element x : m & q.up_max)
    for (Element y : n & q.up_max) {
      const auto h = loc.mul(x, y);
      if (h < 0 || !q.up_max.contains(static_cast<Element>(h))) continue;
      if (loc.s_g_mask(static_cast<Element>(h)) == pair_mask(loc, x, y)) witnessed.insert(q.rho[static_cast<Element>(h)]);
    }
  for (Element gb : target) {
    ++rep.checked;
    if (!witnessed.contains(gb)) rep.fail("maximal-decomposition", "no ↑-maximal lift for " + ql.label(gb));
  }
  return rep;
}

ElementSet join_family(const Locality& loc, const std::vector<ElementSet>& family) {
  if (family.empty()) fail(ErrorKind::invalid_input, "empty family");
  for (const auto& x : family)
    if (!is_partial_normal(loc, x)) fail(ErrorKind::invalid_input, "family member is not partial normal");
  ElementSet acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = product_set(loc, acc, family[i]);
  LOCKIT_ENSURE(is_partial_normal(loc, acc), "the join is partial normal");
  return acc;
}

CheckReport check_join_family(const Locality& loc, const std::vector<ElementSet>& family, std::size_t max_len) {
  CheckReport rep;
  const ElementSet join = join_family(loc, family);
  ++rep.checked;
  if (!is_partial_normal(loc, join)) rep.fail("join-normal", "the join is not partial normal");
  for (const auto& x : family) {
    ++rep.checked;
    if (!x.is_subset_of(join)) rep.fail("join-contains", "the join misses " + label_set(loc, x));
  }
  std::vector<ElementSet> reversed(family.rbegin(), family.rend());
  ++rep.checked;
  if (join_family(loc, reversed) != join) rep.fail("join-order", "the join depends on the order of the family");

  ElementSet words(loc.size());
  words.insert(loc.identity());
  std::vector<std::vector<Element>> members;
  for (const auto& x : family) members.push_back(x.to_vector());
  Word w;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (w.size() == max_len) return;
    for (std::size_t i = from; i < family.size(); ++i)
      for (Element g : members[i]) {
        w.push_back(g);
        if (loc.in_domain(w)) {
          words.insert(loc.product(w));
          self(self, i);
        }
        w.pop_back();
      }
  };
  extend(extend, 0);
  ++rep.checked;
  if (!words.is_subset_of(join)) rep.fail("ordered-words", "an ordered word has its product outside the join");
  if (family.size() <= max_len) {
    ++rep.checked;
    if (words != join) rep.fail("ordered-words", "the join is not the set of products of ordered words");
  }
  return rep;
}

CheckReport check_product_associativity(const Locality& loc, const ElementSet& m, const ElementSet& n,
                                        const ElementSet& p) {
  CheckReport rep;
  ++rep.checked;
  if (product_set(loc, product_set(loc, m, n), p) != product_set(loc, m, product_set(loc, n, p)))
    rep.fail("product-associative", "(MN)P ≠ M(NP)");
  return rep;
}

}  // namespace lockit
