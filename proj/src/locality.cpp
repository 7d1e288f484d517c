#include "lockit/locality.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "lockit/group_algorithms.hpp"
#include "lockit/word_states.hpp"

namespace lockit {

const char* to_string(DeltaMode mode) {
  switch (mode) {
    case DeltaMode::explicit_list: return "explicit";
    case DeltaMode::overclosure: return "overclosure";
    case DeltaMode::all_nonidentity: return "all-nonidentity";
    case DeltaMode::all: return "all";
  }
  return "unknown";
}

int popcount(Mask m) { return std::popcount(m); }

namespace {

// Canonical order on subsets of S: by size, then by sorted member list.
bool mask_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const Mask low = diff & (~diff + 1);
  return (a & low) != 0;
}

Mask bit(int pos) { return Mask{1} << pos; }

}  // namespace

Locality::Locality(Tables t) : t_(std::move(t)) {
  n_ = t_.inverse.size();
  k_ = t_.s_elements.size();
  if (n_ == 0) fail(ErrorKind::invalid_input, "locality must be nonempty");
  if (!t_.ambient) fail(ErrorKind::invalid_input, "locality without ambient group");
  if (t_.rep.size() != n_ || t_.labels.size() != n_) fail(ErrorKind::invalid_input, "table size mismatch");
  if (t_.fiber.size() != t_.ambient->order()) fail(ErrorKind::invalid_input, "fiber table size mismatch");
  if (k_ == 0 || k_ > 64)
    fail(ErrorKind::resource, "|S| = " + std::to_string(k_) + " is outside the supported range 1..64");
  if (t_.letter.size() != n_ * k_) fail(ErrorKind::invalid_input, "conjugation table size mismatch");
  if (t_.inverse[0] != 0) fail(ErrorKind::invalid_input, "identity must be self-inverse");
  for (Element x = 0; x < n_; ++x)
    if (t_.inverse[x] >= n_ || t_.inverse[t_.inverse[x]] != x)
      fail(ErrorKind::invalid_input, "inversion is not an involution");

  s_pos_.assign(n_, -1);
  s_set_ = ElementSet(n_);
  for (std::size_t i = 0; i < k_; ++i) {
    const Element s = t_.s_elements[i];
    if (s >= n_ || s_pos_[s] != -1) fail(ErrorKind::invalid_input, "bad S element list");
    if (i > 0 && t_.s_elements[i - 1] >= s) fail(ErrorKind::invalid_input, "S element list must ascend");
    s_pos_[s] = static_cast<int>(i);
    s_set_.insert(s);
  }
  if (s_pos_[0] < 0) fail(ErrorKind::invalid_input, "S must contain the identity");
  full_ = k_ == 64 ? ~Mask{0} : (Mask{1} << k_) - 1;

  s_mul_.assign(k_ * k_, -1);
  s_inv_.assign(k_, -1);
  const auto& g = *t_.ambient;
  for (std::size_t a = 0; a < k_; ++a) {
    s_inv_[a] = s_pos_[t_.inverse[t_.s_elements[a]]];
    if (s_inv_[a] < 0) fail(ErrorKind::invalid_input, "S is not closed under inversion");
    for (std::size_t b = 0; b < k_; ++b) {
      const auto prod = fiber(g.mul(t_.rep[t_.s_elements[a]], t_.rep[t_.s_elements[b]]));
      if (!prod || s_pos_[*prod] < 0) fail(ErrorKind::invalid_input, "S is not closed under products");
      s_mul_[a * k_ + b] = s_pos_[*prod];
    }
  }

  // Subgroups of S: grow from the trivial subgroup by adjoining one element at a time.
  auto close = [&](Mask seed) {
    Mask h = seed | trivial_mask();
    std::vector<int> frontier;
    for (Mask m = h; m; m &= m - 1) frontier.push_back(std::countr_zero(m));
    std::vector<int> gens = frontier;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int s : gens) {
          const int y = s_mul(x, s);
          if (!(h & bit(y))) {
            h |= bit(y);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return h;
  };
  std::vector<Mask> todo{trivial_mask()};
  subgroup_index_.emplace(trivial_mask(), 0);
  subgroups_.push_back(trivial_mask());
  while (!todo.empty()) {
    const Mask h = todo.back();
    todo.pop_back();
    for (std::size_t x = 0; x < k_; ++x) {
      if (h & bit(static_cast<int>(x))) continue;
      const Mask bigger = close(h | bit(static_cast<int>(x)));
      if (subgroup_index_.emplace(bigger, 0).second) {
        subgroups_.push_back(bigger);
        todo.push_back(bigger);
      }
    }
  }
  std::sort(subgroups_.begin(), subgroups_.end(), mask_less);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) subgroup_index_[subgroups_[i]] = i;

  std::sort(t_.delta.begin(), t_.delta.end(), mask_less);
  t_.delta.erase(std::unique(t_.delta.begin(), t_.delta.end()), t_.delta.end());
  for (Mask d : t_.delta) {
    if (!is_s_subgroup(d)) fail(ErrorKind::invalid_input, "Δ member is not a subgroup of S");
    delta_set_.insert(d);
  }
  if (!delta_set_.contains(full_)) fail(ErrorKind::invalid_input, "Δ must contain S");

  s_g_.assign(n_, 0);
  for (Element x = 0; x < n_; ++x) {
    Mask m = 0;
    for (std::size_t p = 0; p < k_; ++p)
      if (letter(x, static_cast<int>(p)) != kNoImage) m |= bit(static_cast<int>(p));
    s_g_[x] = m;
  }

  mul_.assign(n_ * n_, kUndefined);
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) {
      const Element w[2] = {x, y};
      if (!in_domain(w)) continue;
      const auto p = fiber(g.mul(t_.rep[x], t_.rep[y]));
      if (p) mul_[x * n_ + y] = static_cast<std::int32_t>(*p);
      else ++escaping_;
    }
  conj_.assign(n_ * n_, kUndefined);
  for (Element x = 0; x < n_; ++x)
    for (Element h = 0; h < n_; ++h) {
      const Element w[3] = {t_.inverse[h], x, h};
      if (!in_domain(w)) continue;
      const auto p = fiber(g.mul(g.mul(t_.rep[t_.inverse[h]], t_.rep[x]), t_.rep[h]));
      if (p) conj_[x * n_ + h] = static_cast<std::int32_t>(*p);
    }
}

Mask Locality::s_w_mask(std::span<const Element> w) const {
  Mask out = 0;
  for (std::size_t p = 0; p < k_; ++p) {
    int cur = static_cast<int>(p);
    bool ok = true;
    for (Element g : w) {
      if (g >= n_) fail(ErrorKind::invalid_input, "word entry outside the carrier");
      cur = letter(g, cur);
      if (cur == kNoImage) {
        ok = false;
        break;
      }
    }
    if (ok) out |= bit(static_cast<int>(p));
  }
  return out;
}

Mask Locality::image(Mask x, Element g) const {
  Mask out = 0;
  for (Mask m = x; m; m &= m - 1) {
    const int img = letter(g, std::countr_zero(m));
    if (img == kNoImage) fail(ErrorKind::invalid_input, "X is not contained in S_g");
    out |= bit(img);
  }
  return out;
}

Mask Locality::image(Mask x, std::span<const Element> w) const {
  for (Element g : w) x = image(x, g);
  return x;
}

bool Locality::in_domain(std::span<const Element> w) const { return delta_set_.contains(s_w_mask(w)); }

Element Locality::product(std::span<const Element> w) const {
  if (!in_domain(w)) fail(ErrorKind::domain, "word " + format_word(w) + " is not in D");
  const auto& g = *t_.ambient;
  Element acc = g.identity();
  for (Element x : w) acc = g.mul(acc, t_.rep[x]);
  const auto p = fiber(acc);
  if (!p) fail(ErrorKind::internal, "product of " + format_word(w) + " lies outside the carrier");
  return *p;
}

ElementSet Locality::to_set(Mask m) const {
  ElementSet out(n_);
  for (; m; m &= m - 1) out.insert(t_.s_elements[std::countr_zero(m)]);
  return out;
}

Mask Locality::to_mask(const ElementSet& x) const {
  Mask out = 0;
  for (Element e : x) {
    if (e >= n_ || s_pos_[e] < 0) fail(ErrorKind::invalid_input, "subset is not contained in S");
    out |= bit(s_pos_[e]);
  }
  return out;
}

std::size_t Locality::subgroup_index(Mask m) const {
  auto it = subgroup_index_.find(m);
  if (it == subgroup_index_.end()) fail(ErrorKind::invalid_input, "not a subgroup of S");
  return it->second;
}

ElementSet Locality::s_g(Element g) const {
  if (g >= n_) fail(ErrorKind::invalid_input, "element outside the carrier");
  const Mask m = s_g_[g];
  LOCKIT_ENSURE(in_delta(m), "S_g ∈ Δ");
  const Mask back = s_g_[t_.inverse[g]];
  LOCKIT_ENSURE(image(m, g) == back, "S_{g⁻¹} = (S_g)^g");
  for (Mask a = m; a; a &= a - 1)
    for (Mask b = m; b; b &= b - 1) {
      const int x = std::countr_zero(a);
      const int y = std::countr_zero(b);
      LOCKIT_ENSURE(letter(g, s_mul(x, y)) == s_mul(letter(g, x), letter(g, y)),
                    "conjugation by g is a homomorphism on S_g");
    }
  return to_set(m);
}

ElementSet Locality::s_w(std::span<const Element> w) const {
  const Mask m = s_w_mask(w);
  if (w.size() >= 2) {
    // S_{u∘v} = ((S_u)^u ∩ S_v)^{u⁻¹} with u the first entry.
    const auto u = w.first(1);
    const auto v = w.subspan(1);
    const Mask left = image(s_w_mask(u), u) & s_w_mask(v);
    const Element uinv = t_.inverse[u[0]];
    LOCKIT_ENSURE((left & ~s_g_[uinv]) == 0 && image(left, uinv) == m, "S_{u∘v} = ((S_u)^u ∩ S_v)^{u⁻¹}");
  }
  return to_set(m);
}

ElementSet Locality::normalizer(Mask p) const {
  ElementSet out(n_);
  for (Element g = 0; g < n_; ++g)
    if ((p & ~s_g_[g]) == 0 && image(p, g) == p) out.insert(g);
  return out;
}

ElementSet Locality::transporter(Mask p, Mask q) const {
  ElementSet out(n_);
  for (Element g = 0; g < n_; ++g)
    if ((p & ~s_g_[g]) == 0 && (image(p, g) & ~q) == 0) out.insert(g);
  return out;
}

bool Locality::is_subgroup(const ElementSet& h) const {
  if (!h.contains(0)) return false;
  for (Element a : h) {
    if (!h.contains(t_.inverse[a])) return false;
    for (Element b : h) {
      const auto p = mul(a, b);
      if (p < 0 || !h.contains(static_cast<Element>(p))) return false;
    }
  }
  // Every word in H must lie in D: explore the chase maps of W(H).
  WordStates ws(*this);
  auto& maps = ws.maps();
  std::unordered_set<std::uint32_t> seen{maps.identity()};
  std::vector<std::uint32_t> frontier{maps.identity()};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto m : frontier)
      for (Element a : h) {
        const auto c = maps.compose(m, ws.letter(a).phi);
        if (!in_delta(maps.domain(c))) return false;
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return true;
}

Subgroup sylow_auto(const FiniteGroup& g, unsigned p, const Limits& limits) {
  auto syl = sylow_p(g, p, limits);
  LOCKIT_ENSURE(!syl.empty(), "a Sylow subgroup exists");
  return *std::min_element(syl.begin(), syl.end());
}

Locality build_locality(std::shared_ptr<const FiniteGroup> gp, unsigned p, const Subgroup& s, const DeltaSpec& spec,
                        std::string name, const Limits& limits) {
  (void)limits;
  if (!gp) fail(ErrorKind::invalid_input, "no ambient group");
  const FiniteGroup& g = *gp;
  if (!is_prime(p)) fail(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
  if (s.members.universe() != g.order() || !s.members.contains(g.identity()))
    fail(ErrorKind::invalid_input, "S is not a subgroup of G");
  if (algo::close(g, s.members) != s.members) fail(ErrorKind::invalid_input, "S is not a subgroup of G");
  if (!is_p_power(s.order(), p) || s.order() != p_part(g.order(), p))
    fail(ErrorKind::invalid_input, "S is not a maximal " + std::to_string(p) + "-subgroup of G");
  if (s.order() > 64) fail(ErrorKind::resource, "|S| > 64 is not supported");

  const auto subs = algo::subgroups_of(g, s.members);
  const ElementSet trivial(g.order(), {g.identity()});

  // Resolve the seeds to subgroups of S.
  std::vector<ElementSet> seeds;
  for (const auto& gens : spec.seeds) {
    if (gens.universe() != g.order()) fail(ErrorKind::invalid_input, "Δ seed has wrong universe");
    ElementSet h = algo::close(g, gens);
    if (!h.is_subset_of(s.members)) fail(ErrorKind::invalid_input, "Δ seed is not contained in S");
    seeds.push_back(std::move(h));
  }

  std::vector<ElementSet> delta;
  bool auto_closed = false;
  switch (spec.mode) {
    case DeltaMode::all:
      delta = subs;
      break;
    case DeltaMode::all_nonidentity:
      for (const auto& h : subs)
        if (h != trivial) delta.push_back(h);
      if (delta.empty()) delta.push_back(s.members);  // S = 1
      break;
    case DeltaMode::explicit_list:
    case DeltaMode::overclosure: {
      if (seeds.empty()) fail(ErrorKind::invalid_input, "Δ must have at least one member");
      std::vector<bool> in(subs.size(), false);
      for (const auto& x : seeds)
        for (Element a = 0; a < g.order(); ++a) {
          const ElementSet xa = algo::conjugate(g, x, a);
          if (!xa.is_subset_of(s.members)) continue;
          for (std::size_t i = 0; i < subs.size(); ++i)
            if (!in[i] && xa.is_subset_of(subs[i])) in[i] = true;
        }
      for (std::size_t i = 0; i < subs.size(); ++i)
        if (in[i]) delta.push_back(subs[i]);
      if (spec.mode == DeltaMode::explicit_list) {
        std::vector<ElementSet> given = seeds;
        std::sort(given.begin(), given.end());
        given.erase(std::unique(given.begin(), given.end()), given.end());
        auto_closed = given != delta;
      }
      break;
    }
  }
  std::unordered_set<ElementSet> delta_lookup(delta.begin(), delta.end());

  // S_g = {x ∈ S : x^g ∈ S}.
  auto s_g = [&](Element a) {
    ElementSet out(g.order());
    for (Element x : s.members)
      if (s.members.contains(g.conj(x, a))) out.insert(x);
    return out;
  };
  std::vector<Element> carrier;
  for (Element a = 0; a < g.order(); ++a)
    if (delta_lookup.contains(s_g(a))) carrier.push_back(a);

  Locality::Tables t;
  t.name = std::move(name);
  t.kind = "ambient";
  t.prime = p;
  t.ambient = gp;
  t.delta_mode = spec.mode;
  t.auto_closed = auto_closed;
  const std::size_t n = carrier.size();
  t.rep = carrier;
  t.fiber.assign(g.order(), kUndefined);
  for (Element i = 0; i < n; ++i) t.fiber[carrier[i]] = static_cast<std::int32_t>(i);
  t.inverse.resize(n);
  t.labels.resize(n);
  for (Element i = 0; i < n; ++i) {
    const auto inv = t.fiber[g.inv(carrier[i])];
    if (inv < 0) fail(ErrorKind::internal, "carrier is not closed under inversion");
    t.inverse[i] = static_cast<Element>(inv);
    t.labels[i] = g.label(carrier[i]);
  }
  for (Element x : s.members) t.s_elements.push_back(static_cast<Element>(t.fiber[x]));
  std::sort(t.s_elements.begin(), t.s_elements.end());
  std::vector<int> pos_of_ambient(g.order(), -1);
  for (std::size_t i = 0; i < t.s_elements.size(); ++i) pos_of_ambient[t.rep[t.s_elements[i]]] = static_cast<int>(i);
  const std::size_t k = t.s_elements.size();
  t.letter.assign(n * k, kNoImage);
  for (Element i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const int img = pos_of_ambient[g.conj(t.rep[t.s_elements[j]], carrier[i])];
      if (img >= 0) t.letter[i * k + j] = static_cast<std::uint8_t>(img);
    }
  for (const auto& d : delta) {
    Mask m = 0;
    for (Element x : d) m |= bit(pos_of_ambient[x]);
    t.delta.push_back(m);
  }
  return Locality(std::move(t));
}

Locality sublocality(const Locality& parent, const ElementSet& carrier, std::vector<Mask> delta, std::string kind) {
  const std::size_t pn = parent.size();
  if (carrier.universe() != pn) fail(ErrorKind::invalid_input, "carrier universe mismatch");
  if (!parent.s_set().is_subset_of(carrier)) fail(ErrorKind::invalid_input, "carrier must contain S");
  for (Element x : carrier)
    if (!carrier.contains(parent.invert(x))) fail(ErrorKind::invalid_input, "carrier is not closed under inversion");

  const auto& pt = parent.tables();
  Locality::Tables t;
  t.name = parent.name() + "/" + kind;
  t.kind = std::move(kind);
  t.prime = parent.prime();
  t.ambient = pt.ambient;
  t.delta_mode = DeltaMode::explicit_list;
  const std::vector<Element> ids = carrier.to_vector();
  std::vector<std::int32_t> local(pn, kUndefined);
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<std::int32_t>(i);
  const std::size_t n = ids.size();
  const std::size_t k = parent.s_order();
  t.rep.resize(n);
  t.inverse.resize(n);
  t.labels.resize(n);
  t.letter.resize(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    t.rep[i] = pt.rep[ids[i]];
    t.inverse[i] = static_cast<Element>(local[parent.invert(ids[i])]);
    t.labels[i] = pt.labels[ids[i]];
    std::copy_n(&pt.letter[ids[i] * k], k, &t.letter[i * k]);
  }
  t.fiber.assign(pt.fiber.size(), kUndefined);
  for (std::size_t a = 0; a < pt.fiber.size(); ++a)
    if (pt.fiber[a] >= 0) t.fiber[a] = local[pt.fiber[a]];
  for (Element s : parent.s_elements()) t.s_elements.push_back(static_cast<Element>(local[s]));
  t.delta = std::move(delta);
  return Locality(std::move(t));
}

bool is_f_closed_family(const Locality& loc, const std::vector<Mask>& family) {
  const std::unordered_set<Mask> in(family.begin(), family.end());
  if (in.empty()) return false;
  for (Mask x : family)
    for (Element g = 0; g < loc.size(); ++g) {
      if ((x & ~loc.s_g_mask(g)) != 0) continue;
      const Mask img = loc.image(x, g);
      for (Mask y : loc.s_subgroups())
        if ((img & ~y) == 0 && !in.contains(y)) return false;
    }
  return true;
}

Locality restrict_to(const Locality& loc, const std::vector<Mask>& gamma) {
  for (Mask m : gamma)
    if (!loc.in_delta(m)) fail(ErrorKind::invalid_input, "Γ is not contained in Δ");
  if (!is_f_closed_family(loc, gamma)) fail(ErrorKind::invalid_input, "Γ is not F-closed");
  const std::unordered_set<Mask> in(gamma.begin(), gamma.end());
  ElementSet carrier(loc.size());
  for (Element g = 0; g < loc.size(); ++g)
    if (in.contains(loc.s_g_mask(g))) carrier.insert(g);
  return sublocality(loc, carrier, gamma, "restriction");
}

Locality normalizer_locality(const Locality& loc, Mask t) {
  if (!loc.is_s_subgroup(t)) fail(ErrorKind::invalid_input, "T is not a subgroup of S");
  for (Element s : loc.s_elements())
    if (loc.image(t, s) != t) fail(ErrorKind::invalid_input, "T is not normal in S");
  return sublocality(loc, loc.normalizer(t), loc.delta(), "normalizer");
}

Locality ns_locality(const Locality& loc, const ElementSet& n) {
  ElementSet carrier(loc.size());
  for (Element x : n)
    for (Element s : loc.s_elements()) {
      const auto p = loc.mul(x, s);
      if (p >= 0) carrier.insert(static_cast<Element>(p));
    }
  return sublocality(loc, carrier, loc.delta(), "ns");
}

namespace {

// Chain form: some chain X_0,...,X_n of objects with (X_{i-1})^{g_i} = X_i.
bool chain_in_domain(const Locality& loc, std::span<const Element> w) {
  for (Mask x0 : loc.delta()) {
    Mask x = x0;
    bool ok = true;
    for (Element g : w) {
      if ((x & ~loc.s_g_mask(g)) != 0) {
        ok = false;
        break;
      }
      x = loc.image(x, g);
      if (!loc.in_delta(x)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate_locality(const Locality& loc, const ValidationOptions& options) {
  ValidationReport rep;
  auto add = [&](std::string rule, std::string detail) { rep.findings.push_back({std::move(rule), std::move(detail)}); };
  const std::size_t n = loc.size();

  if (!is_p_power(loc.s_order(), loc.prime())) add("sylow-maximal", "S is not a p-group");

  // (O2)
  for (Mask x : loc.delta()) {
    bool reported = false;
    for (Element g = 0; g < n && !reported; ++g) {
      if ((x & ~loc.s_g_mask(g)) != 0) continue;
      const Mask img = loc.image(x, g);
      for (Mask y : loc.s_subgroups())
        if ((img & ~y) == 0 && !loc.in_delta(y)) {
          add("overgroup-closure", "overgroup of X^g missing from Δ (g = " + loc.label(g) + ")");
          reported = true;
          break;
        }
    }
  }

  // S_g ∈ Δ and S_{g⁻¹} = (S_g)^g for every g.
  for (Element g = 0; g < n; ++g) {
    const Mask m = loc.s_g_mask(g);
    if (!loc.in_delta(m)) {
      add("s_g-object", "S_g ∉ Δ for g = " + loc.label(g));
      continue;
    }
    if (loc.image(m, g) != loc.s_g_mask(loc.invert(g))) add("s_g-inverse", "S_{g⁻¹} ≠ (S_g)^g for g = " + loc.label(g));
  }

  if (loc.escaping_products() != 0)
    add("carrier", std::to_string(loc.escaping_products()) + " defined products fall outside the carrier");

  if (loc.kind() == "ambient") {
    const auto& g = loc.ambient();
    for (Element a = 0; a < g.order(); ++a) {
      Mask m = 0;
      for (std::size_t pos = 0; pos < loc.s_order(); ++pos) {
        const Element x = loc.rep(loc.s_elements()[pos]);
        const auto y = loc.fiber(g.conj(x, a));
        if (y && loc.s_pos(*y) >= 0) m |= Mask{1} << pos;
      }
      if (loc.in_delta(m) != loc.fiber(a).has_value()) {
        add("carrier", "carrier differs from {g : S ∩ S^g ∈ Δ} at " + g.label(a));
        break;
      }
    }
  }

  // Chain form of D_Δ against S_w ∈ Δ.
  auto compare = [&](std::span<const Element> w) {
    ++rep.chain_words_checked;
    if (chain_in_domain(loc, w) != loc.in_domain(w)) add("chain-domain", "chain criterion disagrees on " + format_word(w));
  };
  for (Element a = 0; a < n; ++a) {
    const Element w1[1] = {a};
    compare(w1);
    for (Element b = 0; b < n; ++b) {
      const Element w2[2] = {a, b};
      compare(w2);
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t len = 3; len <= 4; ++len)
    for (std::size_t i = 0; i < options.sample_words; ++i) {
      Word w(len);
      for (auto& x : w) x = pick(rng);
      compare(w);
    }

  // (L1): any p-subgroup above S normalizes some P ∈ Δ with P ⊴ S, so lies in N_L(P).
  for (Mask p : loc.delta()) {
    bool normal_in_s = true;
    for (Element s : loc.s_elements())
      if (loc.image(p, s) != p) normal_in_s = false;
    if (!normal_in_s) continue;
    const ElementSet np = loc.normalizer(p);
    if (!loc.is_subgroup(np)) {
      add("normalizer-subgroup", "N_L(P) is not a subgroup");
      continue;
    }
    if (p_part(np.count(), loc.prime()) != loc.s_order())
      add("sylow-maximal", "S is not a maximal p-subgroup of N_L(P) for an object P ⊴ S");
  }
  return rep;
}

}  // namespace lockit
