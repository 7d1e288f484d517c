#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

Perm parse_cycles(const std::string& text, int degree) {
  Perm p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[i] = i;
  std::vector<int> cycle;
  std::string num;
  for (char c : text + " ") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
      continue;
    }
    if (!num.empty()) {
      cycle.push_back(std::stoi(num) - 1);
      num.clear();
    }
    if (c == ')') {
      for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
      cycle.clear();
    }
  }
  return p;
}

std::string cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

}  // namespace

int Group::find(const std::string& text) const { return id.at(parse_cycles(text, degree)); }

Group generate(int degree, const std::vector<std::string>& gens) {
  std::vector<Perm> g;
  for (const auto& s : gens) g.push_back(parse_cycles(s, degree));
  Perm e(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) e[i] = i;
  std::set<Perm> seen{e};
  std::deque<Perm> queue{e};
  while (!queue.empty()) {
    const Perm x = queue.front();
    queue.pop_front();
    for (const auto& y : g) {
      Perm z = compose(x, y);
      if (seen.insert(z).second) queue.push_back(std::move(z));
    }
  }
  Group out;
  out.degree = degree;
  out.elems.assign(seen.begin(), seen.end());  // the identity is the least image list
  for (int i = 0; i < out.order(); ++i) out.id[out.elems[i]] = i;
  out.table.assign(out.elems.size(), std::vector<int>(out.elems.size()));
  out.inverse.resize(out.elems.size());
  for (int a = 0; a < out.order(); ++a)
    for (int b = 0; b < out.order(); ++b) {
      out.table[a][b] = out.id.at(compose(out.elems[a], out.elems[b]));
      if (out.table[a][b] == 0) out.inverse[a] = b;
    }
  return out;
}

Set closure(const Group& g, const Set& seed) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int s : seed) {
      const int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

Set conjugate(const Group& g, const Set& h, int by) {
  Set out;
  for (int x : h) out.push_back(g.conj(x, by));
  std::sort(out.begin(), out.end());
  return out;
}

Set normalizer(const Group& g, const Set& h) {
  Set out;
  for (int a = 0; a < g.order(); ++a)
    if (conjugate(g, h, a) == h) out.push_back(a);
  return out;
}

bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Set unite(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

bool is_p_power(std::size_t n, int p) {
  while (n > 1 && n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
  return n == 1;
}

}  // namespace

// Joins of cyclic subgroups, to a fixpoint; restricted to p-subgroups when p > 0.
std::vector<Set> subgroups(const Group& g, int p) {
  std::set<Set> cyclic;
  for (int a = 0; a < g.order(); ++a) {
    Set c = closure(g, {a});
    if (p == 0 || is_p_power(c.size(), p)) cyclic.insert(std::move(c));
  }
  std::set<Set> found(cyclic.begin(), cyclic.end());
  std::vector<Set> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (subset(c, h)) continue;
        Set j = closure(g, unite(h, c));
        if (p > 0 && !is_p_power(j.size(), p)) continue;
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return std::vector<Set>(found.begin(), found.end());
}

std::vector<Set> all_subgroups(const Group& g) { return subgroups(g, 0); }

std::vector<std::string> labels(const Group& g, const Set& s) {
  std::vector<std::string> out;
  for (int x : s) out.push_back(cycles(g.elems[x]));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Example>& examples() {
  static const std::vector<std::string> gl32 = {"(2 3)(6 7)", "(1 2 4)(3 6 5)"};
  static const std::vector<std::string> gl32_s = {"(2 3)(4 6 5 7)", "(2 3)(6 7)"};
  static const std::vector<std::string> p1 = {"(4 5)(6 7)", "(4 6)(5 7)"};
  static const std::vector<std::string> p2 = {"(4 5)(6 7)", "(2 3)(6 7)"};
  static const std::vector<Example> list = {
      {"s3-s", 3, {"(1 2 3)", "(1 2)"}, 3, {"(1 2 3)"}, "explicit", {{"(1 2 3)"}}},
      {"d8-s", 4, {"(1 2 3 4)", "(1 3)"}, 2, {"(1 2 3 4)", "(1 3)"}, "explicit", {{"(1 2 3 4)", "(1 3)"}}},
      {"gl32-s", 7, gl32, 2, gl32_s, "explicit", {gl32_s}},
      {"gl32-small", 7, gl32, 2, gl32_s, "explicit", {gl32_s, p1, p2}},
      {"gl32-full", 7, gl32, 2, gl32_s, "all-nonidentity", {}},
      {"o4plus2", 6, {"(1 2 3)", "(1 2)", "(1 4)(2 5)(3 6)"}, 2, {"(2 3)", "(1 4)(2 5)(3 6)"}, "all-nonidentity", {}},
      {"d12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}, 2, {"(1 4)(2 5)(3 6)", "(2 6)(3 5)"}, "all-nonidentity", {}},
  };
  return list;
}

const Example& example(const std::string& name) {
  for (const auto& e : examples())
    if (e.name == name) return e;
  throw std::invalid_argument("no oracle example " + name);
}

bool Locality::in_delta(const Set& x) const { return std::binary_search(delta.begin(), delta.end(), x); }

Set Locality::s_w(const Word& w) const {
  Set out;
  for (int x : s) {
    int y = x;
    bool ok = true;
    for (int a : w) {
      y = g->conj(y, a);
      if (!std::binary_search(s.begin(), s.end(), y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

bool Locality::in_domain(const Word& w) const {
  for (const auto& x0 : delta) {
    Set x = x0;
    bool ok = true;
    for (int a : w) {
      x = conjugate(*g, x, a);
      if (!in_delta(x)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

int Locality::product(const Word& w) const {
  int out = 0;
  for (int a : w) out = g->mul(out, a);
  return out;
}

Locality build(const Group& g, const Example& e) {
  Locality l;
  l.g = &g;
  l.p = e.prime;
  Set gens;
  for (const auto& c : e.sylow) gens.push_back(g.find(c));
  std::sort(gens.begin(), gens.end());
  l.s = closure(g, gens);
  std::vector<Set> subs;
  for (const auto& h : subgroups(g, e.prime))
    if (subset(h, l.s)) subs.push_back(h);
  std::set<Set> delta;
  if (e.delta == "all") {
    delta.insert(subs.begin(), subs.end());
  } else if (e.delta == "all-nonidentity") {
    for (const auto& h : subs)
      if (h.size() > 1) delta.insert(h);
  } else {
    for (const auto& seed : e.seeds) {
      Set sg;
      for (const auto& c : seed) sg.push_back(g.find(c));
      std::sort(sg.begin(), sg.end());
      const Set x = closure(g, sg);
      for (int a = 0; a < g.order(); ++a) {
        const Set xa = conjugate(g, x, a);
        if (!subset(xa, l.s)) continue;
        for (const auto& h : subs)
          if (subset(xa, h)) delta.insert(h);
      }
    }
  }
  l.delta.assign(delta.begin(), delta.end());
  for (int a = 0; a < g.order(); ++a)
    if (l.in_delta(l.s_w({a}))) l.carrier.push_back(a);
  return l;
}

std::vector<Set> omega(const Locality& l) {
  std::set<Set> seen{l.s};
  std::deque<Set> queue{l.s};
  while (!queue.empty()) {
    const Set y = queue.front();
    queue.pop_front();
    for (int a : l.carrier) {
      Set z = intersect(conjugate(*l.g, y, a), l.s);
      if (seen.insert(z).second) queue.push_back(std::move(z));
    }
  }
  return std::vector<Set>(seen.begin(), seen.end());
}

int omega_dimension(const std::vector<Set>& om) {
  std::vector<Set> by_size = om;
  std::sort(by_size.begin(), by_size.end(), [](const Set& a, const Set& b) { return a.size() < b.size(); });
  std::vector<int> dim(by_size.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (by_size[j].size() < by_size[i].size() && subset(by_size[j], by_size[i])) dim[i] = std::max(dim[i], dim[j] + 1);
    best = std::max(best, dim[i]);
  }
  return best;
}

Set star(const std::vector<Set>& om, const Set& x) {
  Set out;
  bool first = true;
  for (const auto& m : om) {
    if (!subset(x, m)) continue;
    out = first ? m : intersect(out, m);
    first = false;
  }
  return out;
}

namespace {

bool in_carrier(const Locality& l, int a) { return std::binary_search(l.carrier.begin(), l.carrier.end(), a); }

}  // namespace

bool is_partial_normal(const Locality& l, const Set& n) {
  if (!std::binary_search(n.begin(), n.end(), 0)) return false;
  for (int x : n) {
    if (!std::binary_search(n.begin(), n.end(), l.g->inverse[x])) return false;
    for (int y : n)
      if (l.in_domain({x, y}) && !std::binary_search(n.begin(), n.end(), l.product({x, y}))) return false;
    for (int a : l.carrier)
      if (l.in_domain({l.g->inverse[a], x, a}) && !std::binary_search(n.begin(), n.end(), l.g->conj(x, a)))
        return false;
  }
  return true;
}

Set normal_closure(const Locality& l, const Set& x) {
  std::set<int> n(x.begin(), x.end());
  n.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<int> cur(n.begin(), n.end());
    for (int a : cur) {
      grew |= n.insert(l.g->inverse[a]).second;
      for (int b : cur)
        if (l.in_domain({a, b})) grew |= n.insert(l.product({a, b})).second;
      for (int g : l.carrier)
        if (l.in_domain({l.g->inverse[g], a, g})) grew |= n.insert(l.g->conj(a, g)).second;
    }
  }
  return Set(n.begin(), n.end());
}

std::vector<Set> partial_normals(const Locality& l) {
  // Classes under defined conjugation.
  std::vector<int> cls(l.g->order(), -1);
  std::vector<Set> classes;
  for (int x : l.carrier) {
    if (x == 0 || cls[x] >= 0) continue;
    Set c;
    std::deque<int> queue{x};
    cls[x] = static_cast<int>(classes.size());
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      c.push_back(y);
      for (int a : l.carrier)
        if (l.in_domain({l.g->inverse[a], y, a})) {
          const int z = l.g->conj(y, a);
          if (cls[z] < 0) {
            cls[z] = cls[x];
            queue.push_back(z);
          }
        }
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  if (classes.size() > 20) throw std::runtime_error("too many classes for the exhaustive filter");
  std::vector<Set> out;
  for (std::uint32_t mask = 0; mask < (1U << classes.size()); ++mask) {
    Set n{0};
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (mask >> i & 1U) n = unite(n, classes[i]);
    if (is_partial_normal(l, n)) out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Set> maximal_cosets(const Locality& l, const Set& n) {
  std::set<Set> cosets;
  for (int f : l.carrier) {
    Set c;
    for (int x : n)
      if (l.in_domain({x, f})) c.push_back(l.product({x, f}));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    cosets.insert(std::move(c));
  }
  std::vector<Set> out;
  for (const auto& c : cosets) {
    bool maximal = true;
    for (const auto& d : cosets)
      if (d != c && subset(c, d)) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

Set product_set(const Locality& l, const Set& m, const Set& n) {
  std::set<int> out;
  for (int x : m)
    for (int y : n)
      if (l.in_domain({x, y})) out.insert(l.product({x, y}));
  return Set(out.begin(), out.end());
}

bool all_decomposable(const Locality& l, const Set& m, const Set& n) {
  for (int g : product_set(l, m, n)) {
    bool found = false;
    const Set sg = l.s_w({g});
    for (int x : m) {
      for (int y : n)
        if (l.in_domain({x, y}) && l.product({x, y}) == g && l.s_w({x, y}) == sg) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

// Subgroups of L: subsets of the carrier on which every pair is in D and the products close.
bool is_locality_subgroup(const Locality& l, const Set& h) {
  for (int x : h) {
    if (!in_carrier(l, x)) return false;
    for (int y : h)
      if (!l.in_domain({x, y})) return false;
  }
  return true;
}

}  // namespace

bool sylow_property(const Locality& l) {
  for (const auto& h : subgroups(*l.g, l.p)) {
    if (!is_locality_subgroup(l, h)) continue;
    if (h.size() > l.s.size() || (h.size() == l.s.size() && h != l.s && subset(l.s, h))) return false;
    bool into_s = false;
    for (int a : l.carrier) {
      bool ok = true;
      for (int x : h)
        if (!l.in_domain({l.g->inverse[a], x, a}) || !std::binary_search(l.s.begin(), l.s.end(), l.g->conj(x, a))) {
          ok = false;
          break;
        }
      if (ok) {
        into_s = true;
        break;
      }
    }
    if (!into_s) return false;
  }
  return true;
}

namespace {

nlohmann::json label_list(const Locality& l, const std::vector<Set>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : sets) out.push_back(l.labels(s));
  return out;
}

nlohmann::json locality_values(const Group& g, const Example& e) {
  const Locality l = build(g, e);
  nlohmann::json v;
  v["group_order"] = g.order();
  v["carrier_size"] = l.carrier.size();
  v["carrier"] = l.labels(l.carrier);
  v["s"] = l.labels(l.s);
  v["delta_size"] = l.delta.size();

  const auto om = omega(l);
  bool is_group = true;
  for (const auto& m : om) is_group = is_group && l.in_delta(m);
  v["is_group"] = is_group;
  std::vector<Set> om_sorted = om;
  std::sort(om_sorted.begin(), om_sorted.end(), [&](const Set& a, const Set& b) {
    return a.size() != b.size() ? a.size() < b.size() : l.labels(a) < l.labels(b);
  });
  v["omega"] = label_list(l, om_sorted);
  v["omega_dimension"] = omega_dimension(om);
  v["o_p"] = l.labels(star(om, {0}));
  v["sylow_property"] = sylow_property(l);

  Set nls;
  for (int a : l.carrier)
    if (conjugate(g, l.s, a) == l.s) nls.push_back(a);
  v["normalizer_of_s"] = l.labels(nls);

  // Least rejected pair and least Word-of-Warning triple, in the oracle's element order.
  nlohmann::json pair = nullptr;
  for (int x : l.carrier) {
    for (int y : l.carrier)
      if (!l.in_domain({x, y})) {
        pair = {cycles(g.elems[x]), cycles(g.elems[y])};
        break;
      }
    if (!pair.is_null()) break;
  }
  v["rejected_pair"] = pair;
  if (l.carrier.size() <= 72) {
    nlohmann::json triple = nullptr;
    for (int f : l.carrier) {
      for (int a : l.carrier) {
        if (!l.in_domain({f, a})) continue;
        const int fa = l.product({f, a});
        for (int h : l.carrier)
          if (l.in_domain({fa, h}) && !l.in_domain({f, a, h})) {
            triple = {cycles(g.elems[f]), cycles(g.elems[a]), cycles(g.elems[h])};
            break;
          }
        if (!triple.is_null()) break;
      }
      if (!triple.is_null()) break;
    }
    v["warning_triple"] = triple;
  }

  v["normal_closure_of_s_size"] = normal_closure(l, l.s).size();

  auto normals = partial_normals(l);
  std::sort(normals.begin(), normals.end(), [&](const Set& a, const Set& b) {
    return a.size() != b.size() ? a.size() < b.size() : l.labels(a) < l.labels(b);
  });
  nlohmann::json nj = nlohmann::json::array();
  for (const auto& n : normals) {
    const auto cosets = maximal_cosets(l, n);
    std::vector<std::size_t> sizes;
    for (const auto& c : cosets) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    Set covered;
    for (const auto& c : cosets) covered = unite(covered, c);
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    nj.push_back({{"members", l.labels(n)},
                  {"t", l.labels(intersect(n, l.s))},
                  {"coset_sizes", sizes},
                  {"cosets_partition", covered == l.carrier && total == l.carrier.size()},
                  {"quotient_size", cosets.size()},
                  {"quotient_s_order", l.s.size() / intersect(n, l.s).size()}});
  }
  v["normals"] = nj;

  nlohmann::json pj = nlohmann::json::array();
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = 0; j < normals.size(); ++j) {
      const Set mn = product_set(l, normals[i], normals[j]);
      pj.push_back({{"m", i},
                    {"n", j},
                    {"mn_size", mn.size()},
                    {"mn_is_normal", is_partial_normal(l, mn)},
                    {"decomposable", all_decomposable(l, normals[i], normals[j])}});
    }
  v["products"] = pj;
  Set forward = normals.front();
  for (std::size_t i = 1; i < normals.size(); ++i) forward = product_set(l, forward, normals[i]);
  Set backward = normals.back();
  for (std::size_t i = normals.size() - 1; i-- > 0;) backward = product_set(l, backward, normals[i]);
  v["join_size"] = forward.size();
  v["join_order_independent"] = forward == backward;
  return v;
}

nlohmann::json gl32_values() {
  const Example& e = example("gl32-small");
  const Group g = generate(e.degree, e.gens);
  const Locality l = build(g, e);
  auto gen = [&](const std::vector<std::string>& cs) {
    Set s;
    for (const auto& c : cs) s.push_back(g.find(c));
    std::sort(s.begin(), s.end());
    return closure(g, s);
  };
  const Set p1 = gen({"(4 5)(6 7)", "(4 6)(5 7)"});
  const Set p2 = gen({"(4 5)(6 7)", "(2 3)(6 7)"});
  const Set m1 = normalizer(g, p1);
  const Set m2 = normalizer(g, p2);

  nlohmann::json v;
  v["group_order"] = g.order();
  std::size_t sylows = 0;
  for (const auto& h : subgroups(g, 2))
    if (h.size() == l.s.size()) ++sylows;
  v["sylow_count"] = sylows;
  v["normalizer_of_s_order"] = normalizer(g, l.s).size();
  v["m1_order"] = m1.size();
  v["m2_order"] = m2.size();

  int outside = -1;
  for (int a : m2)
    if (!std::binary_search(m1.begin(), m1.end(), a)) {
      outside = a;
      break;
    }
  const Set p1c = conjugate(g, p1, outside);
  bool elementary = true;
  for (int x : p1c) elementary = elementary && g.mul(x, x) == 0;
  v["p1_conjugate"] = {{"by", cycles(g.elems[outside])},
                       {"members", labels(g, p1c)},
                       {"distinct", p1c != p1},
                       {"order", p1c.size()},
                       {"elementary_abelian", elementary}};

  v["small_carrier_is_m1_union_m2"] = l.carrier == unite(m1, m2);
  v["small_carrier_size"] = l.carrier.size();
  Set m1m2;
  for (int a : m1)
    for (int b : m2) {
      m1m2.push_back(g.mul(a, b));
      m1m2.push_back(g.mul(b, a));
    }
  std::sort(m1m2.begin(), m1m2.end());
  m1m2.erase(std::unique(m1m2.begin(), m1m2.end()), m1m2.end());
  const Locality full = build(g, example("gl32-full"));
  v["full_carrier_is_m1m2_union_m2m1"] = full.carrier == m1m2;
  v["full_carrier_size"] = full.carrier.size();
  // The full-Δ locality restricted to {S, P1, P2}: {g ∈ L : S_g ∈ {S,P1,P2}}.
  Set restricted;
  for (int a : full.carrier)
    if (l.in_delta(full.s_w({a}))) restricted.push_back(a);
  v["restriction_is_small"] = restricted == l.carrier;

  // S_g for g ∈ M1 \ N_{M1}(S) contains P1.
  const Set nm1s = intersect(m1, normalizer(g, l.s));
  bool contains_p1 = true;
  for (int a : m1)
    if (!std::binary_search(nm1s.begin(), nm1s.end(), a)) contains_p1 = contains_p1 && subset(p1, l.s_w({a}));
  v["s_g_contains_p1_on_m1"] = contains_p1;

  const auto om = omega(l);
  const Set p12 = intersect(p1, p2);
  v["star_p1_meet_p2"] = labels(g, star(om, p12));
  v["p1_meet_p2_in_omega"] = std::find(om.begin(), om.end(), p12) != om.end();

  std::set<std::vector<int>> homs;
  for (int a : l.carrier)
    if (conjugate(g, p1, a) == p1) {
      std::vector<int> img;
      for (int x : p1) img.push_back(g.conj(x, a));
      homs.insert(img);
    }
  v["hom_f_p1_p1"] = homs.size();

  // P1 is fully normalized: |N_S(P1)| is largest among the conjugates of P1 in S by L.
  const std::size_t ns_p1 = intersect(normalizer(g, p1), l.s).size();
  bool fully = true;
  for (int a : l.carrier) {
    const Set q = conjugate(g, p1, a);
    if (subset(q, l.s) && intersect(normalizer(g, q), l.s).size() > ns_p1) fully = false;
  }
  v["p1_fully_normalized"] = fully;

  // The normal closure of the central involution of S.
  int z = -1;
  for (int x : l.s)
    if (x != 0) {
      bool central = true;
      for (int y : l.s) central = central && g.mul(x, y) == g.mul(y, x);
      if (central) z = x;
    }
  v["central_involution"] = cycles(g.elems[z]);
  v["normal_closure_of_z"] = labels(g, normal_closure(l, {z}));
  return v;
}

}  // namespace

nlohmann::json compute(const std::string& name) {
  if (name == "gl32-group") return gl32_values();
  const Example& e = example(name);
  const Group g = generate(e.degree, e.gens);
  return locality_values(g, e);
}

nlohmann::json compute_all() {
  nlohmann::json out;
  out["gl32-group"] = compute("gl32-group");
  for (const auto& e : examples()) out[e.name] = compute(e.name);
  return out;
}

}  // namespace oracle
