#pragma once

// Subgroup arithmetic over any GroupTable restricted to a member set on which the
// multiplication is total. FiniteGroup uses these directly; localities use them on
// S and on the groups N_L(P).

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "lockit/group.hpp"

namespace lockit::algo {

template <GroupTable G>
ElementSet close(const G& g, const ElementSet& seed, Element identity = 0) {
  ElementSet out(g.universe());
  out.insert(identity);
  std::vector<Element> gens;
  for (Element s : seed)
    if (s != identity) gens.push_back(s);
  std::vector<Element> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element s : gens) {
        Element y = g.mul(x, s);
        if (!out.contains(y)) {
          out.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

// Extends an already-closed subgroup `base` (with generators `base_gens`) by `extra`.
template <GroupTable G>
ElementSet extend(const G& g, const ElementSet& base, const std::vector<Element>& base_gens, Element extra) {
  ElementSet out = base;
  std::vector<Element> gens = base_gens;
  gens.push_back(extra);
  std::vector<Element> frontier = base.to_vector();
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element s : gens) {
        Element y = g.mul(x, s);
        if (!out.contains(y)) {
          out.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

template <GroupTable G>
Element element_order(const G& g, Element x, Element identity = 0) {
  Element k = 1;
  for (Element y = x; y != identity; y = g.mul(y, x)) ++k;
  return k;
}

template <GroupTable G>
ElementSet conjugate(const G& g, const ElementSet& p, Element by) {
  ElementSet out(g.universe());
  const Element inv = g.inv(by);
  for (Element x : p) out.insert(g.mul(g.mul(inv, x), by));
  return out;
}

// N_H(P) for H a member set.
template <GroupTable G>
ElementSet normalizer_in(const G& g, const ElementSet& within, const ElementSet& p) {
  ElementSet out(g.universe());
  for (Element h : within)
    if (conjugate(g, p, h) == p) out.insert(h);
  return out;
}

template <GroupTable G>
ElementSet centralizer_in(const G& g, const ElementSet& within, const ElementSet& p) {
  ElementSet out(g.universe());
  for (Element h : within) {
    bool ok = true;
    for (Element x : p)
      if (g.mul(x, h) != g.mul(h, x)) {
        ok = false;
        break;
      }
    if (ok) out.insert(h);
  }
  return out;
}

// All subgroups of the group on `within` (optionally only p-subgroups), sorted canonically.
// Every subgroup is reached from the trivial one by adjoining one element at a time.
template <GroupTable G>
std::vector<ElementSet> subgroups_of(const G& g, const ElementSet& within, unsigned only_p = 0,
                                     Element identity = 0) {
  std::vector<Element> candidates;
  for (Element x : within) {
    if (x == identity) continue;
    if (only_p != 0 && !is_p_power(element_order(g, x, identity), only_p)) continue;
    candidates.push_back(x);
  }
  struct Node {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::unordered_set<ElementSet> seen;
  std::vector<Node> todo;
  ElementSet trivial(g.universe());
  trivial.insert(identity);
  seen.insert(trivial);
  todo.push_back({trivial, {}});
  std::vector<ElementSet> result{trivial};
  while (!todo.empty()) {
    Node node = std::move(todo.back());
    todo.pop_back();
    for (Element x : candidates) {
      if (node.members.contains(x)) continue;
      ElementSet bigger = extend(g, node.members, node.gens, x);
      if (only_p != 0 && !is_p_power(bigger.count(), only_p)) continue;
      if (seen.insert(bigger).second) {
        result.push_back(bigger);
        auto gens = node.gens;
        gens.push_back(x);
        todo.push_back({std::move(bigger), std::move(gens)});
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace lockit::algo
