#include "lockit/group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "lockit/group_algorithms.hpp"

namespace lockit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::resource: return "resource";
    case ErrorKind::domain: return "domain";
    case ErrorKind::parse: return "parse";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || seen[i]) fail(ErrorKind::invalid_input, "permutation images are not a bijection");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> moved(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail(ErrorKind::parse, "empty permutation");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail(ErrorKind::parse, "expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) fail(ErrorKind::parse, "unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail(ErrorKind::parse, "unexpected character in cycle: " + std::string(text));
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) break;
        ++pos;
      }
      if (value < 1 || value > degree)
        fail(ErrorKind::invalid_input, "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto a = cycle[i];
      if (moved[a]) fail(ErrorKind::invalid_input, "point repeated across cycles: " + std::string(text));
      moved[a] = true;
      img[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree()) fail(ErrorKind::invalid_input, "degree mismatch in composition");
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[i] = other.images_[images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto i : p.images()) h = (h ^ i) * 1099511628211ULL;
  return h;
}

FiniteGroup::FiniteGroup(std::vector<Element> table, std::vector<std::string> labels,
                         std::vector<Permutation> permutations)
    : order_(labels.size()),
      table_(std::move(table)),
      inverse_(order_, 0),
      labels_(std::move(labels)),
      permutations_(std::move(permutations)) {
  if (order_ == 0) fail(ErrorKind::invalid_input, "group must be nonempty");
  if (table_.size() != order_ * order_) fail(ErrorKind::invalid_input, "multiplication table has wrong size");
  for (Element a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) fail(ErrorKind::invalid_input, "element 0 is not the identity");
    bool found = false;
    for (Element b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        found = true;
        break;
      }
    if (!found) fail(ErrorKind::invalid_input, "element without inverse: " + labels_[a]);
  }
}

Element FiniteGroup::element_order(Element a) const { return algo::element_order(*this, a); }

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  for (Element e = 0; e < permutations_.size(); ++e)
    if (permutations_[e] == p) return e;
  return std::nullopt;
}

bool FiniteGroup::verify_axioms() const {
  for (Element a = 0; a < order_; ++a) {
    if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) return false;
    for (Element b = 0; b < order_; ++b)
      for (Element c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

FiniteGroup group_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                    const Limits& limits) {
  if (degree == 0) fail(ErrorKind::invalid_input, "degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) fail(ErrorKind::invalid_input, "generator degree mismatch");

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<Permutation, Element, PermutationHash> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elems[i].then(g);
      if (index.contains(next)) continue;
      if (elems.size() >= limits.max_group_order)
        fail(ErrorKind::resource,
             "generated group exceeds order cap " + std::to_string(limits.max_group_order));
      index.emplace(next, static_cast<Element>(elems.size()));
      elems.push_back(std::move(next));
    }
  }

  // Canonical element order: identity first, then by image list.
  std::sort(elems.begin() + 1, elems.end());
  index.clear();
  for (Element e = 0; e < elems.size(); ++e) index.emplace(elems[e], e);

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(elems[a].then(elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(p.to_cycles());
  return FiniteGroup(std::move(table), std::move(labels), std::move(elems));
}

FiniteGroup group_from_cycles(std::size_t degree, std::span<const std::string> generators, const Limits& limits) {
  std::vector<Permutation> perms;
  for (const auto& g : generators) perms.push_back(Permutation::parse_cycles(g, degree));
  return group_from_permutations(degree, perms, limits);
}

Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  if (seed.universe() != g.order()) fail(ErrorKind::invalid_input, "seed universe does not match group order");
  return Subgroup{algo::close(g, seed)};
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& p, Element by) {
  Subgroup out{algo::conjugate(g, p.members, by)};
  LOCKIT_ENSURE(out.order() == p.order(), "conjugate has the same order");
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& p) {
  Subgroup out{algo::normalizer_in(g, g.all(), p.members)};
  LOCKIT_ENSURE(out.order() % p.order() == 0, "|N_G(P)| divisible by |P|");
  return out;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& p) {
  return Subgroup{algo::centralizer_in(g, g.all(), p.members)};
}

namespace {

std::vector<Subgroup> wrap(std::vector<ElementSet> sets) {
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Subgroup{std::move(s)});
  return out;
}

void check_enumeration_cap(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_subgroup_enumeration_order)
    fail(ErrorKind::resource, "group order " + std::to_string(g.order()) + " exceeds subgroup-enumeration cap " +
                                  std::to_string(limits.max_subgroup_enumeration_order));
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  check_enumeration_cap(g, limits);
  return wrap(algo::subgroups_of(g, g.all()));
}

std::vector<Subgroup> p_subgroups(const FiniteGroup& g, unsigned p, const Limits& limits) {
  if (!is_prime(p)) fail(ErrorKind::invalid_input, std::to_string(p) + " is not prime");
  check_enumeration_cap(g, limits);
  return wrap(algo::subgroups_of(g, g.all(), p));
}

std::vector<Subgroup> sylow_p(const FiniteGroup& g, unsigned p, const Limits& limits) {
  auto all = p_subgroups(g, p, limits);
  std::vector<Subgroup> out;
  for (const auto& h : all) {
    bool maximal = true;
    for (const auto& k : all)
      if (k.order() > h.order() && h.members.is_subset_of(k.members)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h);
  }
  const std::size_t expected = p_part(g.order(), p);
  for (const auto& h : out) LOCKIT_ENSURE(h.order() == expected, "maximal p-subgroups have order p-part of |G|");
  return out;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_p_power(std::size_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

}  // namespace lockit
