#include "lockit/partial_group.hpp"

#include <sstream>

#include "lockit/locality.hpp"

namespace lockit {

std::string format_word(std::span<const Element> w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ')';
  return out.str();
}

std::optional<Element> PartialGroup::try_product(std::span<const Element> w) const {
  if (!in_domain(w)) return std::nullopt;
  return product(w);
}

std::optional<Element> PartialGroup::conjugate(Element x, Element g) const {
  const Element w[3] = {invert(g), x, g};
  return try_product(w);
}

Word PartialGroup::invert_word(std::span<const Element> w) const {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = invert(w[i]);
  return out;
}

Element GroupView::product(std::span<const Element> w) const {
  Element acc = g_->identity();
  for (Element x : w) acc = g_->mul(acc, x);
  return acc;
}

bool FreeOneGenerator::in_domain(std::span<const Element> w) const {
  Element last = one;
  for (Element x : w) {
    if (x >= 3) return false;
    if (x == one) continue;
    if (x == last) return false;
    last = x;
  }
  return true;
}

Element FreeOneGenerator::product(std::span<const Element> w) const {
  if (!in_domain(w)) fail(ErrorKind::domain, "word " + format_word(w) + " is not in D");
  long balance = 0;
  for (Element x : w) balance += (x == a) - (x == b);
  return balance == 0 ? one : (balance > 0 ? a : b);
}

std::string FreeOneGenerator::label(Element x) const { return x == one ? "1" : (x == a ? "a" : "b"); }

TablePartialGroup::TablePartialGroup(std::size_t n, std::vector<Element> table, std::vector<Element> inverse)
    : n_(n), table_(std::move(table)), inverse_(std::move(inverse)) {
  if (table_.size() != n_ * n_ || inverse_.size() != n_) fail(ErrorKind::invalid_input, "table size mismatch");
}

Element TablePartialGroup::product(std::span<const Element> w) const {
  Element acc = 0;
  for (Element x : w) acc = table_[acc * n_ + x];
  return acc;
}

namespace {

// Iterates over all words of a fixed length in lexicographic order.
class WordOdometer {
 public:
  WordOdometer(std::size_t n, std::size_t len) : n_(n), word_(len, 0), done_(n == 0 && len > 0) {}
  bool done() const { return done_; }
  const Word& word() const { return word_; }
  void next() {
    for (std::size_t i = word_.size(); i-- > 0;) {
      if (++word_[i] < n_) return;
      word_[i] = 0;
    }
    done_ = true;
  }

 private:
  std::size_t n_;
  Word word_;
  bool done_;
};

std::size_t words_of_length(std::size_t n, std::size_t len, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (n != 0 && total > cap / n) return cap + 1;
    total *= n;
  }
  return total;
}

Word concat(std::span<const Element> a, std::span<const Element> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(std::span<const Element> a, std::span<const Element> b, std::span<const Element> c) {
  Word out = concat(a, b);
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

class AxiomRun {
 public:
  AxiomRun(const PartialGroup& pg, const AxiomOptions& o, AxiomReport& r) : pg_(pg), opt_(o), rep_(r) {}

  void flag(const char* rule, const Word& w, std::string detail) {
    rep_.add(Violation{rule, w, std::move(detail)}, opt_.max_recorded);
  }

  // Checks every rule whose hypothesis is "x ∈ D".
  void check_word(const Word& x) {
    const std::size_t len = x.size();
    const Element px = pg_.product(x);
    const std::span<const Element> xs(x);
    if (len == 1 && px != x[0]) flag("unary-product", x, "product of a length-1 word differs from its entry");

    for (std::size_t i = 0; i <= len; ++i) {
      const auto u = xs.first(i);
      const auto v = xs.subspan(i);
      const bool du = pg_.in_domain(u);
      const bool dv = pg_.in_domain(v);
      if (!du || !dv) {
        flag("segment-closure", x, "segment at split " + std::to_string(i) + " not in D");
        continue;
      }
      const Element pu = pg_.product(u);
      const Element pv = pg_.product(v);
      // multiplicativity
      const Element pair[2] = {pu, pv};
      if (!pg_.in_domain(pair) || pg_.product(pair) != px)
        flag("multiplicative", x, "(Π(u),Π(v)) fails at split " + std::to_string(i));
      // inserting the identity
      const Element one[1] = {pg_.identity()};
      const Word ins = concat(u, one, v);
      if (!pg_.in_domain(ins) || pg_.product(ins) != px)
        flag("identity-insertion", x, "u∘(1)∘v fails at split " + std::to_string(i));
      // inserting u⁻¹∘u or v∘v⁻¹
      const Word left = concat(pg_.invert_word(u), u, v);
      if (!pg_.in_domain(left) || pg_.product(left) != pv)
        flag("inverse-insertion", x, "u⁻¹∘u∘v fails at split " + std::to_string(i));
      const Word right = concat(u, v, pg_.invert_word(v));
      if (!pg_.in_domain(right) || pg_.product(right) != pu)
        flag("inverse-insertion", x, "u∘v∘v⁻¹ fails at split " + std::to_string(i));

      for (std::size_t j = i; j <= len; ++j) {
        const auto mid = xs.subspan(i, j - i);
        const auto tail = xs.subspan(j);
        // substitution of the middle segment by its product
        if (!pg_.in_domain(mid)) continue;  // already flagged as segment-closure via nested splits
        const Element pm[1] = {pg_.product(mid)};
        const Word sub = concat(u, pm, tail);
        if (!pg_.in_domain(sub))
          flag("substitution", x, "u∘(Π(v))∘w not in D for v at [" + std::to_string(i) + "," + std::to_string(j) + ")");
        else if (pg_.product(sub) != px)
          flag("substitution", x,
               "Π(u∘(Π(v))∘w) differs for v at [" + std::to_string(i) + "," + std::to_string(j) + ")");
        // associativity
        const auto uv = xs.first(j);
        const auto vw = xs.subspan(i);
        if (!pg_.in_domain(uv) || !pg_.in_domain(tail) || !pg_.in_domain(vw)) continue;
        const Element l[2] = {pg_.product(uv), pg_.product(tail)};
        const Element r[2] = {pu, pg_.product(vw)};
        if (!pg_.in_domain(l) || !pg_.in_domain(r) || pg_.product(l) != pg_.product(r))
          flag("associativity", x, "Π(u∘v)Π(w) ≠ Π(u)Π(v∘w)");
      }
    }

    // inversion and inverse product
    const Word xi = pg_.invert_word(x);
    const Word xix = concat(xi, x);
    if (!pg_.in_domain(xix) || pg_.product(xix) != pg_.identity()) flag("inversion", x, "w⁻¹∘w fails");
    if (!pg_.in_domain(xi) || pg_.product(xi) != pg_.invert(px)) flag("inverse-product", x, "Π(w⁻¹) ≠ Π(w)⁻¹");
  }

  // cancellation and uncancellation for a fixed outer word, on both sides.
  void check_cancellation(const Word& u, std::size_t max_rest) {
    const std::size_t n = pg_.size();
    for (int side = 0; side < 2; ++side) {
      std::vector<long> fwd(n, -1);  // Π(u∘v) -> Π(v)
      std::vector<long> bwd(n, -1);  // Π(v) -> Π(u∘v)
      for (std::size_t len = 0; len <= max_rest; ++len) {
        for (WordOdometer it(n, len); !it.done(); it.next()) {
          const Word& v = it.word();
          const Word uv = side == 0 ? concat(u, v) : concat(v, u);
          if (!pg_.in_domain(uv) || !pg_.in_domain(v)) continue;
          ++rep_.checked;
          const Element puv = pg_.product(uv);
          const Element pv = pg_.product(v);
          if (fwd[puv] == -1) fwd[puv] = pv;
          else if (fwd[puv] != static_cast<long>(pv))
            flag("cancellation", uv, side == 0 ? "left cancellation fails" : "right cancellation fails");
          if (bwd[pv] == -1) bwd[pv] = puv;
          else if (bwd[pv] != static_cast<long>(puv))
            flag("uncancellation", uv, side == 0 ? "left uncancellation fails" : "right uncancellation fails");
        }
      }
    }
  }

 private:
  const PartialGroup& pg_;
  const AxiomOptions& opt_;
  AxiomReport& rep_;
};

}  // namespace

AxiomReport check_axioms(const PartialGroup& pg, const AxiomOptions& options) {
  if (const auto* loc = dynamic_cast<const Locality*>(&pg)) return check_axioms(*loc, options);
  return check_axioms_all_words(pg, options);
}

AxiomReport check_axioms_all_words(const PartialGroup& pg, const AxiomOptions& options) {
  AxiomReport report;
  report.method = "all-words";
  report.max_len = options.max_len;
  AxiomRun run(pg, options, report);
  const std::size_t n = pg.size();

  for (Element x = 0; x < n; ++x) {
    if (pg.invert(pg.invert(x)) != x) run.flag("inversion", {x}, "inversion is not an involution");
  }
  if (!pg.in_domain(Word{}) || pg.product(Word{}) != pg.identity())
    run.flag("segment-closure", {}, "empty word must be in D with product 1");

  std::size_t covered = 0;
  for (std::size_t len = 0; len <= options.max_len; ++len) {
    // The cancellation pass for outer words of this length costs about len * n^max_len.
    if (words_of_length(n, len, options.word_budget) > options.word_budget) break;
    for (WordOdometer it(n, len); !it.done(); it.next()) {
      const Word& x = it.word();
      ++report.checked;
      if (!pg.in_domain(x)) {
        if (len == 1) run.flag("segment-closure", x, "length-1 word not in D");
        continue;
      }
      run.check_word(x);
    }
    covered = len;
  }
  // Cancellation: outer word u and rest v with |u| + |v| <= covered.
  for (std::size_t len = 0; len <= covered; ++len) {
    for (WordOdometer it(n, len); !it.done(); it.next()) {
      if (!pg.in_domain(it.word())) continue;
      run.check_cancellation(it.word(), covered - len);
    }
  }
  report.covered_len = covered;
  return report;
}

ElementSet generated_partial_subgroup(const PartialGroup& pg, const ElementSet& x) {
  ElementSet h = x;
  h.insert(pg.identity());
  std::vector<Element> members = h.to_vector();
  for (Element m : std::vector<Element>(members)) {
    Element i = pg.invert(m);
    if (!h.contains(i)) {
      h.insert(i);
      members.push_back(i);
    }
  }
  // Each new element is multiplied against everything already present, on both sides.
  for (std::size_t k = 0; k < members.size(); ++k) {
    const Element a = members[k];
    for (std::size_t j = 0; j <= k; ++j) {
      const Element b = members[j];
      for (int order = 0; order < 2; ++order) {
        const Element w[2] = {order ? b : a, order ? a : b};
        auto p = pg.try_product(w);
        if (!p || h.contains(*p)) continue;
        for (Element add : {*p, pg.invert(*p)}) {
          if (!h.contains(add)) {
            h.insert(add);
            members.push_back(add);
          }
        }
      }
    }
  }
  return h;
}

bool is_partial_subgroup(const PartialGroup& pg, const ElementSet& h) {
  if (!h.contains(pg.identity())) return false;
  for (Element a : h) {
    if (!h.contains(pg.invert(a))) return false;
    for (Element b : h) {
      const Element w[2] = {a, b};
      auto p = pg.try_product(w);
      if (p && !h.contains(*p)) return false;
    }
  }
  return true;
}

bool is_partial_normal_in(const PartialGroup& pg, const ElementSet& h) {
  if (!is_partial_subgroup(pg, h)) return false;
  for (Element x : h)
    for (Element g = 0; g < pg.size(); ++g) {
      auto c = pg.conjugate(x, g);
      if (c && !h.contains(*c)) return false;
    }
  return true;
}

Word PartialHomomorphism::apply(std::span<const Element> w) const {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = map[w[i]];
  return out;
}

namespace {

void require_wellformed(const PartialHomomorphism& phi) {
  if (!phi.source || !phi.target) fail(ErrorKind::invalid_input, "homomorphism without source or target");
  if (phi.map.size() != phi.source->size()) fail(ErrorKind::invalid_input, "homomorphism map has wrong size");
  for (Element y : phi.map)
    if (y >= phi.target->size()) fail(ErrorKind::invalid_input, "homomorphism image outside target");
}

}  // namespace

HomomorphismReport check_homomorphism(const PartialHomomorphism& phi, const AxiomOptions& options) {
  require_wellformed(phi);
  HomomorphismReport report;
  const auto& src = *phi.source;
  const auto& dst = *phi.target;
  auto flag = [&](const char* rule, const Word& w, std::string detail) {
    ++report.violation_count;
    if (report.violations.size() < options.max_recorded) report.violations.push_back({rule, w, std::move(detail)});
  };
  if (phi(src.identity()) != dst.identity()) flag("identity-preserved", {src.identity()}, "identity not preserved");
  for (std::size_t len = 0; len <= options.max_len; ++len) {
    if (words_of_length(src.size(), len, options.word_budget) > options.word_budget) break;
    for (WordOdometer it(src.size(), len); !it.done(); it.next()) {
      const Word& w = it.word();
      if (!src.in_domain(w)) continue;
      ++report.checked;
      const Word image = phi.apply(w);
      if (!dst.in_domain(image)) {
        flag("H1", w, "image word not in D'");
        continue;
      }
      if (dst.product(image) != phi(src.product(w))) flag("H2", w, "Π'(wβ*) ≠ Π(w)β");
    }
    report.covered_len = len;
  }
  return report;
}

ElementSet kernel(const PartialHomomorphism& phi) {
  require_wellformed(phi);
  ElementSet k(phi.source->size());
  for (Element x = 0; x < phi.source->size(); ++x)
    if (phi(x) == phi.target->identity()) k.insert(x);
  LOCKIT_ENSURE(is_partial_normal_in(*phi.source, k), "the kernel of a homomorphism is partial normal");
  return k;
}

bool is_isomorphism(const PartialHomomorphism& phi, const AxiomOptions& options) {
  require_wellformed(phi);
  const auto& src = *phi.source;
  const auto& dst = *phi.target;
  if (src.size() != dst.size()) return false;
  std::vector<Element> inverse(dst.size(), 0);
  std::vector<bool> hit(dst.size(), false);
  for (Element x = 0; x < src.size(); ++x) {
    if (hit[phi(x)]) return false;
    hit[phi(x)] = true;
    inverse[phi(x)] = x;
  }
  if (!check_homomorphism(phi, options).passed()) return false;
  PartialHomomorphism back{&dst, &src, inverse};
  // Dβ* = D' means every word of D' lifts into D.
  for (std::size_t len = 0; len <= options.max_len; ++len) {
    if (words_of_length(dst.size(), len, options.word_budget) > options.word_budget) break;
    for (WordOdometer it(dst.size(), len); !it.done(); it.next())
      if (dst.in_domain(it.word()) && !src.in_domain(back.apply(it.word()))) return false;
  }
  return true;
}

}  // namespace lockit
