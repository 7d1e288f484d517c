// Exact axiom check for localities on word states.
//
// A statement quantified over words u, v, w with |u| + |v| + |w| <= L holds iff it holds for
// all triples of states whose shortest words have total length <= L. The substitution law is
// grouped by the data of (v, w) that it uses. Associativity follows from multiplicativity at
// the two splits u∘v | w and u | v∘w of the same word, so it is decided by that check.

#include <map>
#include <tuple>

#include "lockit/locality.hpp"
#include "lockit/word_states.hpp"

namespace lockit {

namespace {

Word join(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word join(const Word& a, const Word& b, const Word& c) { return join(join(a, b), c); }

class StateRun {
 public:
  StateRun(const Locality& loc, const AxiomOptions& opt, AxiomReport& rep)
      : loc_(loc), opt_(opt), rep_(rep), ws_(loc) {}

  void run() {
    const std::size_t l = opt_.max_len;
    std::vector<Element> alphabet(loc_.size());
    for (Element x = 0; x < loc_.size(); ++x) alphabet[x] = x;
    cat_ = explore_states(ws_, alphabet, l, opt_.word_budget);
    len_ = cat_.truncated ? cat_.upto.size() - 1 : l;
    if (len_ == 0 && cat_.truncated) return;
    for (std::size_t k = 0; k <= len_; ++k)
      for (std::size_t i = min_len_.size(); i < cat_.upto[k]; ++i) min_len_.push_back(k);

    check_letters();
    check_singles();
    check_pairs();
    check_substitution();
    check_cancellation();
    rep_.covered_len = len_;
  }

 private:
  void flag(const char* rule, Word w, std::string detail) {
    rep_.add(Violation{rule, std::move(w), std::move(detail)}, opt_.max_recorded);
  }

  std::size_t count_upto(std::size_t k) const { return cat_.upto[std::min(k, len_)]; }
  std::size_t min_len(std::size_t i) const { return min_len_[i]; }

  bool in_d(const WordState& s) const { return ws_.in_domain(s); }
  std::optional<Element> prod(const WordState& s) const { return ws_.product(s); }

  void check_letters() {
    if (!in_d(ws_.empty()) || prod(ws_.empty()) != loc_.identity())
      flag("segment-closure", {}, "empty word must be in D with product 1");
    for (Element x = 0; x < loc_.size(); ++x) {
      ++rep_.checked;
      if (loc_.invert(loc_.invert(x)) != x) flag("inversion", {x}, "inversion is not an involution");
      if (!in_d(ws_.letter(x))) flag("segment-closure", {x}, "length-1 word not in D");
      else if (prod(ws_.letter(x)) != x) flag("unary-product", {x}, "product of a length-1 word differs from its entry");
    }
  }

  void check_singles() {
    for (std::size_t i = 0; i < count_upto(len_); ++i) {
      const WordState& s = cat_.states[i];
      if (!in_d(s)) continue;
      ++rep_.checked;
      const Word& w = cat_.words[i];
      const auto p = prod(s);
      if (!p) {
        flag("closure", w, "product lies outside the carrier");
        continue;
      }
      const WordState inv = ws_.inverse(s);
      const WordState back = ws_.concat(inv, s);
      if (!in_d(back) || prod(back) != loc_.identity()) flag("inversion", w, "w⁻¹∘w fails");
      if (!in_d(inv) || prod(inv) != loc_.invert(*p)) flag("inverse-product", w, "Π(w⁻¹) ≠ Π(w)⁻¹");
    }
  }

  void check_pairs() {
    const WordState& one = ws_.letter(loc_.identity());
    for (std::size_t i = 0; i < count_upto(len_); ++i) {
      const WordState& u = cat_.states[i];
      const std::size_t rest = len_ - min_len(i);
      for (std::size_t j = 0; j < count_upto(rest); ++j) {
        const WordState& v = cat_.states[j];
        const WordState uv = ws_.concat(u, v);
        if (!in_d(uv)) continue;
        ++rep_.checked;
        const Word& wu = cat_.words[i];
        const Word& wv = cat_.words[j];
        if (!in_d(u) || !in_d(v)) {
          flag("segment-closure", join(wu, wv), "segment at split " + std::to_string(wu.size()) + " not in D");
          continue;
        }
        const auto p = prod(uv);
        const auto pu = prod(u);
        const auto pv = prod(v);
        if (!p || !pu || !pv) continue;  // reported by check_singles
        const WordState pair = ws_.concat(ws_.letter(*pu), ws_.letter(*pv));
        if (!in_d(pair) || prod(pair) != p) flag("multiplicative", join(wu, wv), "(Π(u),Π(v)) fails");
        const WordState ins = ws_.concat(ws_.concat(u, one), v);
        if (!in_d(ins) || prod(ins) != p) flag("identity-insertion", join(wu, wv), "u∘(1)∘v fails");
        const WordState left = ws_.concat(ws_.concat(ws_.inverse(u), u), v);
        if (!in_d(left) || prod(left) != pv) flag("inverse-insertion", join(wu, wv), "u⁻¹∘u∘v fails");
        const WordState right = ws_.concat(uv, ws_.inverse(v));
        if (!in_d(right) || prod(right) != pu) flag("inverse-insertion", join(wu, wv), "u∘v∘v⁻¹ fails");
      }
    }
  }

  // u∘v∘w ∈ D implies u∘(Π(v))∘w ∈ D with the same product.
  void check_substitution() {
    using Key = std::tuple<std::uint32_t, std::uint32_t, Element, Element>;
    struct Entry {
      std::size_t len;
      std::size_t v;
      std::size_t w;
    };
    std::map<Key, Entry> sigs;
    for (std::size_t i = 0; i < count_upto(len_); ++i) {
      const WordState& v = cat_.states[i];
      if (!in_d(v)) continue;
      const auto pv = prod(v);
      if (!pv) continue;
      const WordState& pl = ws_.letter(*pv);
      const std::size_t lv = min_len(i);
      for (std::size_t j = 0; j < count_upto(len_ - lv); ++j) {
        const WordState& w = cat_.states[j];
        const Key key{ws_.maps().compose(v.phi, w.phi), ws_.maps().compose(pl.phi, w.phi),
                      loc_.ambient().mul(v.amb, w.amb), loc_.ambient().mul(pl.amb, w.amb)};
        const std::size_t len = lv + min_len(j);
        auto [it, inserted] = sigs.emplace(key, Entry{len, i, j});
        if (!inserted && len < it->second.len) it->second = Entry{len, i, j};
      }
    }
    const auto& g = loc_.ambient();
    for (const auto& [key, e] : sigs) {
      const auto& [vw, sub, a_vw, a_sub] = key;
      for (std::size_t k = 0; k < count_upto(len_ - e.len); ++k) {
        const WordState& u = cat_.states[k];
        if (!loc_.in_delta(ws_.maps().domain(ws_.maps().compose(u.phi, vw)))) continue;
        ++rep_.checked;
        const auto word = [&] { return join(cat_.words[k], cat_.words[e.v], cat_.words[e.w]); };
        if (!loc_.in_delta(ws_.maps().domain(ws_.maps().compose(u.phi, sub))))
          flag("substitution", word(), "u∘(Π(v))∘w not in D");
        else if (loc_.fiber(g.mul(u.amb, a_vw)) != loc_.fiber(g.mul(u.amb, a_sub)))
          flag("substitution", word(), "Π(u∘(Π(v))∘w) differs");
      }
    }
  }

  // Π(u∘v) determines Π(v) and conversely, for fixed u; and the same on the right.
  void check_cancellation() {
    const std::size_t n = loc_.size();
    for (std::size_t i = 0; i < count_upto(len_); ++i) {
      const WordState& u = cat_.states[i];
      if (!in_d(u)) continue;
      const std::size_t rest = len_ - min_len(i);
      for (int side = 0; side < 2; ++side) {
        std::vector<std::int64_t> fwd(n, -1);
        std::vector<std::int64_t> bwd(n, -1);
        for (std::size_t j = 0; j < count_upto(rest); ++j) {
          const WordState& v = cat_.states[j];
          const WordState uv = side == 0 ? ws_.concat(u, v) : ws_.concat(v, u);
          if (!in_d(uv) || !in_d(v)) continue;
          const auto puv = prod(uv);
          const auto pv = prod(v);
          if (!puv || !pv) continue;
          ++rep_.checked;
          const auto word = [&] {
            return side == 0 ? join(cat_.words[i], cat_.words[j]) : join(cat_.words[j], cat_.words[i]);
          };
          if (fwd[*puv] == -1) fwd[*puv] = *pv;
          else if (fwd[*puv] != static_cast<std::int64_t>(*pv))
            flag("cancellation", word(), side == 0 ? "left cancellation fails" : "right cancellation fails");
          if (bwd[*pv] == -1) bwd[*pv] = *puv;
          else if (bwd[*pv] != static_cast<std::int64_t>(*puv))
            flag("uncancellation", word(), side == 0 ? "left uncancellation fails" : "right uncancellation fails");
        }
      }
    }
  }

  const Locality& loc_;
  const AxiomOptions& opt_;
  AxiomReport& rep_;
  WordStates ws_;
  StateCatalog cat_;
  std::size_t len_ = 0;
  std::vector<std::size_t> min_len_;
};

}  // namespace

AxiomReport check_axioms(const Locality& loc, const AxiomOptions& options) {
  AxiomReport report;
  report.method = "word-states";
  report.max_len = options.max_len;
  StateRun(loc, options, report).run();
  return report;
}

}  // namespace lockit
