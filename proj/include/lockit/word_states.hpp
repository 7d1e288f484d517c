#pragma once

// Compositional summaries of words in a locality.
//
// For w = (g_1,...,g_n) the chase map φ_w sends x ∈ S_w to x^{g_1...g_n}; its domain is S_w.
// ψ_w is the chase map of w⁻¹, amb(w) is the ambient product of the representatives and
// amb_inv(w) = amb(w⁻¹). Membership in D (S_w ∈ Δ) and the product (fiber of amb(w)) depend on
// w only through the state (φ_w, ψ_w, amb(w), amb_inv(w)), and the state of u∘v is determined
// by those of u and v. Any statement about words built from these data, their inverses and
// their products can therefore be decided on reachable states.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lockit/locality.hpp"

namespace lockit {

inline constexpr std::uint8_t kNoImage = 0xFF;

// Interned partial maps on {0..k-1}.
class MapTable {
 public:
  explicit MapTable(std::size_t k);

  std::uint32_t intern(const std::uint8_t* images);
  std::uint32_t identity() const { return 0; }
  // Apply a, then b.
  std::uint32_t compose(std::uint32_t a, std::uint32_t b);
  Mask domain(std::uint32_t id) const { return domains_[id]; }
  Mask image_of(std::uint32_t id, Mask x) const;
  const std::uint8_t* images(std::uint32_t id) const { return &data_[static_cast<std::size_t>(id) * k_]; }
  std::size_t size() const { return domains_.size(); }
  std::size_t width() const { return k_; }

 private:
  std::size_t k_;
  std::vector<std::uint8_t> data_;
  std::vector<Mask> domains_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

struct WordState {
  std::uint32_t phi = 0;
  std::uint32_t psi = 0;
  Element amb = 0;
  Element amb_inv = 0;
  bool operator==(const WordState&) const = default;
};

struct WordStateHash {
  std::size_t operator()(const WordState& s) const {
    return (static_cast<std::size_t>(s.phi) * 0x9E3779B97F4A7C15ULL) ^
           (static_cast<std::size_t>(s.psi) * 0xC2B2AE3D27D4EB4FULL) ^ (static_cast<std::size_t>(s.amb) << 7) ^
           (static_cast<std::size_t>(s.amb_inv) << 29);
  }
};

class WordStates {
 public:
  explicit WordStates(const Locality& loc);

  const Locality& locality() const { return *loc_; }
  MapTable& maps() { return maps_; }

  WordState empty() const {
    const Element one = loc_->ambient().identity();
    return WordState{maps_.identity(), maps_.identity(), one, one};
  }
  const WordState& letter(Element x) const { return letters_[x]; }
  WordState concat(const WordState& a, const WordState& b) {
    const auto& g = loc_->ambient();
    return WordState{maps_.compose(a.phi, b.phi), maps_.compose(b.psi, a.psi), g.mul(a.amb, b.amb),
                     g.mul(b.amb_inv, a.amb_inv)};
  }
  WordState inverse(const WordState& s) const { return WordState{s.psi, s.phi, s.amb_inv, s.amb}; }
  WordState of(std::span<const Element> w);

  Mask s_w(const WordState& s) const { return maps_.domain(s.phi); }
  bool in_domain(const WordState& s) const { return loc_->in_delta(maps_.domain(s.phi)); }
  std::optional<Element> product(const WordState& s) const { return loc_->fiber(s.amb); }

 private:
  const Locality* loc_;
  MapTable maps_;
  std::vector<WordState> letters_;
};

// Distinct states of words of length <= max_len over `alphabet`, in order of the shortest word
// reaching them, each with one such word.
struct StateCatalog {
  std::vector<WordState> states;
  std::vector<Word> words;
  std::vector<std::size_t> upto;  // upto[k]: number of states reached by a word of length <= k
  bool truncated = false;         // stopped early at the state budget
};

StateCatalog explore_states(WordStates& ws, const std::vector<Element>& alphabet, std::size_t max_len,
                            std::size_t state_budget = 1'000'000);

}  // namespace lockit
