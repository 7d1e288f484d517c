#include "lockit/word_states.hpp"

#include <bit>

namespace lockit {

MapTable::MapTable(std::size_t k) : k_(k) {
  std::vector<std::uint8_t> id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = static_cast<std::uint8_t>(i);
  intern(id.data());
}

std::uint32_t MapTable::intern(const std::uint8_t* images) {
  std::string key(reinterpret_cast<const char*>(images), k_);
  auto [it, inserted] = index_.emplace(std::move(key), static_cast<std::uint32_t>(domains_.size()));
  if (!inserted) return it->second;
  Mask dom = 0;
  for (std::size_t i = 0; i < k_; ++i)
    if (images[i] != kNoImage) dom |= Mask{1} << i;
  data_.insert(data_.end(), images, images + k_);
  domains_.push_back(dom);
  return it->second;
}

std::uint32_t MapTable::compose(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<std::uint8_t> out(k_, kNoImage);
  for (std::size_t i = 0; i < k_; ++i) {
    const std::uint8_t mid = data_[static_cast<std::size_t>(a) * k_ + i];
    if (mid != kNoImage) out[i] = data_[static_cast<std::size_t>(b) * k_ + mid];
  }
  const auto id = intern(out.data());
  memo_.emplace(key, id);
  return id;
}

Mask MapTable::image_of(std::uint32_t id, Mask x) const {
  Mask out = 0;
  const std::uint8_t* img = images(id);
  for (; x; x &= x - 1) {
    const auto v = img[std::countr_zero(x)];
    if (v == kNoImage) fail(ErrorKind::invalid_input, "subset outside the map's domain");
    out |= Mask{1} << v;
  }
  return out;
}

WordStates::WordStates(const Locality& loc) : loc_(&loc), maps_(loc.s_order()) {
  const std::size_t k = loc.s_order();
  std::vector<std::uint32_t> phis(loc.size());
  std::vector<std::uint8_t> img(k);
  for (Element x = 0; x < loc.size(); ++x) {
    for (std::size_t p = 0; p < k; ++p) img[p] = static_cast<std::uint8_t>(loc.letter(x, static_cast<int>(p)));
    phis[x] = maps_.intern(img.data());
  }
  letters_.resize(loc.size());
  for (Element x = 0; x < loc.size(); ++x) letters_[x] = WordState{phis[x], phis[loc.invert(x)], loc.rep(x), loc.rep(loc.invert(x))};
}

WordState WordStates::of(std::span<const Element> w) {
  WordState s = empty();
  for (Element x : w) s = concat(s, letter(x));
  return s;
}

StateCatalog explore_states(WordStates& ws, const std::vector<Element>& alphabet, std::size_t max_len,
                            std::size_t state_budget) {
  StateCatalog cat;
  std::unordered_set<WordState, WordStateHash> seen{ws.empty()};
  cat.states.push_back(ws.empty());
  cat.words.emplace_back();
  cat.upto.push_back(1);
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = cat.states.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Element x : alphabet) {
        const WordState t = ws.concat(cat.states[i], ws.letter(x));
        if (!seen.insert(t).second) continue;
        if (cat.states.size() >= state_budget) {
          cat.truncated = true;
          return cat;
        }
        cat.states.push_back(t);
        Word w = cat.words[i];
        w.push_back(x);
        cat.words.push_back(std::move(w));
      }
    cat.upto.push_back(cat.states.size());
    begin = end;
  }
  return cat;
}

}  // namespace lockit
