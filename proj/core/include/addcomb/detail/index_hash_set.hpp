#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace addcomb::detail {

// Open-addressing set of indices into external storage. The caller supplies
// hashing and equality through callables so the same table serves integer
// elements and lattice points without copying them into the table.
class IndexHashSet {
 public:
  explicit IndexHashSet(std::size_t expected = 16) { rehash_to(table_size_for(expected)); }

  std::size_t size() const { return count_; }

  // Inserts `candidate_index` unless an equal entry exists. `hash` is the
  // candidate's hash; `eq(i)` compares the candidate against stored index i.
  // Returns true when inserted.
  template <typename Eq>
  bool insert(std::size_t candidate_index, std::size_t hash, Eq&& eq) {
    if ((count_ + 1) * 10 >= slots_.size() * 7) grow();
    std::size_t pos = probe(hash, eq);
    if (slots_[pos] != kEmpty) return false;
    slots_[pos] = candidate_index;
    hashes_[pos] = hash;
    ++count_;
    return true;
  }

  template <typename Eq>
  bool contains(std::size_t hash, Eq&& eq) const {
    return slots_[probe(hash, eq)] != kEmpty;
  }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

  static std::size_t table_size_for(std::size_t expected) {
    std::size_t n = 16;
    while (n * 7 < expected * 10) n <<= 1;
    return n;
  }

  void rehash_to(std::size_t n) {
    slots_.assign(n, kEmpty);
    hashes_.assign(n, 0);
  }

  template <typename Eq>
  std::size_t probe(std::size_t hash, Eq&& eq) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t pos = hash & mask;
    while (slots_[pos] != kEmpty) {
      if (hashes_[pos] == hash && eq(slots_[pos])) return pos;
      pos = (pos + 1) & mask;
    }
    return pos;
  }

  void grow() {
    std::vector<std::size_t> old_slots = std::move(slots_);
    std::vector<std::size_t> old_hashes = std::move(hashes_);
    rehash_to(old_slots.size() * 2);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = 0; i < old_slots.size(); ++i) {
      if (old_slots[i] == kEmpty) continue;
      std::size_t pos = old_hashes[i] & mask;
      while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
      slots_[pos] = old_slots[i];
      hashes_[pos] = old_hashes[i];
    }
  }

  std::vector<std::size_t> slots_;
  std::vector<std::size_t> hashes_;
  std::size_t count_ = 0;
};

}  // namespace addcomb::detail
