#pragma once

/**
 * @file index_set.hpp
 * @brief Subsets of the set labels {0, ..., n-1}.
 *
 * An IndexSet is a bit vector stored in 64-bit words.  The first word lives
 * inline, so families with n <= 64 never touch the heap; larger n grow the
 * word array on demand.  Trailing zero words are always trimmed, which makes
 * equality and hashing independent of how a set was built.
 *
 * Labels are 0-based in memory.  Everything user-facing (JSON, CLI output)
 * is 1-based; conversion happens in json_io.hpp only.
 *
 * The three-way comparison is the canonical order used everywhere for
 * reproducible output: by cardinality first, then lexicographically on the
 * sorted member lists.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace iex {

class IndexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  IndexSet() = default;

  IndexSet(std::initializer_list<std::size_t> members) {
    for (std::size_t i : members) insert(i);
  }

  explicit IndexSet(std::span<const std::size_t> members) {
    for (std::size_t i : members) insert(i);
  }

  /// Set whose members are the set bits of `mask`.
  static IndexSet from_mask(word_type mask) {
    IndexSet s;
    if (mask != 0) s.words_.push_back(mask);
    return s;
  }

  /// {0, ..., count-1}
  static IndexSet range(std::size_t count) {
    IndexSet s;
    s.words_.assign(count / word_bits, ~word_type{0});
    if (count % word_bits != 0)
      s.words_.push_back((word_type{1} << (count % word_bits)) - 1);
    return s;
  }

  bool contains(std::size_t i) const noexcept {
    const std::size_t w = i / word_bits;
    return w < words_.size() && ((words_[w] >> (i % word_bits)) & 1U) != 0;
  }

  void insert(std::size_t i) {
    const std::size_t w = i / word_bits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= word_type{1} << (i % word_bits);
  }

  void erase(std::size_t i) {
    const std::size_t w = i / word_bits;
    if (w >= words_.size()) return;
    words_[w] &= ~(word_type{1} << (i % word_bits));
    trim();
  }

  IndexSet with(std::size_t i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }

  IndexSet without(std::size_t i) const {
    IndexSet s = *this;
    s.erase(i);
    return s;
  }

  bool empty() const noexcept { return words_.empty(); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Smallest member, or npos when empty.
  std::size_t front() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0)
        return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
  }

  /// Largest member, or npos when empty.
  std::size_t back() const noexcept {
    if (words_.empty()) return npos;
    const std::size_t w = words_.size() - 1;
    return w * word_bits + (word_bits - 1) -
           static_cast<std::size_t>(std::countl_zero(words_[w]));
  }

  /// One past the largest member (0 when empty).
  std::size_t extent() const noexcept { return empty() ? 0 : back() + 1; }

  bool is_subset_of(const IndexSet& other) const noexcept {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  bool intersects(const IndexSet& other) const noexcept {
    const std::size_t k = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < k; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  IndexSet& operator|=(const IndexSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    trim();
    return *this;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }

  /// Calls f(i) for every member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        f(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Low 64 bits; exact whenever extent() <= 64.
  word_type low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  std::span<const word_type> words() const noexcept { return {words_.data(), words_.size()}; }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (word_type w : words_) {
      h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) noexcept {
    return std::ranges::equal(a.words_, b.words_);
  }

  /// Canonical order: cardinality, then lexicographic on sorted members.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    // Equal cardinality: the set holding the lowest differing label sorts first.
    const std::size_t k = std::max(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < k; ++w) {
      const word_type aw = w < a.words_.size() ? a.words_[w] : 0;
      const word_type bw = w < b.words_.size() ? b.words_[w] : 0;
      const word_type diff = aw ^ bw;
      if (diff != 0) {
        const word_type lowest = diff & (~diff + 1);
        return (aw & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
    os << '{';
    bool first = true;
    s.for_each([&](std::size_t i) {
      os << (first ? "" : ",") << (i + 1);
      first = false;
    });
    return os << '}';
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  boost::container::small_vector<word_type, 1> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace iex

template <>
struct std::hash<iex::IndexSet> {
  std::size_t operator()(const iex::IndexSet& s) const noexcept { return s.hash(); }
};
