/*
 * Copyright 2026 The dirlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dirlab {

// Fixed-length dynamic bitset. Bits past size() in the last word are kept
// clear so word-wise comparison and popcount stay exact.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  static constexpr std::size_t word_count(std::size_t nbits) {
    return (nbits + kWordBits - 1) / kWordBits;
  }

  std::size_t size() const noexcept { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  Bitset& operator|=(const Bitset& o) {
    assert(o.nbits_ == nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(o.nbits_ == nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(o.nbits_ == nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Calls fn(i) for every set bit in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(wi * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Clears any bits beyond size() in the last word.
  void trim() {
    const std::size_t tail = nbits_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace dirlab
