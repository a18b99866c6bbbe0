#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sforge {

// Fixed-length bit vector over GF(2), packed into 64-bit words (bit i lives in
// word i/64 at position i%64). Bits past size() are always zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  static constexpr std::size_t word_count(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return nbits_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void assign(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  // Position of the lowest set bit with index >= from, or npos.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }
  // Position of the highest set bit, or npos.
  std::size_t find_last() const;

  // Requires other.size() <= size().
  BitVec& operator^=(const BitVec& other);
  // *this ^= (other << shift); requires other.size() + shift <= size().
  void xor_shifted(const BitVec& other, std::size_t shift);

  // Truncates or zero-extends.
  void resize(std::size_t nbits);

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const BitVec& x, const BitVec& y) = default;

 private:
  void clear_tail();

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace sforge
