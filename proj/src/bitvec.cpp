#include "sforge/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "sforge/errors.hpp"

namespace sforge {

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVec::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= nbits_) return npos;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return npos;
    w = words_[wi];
  }
}

std::size_t BitVec::find_last() const {
  for (std::size_t wi = words_.size(); wi-- > 0;) {
    if (words_[wi] != 0) {
      return wi * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[wi])));
    }
  }
  return npos;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  assert(other.nbits_ <= nbits_);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

void BitVec::xor_shifted(const BitVec& other, std::size_t shift) {
  assert(other.nbits_ + shift <= nbits_);
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  const auto& src = other.words_;
  if (bs == 0) {
    for (std::size_t j = 0; j < src.size(); ++j) words_[j + ws] ^= src[j];
    return;
  }
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Word w = src[j];
    if (w == 0) continue;
    words_[j + ws] ^= w << bs;
    if (j + ws + 1 < words_.size()) words_[j + ws + 1] ^= w >> (kWordBits - bs);
  }
}

void BitVec::resize(std::size_t nbits) {
  nbits_ = nbits;
  words_.resize(word_count(nbits), 0);
  clear_tail();
}

void BitVec::clear_tail() {
  const std::size_t r = nbits_ % kWordBits;
  if (r != 0 && !words_.empty()) words_.back() &= (Word{1} << r) - 1;
}

}  // namespace sforge
