#include "sforge/gf2linalg.hpp"

#include <cassert>

namespace sforge {

EchelonBasis::EchelonBasis(std::size_t ncols, std::size_t ntags)
    : ncols_(ncols), ntags_(ntags), pivot_row_(ncols, -1) {}

std::size_t EchelonBasis::reduce_in_place(BitVec& v, BitVec* tag) const {
  for (std::size_t p = v.find_first(); p != BitVec::npos;) {
    const int r = pivot_row_[p];
    if (r < 0) return p;
    v ^= rows_[static_cast<std::size_t>(r)].vec;
    if (tag != nullptr) *tag ^= rows_[static_cast<std::size_t>(r)].tag;
    p = v.find_next(p + 1);
  }
  return BitVec::npos;
}

bool EchelonBasis::insert(BitVec v, BitVec tag) {
  assert(v.size() == ncols_ && tag.size() == ntags_);
  const std::size_t pivot = reduce_in_place(v, &tag);
  if (pivot == BitVec::npos) return false;
  // Finish reducing above the pivot so later lookups stay short.
  for (std::size_t p = v.find_next(pivot + 1); p != BitVec::npos; p = v.find_next(p + 1)) {
    const int r = pivot_row_[p];
    if (r >= 0) {
      v ^= rows_[static_cast<std::size_t>(r)].vec;
      tag ^= rows_[static_cast<std::size_t>(r)].tag;
    }
  }
  pivot_row_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back({std::move(v), std::move(tag)});
  return true;
}

bool EchelonBasis::insert_unit(BitVec v, std::size_t index) {
  BitVec tag(ntags_);
  tag.set(index);
  return insert(std::move(v), std::move(tag));
}

EchelonBasis::Reduction EchelonBasis::reduce(BitVec v) const {
  assert(v.size() == ncols_);
  BitVec tag(ntags_);
  for (std::size_t p = v.find_first(); p != BitVec::npos; p = v.find_next(p + 1)) {
    const int r = pivot_row_[p];
    if (r >= 0) {
      v ^= rows_[static_cast<std::size_t>(r)].vec;
      tag ^= rows_[static_cast<std::size_t>(r)].tag;
    }
  }
  return {std::move(v), std::move(tag)};
}

bool EchelonBasis::in_span(const BitVec& v) const { return reduce(v).residual.none(); }

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (pivot_row_[c] < 0) out.push_back(c);
  }
  return out;
}

}  // namespace sforge
