#pragma once

#include <cstddef>
#include <vector>

#include "sforge/bitvec.hpp"

namespace sforge {

/// Incremental row echelon form over GF(2). Every stored row carries a tag
/// vector recording which caller-supplied inputs it is the sum of, so a
/// reduction also yields the combination that produced it.
///
/// The pivot of a row is its lowest set bit; rows only have set bits at or
/// above their pivot.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t ncols, std::size_t ntags);

  struct Reduction {
    BitVec residual;
    BitVec combination;
  };

  /// Adds v (with its tag) to the span. Returns false when v was already in it.
  bool insert(BitVec v, BitVec tag);
  /// Adds v tagged with the unit vector e_index.
  bool insert_unit(BitVec v, std::size_t index);

  /// v + residual equals the sum of the tagged inputs set in combination.
  /// residual is zero exactly when v lies in the span.
  Reduction reduce(BitVec v) const;
  bool in_span(const BitVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t ntags() const { return ntags_; }
  /// Columns that carry no pivot, ascending; with rank() these split the
  /// coordinate space into the span plus a complement of unit vectors.
  std::vector<std::size_t> free_columns() const;

 private:
  struct Row {
    BitVec vec;
    BitVec tag;
  };

  std::size_t reduce_in_place(BitVec& v, BitVec* tag) const;

  std::size_t ncols_;
  std::size_t ntags_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;
};

}  // namespace sforge
