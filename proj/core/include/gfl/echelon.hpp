#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gfl/field.hpp"

namespace gfl {

using Row = std::vector<Residue>;

/// Incrementally built row-echelon basis of a subspace of F_p^width.
///
/// Stored rows are normalized (pivot entry 1) and each has zeros left of its pivot;
/// reduced_rows() back-substitutes to reduced row-echelon form on demand.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t width);
  // The whole of F_p^width, without materializing rows until asked for.
  static EchelonBasis full_space(PrimeField field, std::size_t width);

  const PrimeField& field() const { return field_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return identity_ ? width_ : rows_.size(); }
  bool full() const { return rank() == width_; }

  // Adds the row to the span; returns true iff the rank grew.
  bool insert(Row row);
  bool contains(std::span<const Residue> row) const;
  // Reduces v against the stored pivots in place; v becomes zero iff it lies in the span.
  void reduce(Row& v) const;

  // Rows of the reduced row-echelon form, ordered by pivot column.
  std::vector<Row> reduced_rows() const;
  std::span<const Row> rows() const;
  std::vector<std::size_t> pivot_columns() const;

 private:
  void materialize() const;

  PrimeField field_;
  std::size_t width_;
  bool identity_ = false;
  mutable std::vector<Row> rows_;
  mutable std::vector<int> pivot_row_;  // per column: index into rows_, or -1
};

/// Rank of the given rows.
std::size_t matrix_rank(PrimeField field, std::size_t width, std::span<const Row> rows);

/// A basis of {x : r·x = 0 for every row r}, one vector per free column.
std::vector<Row> null_space(PrimeField field, std::size_t width, std::span<const Row> rows);

}  // namespace gfl
