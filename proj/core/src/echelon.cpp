#include "gfl/echelon.hpp"

#include <algorithm>

#include "gfl/errors.hpp"

namespace gfl {

EchelonBasis::EchelonBasis(PrimeField field, std::size_t width)
    : field_(field), width_(width), pivot_row_(width, -1) {}

EchelonBasis EchelonBasis::full_space(PrimeField field, std::size_t width) {
  EchelonBasis b(field, width);
  b.identity_ = true;
  return b;
}

void EchelonBasis::materialize() const {
  if (!identity_ || rows_.size() == width_) return;
  rows_.clear();
  for (std::size_t c = 0; c < width_; ++c) {
    Row unit(width_, 0);
    unit[c] = 1;
    pivot_row_[c] = static_cast<int>(c);
    rows_.push_back(std::move(unit));
  }
}

std::span<const Row> EchelonBasis::rows() const {
  materialize();
  return rows_;
}

void EchelonBasis::reduce(Row& v) const {
  if (v.size() != width_) throw InvalidArgument("EchelonBasis: row width mismatch");
  if (identity_) {
    std::fill(v.begin(), v.end(), 0);
    return;
  }
  const std::uint64_t p = field_.modulus();
  for (std::size_t c = 0; c < width_; ++c) {
    if (v[c] == 0) continue;
    const int r = pivot_row_[c];
    if (r < 0) continue;
    const Row& b = rows_[r];
    const std::uint64_t f = p - v[c];
    for (std::size_t j = c; j < width_; ++j) {
      if (b[j] != 0) v[j] = static_cast<Residue>((v[j] + f * b[j]) % p);
    }
  }
}

bool EchelonBasis::insert(Row row) {
  if (full()) {
    if (row.size() != width_) throw InvalidArgument("EchelonBasis: row width mismatch");
    return false;
  }
  reduce(row);
  const auto lead = std::find_if(row.begin(), row.end(), [](Residue x) { return x != 0; });
  if (lead == row.end()) return false;
  const std::size_t c = static_cast<std::size_t>(lead - row.begin());
  const Residue s = field_.inv(*lead);
  for (std::size_t j = c; j < width_; ++j) row[j] = field_.mul(row[j], s);
  pivot_row_[c] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonBasis::contains(std::span<const Residue> row) const {
  Row v(row.begin(), row.end());
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  materialize();
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < width_; ++c) {
    if (pivot_row_[c] >= 0) cols.push_back(c);
  }
  return cols;
}

std::vector<Row> EchelonBasis::reduced_rows() const {
  const auto cols = pivot_columns();
  std::vector<Row> out;
  out.reserve(cols.size());
  for (std::size_t c : cols) out.push_back(rows_[pivot_row_[c]]);
  const std::uint64_t p = field_.modulus();
  // Clear entries above each pivot, working from the rightmost pivot leftwards.
  for (std::size_t k = cols.size(); k-- > 0;) {
    const std::size_t c = cols[k];
    const Row& b = out[k];
    for (std::size_t i = 0; i < k; ++i) {
      Row& r = out[i];
      if (r[c] == 0) continue;
      const std::uint64_t f = p - r[c];
      for (std::size_t j = c; j < width_; ++j) {
        if (b[j] != 0) r[j] = static_cast<Residue>((r[j] + f * b[j]) % p);
      }
    }
  }
  return out;
}

std::size_t matrix_rank(PrimeField field, std::size_t width, std::span<const Row> rows) {
  EchelonBasis basis(field, width);
  for (const Row& r : rows) {
    basis.insert(r);
    if (basis.full()) break;
  }
  return basis.rank();
}

std::vector<Row> null_space(PrimeField field, std::size_t width, std::span<const Row> rows) {
  EchelonBasis basis(field, width);
  for (const Row& r : rows) {
    basis.insert(r);
    if (basis.full()) break;
  }
  const auto rref = basis.reduced_rows();
  const auto pivots = basis.pivot_columns();
  std::vector<bool> is_pivot(width, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Row> kernel;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Row v(width, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = field.neg(rref[k][free]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace gfl
