// Copyright 2026 The opeq Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opeq/numeric/sparse.hpp"

#include <string>

#include "opeq/error.hpp"

namespace opeq {

std::vector<Rat> densify(const SparseVector& v, int size) {
  std::vector<Rat> out(size);
  for (const auto& [index, value] : v) {
    if (index < 0 || index >= size) {
      throw Error(Errc::kDimensionMismatch,
                  "sparse index " + std::to_string(index) + " out of range");
    }
    out[index] += value;
  }
  return out;
}

Rat dot(const SparseVector& a, std::span<const Rat> dense) {
  Rat sum;
  for (const auto& [index, value] : a) {
    if (index < 0 || static_cast<std::size_t>(index) >= dense.size()) {
      throw Error(Errc::kDimensionMismatch, "dot: index out of range");
    }
    if (!value.is_zero()) sum += value * dense[index];
  }
  return sum;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::kDimensionMismatch, "dot: length mismatch");
  }
  Rat sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

void SparseMatrix::add(int row, int col, const Rat& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw Error(Errc::kDimensionMismatch, "matrix entry out of range");
  }
  entries_[{row, col}] += value;
}

bool SparseMatrix::contains(int row, int col) const {
  return entries_.contains({row, col});
}

Rat SparseMatrix::at(int row, int col) const {
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? Rat() : it->second;
}

std::vector<Rat> SparseMatrix::multiply(std::span<const Rat> x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw Error(Errc::kDimensionMismatch, "M x: length mismatch");
  }
  std::vector<Rat> out(rows_);
  for (const auto& [rc, value] : entries_) {
    if (!x[rc.second].is_zero()) out[rc.first] += value * x[rc.second];
  }
  return out;
}

std::vector<Rat> SparseMatrix::multiply_transposed(std::span<const Rat> y) const {
  if (static_cast<int>(y.size()) != rows_) {
    throw Error(Errc::kDimensionMismatch, "M^T y: length mismatch");
  }
  std::vector<Rat> out(cols_);
  for (const auto& [rc, value] : entries_) {
    if (!y[rc.first].is_zero()) out[rc.second] += value * y[rc.first];
  }
  return out;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [rc, value] : entries_) t.entries_[{rc.second, rc.first}] = value;
  return t;
}

std::vector<std::vector<Rat>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rat>> dense(rows_, std::vector<Rat>(cols_));
  for (const auto& [rc, value] : entries_) dense[rc.first][rc.second] = value;
  return dense;
}

}  // namespace opeq
