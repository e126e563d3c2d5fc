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

#ifndef OPEQ_NUMERIC_SPARSE_HPP_
#define OPEQ_NUMERIC_SPARSE_HPP_

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "opeq/numeric/rational.hpp"

namespace opeq {

// (index, value) pairs; indices need not be sorted, duplicates are summed by
// consumers that densify.
using SparseVector = std::vector<std::pair<int, Rat>>;

std::vector<Rat> densify(const SparseVector& v, int size);
Rat dot(const SparseVector& a, std::span<const Rat> dense);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

// Row-major sparse rational matrix. Entries that were never set are
// structural zeros; explicitly stored zeros are kept.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Accumulates into (row, col); creates the entry if absent.
  void add(int row, int col, const Rat& value);
  bool contains(int row, int col) const;
  Rat at(int row, int col) const;

  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

  std::vector<Rat> multiply(std::span<const Rat> x) const;             // M x
  std::vector<Rat> multiply_transposed(std::span<const Rat> y) const;  // Mᵀ y
  SparseMatrix transposed() const;
  std::vector<std::vector<Rat>> to_dense() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rat> entries_;
};

}  // namespace opeq

#endif  // OPEQ_NUMERIC_SPARSE_HPP_
