#pragma once

// Finite-dimensional C*-algebras A = M_{n_1}(C) + ... + M_{n_r}(C) and their
// elements, stored block by block.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "awstar/error.hpp"

namespace awstar::fdalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Block sizes (n_1, ..., n_r) of a direct sum of full matrix algebras.
class AlgebraShape {
 public:
  AlgebraShape() = default;
  explicit AlgebraShape(std::vector<std::size_t> blocks)
      : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InputError("algebra shape needs at least one block");
    for (auto n : blocks_)
      if (n == 0) throw InputError("algebra shape blocks must be positive");
  }
  AlgebraShape(std::initializer_list<std::size_t> blocks)
      : AlgebraShape(std::vector<std::size_t>(blocks)) {}

  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t operator[](std::size_t k) const { return blocks_[k]; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }

  bool operator==(const AlgebraShape&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(blocks_[k]);
    }
    return s + ")";
  }

 private:
  std::vector<std::size_t> blocks_;
};

struct Tolerance {
  double eps_struct = 1e-9;
  double eps_cluster = 1e-8;

  void validate() const {
    if (!(eps_struct > 0) || !(eps_cluster > 0))
      throw InputError("tolerances must be positive");
  }
};

/// An element of the algebra: one square complex matrix per block.
class Element {
 public:
  Element() = default;

  Element(AlgebraShape shape, std::vector<Matrix> blocks)
      : shape_(std::move(shape)), blocks_(std::move(blocks)) {
    if (blocks_.size() != shape_.num_blocks())
      throw InputError("element has " + std::to_string(blocks_.size()) +
                       " blocks, shape " + shape_.str() + " needs " +
                       std::to_string(shape_.num_blocks()));
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      auto n = static_cast<Eigen::Index>(shape_[k]);
      if (blocks_[k].rows() != n || blocks_[k].cols() != n)
        throw InputError("block " + std::to_string(k) + " is not " +
                         std::to_string(n) + "x" + std::to_string(n));
    }
  }

  static Element zero(const AlgebraShape& s) {
    std::vector<Matrix> b;
    for (auto n : s.blocks()) b.push_back(Matrix::Zero(n, n));
    return {s, std::move(b)};
  }

  static Element identity(const AlgebraShape& s) {
    std::vector<Matrix> b;
    for (auto n : s.blocks()) b.push_back(Matrix::Identity(n, n));
    return {s, std::move(b)};
  }

  const AlgebraShape& shape() const { return shape_; }
  const Matrix& block(std::size_t k) const { return blocks_[k]; }
  Matrix& block(std::size_t k) { return blocks_[k]; }
  std::span<const Matrix> blocks() const { return blocks_; }

 private:
  AlgebraShape shape_;
  std::vector<Matrix> blocks_;
};

inline void require_same_shape(const Element& a, const Element& b) {
  if (a.shape() != b.shape())
    throw InputError("shape mismatch: " + a.shape().str() + " vs " +
                     b.shape().str());
}

template <class F>
Element blockwise(const Element& a, F&& f) {
  std::vector<Matrix> out;
  out.reserve(a.shape().num_blocks());
  for (const auto& m : a.blocks()) out.push_back(f(m));
  return {a.shape(), std::move(out)};
}

template <class F>
Element blockwise(const Element& a, const Element& b, F&& f) {
  require_same_shape(a, b);
  std::vector<Matrix> out;
  out.reserve(a.shape().num_blocks());
  for (std::size_t k = 0; k < a.shape().num_blocks(); ++k)
    out.push_back(f(a.block(k), b.block(k)));
  return {a.shape(), std::move(out)};
}

inline Element operator*(const Element& a, const Element& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x * y; });
}
inline Element operator+(const Element& a, const Element& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x + y; });
}
inline Element operator-(const Element& a, const Element& b) {
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x - y; });
}
inline Element operator*(Complex s, const Element& a) {
  return blockwise(a, [s](const Matrix& x) -> Matrix { return s * x; });
}

inline Element adjoint(const Element& a) {
  return blockwise(a, [](const Matrix& x) -> Matrix { return x.adjoint(); });
}

inline double block_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

/// Operator norm: the largest singular value over all blocks.
inline double op_norm(const Element& x) {
  double r = 0.0;
  for (const auto& m : x.blocks()) r = std::max(r, block_norm(m));
  return r;
}

inline bool is_projection(const Element& x, const Tolerance& tol = {}) {
  return op_norm(x - adjoint(x)) <= tol.eps_struct &&
         op_norm(x * x - x) <= tol.eps_struct;
}

inline bool is_self_adjoint(const Element& x, const Tolerance& tol = {}) {
  double s = 1.0 + op_norm(x);
  return op_norm(x - adjoint(x)) <= tol.eps_struct * s;
}

inline bool is_normal(const Element& x, const Tolerance& tol = {}) {
  double s = 1.0 + op_norm(x);
  return op_norm(x * adjoint(x) - adjoint(x) * x) <= tol.eps_struct * s * s;
}

inline double commutator_norm(const Element& x, const Element& y) {
  return op_norm(x * y - y * x);
}

inline bool commutes(const Element& x, const Element& y,
                     const Tolerance& tol = {}) {
  double s = (1.0 + op_norm(x)) * (1.0 + op_norm(y));
  return commutator_norm(x, y) <= tol.eps_struct * s;
}

inline bool is_unitary(const Element& u, const Tolerance& tol = {}) {
  auto one = Element::identity(u.shape());
  return op_norm(u * adjoint(u) - one) <= tol.eps_struct &&
         op_norm(adjoint(u) * u - one) <= tol.eps_struct;
}

/// Shape of M_n(A): M_n(+ M_{n_k}) = + M_{n n_k}.
inline AlgebraShape matrix_algebra(const AlgebraShape& s, std::size_t n) {
  if (n == 0) throw InputError("matrix_algebra needs n >= 1");
  std::vector<std::size_t> b;
  for (auto m : s.blocks()) b.push_back(n * m);
  return AlgebraShape(std::move(b));
}

/// Recovers the base shape s from matrix_algebra(s, n).
inline AlgebraShape base_shape(const AlgebraShape& big, std::size_t n) {
  if (n == 0) throw InputError("n must be positive");
  std::vector<std::size_t> b;
  for (auto m : big.blocks()) {
    if (m % n != 0)
      throw InputError("shape " + big.str() + " is not M_" +
                       std::to_string(n) + " of anything");
    b.push_back(m / n);
  }
  return AlgebraShape(std::move(b));
}

/// The (i, j) A-entry of x in M_n(A). Block k of M_n(A) is an n x n grid of
/// n_k x n_k tiles; the entry collects tile (i, j) of every block.
inline Element a_entry(const Element& x, std::size_t n, std::size_t i,
                       std::size_t j) {
  if (i >= n || j >= n)
    throw InputError("A-entry index (" + std::to_string(i) + "," +
                     std::to_string(j) + ") out of range for n=" +
                     std::to_string(n));
  auto s = base_shape(x.shape(), n);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    auto t = static_cast<Eigen::Index>(s[k]);
    out.push_back(x.block(k).block(i * t, j * t, t, t));
  }
  return {s, std::move(out)};
}

/// Inverse of a_entry: builds an element of M_n(A) from its n x n grid of
/// A-entries, given row-major.
inline Element assemble(std::size_t n, std::span<const Element> entries) {
  if (n == 0 || entries.size() != n * n)
    throw InputError("assemble needs n*n entries");
  const auto& s = entries[0].shape();
  for (const auto& e : entries) require_same_shape(entries[0], e);
  auto big = matrix_algebra(s, n);
  auto out = Element::zero(big);
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    auto t = static_cast<Eigen::Index>(s[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.block(k).block(i * t, j * t, t, t) = entries[i * n + j].block(k);
  }
  return out;
}

/// All n*n A-entries, row-major.
inline std::vector<Element> a_entries(const Element& x, std::size_t n) {
  std::vector<Element> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(a_entry(x, n, i, j));
  return out;
}

/// The matrix unit of M_n(A) with the identity of A at (i, j).
inline Element matrix_unit(const AlgebraShape& base, std::size_t n,
                           std::size_t i, std::size_t j) {
  std::vector<Element> grid(n * n, Element::zero(base));
  if (i >= n || j >= n) throw InputError("matrix unit index out of range");
  grid[i * n + j] = Element::identity(base);
  return assemble(n, grid);
}

}  // namespace awstar::fdalg
