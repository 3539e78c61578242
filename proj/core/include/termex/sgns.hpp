#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace termex::sgns {

// Skip-gram negative-sampling objective for one (target, context) pair.
// The input representation h of the target word is its word vector plus the
// sum of its subword-bucket vectors. Loss:
//   L = -log sigmoid(h.pos) - sum_j log sigmoid(-h.neg_j)
// Templated on the scalar type: training runs float, the finite-difference
// gradient check runs the same code in double.

template <typename T>
T sigmoid(T x) {
  return T(1) / (T(1) + std::exp(-x));
}

template <typename T>
T dot(std::span<const T> a, std::span<const T> b) {
  T sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// h = word_row + sum of bucket rows (accumulated in row order).
template <typename T>
void compose_input(std::span<const T> word_row,
                   std::span<const T* const> bucket_rows, std::span<T> h) {
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = word_row[i];
  for (const T* row : bucket_rows)
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += row[i];
}

template <typename T>
T pair_loss(std::span<const T> h, std::span<const T> out_positive,
            std::span<const T* const> out_negatives) {
  T loss = -std::log(sigmoid(dot(h, out_positive)));
  for (const T* neg : out_negatives)
    loss -= std::log(sigmoid(-dot(h, std::span<const T>(neg, h.size()))));
  return loss;
}

template <typename T>
struct PairGrads {
  std::vector<T> h;                     // dL/dh; also dL/d(word row) and, per
                                        // occurrence, dL/d(bucket row)
  std::vector<T> positive;              // dL/d(out_positive)
  std::vector<std::vector<T>> negatives;
};

// Analytic gradients at the given point; no parameters are modified.
template <typename T>
PairGrads<T> pair_gradients(std::span<const T> h, std::span<const T> out_positive,
                            std::span<const T* const> out_negatives) {
  const std::size_t dim = h.size();
  PairGrads<T> grads;
  grads.h.assign(dim, T(0));

  const T g_pos = sigmoid(dot(h, out_positive)) - T(1);
  grads.positive.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    grads.positive[i] = g_pos * h[i];
    grads.h[i] += g_pos * out_positive[i];
  }

  grads.negatives.reserve(out_negatives.size());
  for (const T* neg : out_negatives) {
    const std::span<const T> row(neg, dim);
    const T g = sigmoid(dot(h, row));
    std::vector<T> grad_row(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      grad_row[i] = g * h[i];
      grads.h[i] += g * row[i];
    }
    grads.negatives.push_back(std::move(grad_row));
  }
  return grads;
}

// Fused SGD step used by the trainer: applies -lr * grad to the output rows
// and writes dL/dh into grad_h (overwritten). The caller applies -lr * grad_h
// to the target word row and each of its bucket rows.
template <typename T>
void pair_update(std::span<const T> h, T lr, std::span<T> out_positive,
                 std::span<T* const> out_negatives, std::span<T> grad_h) {
  const std::size_t dim = h.size();
  for (std::size_t i = 0; i < dim; ++i) grad_h[i] = T(0);

  const T g_pos = sigmoid(dot<T>(h, out_positive)) - T(1);
  for (std::size_t i = 0; i < dim; ++i) {
    grad_h[i] += g_pos * out_positive[i];
    out_positive[i] -= lr * g_pos * h[i];
  }
  for (T* neg : out_negatives) {
    const T g = sigmoid(dot(h, std::span<const T>(neg, dim)));
    for (std::size_t i = 0; i < dim; ++i) {
      grad_h[i] += g * neg[i];
      neg[i] -= lr * g * h[i];
    }
  }
}

}  // namespace termex::sgns
