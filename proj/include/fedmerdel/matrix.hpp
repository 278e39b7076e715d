#ifndef FEDMERDEL_MATRIX_HPP
#define FEDMERDEL_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fedmerdel {

// Dense row-major matrix of doubles. Used for responsibilities (N x K)
// and other small dense blocks.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }

  bool empty() const { return data.empty(); }

  // Removes column j, shifting later columns left.
  void erase_col(std::size_t j) {
    Matrix out(rows, cols - 1);
    for (std::size_t i = 0; i < rows; ++i) {
      const double* src = data.data() + i * cols;
      double* dst = out.data.data() + i * out.cols;
      for (std::size_t k = 0, o = 0; k < cols; ++k) {
        if (k == j) continue;
        dst[o++] = src[k];
      }
    }
    *this = std::move(out);
  }
};

}  // namespace fedmerdel

#endif
