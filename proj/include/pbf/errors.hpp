#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbf {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A second-subdiagonal entry a_n <= 0 (the bands' standing assumption).
struct non_positive_a : error {
  explicit non_positive_a(std::size_t n)
      : error("band entry a_" + std::to_string(n) + " is not positive"), index(n) {}
  std::size_t index;
};

struct length_mismatch : error {
  using error::error;
};

/// A band entry outside the available index range was requested.
struct band_out_of_range : error {
  band_out_of_range(char band, std::size_t n)
      : error(std::string("band entry ") + band + "_" + std::to_string(n) +
              " is out of range") {}
};

/// Brute-force minor enumeration refused: matrix larger than the limit.
struct size_exceeded : error {
  size_exceeded(std::size_t n, std::size_t limit)
      : error("matrix of size " + std::to_string(n) +
              " exceeds the minor-enumeration limit " + std::to_string(limit)) {}
};

/// Leading principal minor D(n) = 0: the Gauss-Borel factorization does not exist.
struct singular_minor : error {
  explicit singular_minor(std::size_t n)
      : error("leading principal minor D(" + std::to_string(n) + ") is zero"), index(n) {}
  std::size_t index;
};

/// alpha_{3n} = 0 in the bidiagonal split of the lower factor.
struct zero_pivot : error {
  explicit zero_pivot(std::size_t n)
      : error("bidiagonal split pivot alpha_" + std::to_string(3 * n) + " is zero"),
        index(n) {}
  std::size_t index;
};

/// Denominator determinant of a finite continued fraction vanished.
struct zero_denominator : error {
  using error::error;
};

/// Division by a vanished bidiagonal coefficient in the Jacobi split.
struct division_by_zero : error {
  using error::error;
};

/// Closed-form Toeplitz operation called without a root triple.
struct missing_betas : error {
  missing_betas() : error("Toeplitz parameters carry no root triple") {}
};

struct index_out_of_range : error {
  using error::error;
};

/// Malformed input file or number literal.
struct parse_error : error {
  using error::error;
};

}  // namespace pbf
