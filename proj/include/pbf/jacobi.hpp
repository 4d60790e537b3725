#pragma once

#include <cstddef>
#include <vector>

#include "pbf/errors.hpp"
#include "pbf/matrix.hpp"

namespace pbf {

/// Tridiagonal (Jacobi) data with unit superdiagonal: m[i] holds the diagonal
/// entry with sequence index start+i, l[i] the subdiagonal entry with sequence index
/// start+1+i. The auxiliary Jacobi matrix of the lower LU factor has start = 1.
template <class S>
struct JacobiData {
  std::size_t start = 1;
  std::vector<S> m;
  std::vector<S> l;

  std::size_t size() const { return m.size(); }
  /// Largest valid sequence index.
  std::size_t top() const { return start + m.size() - 1; }

  const S& m_at(std::size_t idx) const {
    if (idx < start || idx > top()) throw index_out_of_range("Jacobi diagonal index");
    return m[idx - start];
  }
  const S& l_at(std::size_t idx) const {
    if (idx < start + 1 || idx - start - 1 >= l.size())
      throw index_out_of_range("Jacobi subdiagonal index");
    return l[idx - start - 1];
  }
};

template <class S>
Matrix<S> materialize_jacobi(const JacobiData<S>& jd) {
  std::size_t n = jd.size();
  Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = jd.m[i];
    if (i + 1 < n) {
      m(i, i + 1) = S(1);
      m(i + 1, i) = jd.l[i];
    }
  }
  return m;
}

}  // namespace pbf
