#pragma once

#include <cstddef>
#include <string>

#include "abelian.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "smith.hpp"

namespace kas {

// ker(d_out) / im(d_in) for C_{n+1} --d_in--> C_n --d_out--> C_{n-1}.
//
// The Smith form of d_out gives a basis of ker(d_out) as the trailing
// columns of V; the image of d_in is rewritten in that basis through V^-1
// and its cokernel read off a second Smith form.
inline FgAbelianGroup homology_of_pair(const IntegerMatrix& d_in, const IntegerMatrix& d_out,
                                       const Limits& limits = {}) {
  if (d_in.rows() != d_out.cols())
    throw Error(ErrorKind::NotAComplex, "boundary shapes do not compose: d_in has " +
                                            std::to_string(d_in.rows()) + " rows, d_out has " +
                                            std::to_string(d_out.cols()) + " columns");
  if (!(d_out * d_in).is_zero()) throw Error(ErrorKind::NotAComplex, "d_out * d_in is nonzero");

  const std::size_t middle = d_out.cols();
  auto outer = detail::smith_with_inverse(d_out, limits);
  std::size_t r = 0;
  for (const auto& d : outer.snf.diagonal)
    if (d != 0) ++r;

  // Coordinates of im(d_in) in the V basis; the first r rows vanish because
  // d_in lands in ker(d_out).
  IntegerMatrix coords = outer.V_inverse * d_in;
  IntegerMatrix in_kernel = coords.block(r, middle, 0, coords.cols());
  if (in_kernel.rows() == 0) return FgAbelianGroup::trivial();
  return from_presentation(in_kernel.transposed(), limits);
}

}  // namespace kas
