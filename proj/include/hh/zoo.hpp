// Built-in algebras with frozen basis orders.
//
//   dual-numbers  k[x]/(x^2)          basis 1, x
//   trunc:n       k[x]/(x^n)          basis 1, x, ..., x^(n-1)
//   cyclic:n      group algebra of C_n basis 1, g, ..., g^(n-1)
//   mat:n         n x n matrices      basis E_ij at index i*n + j
//   taft:N[:w]    <g, x | g^N = 1, x^N = 0, xg = w gx>
//                 basis x^i g^j at index i*N + j; w defaults to the
//                 smallest primitive N-th root of unity in the field.
#pragma once

#include <string>

#include "hh/algebra.hpp"

namespace hh {

struct NoPrimitiveRoot : AlgebraError {
  std::uint32_t n;
  FieldSpec field;
  NoPrimitiveRoot(std::uint32_t n_, const FieldSpec& f);
};

struct UnknownAlgebra : AlgebraError {
  using AlgebraError::AlgebraError;
};

template <class K>
Algebra<K> zoo(const std::string& name, const FieldSpec& field);

template <class K>
Algebra<K> taft_algebra(std::uint32_t n, const K& w, const FieldSpec& field);

// N and w of a zoo Taft algebra name ("taft:3" or "taft:3:2"); false if not Taft.
template <class K>
bool parse_taft(const std::string& name, const FieldSpec& field, std::uint32_t& n, K& w);

}  // namespace hh
