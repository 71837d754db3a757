#pragma once

// Brute-force checks that share no code with the library's elimination.

#include <cstdint>
#include <set>
#include <vector>

#include "breuil/finite_field.hpp"
#include "breuil/linalg.hpp"
#include "breuil/object.hpp"

namespace oracle {

using IntRow = std::vector<long long>;

// Expand k-coordinates into F_p digits.
IntRow expand(const breuil::FiniteField& F, const breuil::Vec& v);

// Rank over Z/p by schoolbook elimination on 64-bit integers.
int fp_rank(long long p, std::vector<IntRow> rows);

// Every F_p-combination of the rows, enumerated. Only for tiny inputs.
std::set<IntRow> fp_span(long long p, const std::vector<IntRow>& rows);

// Multiplication in F_p[x]/(modulus) on digit vectors, schoolbook.
IntRow poly_mulmod(long long p, const IntRow& a, const IntRow& b, const std::vector<std::uint32_t>& modulus);

// Exact rational valuation solve for v_{i+1} = p v_i - a_i / e, returning
// v_0 as numerator/denominator in lowest terms.
std::pair<long long, long long> cyclic_valuation(long long p, long long e, const std::vector<long long>& a);

// F_p-dimension of the span of a family of morphisms, read off their
// matrices on module and Fil generators.
int span_dim(const std::vector<breuil::Morphism>& ms);

}  // namespace oracle
