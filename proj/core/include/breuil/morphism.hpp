#pragma once

#include <optional>

#include "breuil/object.hpp"

namespace breuil {

ValidationReport validate_morphism(const Morphism& m);

Morphism identity(const Object& a);
Morphism zero_morphism(const Object& a, const Object& b);
// g o f
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& a, const Morphism& b);
Morphism scale(Fq c, const Morphism& a);  // c in the prime field
bool operator==(const Morphism& a, const Morphism& b);

// The Fil component is read off through the target's iota, which must be
// injective. nullopt when f does not carry Fil into Fil.
std::optional<Morphism> from_module_map(const Object& source, const Object& target, std::vector<Elem> f);

// Bijective on modules and on Fil; decided modulo u.
bool is_isomorphism(const Morphism& m);
std::optional<Morphism> inverse(const Morphism& m);

struct SumMaps {
  Object sum;
  Morphism in_a, in_b, pr_a, pr_b;
};
SumMaps direct_sum_maps(const Object& a, const Object& b);

}  // namespace breuil
