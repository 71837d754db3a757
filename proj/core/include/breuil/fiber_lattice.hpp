#pragma once

#include <vector>

#include "breuil/object.hpp"

namespace breuil {

// A submodule c of the ambient module together with Fil_c inside the
// ambient Fil.
struct Substructure {
  Submodule module;
  Submodule fil;
  bool operator==(const Substructure& o) const { return module == o.module && fil == o.fil; }
  bool contains(const Substructure& o) const { return module.contains(o.module) && fil.contains(o.fil); }
};

Substructure whole(const BreuilModule& ambient);
Substructure nothing(const BreuilModule& ambient);

// iota(Fil_c) in c, u^{er} c in iota(Fil_c), phi(Fil_c) in c, N-stability.
// The predicate "generated" records whether phi(Fil_c) spans c.
ValidationReport is_substructure(const Substructure& s, const BreuilModule& ambient);

// Largest generated substructure inside s: c <- span phi(Fil_c),
// Fil_c <- Fil_c cap iota^{-1}(c).
Substructure gen_within(const Substructure& s, const BreuilModule& ambient);

Substructure fiber_sup(const std::vector<Substructure>& subs, const BreuilModule& ambient);
Substructure fiber_inf(const std::vector<Substructure>& subs, const BreuilModule& ambient);

// The substructure as an object, with its inclusion.
Induced realize(const Object& ambient, const Substructure& s);

// Every generated substructure, by running through all submodules of Fil.
// Exhaustive, so only for ambients whose Fil has small F_p-dimension.
std::vector<Substructure> generated_substructures(const BreuilModule& ambient);

}  // namespace breuil
