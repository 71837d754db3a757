#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "breuil/fiber_lattice.hpp"
#include "breuil/object.hpp"
#include "breuil/simples.hpp"

namespace breuil::manifest {

using nlohmann::json;

// Malformed manifest; where is a JSON pointer to the offending field.
struct ManifestError : std::runtime_error {
  ManifestError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where(where) {}
  std::string where;
};

// Field elements are little-endian F_p digit lists; over a prime field they are
// written as bare integers, and a bare integer is always read as an element of
// the prime field. Module elements are one list of ring coefficients per
// generator, trailing zero coefficients optional.
json field_element(const FiniteField& F, Fq a);
json element(const ChainModule& M, const Elem& x);
json elements(const ChainModule& M, const std::vector<Elem>& xs);
json ring(const RingParams& P);
// Lossless: always written as kind "uni".
json object(const BreuilModule& o);
json morphism(const Morphism& m, const std::string& source, const std::string& target);
json report(const ValidationReport& r);
json substructure(const Substructure& s);
json summary(const BreuilModule& o);
json character(const TameCharacter& c);

Fq parse_field_element(const FiniteField& F, const json& j, const std::string& where);
Elem parse_element(const ChainModule& M, const json& j, const std::string& where);
RingParams parse_ring(const json& j, const std::string& where = "/ring");
Object parse_object(const RingParams& P, const json& j, const std::string& where);

struct Manifest {
  RingParams params;
  std::map<std::string, Object> objects;
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, std::pair<std::string, Substructure>> substructures;  // name -> (object, data)
};

Manifest parse(const json& j);
// Throws ManifestError for malformed JSON as well, with the parser's byte
// offset.
Manifest parse_text(const std::string& text);
json print(const Manifest& m);

}  // namespace breuil::manifest
