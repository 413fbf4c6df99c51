#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hopf/formal.hpp"

namespace hopf {

// Permutations: digit string for n <= 9 ("42531"), bracketed list otherwise
// ("[10,3,1,...]"). The unit is the empty string.
std::string format_permutation(const Permutation& u);
Permutation parse_permutation(std::string_view text);

// "{2,3,6}@8"
std::string format_descent_set(const DescentSet& S);
DescentSet parse_descent_set(std::string_view text);

// "(2,1,1)", "()"
std::string format_composition(const Composition& alpha);
Composition parse_composition(std::string_view text);
// Accepts either "(2,1)" or "{2}@3".
Composition parse_qsym_index(std::string_view text);

std::string format_index(const Index& index);
// "F[231]", "Mq[(2,1)]"
std::string format_key(Space space, const Index& index);

// "F[12534] - 2*F[231]"; the empty sum is "0".
std::string format_element(const Element& x);
// "F[1] ⊗ F[2431] + ..."
std::string format_tensor(const Tensor& t);

// Tags: F/M for SSym (permutation index), Fq/Mq for QSym (composition or
// subset index). All terms must share one tag. Errors carry the offset.
Element parse_element(std::string_view text);

// {"algebra": "SSym", "basis": "M", "terms": [{"index": "1243", "coeff": 1}, ...]}
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const nlohmann::json& j);

std::string format_integer(const Integer& c);

}  // namespace hopf
