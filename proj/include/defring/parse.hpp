#pragma once

#include <map>
#include <string>
#include <string_view>

#include "defring/polynomial.hpp"

namespace defring {

// Parses expressions such as "k*a0 - 2*p^2/(k-1)" over the roster. Names not
// in the roster are looked up in `bindings`. Division is only by nonzero
// constants. Throws AlgebraError on malformed input.
Polynomial parse_polynomial(const RosterPtr& roster, std::string_view text,
                            const std::map<std::string, Polynomial>& bindings = {});

}  // namespace defring
