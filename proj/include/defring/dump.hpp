#pragma once

#include <string>
#include <utility>
#include <vector>

#include "defring/ideal.hpp"
#include "defring/matrix_poly.hpp"

namespace defring {

// Extra key=value pairs for the header line (p, kappa, ...), in order.
using DumpParams = std::vector<std::pair<std::string, std::string>>;

// One polynomial in canonical form: terms in decreasing `order`, each term
// written as num/den followed by *var^e factors, terms joined by " + ".
std::string canonical_polynomial(const Polynomial& f, const TermOrder& order);

// Header line plus one reduced-basis generator per line.
std::string dump_ideal(const Ideal& I, const TermOrder& order, const DumpParams& params);

// Matrix rows, one per line, entries as u-polynomials separated by " | ".
std::string dump_matrix(const MatrixPoly& m, const TermOrder& order, const DumpParams& params);

}  // namespace defring
