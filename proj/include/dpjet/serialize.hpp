#pragma once

// Text, CSV and JSON encodings of series, polynomials and bases.

#include <string>

#include "dpjet/arith.hpp"
#include "dpjet/groebner.hpp"
#include "dpjet/polynomial.hpp"

namespace dpjet {

/// {"qmax":Q,"tmax":T,"terms":[[i,j,"num/den"],...]}, nonzero terms sorted by (j, i).
std::string series_to_json(const BiSeries& s);
BiSeries series_from_json(const std::string& text);

/// Coefficient grid: one row per t-degree, one column per q-degree.
std::string series_to_table(const BiSeries& s);

/// "q_deg,t_deg,value" rows for every cell of the window. Throws DomainError
/// on non-integral coefficients.
std::string series_to_csv(const BiSeries& s);

/// [[exponent-vector, "num/den"], ...] in decreasing grevlex order.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text, int n);

/// {"n":N,"reduced":bool,"gens":[polynomial, ...]}.
std::string basis_to_json(const GroebnerBasis& b);
GroebnerBasis basis_from_json(const std::string& text);

}  // namespace dpjet
