#pragma once

#include <string>

#include "pfaff/forms.hpp"
#include "pfaff/polynomial.hpp"

namespace pfaff {

/// Canonical, parse-round-trippable text: terms in graded-lex order
/// (leading first), index tuples increasing, deterministic.
std::string print_canonical(const GaussianRational& c);
std::string print_canonical(const Polynomial& p);
std::string print_canonical(const KForm& w);
std::string print_canonical(const VectorField& x);

}  // namespace pfaff
