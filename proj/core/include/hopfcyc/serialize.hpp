#pragma once

#include <string>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// Structure-constant text: sections [field], [basis], [unit], [mult],
/// [comult], [counit], [antipode], [antipode_inverse].  Each entry line lists
/// the input labels, then the output labels, then the coefficient, e.g.
/// "g x gx 1" in [mult] for g x = gx.
std::string write_structure(const HopfAlgebra& h);
/// Throws ParseError on malformed text or unknown labels.  The result is
/// recertified; broken structures parse but carry a failing certificate.
HopfAlgebra parse_structure(const std::string& text);

}  // namespace hopfcyc
