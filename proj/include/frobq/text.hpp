#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "frobq/quad.hpp"

namespace frobq {

/// Parse an element of Z[sqrt(m)] from its textual form. The literal 'r'
/// stands for sqrt(m). Accepted forms (decimal integers, optional leading
/// sign, optional surrounding whitespace):
///
///   INT          e.g. "7", "-3"          -> (INT, 0)
///   INTr         e.g. "2r", "-4r", "r"   -> (0, INT); bare "r" means 1r
///   INT+INTr     e.g. "1+1r", "3+r"      -> (INT, INT)
///   INT-INTr     e.g. "1-2r"             -> (INT, -INT)
///
/// Throws std::invalid_argument naming the offending token otherwise.
QuadInt parse_element(std::string_view text);

/// Canonical textual form, the inverse of parse_element:
/// "0", "7", "-3", "2r", "-4r", "1+1r", "1-2r".
std::string format_element(const QuadInt& x);

inline std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    return os << format_element(x);
}

}  // namespace frobq
