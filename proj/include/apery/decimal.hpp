#ifndef APERY_DECIMAL_HPP
#define APERY_DECIMAL_HPP

#include "apery/exactnum.hpp"

#include <string>

namespace apery {

// Decimal rendering of enclosures. The printed value is the midpoint rounded to
// the last printed digit, so the distance to any point of the enclosure is at
// most width/2 + ulp/2. When the width reaches one ulp an explicit "±err" is
// appended with err rounded up.

/// Fixed notation with `decimals` digits after the point, e.g. "1.202".
std::string format_fixed(const Enclosure& e, unsigned long decimals);

/// Scientific notation with `significant` digits, e.g. "2.0569e-02".
std::string format_sci(const Enclosure& e, unsigned long significant);

/// One unit in the last place of `value` printed with `significant` digits.
Rat sci_ulp(const Rat& value, unsigned long significant);

/// Parses plain decimal or scientific text ("1.5", "-2.5e-03") exactly.
/// A trailing "±..." field is ignored.
Rat parse_decimal(const std::string& text);

}  // namespace apery

#endif  // APERY_DECIMAL_HPP
