#pragma once

#include <cstddef>

#include "fibgray/basis.hpp"
#include "fibgray/digit_string.hpp"
#include "fibgray/natural.hpp"

namespace fibgray {

/// Greedy representation of `value`: repeatedly divide the remainder by the
/// largest term not exceeding it, down to a_0 = 1. Zero encodes as the single
/// digit "0"; every other value has a nonzero leading digit.
DigitString encode(const NumerationBasis& basis, const Natural& value);

/// Sum of d_i * a_i. Leading zeros are accepted. Throws DigitOutOfRange if a
/// digit exceeds the basis bound at its position.
Natural decode(const NumerationBasis& basis, const DigitString& s);

/// True iff d_i a_i + ... + d_0 a_0 < a_{i+1} for every i, i.e. `s` is the
/// greedy representation of its value, up to leading zeros.
bool is_valid(const NumerationBasis& basis, const DigitString& s);

/// Drops leading zeros; the empty result becomes "0".
DigitString canonical(const DigitString& s);

/// Left zero-fills the canonical form of `s` to exactly m digits. The
/// canonical zero pads to 0^m (and to ε for m = 0). Throws TooLong.
DigitString pad(const DigitString& s, std::size_t m);

}  // namespace fibgray
