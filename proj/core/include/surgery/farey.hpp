#pragma once

#include "surgery/numeric.hpp"

namespace surgery {

// The unique unordered pair of Farey neighbours whose mediant is the given
// fraction: left < value < right, the three pairwise at distance 1 in the
// sense |p q' - p' q| = 1, with den(left) + den(right) = den(value).
struct MediantSplit {
    Rational value;
    Rational left;
    Rational right;
};

// Defined exactly for non-integral rationals; integers have denominator 1 and
// no mediant parents.  Throws ValidationError on integral input.
MediantSplit farey_split(const Rational& value);

} // namespace surgery
