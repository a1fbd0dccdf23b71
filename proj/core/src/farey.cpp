#include "surgery/farey.hpp"

#include "surgery/errors.hpp"

namespace surgery {

MediantSplit farey_split(const Rational& value) {
    const Integer p = value.get_num();
    const Integer q = value.get_den();
    if (q == 1) {
        throw ValidationError("integral slope " + format_rational(value) +
                              " has no mediant parents");
    }
    // One parent denominator is the inverse of p mod q: with q' = p^{-1} in
    // (0, q), the numerator p' = (p q' - 1) / q is exact and p'/q' < p/q is a
    // Farey neighbour.  The other parent is the componentwise difference.
    Integer q_left;
    mpz_invert(q_left.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (q_left <= 0) {
        q_left += q;
    }
    const Integer p_left = (p * q_left - 1) / q;
    const Integer q_right = q - q_left;
    const Integer p_right = p - p_left;

    MediantSplit out{value, make_rational(p_left, q_left), make_rational(p_right, q_right)};
    // p'/q' < p/q always holds for this choice; both distances are 1 by
    // construction.  Cheap to re-assert, so do.
    if (!(out.left < out.value && out.value < out.right)) {
        throw ValidationError("mediant split ordering failed for " + format_rational(value));
    }
    return out;
}

} // namespace surgery
