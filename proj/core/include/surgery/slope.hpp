#pragma once

#include "surgery/numeric.hpp"

#include <string>
#include <string_view>

namespace surgery {

/*
 * Curves on a torus boundary component are written in a (mu, lambda) basis:
 * the class p*mu + q*lambda is stored as the coordinate pair (p, q).  The
 * algebraic intersection number is fixed by lambda . mu = +1, so in
 * coordinates, with mu = (1,0) and lambda = (0,1),
 *
 *     <a, b> = a.q * b.p - a.p * b.q.
 *
 * Pairs are not reduced on construction: (2, 4) is the double of the primitive
 * curve (1, 2) and keeps its multiplicity.  Orientation matters to the sign of
 * the intersection number, not to the geometric distance delta.
 */
struct TorusSlope {
    Integer p;
    Integer q;

    TorusSlope(Integer mu_coeff, Integer lambda_coeff);

    // gcd(|p|, |q|); equals 1 exactly for primitive (connected, essential) curves.
    Integer multiplicity() const;
    bool is_primitive() const { return multiplicity() == 1; }

    TorusSlope primitive_part() const;
    TorusSlope reversed() const { return TorusSlope(-p, -q); }

    bool operator==(const TorusSlope&) const = default;
};

Integer intersection(const TorusSlope& a, const TorusSlope& b);

// Geometric distance between the underlying unoriented slopes: |<a, b>|.
Integer delta(const TorusSlope& a, const TorusSlope& b);

// External form "p/q" with the sign carried by p; a pair with q < 0 is
// printed with both signs flipped so the rendered q is nonnegative.
std::string format_torus_slope(const TorusSlope& s);
TorusSlope parse_torus_slope(std::string_view text);

/*
 * A change of basis on the torus: an integer matrix
 *
 *     [ a  b ]
 *     [ c  d ]
 *
 * with determinant +1 or -1, acting on coordinate pairs by multiplication.
 * Columns are the images of the old basis vectors, so a frame sending
 * mu' |-> (a, c) and lambda' |-> (b, d) is built with from_columns.
 */
class FramingChange {
public:
    FramingChange(Integer a, Integer b, Integer c, Integer d);

    static FramingChange identity();
    static FramingChange from_columns(const TorusSlope& mu_image, const TorusSlope& lambda_image);

    // +1 for orientation-preserving frames, -1 otherwise.
    int determinant_sign() const;

    TorusSlope apply(const TorusSlope& s) const;
    FramingChange inverse() const;
    FramingChange compose(const FramingChange& inner) const;

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    bool operator==(const FramingChange&) const = default;

private:
    Integer a_, b_, c_, d_;
};

// Result of transporting a slope across a change of basis; the orientation
// field records the determinant sign of the frame used.
struct FramedSlope {
    TorusSlope slope;
    int orientation;
};

FramedSlope change_frame(const TorusSlope& s, const FramingChange& frame);

/*
 * Fractional Dehn twist data of a boundary component of a fibered piece:
 * the number of boundary prongs q >= 1 and the twist numerator k, giving the
 * twist coefficient c = k / q.  The degeneracy slope determined by this data
 * is q * mu' + k * lambda' in the fiber-framed basis of that component.
 */
struct FdtcData {
    Integer prongs;
    Integer twist_numerator;

    FdtcData(Integer prongs, Integer twist_numerator);

    Rational twist_coefficient() const;
};

TorusSlope degeneracy_from_fdtc(const FdtcData& data);

} // namespace surgery
