#include "surgery/slope.hpp"

#include "surgery/errors.hpp"

#include <utility>

namespace surgery {

TorusSlope::TorusSlope(Integer mu_coeff, Integer lambda_coeff)
    : p(std::move(mu_coeff)), q(std::move(lambda_coeff)) {
    if (p == 0 && q == 0) {
        throw ValidationError("torus slope (0, 0) does not describe a curve");
    }
}

Integer TorusSlope::multiplicity() const {
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return g;
}

TorusSlope TorusSlope::primitive_part() const {
    const Integer g = multiplicity();
    return TorusSlope(p / g, q / g);
}

Integer intersection(const TorusSlope& a, const TorusSlope& b) {
    return a.q * b.p - a.p * b.q;
}

Integer delta(const TorusSlope& a, const TorusSlope& b) {
    return abs_int(intersection(a, b));
}

std::string format_torus_slope(const TorusSlope& s) {
    if (s.q < 0 || (s.q == 0 && s.p < 0)) {
        return Integer(-s.p).get_str() + "/" + Integer(-s.q).get_str();
    }
    return s.p.get_str() + "/" + s.q.get_str();
}

TorusSlope parse_torus_slope(std::string_view text) {
    const Rational r = parse_rational(text);
    return TorusSlope(r.get_num(), r.get_den());
}

FramingChange::FramingChange(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const Integer det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1) {
        throw ValidationError("framing change must have determinant +1 or -1, got " +
                              det.get_str());
    }
}

FramingChange FramingChange::identity() {
    return FramingChange(1, 0, 0, 1);
}

FramingChange FramingChange::from_columns(const TorusSlope& mu_image,
                                          const TorusSlope& lambda_image) {
    return FramingChange(mu_image.p, lambda_image.p, mu_image.q, lambda_image.q);
}

int FramingChange::determinant_sign() const {
    return (a_ * d_ - b_ * c_) == 1 ? 1 : -1;
}

TorusSlope FramingChange::apply(const TorusSlope& s) const {
    return TorusSlope(a_ * s.p + b_ * s.q, c_ * s.p + d_ * s.q);
}

FramingChange FramingChange::inverse() const {
    // For det = +1 the inverse is [d, -b; -c, a]; for det = -1 all four signs flip.
    if (determinant_sign() == 1) {
        return FramingChange(d_, -b_, -c_, a_);
    }
    return FramingChange(-d_, b_, c_, -a_);
}

FramingChange FramingChange::compose(const FramingChange& inner) const {
    return FramingChange(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                         c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

FramedSlope change_frame(const TorusSlope& s, const FramingChange& frame) {
    return FramedSlope{frame.apply(s), frame.determinant_sign()};
}

FdtcData::FdtcData(Integer prongs_in, Integer twist_numerator_in)
    : prongs(std::move(prongs_in)), twist_numerator(std::move(twist_numerator_in)) {
    if (prongs < 1) {
        throw ValidationError("fractional twist data needs at least one prong");
    }
}

Rational FdtcData::twist_coefficient() const {
    return make_rational(twist_numerator, prongs);
}

TorusSlope degeneracy_from_fdtc(const FdtcData& data) {
    return TorusSlope(data.prongs, data.twist_numerator);
}

} // namespace surgery
