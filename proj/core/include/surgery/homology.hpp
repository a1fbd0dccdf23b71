#pragma once

#include "surgery/determinant.hpp"
#include "surgery/linking.hpp"
#include "surgery/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace surgery {

/*
 * First homology of the surgered manifold is presented by the n x n integer
 * matrix with p_i on the diagonal and q_i * l_ij off it, where a_i = p_i/q_i
 * are the surgery slopes in lowest terms and l_ij the linking numbers.
 */
IntMatrix presentation_matrix(const LinkingMatrix& link, const SurgerySpec& spec);

// Signed determinant of the presentation matrix.
Integer presentation_determinant(const LinkingMatrix& link, const SurgerySpec& spec);

// |H_1| of the surgered manifold; 0 encodes infinite first homology.
Integer h1_order(const LinkingMatrix& link, const SurgerySpec& spec);

/*
 * The multi-affine determinant function
 *
 *     f(x_1, ..., x_n) = det( x_i on the diagonal, l_ij off it ),
 *
 * evaluated exactly over the rationals.  It ties the homology order to the
 * slope coordinates: |H_1| = |q_1 ... q_n * f(a_1, ..., a_n)|, and it is
 * affine in each variable separately, which is what the splitting argument
 * for the certificate trees consumes.
 */
class SurgeryDeterminant {
public:
    explicit SurgeryDeterminant(LinkingMatrix link);

    std::size_t components() const { return link_.size(); }
    const LinkingMatrix& link() const { return link_; }

    Rational evaluate(const std::vector<Rational>& x) const;

    // f(x) = slope * x_i + offset once every variable except x_i is fixed.
    struct AffineForm {
        Rational slope;   // determinant of the linking minor without component i
        Rational offset;  // f with x_i set to 0
        Rational operator()(const Rational& xi) const { return slope * xi + offset; }
    };
    AffineForm affine_in(std::size_t i, const std::vector<Rational>& x) const;

private:
    LinkingMatrix link_;
};

/*
 * Lower bound for |H_1| by diagonal dominance: with row margins
 * h_i = |p_i| - q_i * sum_j |l_ij|, the order is at least prod h_i whenever
 * every margin is positive.  Inapplicable (bound absent) otherwise.
 */
struct OstrowskiBound {
    std::vector<Integer> row_margins;
    std::optional<Integer> bound;
    bool applicable() const { return bound.has_value(); }
};
OstrowskiBound ostrowski_bound(const LinkingMatrix& link, const SurgerySpec& spec);

/*
 * Certificate that f > 0 on the whole box [corner, infinity)^n.  The witness
 * is per-permutation: writing f as the signed sum over permutations, every
 * non-identity term is dominated once each factor |l_{i, sigma(i)}| is at most
 * the corner value and the smallest factor satisfies n! * |l| < corner.  The
 * slack constant k = max |l_ij| + 1 makes n! * k an a-priori sufficient corner.
 */
struct PositivityCertificate {
    bool certified;
    Integer slack_constant;       // k
    Integer sufficient_corner;    // n! * k
    Integer corner_value;         // f(corner, ..., corner), exact
    // One-line images of a failing permutation, empty when certified.
    std::vector<std::size_t> violating_permutation;
};
PositivityCertificate positivity_certificate(const SurgeryDeterminant& f, const Integer& corner);

/*
 * Parity of the homology order.  When every slope denominator is even the
 * presentation matrix is congruent to the identity mod 2, so the order is odd
 * for structural reasons; the `structural` flag reports that situation.
 */
struct ParityReport {
    Integer order;
    bool odd;
    bool structural;
};
ParityReport is_odd_order(const LinkingMatrix& link, const SurgerySpec& spec);

} // namespace surgery
