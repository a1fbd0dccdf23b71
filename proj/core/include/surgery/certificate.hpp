#pragma once

#include "surgery/farey.hpp"
#include "surgery/homology.hpp"
#include "surgery/linking.hpp"

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

namespace surgery {

/*
 * Additivity of the homology order across one mediant split.  For the split
 * component d with slope p/q = mediant of p'/q' and p''/q'', the orders of the
 * two child surgeries sum to the parent order.  Each witness carries the
 * numbers along both computation routes:
 *
 *   det route     - |det| of the three presentation matrices, and
 *   affine route  - (Q/q_d)(g p' + h q') etc., with f = g x_d + h the affine
 *                   form of the surgery determinant in the split variable and
 *                   Q the product of all slope denominators.
 *
 * A witness only exists when the two routes agree number by number and the
 * parent order equals the sum; verify_additivity throws CheckFailure naming
 * the first disagreement otherwise.
 */
struct AdditivityWitness {
    std::size_t split_index;
    Rational left_slope, right_slope;
    Integer left_order, right_order, parent_order;           // det route
    Integer left_affine, right_affine, parent_affine;        // affine route
};

AdditivityWitness verify_additivity(const LinkingMatrix& link, const SurgerySpec& spec,
                                    std::size_t split_index);

struct CertificateNode {
    SurgerySpec spec;
    Integer order;                            // |H_1| at this node
    std::optional<AdditivityWitness> witness; // present on internal nodes
    std::unique_ptr<CertificateNode> left;
    std::unique_ptr<CertificateNode> right;

    bool is_leaf() const { return !witness.has_value(); }
};

/*
 * The full splitting certificate for one surgery description.  Internal nodes
 * split the largest-index fractional slope into its mediant parents; leaves
 * are integral surgeries.  Construction verifies, at every node, that
 *
 *   - the homology order is finite and the surgery determinant is positive,
 *   - both additivity routes agree exactly (internal nodes),
 *   - integral leaf slopes clear the L-space constant C,
 *
 * and that the split measure (split index, denominator there) strictly
 * decreases lexicographically on the way down.  The a-priori corner n!k from
 * the positivity certificate is recorded; when the smallest slope clears it
 * the per-node positivity checks are guaranteed in advance, otherwise they
 * still ran and the tree is exactly as trustworthy, just without the blanket
 * guarantee.
 */
class CertificateTree {
public:
    CertificateTree(LinkingMatrix link, Integer lspace_constant, Integer sufficient_corner,
                    bool corner_cleared, std::unique_ptr<CertificateNode> root);

    const LinkingMatrix& link() const { return link_; }
    const Integer& lspace_constant() const { return C_; }
    const Integer& sufficient_corner() const { return sufficient_corner_; }
    bool corner_cleared() const { return corner_cleared_; }
    const CertificateNode& root() const { return *root_; }

    std::size_t leaf_count() const;
    std::size_t node_count() const;
    std::size_t depth() const;

    // Line-oriented dump, stable byte for byte; see docs/tree-format.md.
    void dump(std::ostream& out) const;
    static CertificateTree parse(std::istream& in);

private:
    LinkingMatrix link_;
    Integer C_;
    Integer sufficient_corner_;
    bool corner_cleared_;
    std::unique_ptr<CertificateNode> root_;
};

bool trees_equal(const CertificateTree& a, const CertificateTree& b);

// Builds and verifies the complete certificate for the given surgery and
// L-space constant C >= 1.  Throws CheckFailure when a certified condition
// fails (infinite homology, non-positive determinant, additivity mismatch, or
// an integral leaf below C) and ValidationError on malformed input.
CertificateTree certificate_tree(const LinkingMatrix& link, const SurgerySpec& spec,
                                 const Integer& lspace_constant);

} // namespace surgery
