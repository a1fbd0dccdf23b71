#pragma once

#include "surgery/numeric.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace surgery {

// Symmetric integer matrix of pairwise linking numbers for an n-component
// framed link.  Diagonal entries carry no information here and are kept at 0.
class LinkingMatrix {
public:
    explicit LinkingMatrix(std::size_t n);

    // Row-major entries; must be symmetric.  Diagonal values are ignored and
    // stored as 0.
    LinkingMatrix(std::size_t n, const std::vector<Integer>& entries);

    std::size_t size() const { return n_; }
    const Integer& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Integer& value);

    // Matrix with row and column i deleted (the minor used by the affine
    // decomposition of the surgery determinant).
    LinkingMatrix minor_without(std::size_t i) const;

    Integer max_abs_entry() const;

    // Simultaneous relabelling of the components: entry (i, j) of the result
    // is entry (perm[i], perm[j]) of this matrix.
    LinkingMatrix relabelled(const std::vector<std::size_t>& perm) const;

    bool operator==(const LinkingMatrix&) const = default;

    /*
     * Presets.
     *
     * chain(n): the minimally twisted cyclic chain with n >= 3 components,
     * adjacent components linking once.  The optional sign string has one
     * character per adjacent pair (i, i+1 mod n), '+' or '-', selecting the
     * sign of that clasp; omitted means all +1.
     *
     * hopf(): the two-component chain, linking number 1.
     */
    static LinkingMatrix chain(std::size_t n, std::string_view signs = {});
    static LinkingMatrix hopf();

    // "chain:n", "chain:n:SIGNS" or "hopf".
    static LinkingMatrix from_preset(std::string_view preset);

    /*
     * Text form:
     *
     *     # optional comments
     *     n 3
     *     linking
     *     0  1 -1
     *     1  0  1
     *    -1  1  0
     */
    static LinkingMatrix parse(std::istream& in);
    void print(std::ostream& out) const;

private:
    std::size_t n_;
    std::vector<Integer> data_;
};

// A surgery description on a fixed link: one finite rational slope per
// component, canonicalized to lowest terms with positive denominator.
class SurgerySpec {
public:
    explicit SurgerySpec(std::vector<Rational> slopes);

    std::size_t size() const { return slopes_.size(); }
    const Rational& slope(std::size_t i) const { return slopes_.at(i); }
    const std::vector<Rational>& slopes() const { return slopes_; }

    Integer numerator(std::size_t i) const { return slopes_.at(i).get_num(); }
    Integer denominator(std::size_t i) const { return slopes_.at(i).get_den(); }

    // Product of all denominators.
    Integer denominator_product() const;

    bool all_integral() const;

    // Largest index whose slope is non-integral, or npos if all are integers.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t last_fractional_index() const;

    SurgerySpec with_slope(std::size_t i, const Rational& value) const;
    SurgerySpec permuted(const std::vector<std::size_t>& perm) const;

    bool operator==(const SurgerySpec&) const = default;

private:
    std::vector<Rational> slopes_;
};

} // namespace surgery
