#include "surgery/homology.hpp"

#include "surgery/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace surgery {

namespace {

void require_matching_size(const LinkingMatrix& link, const SurgerySpec& spec) {
    if (link.size() != spec.size()) {
        throw ValidationError("slope count does not match the number of link components");
    }
}

} // namespace

IntMatrix presentation_matrix(const LinkingMatrix& link, const SurgerySpec& spec) {
    require_matching_size(link, spec);
    const std::size_t n = link.size();
    IntMatrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = i == j ? spec.numerator(i) : Integer(spec.denominator(i) * link.at(i, j));
        }
    }
    return m;
}

Integer presentation_determinant(const LinkingMatrix& link, const SurgerySpec& spec) {
    return bareiss_determinant(presentation_matrix(link, spec));
}

Integer h1_order(const LinkingMatrix& link, const SurgerySpec& spec) {
    return abs_int(presentation_determinant(link, spec));
}

SurgeryDeterminant::SurgeryDeterminant(LinkingMatrix link) : link_(std::move(link)) {}

Rational SurgeryDeterminant::evaluate(const std::vector<Rational>& x) const {
    if (x.size() != link_.size()) {
        throw ValidationError("surgery determinant argument has wrong length");
    }
    const std::size_t n = link_.size();
    RatMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = i == j ? x[i] : Rational(link_.at(i, j));
        }
    }
    return rational_determinant(std::move(m));
}

SurgeryDeterminant::AffineForm SurgeryDeterminant::affine_in(std::size_t i,
                                                             const std::vector<Rational>& x) const {
    if (x.size() != link_.size()) {
        throw ValidationError("surgery determinant argument has wrong length");
    }
    if (i >= link_.size()) {
        throw ValidationError("surgery determinant variable index out of range");
    }
    // Cofactor expansion along row i: the coefficient of x_i is the determinant
    // of the linking minor, the constant term is f with x_i replaced by 0.
    AffineForm out;
    if (link_.size() == 1) {
        out.slope = Rational(1);
        out.offset = Rational(0);
        return out;
    }
    std::vector<Rational> reduced;
    reduced.reserve(x.size() - 1);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j != i) {
            reduced.push_back(x[j]);
        }
    }
    out.slope = SurgeryDeterminant(link_.minor_without(i)).evaluate(reduced);
    std::vector<Rational> zeroed = x;
    zeroed[i] = Rational(0);
    out.offset = evaluate(zeroed);
    return out;
}

OstrowskiBound ostrowski_bound(const LinkingMatrix& link, const SurgerySpec& spec) {
    require_matching_size(link, spec);
    const std::size_t n = link.size();
    OstrowskiBound out;
    out.row_margins.reserve(n);
    bool dominant = true;
    for (std::size_t i = 0; i < n; ++i) {
        Integer off(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                off += abs_int(link.at(i, j));
            }
        }
        Integer margin = abs_int(spec.numerator(i)) - spec.denominator(i) * off;
        if (margin <= 0) {
            dominant = false;
        }
        out.row_margins.push_back(std::move(margin));
    }
    if (dominant) {
        Integer bound(1);
        for (const Integer& m : out.row_margins) {
            bound *= m;
        }
        out.bound = std::move(bound);
    }
    return out;
}

PositivityCertificate positivity_certificate(const SurgeryDeterminant& f, const Integer& corner) {
    const std::size_t n = f.components();
    if (corner <= 0) {
        throw ValidationError("positivity corner must be positive");
    }
    if (n > 10) {
        throw ValidationError("positivity certificate enumerates permutations; capped at n = 10");
    }
    PositivityCertificate out;
    out.slack_constant = f.link().max_abs_entry() + 1;
    const Integer n_fact = factorial(static_cast<unsigned long>(n));
    out.sufficient_corner = n_fact * out.slack_constant;
    out.certified = true;

    {
        IntMatrix m(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = i == j ? corner : f.link().at(i, j);
            }
        }
        out.corner_value = bareiss_determinant(std::move(m));
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    while (std::next_permutation(perm.begin(), perm.end())) {
        Integer smallest(-1);
        bool vanishes = false;
        bool factors_bounded = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (perm[i] == i) {
                continue;
            }
            const Integer factor = abs_int(f.link().at(i, perm[i]));
            if (factor == 0) {
                vanishes = true;
                break;
            }
            if (factor > corner) {
                factors_bounded = false;
            }
            if (smallest < 0 || factor < smallest) {
                smallest = factor;
            }
        }
        if (vanishes) {
            continue;  // this permutation contributes nothing to f
        }
        if (!factors_bounded || n_fact * smallest >= corner) {
            out.certified = false;
            out.violating_permutation = perm;
            break;
        }
    }
    if (out.certified && out.corner_value <= 0) {
        // Cannot happen when the per-permutation bounds hold; kept as a guard.
        out.certified = false;
    }
    return out;
}

ParityReport is_odd_order(const LinkingMatrix& link, const SurgerySpec& spec) {
    require_matching_size(link, spec);
    ParityReport out;
    out.order = h1_order(link, spec);
    out.odd = out.order != 0 && mpz_odd_p(out.order.get_mpz_t());
    out.structural = true;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (mpz_odd_p(spec.slope(i).get_den().get_mpz_t())) {
            out.structural = false;
            break;
        }
    }
    return out;
}

} // namespace surgery
