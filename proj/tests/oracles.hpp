#pragma once

// Test-only reference implementations, deliberately naive and algorithmically
// independent of the library code they check.

#include "surgery/determinant.hpp"
#include "surgery/numeric.hpp"

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

// Laplace expansion along the first row, O(n!).  Usable up to n ~ 7.
template <typename Scalar>
Scalar laplace_determinant(const std::vector<std::vector<Scalar>>& m) {
    const std::size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    Scalar total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) {
            continue;
        }
        std::vector<std::vector<Scalar>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Scalar> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    row.push_back(m[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        const Scalar term = m[0][j] * laplace_determinant(minor);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

// All Farey-neighbour pairs (left, right) whose mediant is `value`, found by
// scanning every denominator split and a small window of numerators.  The
// library's split is correct iff this returns exactly that one pair.
inline std::vector<std::pair<surgery::Rational, surgery::Rational>> farey_parents_search(
    const surgery::Rational& value) {
    using surgery::Integer;
    using surgery::Rational;
    const Integer p = value.get_num();
    const Integer q = value.get_den();
    std::vector<std::pair<Rational, Rational>> found;
    for (Integer ql(1); ql < q; ++ql) {
        const Integer qr = q - ql;
        // candidate numerators near value * ql
        Integer base;
        mpz_fdiv_q(base.get_mpz_t(), Integer(p * ql).get_mpz_t(), q.get_mpz_t());
        for (Integer pl = base - 1; pl <= base + 1; ++pl) {
            const Integer pr = p - pl;
            const Rational left = surgery::make_rational(pl, ql);
            const Rational right = surgery::make_rational(pr, qr);
            if (left < value && value < right &&
                surgery::abs_int(pl * q - p * ql) == 1 &&
                surgery::abs_int(pr * q - p * qr) == 1 &&
                surgery::abs_int(pl * qr - pr * ql) == 1 &&
                left.get_den() == ql && right.get_den() == qr) {
                found.emplace_back(left, right);
            }
        }
    }
    return found;
}

// Deterministic generators for the randomized suites.
class Rng {
public:
    explicit Rng(unsigned long long seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    surgery::Rational rational(long num_lo, long num_hi, long den_hi) {
        const long num = integer(num_lo, num_hi);
        const long den = integer(1, den_hi);
        return surgery::make_rational(surgery::Integer(num), surgery::Integer(den));
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace oracle
