#include "surgery/chain_flow.hpp"

#include "surgery/errors.hpp"
#include "surgery/farey.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <utility>

namespace surgery {

std::vector<Integer> refined_ell(std::size_t n) {
    std::vector<Integer> ell(n, Integer(2));
    ell[0] = 1;
    ell[1] = 1;
    ell[n - 1] = 1;
    return ell;
}

ChainParams::ChainParams(std::size_t n_in, Integer M_in, EllMode mode_in,
                         std::vector<Integer> ell_in, std::vector<Integer> interior_in)
    : n(n_in), M(std::move(M_in)), mode(mode_in), ell(std::move(ell_in)),
      interior_prongs(std::move(interior_in)) {
    if (n < 4 || n % 2 != 0) {
        throw ValidationError("chain construction needs an even component count n >= 4");
    }
    if (mpz_even_p(M.get_mpz_t()) || M <= Integer(8) * static_cast<unsigned long>(n)) {
        throw ValidationError("chain construction needs an odd M > 8n; got M = " + M.get_str() +
                              " for n = " + std::to_string(n));
    }
    if (ell.size() != n) {
        throw ValidationError("expected one ell multiplier per component");
    }
    for (const Integer& l : ell) {
        if (l < 1 || l > Integer(static_cast<unsigned long>(n + 1))) {
            throw ValidationError("ell multipliers must lie in [1, n+1]; got " + l.get_str());
        }
    }
    for (const Integer& s : interior_prongs) {
        if (s < 3 || s > Integer(static_cast<unsigned long>(n + 2))) {
            throw ValidationError("interior prong counts must lie in [3, n+2]; got " + s.get_str());
        }
    }
}

ChainParams ChainParams::refined(std::size_t n, const Integer& M) {
    if (n < 4 || n % 2 != 0) {
        throw ValidationError("chain construction needs an even component count n >= 4");
    }
    return ChainParams(n, M, EllMode::Refined, refined_ell(n));
}

ChainParams ChainParams::interval(std::size_t n, const Integer& M) {
    return ChainParams(n, M, EllMode::Interval, std::vector<Integer>(n, Integer(1)));
}

ChainParams ChainParams::with_ell(std::vector<Integer> new_ell) const {
    return ChainParams(n, M, mode, std::move(new_ell), interior_prongs);
}

SurgerySpec ChainParams::surgery_slopes() const {
    std::vector<Rational> slopes;
    slopes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        slopes.push_back(make_rational(pow_int(M, static_cast<unsigned long>(i + 1)), Integer(4)));
    }
    return SurgerySpec(std::move(slopes));
}

std::vector<FramingChange> chain_framings(std::size_t n) {
    if (n < 3) {
        throw ValidationError("chain framings need at least 3 components");
    }
    std::vector<FramingChange> frames;
    frames.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            // mu' |-> -mu, lambda' |-> 2mu - lambda.
            frames.push_back(FramingChange::from_columns(TorusSlope(-1, 0), TorusSlope(2, -1)));
        } else if (i == 1 || i == n - 1) {
            frames.push_back(FramingChange::identity());
        } else {
            // mu' |-> mu, lambda' |-> 2mu + lambda.
            frames.push_back(FramingChange::from_columns(TorusSlope(1, 0), TorusSlope(2, 1)));
        }
    }
    return frames;
}

std::vector<TorusSlope> chain_degeneracy_slopes(const ChainParams& p) {
    const std::vector<FramingChange> frames = chain_framings(p.n);
    std::vector<TorusSlope> out;
    out.reserve(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
        const Integer& l = p.ell[i];
        const TorusSlope closed_form =
            i == 0 ? TorusSlope(Integer(-6) * l, l) : TorusSlope(l, 0);
        // Twist-data route: component 0 has 4*ell_0 prongs twisted by -1/4,
        // the rest have ell_i prongs with no twisting.
        const FdtcData twist =
            i == 0 ? FdtcData(Integer(4) * l, -l) : FdtcData(l, Integer(0));
        const TorusSlope via_twist = frames[i].apply(degeneracy_from_fdtc(twist));
        if (via_twist != closed_form) {
            throw CheckFailure("degeneracy slope routes disagree at component " +
                               std::to_string(i));
        }
        out.push_back(closed_form);
    }
    return out;
}

Integer ProngProfile::max_prongs() const {
    Integer best(0);
    for (const Integer& v : core_prongs) {
        best = std::max(best, v);
    }
    for (const Integer& v : interior_prongs) {
        best = std::max(best, v);
    }
    return best;
}

namespace {

std::vector<Integer> slope_powers(const ChainParams& p) {
    std::vector<Integer> pows;
    pows.reserve(p.n);
    for (std::size_t k = 0; k < p.n; ++k) {
        pows.push_back(pow_int(p.M, static_cast<unsigned long>(k + 1)));
    }
    return pows;
}

std::string ell_label(const std::vector<Integer>& ell) {
    std::string out = "(";
    for (std::size_t i = 0; i < ell.size(); ++i) {
        if (i) out += ',';
        out += ell[i].get_str();
    }
    return out + ")";
}

} // namespace

ProngProfile fried_prongs(const ChainParams& p, std::size_t rotation) {
    if (rotation >= p.n) {
        throw ValidationError("rotation index must lie in [0, n-1]");
    }
    const std::vector<TorusSlope> d = chain_degeneracy_slopes(p);
    const std::vector<Integer> pows = slope_powers(p);
    ProngProfile out;
    out.core_prongs.reserve(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
        const TorusSlope r(pows[(i + rotation) % p.n], 4);
        Integer core = delta(r, d[i]);
        if (core < 2) {
            throw CheckFailure("surgery at component " + std::to_string(i) + ", rotation " +
                               std::to_string(rotation) + " has core prong count " +
                               core.get_str() + " < 2; the flow does not survive");
        }
        out.core_prongs.push_back(std::move(core));
    }
    out.interior_prongs = p.interior_prongs;
    std::sort(out.interior_prongs.begin(), out.interior_prongs.end());
    return out;
}

namespace {

// Checks conditions (a)-(d) for a single ell tuple; returns a diagnostic for
// the first violated inequality, or an empty string.
std::string check_tuple(const ChainParams& base, const std::vector<Integer>& ell,
                        const std::vector<Integer>& pows) {
    const ChainParams p = base.with_ell(ell);
    const std::vector<TorusSlope> d = chain_degeneracy_slopes(p);
    const std::size_t n = p.n;
    std::vector<Integer> maxima;
    maxima.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Integer core0;
        for (std::size_t i = 0; i < n; ++i) {
            const TorusSlope r(pows[(i + k) % n], 4);
            const Integer core = delta(r, d[i]);
            if (core < 2) {
                return "core prong count " + core.get_str() + " < 2 at ell=" + ell_label(ell) +
                       " k=" + std::to_string(k) + " i=" + std::to_string(i);
            }
            if (core < 3) {
                return "perfect-fit risk: core prong count " + core.get_str() +
                       " < 3 at ell=" + ell_label(ell) + " k=" + std::to_string(k) +
                       " i=" + std::to_string(i);
            }
            if (i == 0) {
                core0 = core;
                const Integer expected = ell[0] * (pows[k] + 24);
                if (core0 != expected) {
                    return "component-0 core " + core0.get_str() + " != closed form " +
                           expected.get_str() + " at ell=" + ell_label(ell) +
                           " k=" + std::to_string(k);
                }
            } else {
                if (core >= p.M) {
                    return "side core " + core.get_str() + " >= M at ell=" + ell_label(ell) +
                           " k=" + std::to_string(k) + " i=" + std::to_string(i);
                }
                if (core >= core0) {
                    return "maximum not uniquely attained at component 0: core " +
                           core.get_str() + " at (ell=" + ell_label(ell) +
                           ", k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                           ") reaches " + core0.get_str();
                }
            }
        }
        for (const Integer& s : p.interior_prongs) {
            if (s >= core0) {
                return "interior singular orbit with " + s.get_str() +
                       " prongs reaches the core maximum at ell=" + ell_label(ell) +
                       " k=" + std::to_string(k);
            }
        }
        maxima.push_back(std::move(core0));
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (maxima[k] >= maxima[k + 1]) {
            return "maxima not strictly increasing in k at ell=" + ell_label(ell) +
                   ": m[" + std::to_string(k) + "]=" + maxima[k].get_str() +
                   " >= m[" + std::to_string(k + 1) + "]=" + maxima[k + 1].get_str();
        }
    }
    return {};
}

// Linear index -> ell tuple in [1, n+1]^n, little-endian odometer order.
std::vector<Integer> tuple_at(unsigned long long index, std::size_t n, unsigned long base) {
    std::vector<Integer> ell(n);
    for (std::size_t i = 0; i < n; ++i) {
        ell[i] = Integer(static_cast<unsigned long>(index % base + 1));
        index /= base;
    }
    return ell;
}

} // namespace

InequivalenceCertificate inequivalence_certificate(const ChainParams& p, unsigned threads) {
    const std::vector<Integer> pows = slope_powers(p);
    InequivalenceCertificate out;
    out.mode = p.mode;
    out.holds = false;

    if (p.mode == EllMode::Refined) {
        const std::string fail = check_tuple(p, p.ell, pows);
        if (!fail.empty()) {
            throw CheckFailure("inequivalence certificate failed: " + fail);
        }
        out.tuples_checked = 1;
    } else {
        const unsigned long base = static_cast<unsigned long>(p.n + 1);
        unsigned long long total = 1;
        for (std::size_t i = 0; i < p.n; ++i) {
            total *= base;
        }
        const unsigned worker_count = std::max(1u, std::min(threads, std::thread::hardware_concurrency()));
        // Workers scan disjoint index ranges; the lowest failing index wins so
        // the outcome does not depend on the thread count.
        std::vector<unsigned long long> fail_index(worker_count, total);
        std::vector<std::string> fail_message(worker_count);
        auto scan = [&](unsigned w) {
            const unsigned long long chunk = (total + worker_count - 1) / worker_count;
            const unsigned long long begin = w * chunk;
            const unsigned long long end = std::min(total, begin + chunk);
            for (unsigned long long idx = begin; idx < end; ++idx) {
                const std::string fail = check_tuple(p, tuple_at(idx, p.n, base), pows);
                if (!fail.empty()) {
                    fail_index[w] = idx;
                    fail_message[w] = fail;
                    return;
                }
            }
        };
        if (worker_count == 1) {
            scan(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(worker_count);
            for (unsigned w = 0; w < worker_count; ++w) {
                pool.emplace_back(scan, w);
            }
            for (std::thread& t : pool) {
                t.join();
            }
        }
        unsigned first = 0;
        for (unsigned w = 1; w < worker_count; ++w) {
            if (fail_index[w] < fail_index[first]) {
                first = w;
            }
        }
        if (fail_index[first] < total) {
            throw CheckFailure("inequivalence certificate failed: " + fail_message[first]);
        }
        out.tuples_checked = total;
    }

    // Distinguishing invariant for the active tuple.
    const std::vector<TorusSlope> d = chain_degeneracy_slopes(p);
    for (std::size_t k = 0; k < p.n; ++k) {
        out.maxima.push_back(delta(TorusSlope(pows[k], 4), d[0]));
    }
    out.holds = true;
    return out;
}

bool euler_prong_check(const std::vector<Integer>& boundary_prongs,
                       const std::vector<Integer>& interior_prongs, const Integer& genus) {
    for (const Integer& q : boundary_prongs) {
        if (q < 1) {
            throw ValidationError("boundary prong counts must be at least 1");
        }
    }
    for (const Integer& s : interior_prongs) {
        if (s < 3) {
            throw ValidationError("interior prong counts must be at least 3");
        }
    }
    Integer total(0);
    for (const Integer& q : boundary_prongs) {
        total += 2 - q;
    }
    for (const Integer& s : interior_prongs) {
        total += 2 - s;
    }
    return total == 2 - 2 * genus;
}

BirkhoffSignReport birkhoff_sign_check(const ChainParams& p, const Rational& slope) {
    if (slope <= 2) {
        throw ValidationError("Birkhoff sign table applies to slopes p/q > 2; got " +
                              format_rational(slope));
    }
    const Integer pp = slope.get_num();
    const Integer qq = slope.get_den();
    const TorusSlope r(pp, qq);
    const std::vector<FramingChange> frames = chain_framings(p.n);
    const std::vector<TorusSlope> d = chain_degeneracy_slopes(p);
    const TorusSlope fiber_dir(0, 1);

    BirkhoffSignReport report;
    report.slope = slope;
    report.all_opposite = true;
    for (std::size_t i = 0; i < p.n; ++i) {
        BirkhoffComponent row;
        row.component = i;
        row.fiber_pairing = intersection(r, frames[i].apply(fiber_dir));
        row.degeneracy_pairing = intersection(r, d[i]);

        Integer expected_fiber, expected_degeneracy;
        if (i == 0) {
            expected_fiber = pp + 2 * qq;
            expected_degeneracy = p.ell[i] * (-pp - 6 * qq);
        } else if (i == 1 || i == p.n - 1) {
            expected_fiber = -pp;
            expected_degeneracy = p.ell[i] * qq;
        } else {
            expected_fiber = -pp + 2 * qq;
            expected_degeneracy = p.ell[i] * qq;
        }
        if (row.fiber_pairing != expected_fiber || row.degeneracy_pairing != expected_degeneracy) {
            throw CheckFailure("Birkhoff pairing at component " + std::to_string(i) +
                               " deviates from the case table: got (" +
                               row.fiber_pairing.get_str() + ", " +
                               row.degeneracy_pairing.get_str() + "), expected (" +
                               expected_fiber.get_str() + ", " + expected_degeneracy.get_str() +
                               ")");
        }
        row.opposite = (row.fiber_pairing > 0) != (row.degeneracy_pairing > 0) &&
                       row.fiber_pairing != 0 && row.degeneracy_pairing != 0;
        if (!row.opposite) {
            report.all_opposite = false;
            throw CheckFailure("fiber and degeneracy pairings are not of opposite sign at "
                               "component " + std::to_string(i) + " for slope " +
                               format_rational(slope));
        }
        report.components.push_back(std::move(row));
    }
    return report;
}

KnotSurgeryCheck knot_surgery_check(const Integer& genus, const Rational& r,
                                    const TorusSlope& deg) {
    if (genus < 1) {
        throw ValidationError("knot surgery check needs genus >= 1");
    }
    if (deg.q < 1) {
        throw ValidationError("degeneracy slope must have b >= 1");
    }
    if (deg.p > (4 * genus - 2) * deg.q) {
        throw ValidationError("degeneracy slope violates a/b <= 4g-2");
    }
    if (r.get_num() <= 4 * genus * r.get_den()) {
        throw ValidationError("surgery slope must satisfy p/q > 4g; got " + format_rational(r));
    }
    KnotSurgeryCheck out;
    out.distance = delta(TorusSlope(r.get_num(), r.get_den()), deg);
    out.passes = out.distance >= 3;
    if (!out.passes) {
        throw CheckFailure("surgery and degeneracy slopes at distance " + out.distance.get_str() +
                           " < 3 for r = " + format_rational(r));
    }
    return out;
}

MainTheoremReport theorem_main_verifier(const ChainParams& p, const Integer& lspace_constant,
                                        const VerifierOptions& options) {
    if (lspace_constant < 1) {
        throw ValidationError("L-space constant must be at least 1");
    }
    const LinkingMatrix link = LinkingMatrix::chain(p.n);
    MainTheoremReport report{p,
                             lspace_constant,
                             p.surgery_slopes(),
                             {},
                             {},
                             Integer(0),
                             {},
                             {},
                             {},
                             MainTheoremReport::LspaceStatus::Skipped,
                             Integer(0),
                             std::nullopt,
                             {}};

    report.inequivalence = inequivalence_certificate(p, options.threads);
    for (std::size_t k = 0; k < p.n; ++k) {
        report.prong_tables.push_back(fried_prongs(p, k));
    }

    report.parity = is_odd_order(link, report.spec);
    report.order = report.parity.order;
    if (!report.parity.structural || !report.parity.odd) {
        throw CheckFailure("homology order of the chain surgery failed the parity check");
    }
    report.ostrowski = ostrowski_bound(link, report.spec);
    if (!report.ostrowski.applicable() || *report.ostrowski.bound > report.order) {
        throw CheckFailure("diagonal-dominance bound failed for the chain surgery");
    }

    for (std::size_t i = 0; i < p.n; ++i) {
        report.birkhoff.push_back(birkhoff_sign_check(p, report.spec.slope(i)));
    }

    const Integer slack = link.max_abs_entry() + 1;
    const Integer apriori_corner = factorial(static_cast<unsigned long>(p.n)) * slack;
    report.lspace_gate = std::max(apriori_corner, lspace_constant);
    if (options.skip_lspace) {
        report.lspace_status = MainTheoremReport::LspaceStatus::Skipped;
    } else if (report.spec.slope(0) >= report.lspace_gate) {
        try {
            report.tree = certificate_tree(link, report.spec, lspace_constant);
        } catch (const CheckFailure& e) {
            throw CheckFailure(std::string("L-space certificate: ") + e.what());
        }
        report.lspace_status = MainTheoremReport::LspaceStatus::Certified;
    } else {
        report.lspace_status = MainTheoremReport::LspaceStatus::ConditionalOnly;
    }

    report.assumptions = {
        "hyperbolicity of the surgered manifolds is assumed, not machine-checked",
        "the L-space constant C = " + lspace_constant.get_str() +
            " is a caller-supplied hypothesis about integral surgeries on the chain",
        "boundary twist data: component 0 carries 4*ell_0 prongs twisted by -1/4, every other "
        "component is untwisted",
    };
    if (p.mode == EllMode::Interval) {
        report.assumptions.push_back(
            "ell multipliers are constrained only to [1, n+1]; certificates sweep every tuple");
    }
    if (report.lspace_status == MainTheoremReport::LspaceStatus::ConditionalOnly) {
        report.assumptions.push_back(
            "smallest slope M/4 is below the certificate gate max(C, n!*(max linking entry + 1)) "
            "= " + report.lspace_gate.get_str() +
            "; the L-space conclusion is conditional on C and was not certified by a tree");
    }
    return report;
}

} // namespace surgery
