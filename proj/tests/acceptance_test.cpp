// Acceptance gate for the verification suite: ten numbered checks, one
// pass/fail line each, exit 0 only when every line passes.  Runtime budgets
// are pinned here in seconds; 0 means untimed.

#include "surgery/certificate.hpp"
#include "surgery/chain_flow.hpp"
#include "surgery/errors.hpp"
#include "surgery/farey.hpp"
#include "surgery/homology.hpp"
#include "surgery/linking.hpp"
#include "surgery/numeric.hpp"
#include "surgery/slope.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

using namespace surgery;

namespace {

struct Outcome {
    bool ok;
    std::string note;  // counts on pass, first failure detail otherwise
};

std::string show(const Integer& v) { return v.get_str(); }

unsigned sweep_threads() {
    if (const char* env = std::getenv("SURGERY_CERT_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0) {
            return static_cast<unsigned>(value);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// 1: |det A| = q_1...q_n |f(a)| on random specs, Bareiss against rational
// elimination.
Outcome check_homology_identity() {
    oracle::Rng rng(0xacc701);
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
        LinkingMatrix link(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                link.set(i, j, Integer(rng.integer(-10, 10)));
            }
        }
        std::vector<Rational> slopes;
        for (std::size_t i = 0; i < n; ++i) {
            slopes.push_back(rng.rational(-60, 60, 12));
        }
        const SurgerySpec spec(std::move(slopes));
        const Integer det = presentation_determinant(link, spec);
        const Rational f = SurgeryDeterminant(link).evaluate(spec.slopes());
        Rational rhs = Rational(spec.denominator_product()) * f;
        if (rhs < 0) {
            rhs = -rhs;
        }
        if (Rational(abs_int(det)) != rhs) {
            return {false, "trial " + std::to_string(t) + ": |det| = " + show(abs_int(det)) +
                               " but q-product * |f| = " + format_rational(rhs)};
        }
    }
    return {true, std::to_string(trials) + " random specs"};
}

// 2: exact order additivity at every internal node of random above-corner
// certificate trees, orders recomputed from scratch at each node.
Outcome check_additivity() {
    oracle::Rng rng(0xacc702);
    const int trees = 1000;
    long long internal_nodes = 0;
    for (int t = 0; t < trees; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
        LinkingMatrix link(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                link.set(i, j, Integer(rng.integer(-3, 3)));
            }
        }
        const Integer corner =
            factorial(static_cast<unsigned long>(n)) * (link.max_abs_entry() + 1);
        std::vector<Rational> slopes;
        for (std::size_t i = 0; i < n; ++i) {
            const Integer den(rng.integer(1, 4));
            const Integer num = corner * den + rng.integer(0, 8) * den + rng.integer(0, 3);
            slopes.push_back(make_rational(num, den));
        }
        const SurgerySpec spec(std::move(slopes));
        const CertificateTree tree = certificate_tree(link, spec, Integer(1));

        std::string fail;
        std::function<void(const CertificateNode&)> walk = [&](const CertificateNode& node) {
            if (node.is_leaf() || !fail.empty()) {
                return;
            }
            ++internal_nodes;
            const Integer parent = h1_order(link, node.spec);
            const Integer left = h1_order(link, node.left->spec);
            const Integer right = h1_order(link, node.right->spec);
            if (left + right != parent || node.witness->parent_order != parent) {
                fail = "tree " + std::to_string(t) + ": " + show(left) + " + " + show(right) +
                       " != " + show(parent);
                return;
            }
            walk(*node.left);
            walk(*node.right);
        };
        walk(tree.root());
        if (!fail.empty()) {
            return {false, fail};
        }
    }
    return {true, std::to_string(trees) + " trees, " + std::to_string(internal_nodes) +
                      " internal nodes"};
}

// 3: mediant split against exhaustive neighbour search, all reduced p/q with
// 2 <= q < p <= 200.
Outcome check_farey_oracle() {
    long pairs = 0;
    for (long q = 2; q < 200; ++q) {
        for (long p = q + 1; p <= 200; ++p) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            const Rational value = make_rational(p, q);
            const MediantSplit split = farey_split(value);
            const auto found = oracle::farey_parents_search(value);
            if (found.size() != 1 || found[0].first != split.left ||
                found[0].second != split.right) {
                return {false, "mismatch at " + format_rational(value) + " (" +
                                   std::to_string(found.size()) + " oracle solutions)"};
            }
            ++pairs;
        }
    }
    return {true, std::to_string(pairs) + " reduced fractions"};
}

// 4: the concrete n=4, M=33 instance, refined tuple.
Outcome check_worked_instance() {
    const ChainParams p = ChainParams::refined(4, Integer(33));
    std::vector<Integer> maxima;
    for (std::size_t k = 0; k < 4; ++k) {
        const ProngProfile profile = fried_prongs(p, k);
        const Integer expect0 = pow_int(Integer(33), static_cast<unsigned long>(k + 1)) + 24;
        if (profile.core_prongs != std::vector<Integer>{expect0, 4, 8, 4}) {
            return {false, "prong vector at rotation " + std::to_string(k) + " is off"};
        }
        for (const Integer& core : profile.core_prongs) {
            if (core < 4) {
                return {false, "core prong count " + show(core) + " < 4"};
            }
        }
        maxima.push_back(profile.max_prongs());
    }
    for (std::size_t a = 0; a < maxima.size(); ++a) {
        for (std::size_t b = a + 1; b < maxima.size(); ++b) {
            if (maxima[a] == maxima[b]) {
                return {false, "maxima collide at rotations " + std::to_string(a) + ", " +
                                   std::to_string(b)};
            }
        }
    }
    if (maxima.front() != 57 || maxima.back() != 1185945) {
        return {false, "maxima out of range: " + show(maxima.front()) + " .. " +
                           show(maxima.back())};
    }
    const InequivalenceCertificate cert = inequivalence_certificate(p);
    if (!cert.holds || cert.tuples_checked != 1) {
        return {false, "refined certificate did not hold"};
    }
    return {true, "cores [57,4,8,4] .. [1185945,4,8,4], maxima distinct"};
}

// 5: full interval sweep at the smallest admissible M for n = 4 and 6.
Outcome check_interval_sweep() {
    const unsigned threads = sweep_threads();
    std::string note;
    for (const auto& [n, m] : {std::pair<std::size_t, long>{4, 33}, {6, 49}}) {
        const InequivalenceCertificate cert =
            inequivalence_certificate(ChainParams::interval(n, Integer(m)), threads);
        unsigned long long expected = 1;
        for (std::size_t i = 0; i < n; ++i) {
            expected *= n + 1;
        }
        if (!cert.holds || cert.tuples_checked != expected) {
            return {false, "sweep incomplete for n=" + std::to_string(n)};
        }
        if (!note.empty()) {
            note += ", ";
        }
        note += "n=" + std::to_string(n) + ": " + std::to_string(cert.tuples_checked) + " tuples";
    }
    return {true, note};
}

// 6: odd order for every adjacent-sign configuration, dominance bound, and
// strict growth of the order in M.
Outcome check_parity_and_growth() {
    long configs_checked = 0;
    for (std::size_t n : {4ul, 6ul, 8ul}) {
        std::vector<Integer> ms;
        for (int step = 0; step < 5; ++step) {
            ms.push_back(Integer(8) * static_cast<unsigned long>(n) + 1 + 2 * step);
        }
        if (ms.back() > 201) {
            return {false, "M range escapes the 201 cap for n=" + std::to_string(n)};
        }
        for (unsigned long config = 0; config < (1ul << n); ++config) {
            std::string signs;
            for (std::size_t i = 0; i < n; ++i) {
                signs += (config >> i) & 1 ? '-' : '+';
            }
            const LinkingMatrix link = LinkingMatrix::chain(n, signs);
            Integer previous(0);
            for (const Integer& m : ms) {
                const SurgerySpec spec = ChainParams::refined(n, m).surgery_slopes();
                const ParityReport parity = is_odd_order(link, spec);
                if (!parity.odd || !parity.structural) {
                    return {false, "even order at n=" + std::to_string(n) + " M=" + show(m) +
                                       " signs=" + signs};
                }
                const OstrowskiBound bound = ostrowski_bound(link, spec);
                Integer expected_bound(1);
                for (std::size_t i = 0; i < n; ++i) {
                    expected_bound *= pow_int(m, static_cast<unsigned long>(i + 1)) - 8;
                }
                if (!bound.applicable() || *bound.bound != expected_bound ||
                    *bound.bound > parity.order) {
                    return {false, "dominance bound failed at n=" + std::to_string(n) +
                                       " M=" + show(m) + " signs=" + signs};
                }
                if (parity.order <= previous) {
                    return {false, "order did not grow at n=" + std::to_string(n) +
                                       " M=" + show(m) + " signs=" + signs};
                }
                previous = parity.order;
            }
            ++configs_checked;
        }
    }
    return {true, std::to_string(configs_checked) + " sign configs x 5 M values"};
}

// 7: twist-data route against the closed form.  d_i depends on ell_i alone,
// so per-component coverage of [1, n+1] reaches every tuple; n=4 is also
// enumerated in full.
Outcome check_degeneracy_two_path() {
    long long comparisons = 0;
    for (std::size_t n = 4; n <= 12; n += 2) {
        const Integer M = Integer(8) * static_cast<unsigned long>(n) + 1;
        const auto frames = chain_framings(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (long v = 1; v <= static_cast<long>(n) + 1; ++v) {
                std::vector<Integer> ell(n, Integer(1));
                ell[i] = v;
                const auto d =
                    chain_degeneracy_slopes(ChainParams(n, M, EllMode::Interval, ell));
                const FdtcData twist = i == 0 ? FdtcData(4 * Integer(v), Integer(-v))
                                              : FdtcData(Integer(v), Integer(0));
                const TorusSlope via_twist = frames[i].apply(degeneracy_from_fdtc(twist));
                const TorusSlope closed =
                    i == 0 ? TorusSlope(-6 * Integer(v), Integer(v)) : TorusSlope(Integer(v), 0);
                if (d[i] != via_twist || d[i] != closed) {
                    return {false, "route mismatch at n=" + std::to_string(n) +
                                       " i=" + std::to_string(i) + " ell=" + std::to_string(v)};
                }
                ++comparisons;
            }
        }
    }
    // full n=4 enumeration
    const auto frames4 = chain_framings(4);
    std::vector<long> tuple{1, 1, 1, 1};
    while (true) {
        std::vector<Integer> ell(tuple.begin(), tuple.end());
        const auto d = chain_degeneracy_slopes(ChainParams(4, Integer(33), EllMode::Interval, ell));
        for (std::size_t i = 0; i < 4; ++i) {
            const FdtcData twist = i == 0 ? FdtcData(4 * ell[i], -ell[i])
                                          : FdtcData(ell[i], Integer(0));
            if (d[i] != frames4[i].apply(degeneracy_from_fdtc(twist))) {
                return {false, "route mismatch in the full n=4 sweep at i=" + std::to_string(i)};
            }
            ++comparisons;
        }
        std::size_t pos = 0;
        while (pos < 4 && tuple[pos] == 5) {
            tuple[pos++] = 1;
        }
        if (pos == 4) {
            break;
        }
        ++tuple[pos];
    }
    return {true, std::to_string(comparisons) + " integer-exact comparisons"};
}

// 8: sign table for random slopes in (2, 100].
Outcome check_birkhoff_signs() {
    oracle::Rng rng(0xacc708);
    const std::size_t ns[] = {4, 6, 8};
    std::vector<ChainParams> params;
    for (std::size_t n : ns) {
        params.push_back(ChainParams::refined(n, Integer(8) * static_cast<unsigned long>(n) + 1));
    }
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const ChainParams& p = params[static_cast<std::size_t>(t) % params.size()];
        const long q = rng.integer(1, 50);
        const long num = rng.integer(2 * q + 1, 100 * q);
        const BirkhoffSignReport report = birkhoff_sign_check(p, make_rational(num, q));
        if (!report.all_opposite || report.components.size() != p.n) {
            return {false, "sign table failed at slope " + std::to_string(num) + "/" +
                               std::to_string(q) + ", n=" + std::to_string(p.n)};
        }
    }
    return {true, std::to_string(trials) + " random slopes, n in {4,6,8}"};
}

// 9: exhaustive distance bound for genus-g knot surgeries.
Outcome check_knot_distances() {
    long long checked = 0;
    for (long g = 1; g <= 3; ++g) {
        std::vector<TorusSlope> rs;
        for (long q = 1; q <= 20; ++q) {
            for (long p = 4 * g * q + 1; p <= 4 * g * q + 200; ++p) {
                rs.emplace_back(p, q);
            }
        }
        for (long b = 1; b <= 20; ++b) {
            for (long a = -(4 * g - 2) * b; a <= (4 * g - 2) * b; ++a) {
                const TorusSlope deg(a, b);
                for (const TorusSlope& r : rs) {
                    if (delta(r, deg) < 3) {
                        return {false, "distance below 3 at g=" + std::to_string(g) + " r=(" +
                                           show(r.p) + "," + show(r.q) + ") d=(" +
                                           std::to_string(a) + "," + std::to_string(b) + ")"};
                    }
                    ++checked;
                }
            }
        }
        // the guarded entry point on the tight boundary a/b = 4g-2
        for (long q : {1L, 7L, 20L}) {
            const KnotSurgeryCheck guard = knot_surgery_check(
                Integer(g), make_rational(4 * g * q + 1, q), TorusSlope(3 * (4 * g - 2), 3));
            if (!guard.passes) {
                return {false, "guarded check failed at g=" + std::to_string(g)};
            }
        }
    }
    return {true, std::to_string(checked) + " slope pairs"};
}

// 10: positivity certificate at the a-priori corner for every small linking
// matrix, plus random sampling above the corner.
Outcome check_positivity() {
    long long matrices = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        std::vector<long> entries(pairs, -3);
        while (true) {
            LinkingMatrix link(n);
            std::size_t e = 0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    link.set(i, j, Integer(entries[e++]));
                }
            }
            const SurgeryDeterminant f(link);
            const Integer corner =
                factorial(static_cast<unsigned long>(n)) * (link.max_abs_entry() + 1);
            const PositivityCertificate cert = positivity_certificate(f, corner);
            if (!cert.certified || cert.corner_value <= 0) {
                return {false, "certificate refused at its own a-priori corner, n=" +
                                   std::to_string(n)};
            }
            ++matrices;
            std::size_t pos = 0;
            while (pos < pairs && entries[pos] == 3) {
                entries[pos++] = -3;
            }
            if (pos == pairs) {
                break;
            }
            ++entries[pos];
        }
    }

    oracle::Rng rng(0xacc710);
    const int samples = 1000;
    for (int t = 0; t < samples; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
        LinkingMatrix link(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                link.set(i, j, Integer(rng.integer(-3, 3)));
            }
        }
        const Integer corner =
            factorial(static_cast<unsigned long>(n)) * (link.max_abs_entry() + 1);
        std::vector<Rational> point;
        for (std::size_t i = 0; i < n; ++i) {
            point.push_back(Rational(corner) + rng.rational(0, 200, 4));
        }
        const Rational value = SurgeryDeterminant(link).evaluate(point);
        if (value <= 0) {
            return {false, "non-positive f above the corner, n=" + std::to_string(n) +
                               ", f=" + format_rational(value)};
        }
    }
    return {true, std::to_string(matrices) + " matrices at the corner, " +
                      std::to_string(samples) + " sample points above it"};
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = untimed
    Outcome (*run)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "homology determinant identity", 30, check_homology_identity},
        {2, "certificate-tree order additivity", 60, check_additivity},
        {3, "mediant split vs exhaustive search", 0, check_farey_oracle},
        {4, "worked chain instance n=4 M=33", 1, check_worked_instance},
        {5, "interval-mode inequivalence sweep", 300, check_interval_sweep},
        {6, "parity, dominance bound, order growth", 0, check_parity_and_growth},
        {7, "degeneracy slope two-path agreement", 0, check_degeneracy_two_path},
        {8, "Birkhoff sign table", 0, check_birkhoff_signs},
        {9, "knot surgery distance bound", 0, check_knot_distances},
        {10, "positivity certificate at the corner", 0, check_positivity},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            outcome.ok = false;
            outcome.note = "runtime " + std::to_string(seconds) + "s over the " +
                           std::to_string(c.budget_seconds) + "s budget";
        }
        all_ok = all_ok && outcome.ok;
        std::printf("criterion %2d %-42s %s  %6.1fs  %s\n", c.id, c.name,
                    outcome.ok ? "PASS" : "FAIL", seconds, outcome.note.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}
