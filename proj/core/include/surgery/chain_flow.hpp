#pragma once

#include "surgery/certificate.hpp"
#include "surgery/homology.hpp"
#include "surgery/linking.hpp"
#include "surgery/slope.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace surgery {

// Which set of per-component multipliers ell_i a chain computation ranges
// over: Interval quantifies every certificate over all tuples in [1, n+1]^n,
// Refined fixes the sharper single tuple (1, 1, 2, ..., 2, 1).
enum class EllMode { Interval, Refined };

std::vector<Integer> refined_ell(std::size_t n);

/*
 * Parameters of the cyclic-chain construction: an even number n >= 4 of
 * components and an odd integer M > 8n driving the surgery slopes
 * r_i = M^{i+1}/4.  The active ell tuple is the one concrete computations
 * (prong tables, degeneracy slopes) use; interval-mode certificates sweep all
 * admissible tuples regardless of it.  interior_prongs lists prong counts of
 * interior singular orbits, each within [3, n+2]; the refined fibration has
 * none, so it defaults to empty.
 */
struct ChainParams {
    std::size_t n;
    Integer M;
    EllMode mode;
    std::vector<Integer> ell;
    std::vector<Integer> interior_prongs;

    ChainParams(std::size_t n, Integer M, EllMode mode, std::vector<Integer> ell,
                std::vector<Integer> interior_prongs = {});

    static ChainParams refined(std::size_t n, const Integer& M);
    static ChainParams interval(std::size_t n, const Integer& M);

    ChainParams with_ell(std::vector<Integer> new_ell) const;

    // r_i = M^{i+1}/4 for i = 0..n-1.
    SurgerySpec surgery_slopes() const;
};

// Per component, the change from the fiber-framed basis (mu'_i, lambda'_i) to
// the standard surgery basis (mu_i, lambda_i) of the chain complement.
std::vector<FramingChange> chain_framings(std::size_t n);

// Degeneracy slopes in surgery coordinates: d_0 = ell_0 * (-6, 1) and
// d_i = (ell_i, 0) for i != 0.  Computed from the closed form and re-derived
// through the twist-data route (4*ell_0 prongs twisted by -1/4 on component 0,
// ell_i prongs untwisted elsewhere) as a runtime cross-check.
std::vector<TorusSlope> chain_degeneracy_slopes(const ChainParams& p);

struct ProngProfile {
    std::vector<Integer> core_prongs;      // delta(r_{[i+k]}, d_i) per component
    std::vector<Integer> interior_prongs;  // sorted copy of the configuration
    Integer max_prongs() const;
};

// Prong counts of the singular orbits of the flow obtained by surgery along
// the rotation-k slope assignment.  Fails if any core count drops below 2,
// which would invalidate the surgery.
ProngProfile fried_prongs(const ChainParams& p, std::size_t rotation);

/*
 * The distinguishing certificate for the n rotated flows.  For every ell
 * tuple in the active mode and every rotation k it checks that
 *
 *   (a) each core prong count is at least 2,
 *   (b) each is at least 3 (no perfect fits),
 *   (c) the component-0 core is the unique maximum of the whole profile and
 *       matches the closed form ell_0 * (M^{k+1} + 24), every other core
 *       staying below M and every interior count below n+2+1,
 *   (d) the n maxima are strictly increasing in k, hence pairwise distinct.
 *
 * The first violated inequality aborts the sweep with its instantiated
 * values.  The reported maxima are those of the active ell tuple.
 */
struct InequivalenceCertificate {
    EllMode mode;
    unsigned long long tuples_checked;
    std::vector<Integer> maxima;  // indexed by rotation k
    bool holds;
};

InequivalenceCertificate inequivalence_certificate(const ChainParams& p, unsigned threads = 1);

// Euler-characteristic bookkeeping for a singular flat surface of the given
// genus: sum(2 - q_i) over boundary prongs plus sum(2 - s_j) over interior
// prongs must equal 2 - 2*genus.
bool euler_prong_check(const std::vector<Integer>& boundary_prongs,
                       const std::vector<Integer>& interior_prongs, const Integer& genus);

/*
 * Sign bookkeeping for Birkhoff sections.  For a slope p/q > 2 the pairings
 * with the fiber direction lambda'_i and with the degeneracy slope d_i fall
 * into three cases,
 *
 *     component 0:        p + 2q   and   ell_0 * (-p - 6q),
 *     components 1, n-1:  -p       and   ell_i * q,
 *     all others:         -p + 2q  and   ell_i * q,
 *
 * always with opposite signs.  The check recomputes both pairings through the
 * framing machinery and fails on any deviation from this table.
 */
struct BirkhoffComponent {
    std::size_t component;
    Integer fiber_pairing;
    Integer degeneracy_pairing;
    bool opposite;
};

struct BirkhoffSignReport {
    Rational slope;
    std::vector<BirkhoffComponent> components;
    bool all_opposite;
};

BirkhoffSignReport birkhoff_sign_check(const ChainParams& p, const Rational& slope);

// Distance between a surgery slope p/q > 4g and a degeneracy slope (a, b)
// with b >= 1 and a/b <= 4g - 2; certifies the distance is at least 3.
struct KnotSurgeryCheck {
    Integer distance;
    bool passes;
};

KnotSurgeryCheck knot_surgery_check(const Integer& genus, const Rational& r, const TorusSlope& deg);

/*
 * End-to-end verification for one (n, M): the inequivalence certificate, the
 * homology order with parity and the diagonal-dominance bound, Birkhoff signs
 * at every surgery slope, and when the slopes clear max(C, n! * (max linking
 * entry + 1)) the full L-space splitting certificate.  Below that gate the
 * L-space conclusion is only conditional and the report says so instead of
 * failing.  Hyperbolicity and the constant C itself are assumptions and are
 * listed as such.
 */
struct MainTheoremReport {
    ChainParams params;
    Integer lspace_constant;
    SurgerySpec spec;

    InequivalenceCertificate inequivalence;
    std::vector<ProngProfile> prong_tables;  // per rotation, active ell
    Integer order;
    ParityReport parity;
    OstrowskiBound ostrowski;
    std::vector<BirkhoffSignReport> birkhoff;  // one per surgery slope

    enum class LspaceStatus { Certified, ConditionalOnly, Skipped };
    LspaceStatus lspace_status;
    Integer lspace_gate;
    std::optional<CertificateTree> tree;

    std::vector<std::string> assumptions;
};

struct VerifierOptions {
    bool skip_lspace = false;
    unsigned threads = 1;
};

MainTheoremReport theorem_main_verifier(const ChainParams& p, const Integer& lspace_constant,
                                        const VerifierOptions& options = {});

} // namespace surgery
