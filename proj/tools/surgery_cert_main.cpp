// surgery-cert: exact-arithmetic verification of chain-link surgery claims.
//
// Subcommands:
//   homology     first-homology order, parity and bounds for one surgery
//   lspace-cert  splitting certificate tree down to integral surgeries
//   verify-main  the full per-(n, M) verification report
//
// Exit codes are stable: 0 all certified checks pass, 1 a certified check
// failed, 2 usage or validation error.

#include "CLI11.hpp"
#include "json.hpp"

#include "surgery/certificate.hpp"
#include "surgery/chain_flow.hpp"
#include "surgery/errors.hpp"
#include "surgery/homology.hpp"
#include "surgery/linking.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace surgery;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string preset;
    std::string link_path;
    std::string slopes_text;
    std::string big_m;
    std::string constant_c = "1";
    std::string genus = "1";
    std::size_t n = 0;
    std::string mode = "refined";
    int rotation = -1;
    std::string emit_tree;
    std::string format = "human";
    bool skip_lspace = false;
    unsigned threads = 1;
};

Integer parse_big(const std::string& text, const char* what) {
    try {
        return Integer(text, 10);
    } catch (const std::invalid_argument&) {
        throw ValidationError(std::string(what) + " must be an integer, got \"" + text + "\"");
    }
}

LinkingMatrix load_link(const RunConfig& config) {
    if (!config.preset.empty() && !config.link_path.empty()) {
        throw ValidationError("give either --preset or --link, not both");
    }
    if (!config.preset.empty()) {
        return LinkingMatrix::from_preset(config.preset);
    }
    if (!config.link_path.empty()) {
        std::ifstream in(config.link_path);
        if (!in) {
            throw ValidationError("cannot open link file " + config.link_path);
        }
        return LinkingMatrix::parse(in);
    }
    throw ValidationError("a link is required: --preset chain:n|hopf or --link <path>");
}

ordered_json link_json(const LinkingMatrix& link) {
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < link.size(); ++i) {
        for (std::size_t j = 0; j < link.size(); ++j) {
            entries.push_back(link.at(i, j).get_str());
        }
    }
    return ordered_json{{"n", link.size()}, {"entries", entries}};
}

ordered_json slopes_json(const SurgerySpec& spec) {
    ordered_json out = ordered_json::array();
    for (const Rational& s : spec.slopes()) {
        out.push_back(format_rational(s));
    }
    return out;
}

ordered_json ostrowski_json(const OstrowskiBound& bound) {
    ordered_json margins = ordered_json::array();
    for (const Integer& m : bound.row_margins) {
        margins.push_back(m.get_str());
    }
    ordered_json out{{"applicable", bound.applicable()}};
    if (bound.applicable()) {
        out["bound"] = bound.bound->get_str();
    }
    out["row_margins"] = margins;
    return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// homology

int cmd_homology(const RunConfig& config) {
    const LinkingMatrix link = load_link(config);
    const SurgerySpec spec(parse_rational_list(config.slopes_text));
    const ParityReport parity = is_odd_order(link, spec);
    const OstrowskiBound bound = ostrowski_bound(link, spec);
    const Rational f_value = SurgeryDeterminant(link).evaluate(spec.slopes());

    if (config.format == "structured") {
        ordered_json doc{
            {"schema", {{"name", "surgery-cert-report"}, {"version", 1}}},
            {"command", "homology"},
            {"inputs", {{"link", link_json(link)}, {"slopes", slopes_json(spec)}}},
            {"certified",
             {{"h1_order", parity.order.get_str()},
              {"infinite", parity.order == 0},
              {"parity", {{"odd", parity.odd}, {"structural", parity.structural}}},
              {"ostrowski", ostrowski_json(bound)},
              {"f_value", format_rational(f_value)}}},
            {"status", "pass"},
        };
        emit(doc);
        return kExitPass;
    }

    std::cout << "surgery homology report\n";
    std::cout << "components: " << link.size() << "\n";
    std::cout << "slopes: " << format_rational_list(spec.slopes()) << "\n";
    if (parity.order == 0) {
        std::cout << "h1_order: infinite\n";
    } else {
        std::cout << "h1_order: " << parity.order << "\n";
        std::cout << "parity: " << (parity.odd ? "odd" : "even")
                  << (parity.structural ? " (structural: all denominators even)" : "") << "\n";
    }
    if (bound.applicable()) {
        std::cout << "ostrowski bound: " << *bound.bound << "\n";
    } else {
        std::cout << "ostrowski bound: inapplicable (no diagonal dominance)\n";
    }
    std::cout << "surgery determinant f = " << format_rational(f_value) << "\n";
    return kExitPass;
}

// ---------------------------------------------------------------------------
// lspace-cert

ordered_json tree_summary_json(const CertificateTree& tree) {
    return ordered_json{
        {"nodes", tree.node_count()},
        {"leaves", tree.leaf_count()},
        {"depth", tree.depth()},
        {"C", tree.lspace_constant().get_str()},
        {"sufficient_corner", tree.sufficient_corner().get_str()},
        {"corner_cleared", tree.corner_cleared()},
        {"root_order", tree.root().order.get_str()},
    };
}

int cmd_lspace_cert(const RunConfig& config) {
    const LinkingMatrix link = load_link(config);
    const SurgerySpec spec(parse_rational_list(config.slopes_text));
    const Integer C = parse_big(config.constant_c, "--C");
    const CertificateTree tree = certificate_tree(link, spec, C);

    std::ostringstream dump;
    tree.dump(dump);
    if (!config.emit_tree.empty()) {
        std::ofstream out(config.emit_tree);
        if (!out) {
            throw ValidationError("cannot write tree file " + config.emit_tree);
        }
        out << dump.str();
    }

    if (config.format == "structured") {
        ordered_json lines = ordered_json::array();
        std::istringstream in(dump.str());
        for (std::string line; std::getline(in, line);) {
            lines.push_back(line);
        }
        ordered_json doc{
            {"schema", {{"name", "surgery-cert-report"}, {"version", 1}}},
            {"command", "lspace-cert"},
            {"inputs",
             {{"link", link_json(link)}, {"slopes", slopes_json(spec)}, {"C", C.get_str()}}},
            {"certified", {{"summary", tree_summary_json(tree)}, {"tree", lines}}},
            {"status", "pass"},
        };
        emit(doc);
        return kExitPass;
    }

    std::cout << "L-space splitting certificate\n";
    std::cout << "slopes: " << format_rational_list(spec.slopes()) << "  C: " << C << "\n";
    std::cout << "nodes: " << tree.node_count() << "  leaves: " << tree.leaf_count()
              << "  depth: " << tree.depth() << "\n";
    std::cout << "a-priori positivity corner n!*(max|l|+1): " << tree.sufficient_corner()
              << (tree.corner_cleared() ? " (cleared by every slope)"
                                        : " (not cleared; positivity was checked node by node)")
              << "\n";
    std::cout << dump.str();
    return kExitPass;
}

// ---------------------------------------------------------------------------
// verify-main

const char* lspace_status_name(MainTheoremReport::LspaceStatus status) {
    switch (status) {
        case MainTheoremReport::LspaceStatus::Certified: return "certified";
        case MainTheoremReport::LspaceStatus::ConditionalOnly: return "conditional-only";
        case MainTheoremReport::LspaceStatus::Skipped: return "skipped";
    }
    return "unknown";
}

int cmd_verify_main(const RunConfig& config) {
    if (config.n == 0 || config.big_m.empty()) {
        throw ValidationError("verify-main requires --n and --M");
    }
    const Integer M = parse_big(config.big_m, "--M");
    const Integer C = parse_big(config.constant_c, "--C");
    const Integer genus = parse_big(config.genus, "--genus");
    ChainParams params = config.mode == "interval" ? ChainParams::interval(config.n, M)
                                                   : ChainParams::refined(config.n, M);
    if (config.rotation >= 0 && static_cast<std::size_t>(config.rotation) >= params.n) {
        throw ValidationError("--rotation must lie in [0, n-1]");
    }

    VerifierOptions options;
    options.skip_lspace = config.skip_lspace;
    options.threads = config.threads;
    const MainTheoremReport report = theorem_main_verifier(params, C, options);

    // Euler bookkeeping for the refined fibration: boundary prong counts are
    // 4*ell_0 and ell_i, no interior singularities.
    std::optional<bool> euler_ok;
    if (params.mode == EllMode::Refined) {
        std::vector<Integer> boundary = params.ell;
        boundary[0] *= 4;
        euler_ok = euler_prong_check(boundary, params.interior_prongs, genus);
        if (!*euler_ok) {
            throw CheckFailure("Euler characteristic check failed for genus " + genus.get_str());
        }
    }

    if (!config.emit_tree.empty()) {
        if (!report.tree.has_value()) {
            throw ValidationError("--emit-tree given but no certificate tree was produced "
                                  "(L-space section: " +
                                  std::string(lspace_status_name(report.lspace_status)) + ")");
        }
        std::ofstream out(config.emit_tree);
        if (!out) {
            throw ValidationError("cannot write tree file " + config.emit_tree);
        }
        report.tree->dump(out);
    }

    if (config.format == "structured") {
        ordered_json ineq{{"mode", params.mode == EllMode::Refined ? "refined" : "interval"},
                          {"tuples_checked", report.inequivalence.tuples_checked}};
        ordered_json maxima = ordered_json::array();
        for (const Integer& m : report.inequivalence.maxima) {
            maxima.push_back(m.get_str());
        }
        ineq["maxima"] = maxima;

        ordered_json tables = ordered_json::array();
        for (std::size_t k = 0; k < report.prong_tables.size(); ++k) {
            if (config.rotation >= 0 && static_cast<std::size_t>(config.rotation) != k) {
                continue;
            }
            ordered_json cores = ordered_json::array();
            for (const Integer& c : report.prong_tables[k].core_prongs) {
                cores.push_back(c.get_str());
            }
            ordered_json interior = ordered_json::array();
            for (const Integer& s : report.prong_tables[k].interior_prongs) {
                interior.push_back(s.get_str());
            }
            tables.push_back(
                ordered_json{{"rotation", k}, {"cores", cores}, {"interior", interior}});
        }

        ordered_json birkhoff = ordered_json::array();
        for (const BirkhoffSignReport& b : report.birkhoff) {
            ordered_json rows = ordered_json::array();
            for (const BirkhoffComponent& row : b.components) {
                rows.push_back(ordered_json{{"component", row.component},
                                            {"fiber_pairing", row.fiber_pairing.get_str()},
                                            {"degeneracy_pairing", row.degeneracy_pairing.get_str()},
                                            {"opposite", row.opposite}});
            }
            birkhoff.push_back(
                ordered_json{{"slope", format_rational(b.slope)}, {"components", rows}});
        }

        ordered_json lspace{{"status", lspace_status_name(report.lspace_status)},
                            {"gate", report.lspace_gate.get_str()}};
        if (report.tree.has_value()) {
            lspace["summary"] = tree_summary_json(*report.tree);
        }

        ordered_json certified{
            {"inequivalence", ineq},
            {"prong_tables", tables},
            {"homology",
             {{"h1_order", report.order.get_str()},
              {"parity", {{"odd", report.parity.odd}, {"structural", report.parity.structural}}},
              {"ostrowski", ostrowski_json(report.ostrowski)}}},
            {"birkhoff", birkhoff},
        };
        if (euler_ok.has_value()) {
            certified["euler"] = ordered_json{{"genus", genus.get_str()}, {"balanced", *euler_ok}};
        }
        certified["lspace"] = lspace;

        ordered_json assumed = ordered_json::array();
        for (const std::string& a : report.assumptions) {
            assumed.push_back(a);
        }
        ordered_json doc{
            {"schema", {{"name", "surgery-cert-report"}, {"version", 1}}},
            {"command", "verify-main"},
            {"inputs",
             {{"n", params.n},
              {"M", M.get_str()},
              {"mode", params.mode == EllMode::Refined ? "refined" : "interval"},
              {"C", C.get_str()},
              {"genus", genus.get_str()},
              {"skip_lspace", config.skip_lspace}}},
            {"certified", certified},
            {"assumed", assumed},
            {"status", "pass"},
        };
        emit(doc);
        return kExitPass;
    }

    std::cout << "chain surgery verification\n";
    std::cout << "n=" << params.n << " M=" << M
              << " mode=" << (params.mode == EllMode::Refined ? "refined" : "interval")
              << " C=" << C << "\n\n";

    std::cout << "[certified] inequivalence: " << report.inequivalence.tuples_checked
              << " ell tuple(s) checked; distinguishing maxima per rotation:\n";
    for (std::size_t k = 0; k < report.inequivalence.maxima.size(); ++k) {
        std::cout << "    k=" << k << ": " << report.inequivalence.maxima[k] << "\n";
    }
    for (std::size_t k = 0; k < report.prong_tables.size(); ++k) {
        if (config.rotation >= 0 && static_cast<std::size_t>(config.rotation) != k) {
            continue;
        }
        std::cout << "[certified] prong table k=" << k << ": cores";
        for (const Integer& c : report.prong_tables[k].core_prongs) {
            std::cout << ' ' << c;
        }
        if (report.prong_tables[k].interior_prongs.empty()) {
            std::cout << "; no interior singularities";
        } else {
            std::cout << "; interior";
            for (const Integer& s : report.prong_tables[k].interior_prongs) {
                std::cout << ' ' << s;
            }
        }
        std::cout << "\n";
    }
    std::cout << "[certified] homology: order " << report.order << ", "
              << (report.parity.odd ? "odd" : "even")
              << (report.parity.structural ? " (structural)" : "") << ", dominance bound "
              << (report.ostrowski.applicable() ? report.ostrowski.bound->get_str()
                                                : std::string("inapplicable"))
              << "\n";
    std::cout << "[certified] Birkhoff signs: fiber and degeneracy pairings opposite at all "
              << report.birkhoff.size() << " slopes x " << params.n << " components\n";
    if (euler_ok.has_value()) {
        std::cout << "[certified] Euler count balanced for genus " << genus << "\n";
    }
    switch (report.lspace_status) {
        case MainTheoremReport::LspaceStatus::Certified:
            std::cout << "[certified] L-space: splitting certificate with "
                      << report.tree->leaf_count() << " integral leaves, all slopes >= C\n";
            break;
        case MainTheoremReport::LspaceStatus::ConditionalOnly:
            std::cout << "[conditional] L-space: slopes below gate " << report.lspace_gate
                      << "; conclusion rests on the assumed constant C\n";
            break;
        case MainTheoremReport::LspaceStatus::Skipped:
            std::cout << "[skipped] L-space: not checked (--skip-lspace)\n";
            break;
    }
    for (const std::string& a : report.assumptions) {
        std::cout << "[assumed] " << a << "\n";
    }
    std::cout << "\nresult: PASS\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig config;
    if (const char* env = std::getenv("SURGERY_CERT_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        config.threads = value > 0 ? static_cast<unsigned>(value) : 1u;
    }

    CLI::App app{"exact-arithmetic verification for chain-link Dehn surgeries"};
    app.require_subcommand(1);

    CLI::App* homology = app.add_subcommand("homology", "first-homology order and bounds");
    homology->add_option("--preset", config.preset, "built-in link: chain:n[:SIGNS] or hopf");
    homology->add_option("--link", config.link_path, "link description file");
    homology->add_option("--slopes", config.slopes_text, "comma-separated surgery slopes p/q")
        ->required();
    homology->add_option("--format", config.format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    CLI::App* lspace = app.add_subcommand("lspace-cert", "L-space splitting certificate tree");
    lspace->add_option("--preset", config.preset, "built-in link: chain:n[:SIGNS] or hopf");
    lspace->add_option("--link", config.link_path, "link description file");
    lspace->add_option("--slopes", config.slopes_text, "comma-separated surgery slopes p/q")
        ->required();
    lspace->add_option("--C", config.constant_c, "L-space constant for integral surgeries");
    lspace->add_option("--emit-tree", config.emit_tree, "write the tree dump to this path");
    lspace->add_option("--format", config.format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    CLI::App* verify = app.add_subcommand("verify-main", "full verification for one (n, M)");
    verify->add_option("--n", config.n, "number of chain components (even, >= 4)")->required();
    verify->add_option("--M", config.big_m, "odd integer M > 8n")->required();
    verify->add_option("--mode", config.mode, "ell mode: interval or refined")
        ->check(CLI::IsMember({"interval", "refined"}));
    verify->add_option("--C", config.constant_c, "L-space constant for integral surgeries");
    verify->add_option("--rotation", config.rotation, "print only this rotation's prong table");
    verify->add_option("--genus", config.genus, "genus for the Euler prong count (refined mode)");
    verify->add_option("--emit-tree", config.emit_tree, "write the tree dump to this path");
    verify->add_flag("--skip-lspace", config.skip_lspace, "skip the L-space certificate");
    verify->add_option("--format", config.format, "human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(homology)) {
            return cmd_homology(config);
        }
        if (app.got_subcommand(lspace)) {
            return cmd_lspace_cert(config);
        }
        return cmd_verify_main(config);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CheckFailure& e) {
        std::cerr << "certified check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
