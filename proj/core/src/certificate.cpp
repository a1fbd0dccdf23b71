#include "surgery/certificate.hpp"

#include "surgery/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace surgery {

namespace {

std::string spec_label(const SurgerySpec& spec) {
    return "(" + format_rational_list(spec.slopes()) + ")";
}

Integer exact_integer(const Rational& value, const char* what) {
    if (value.get_den() != 1) {
        throw CheckFailure(std::string(what) + " is not an integer: " + format_rational(value));
    }
    return value.get_num();
}

} // namespace

AdditivityWitness verify_additivity(const LinkingMatrix& link, const SurgerySpec& spec,
                                    std::size_t split_index) {
    if (split_index >= spec.size()) {
        throw ValidationError("split index out of range");
    }
    if (spec.denominator(split_index) < 2) {
        throw ValidationError("cannot split the integral slope " +
                              format_rational(spec.slope(split_index)));
    }
    const MediantSplit split = farey_split(spec.slope(split_index));
    const SurgerySpec left_spec = spec.with_slope(split_index, split.left);
    const SurgerySpec right_spec = spec.with_slope(split_index, split.right);

    AdditivityWitness wit;
    wit.split_index = split_index;
    wit.left_slope = split.left;
    wit.right_slope = split.right;
    wit.left_order = h1_order(link, left_spec);
    wit.right_order = h1_order(link, right_spec);
    wit.parent_order = h1_order(link, spec);

    // Independent route through the affine form of the surgery determinant.
    const SurgeryDeterminant f(link);
    const auto form = f.affine_in(split_index, spec.slopes());
    const Rational partial_product(spec.denominator_product() / spec.denominator(split_index));
    const Rational left_val =
        partial_product * (form.slope * split.left.get_num() + form.offset * split.left.get_den());
    const Rational right_val =
        partial_product * (form.slope * split.right.get_num() + form.offset * split.right.get_den());
    const Rational parent_val = Rational(spec.denominator_product()) * f.evaluate(spec.slopes());

    if (left_val + right_val != parent_val) {
        throw CheckFailure("affine split identity failed at " + spec_label(spec));
    }
    wit.left_affine = exact_integer(left_val, "left affine order");
    wit.right_affine = exact_integer(right_val, "right affine order");
    wit.parent_affine = exact_integer(parent_val, "parent affine order");

    if (abs_int(wit.left_affine) != wit.left_order) {
        throw CheckFailure("order of the left child disagrees between routes at " +
                           spec_label(left_spec) + ": det " + wit.left_order.get_str() +
                           ", affine " + wit.left_affine.get_str());
    }
    if (abs_int(wit.right_affine) != wit.right_order) {
        throw CheckFailure("order of the right child disagrees between routes at " +
                           spec_label(right_spec) + ": det " + wit.right_order.get_str() +
                           ", affine " + wit.right_affine.get_str());
    }
    if (abs_int(wit.parent_affine) != wit.parent_order) {
        throw CheckFailure("parent order disagrees between routes at " + spec_label(spec) +
                           ": det " + wit.parent_order.get_str() + ", affine " +
                           wit.parent_affine.get_str());
    }
    if (wit.left_order + wit.right_order != wit.parent_order) {
        throw CheckFailure("additivity failed at " + spec_label(spec) + ": " +
                           wit.left_order.get_str() + " + " + wit.right_order.get_str() +
                           " != " + wit.parent_order.get_str());
    }
    return wit;
}

namespace {

struct TreeBuilder {
    const LinkingMatrix& link;
    const Integer& C;

    std::unique_ptr<CertificateNode> build(const SurgerySpec& spec, std::size_t parent_index,
                                           const Integer& parent_den, bool is_root) {
        auto node = std::make_unique<CertificateNode>(CertificateNode{spec, Integer(0), {}, {}, {}});
        const Integer det = presentation_determinant(link, spec);
        if (det == 0) {
            throw CheckFailure("infinite first homology at " + spec_label(spec));
        }
        if (det < 0) {
            throw CheckFailure("surgery determinant is not positive at " + spec_label(spec));
        }
        node->order = det;

        const std::size_t d = spec.last_fractional_index();
        if (d == SurgerySpec::npos) {
            for (std::size_t i = 0; i < spec.size(); ++i) {
                if (spec.slope(i) < C) {
                    throw CheckFailure("integral leaf " + spec_label(spec) +
                                       " has slope below the L-space constant " + C.get_str());
                }
            }
            return node;
        }

        if (!is_root) {
            // Lexicographic descent of (split index, denominator there).
            const Integer den = spec.denominator(d);
            if (d > parent_index || (d == parent_index && den >= parent_den)) {
                throw CheckFailure("split measure did not decrease at " + spec_label(spec));
            }
        }

        node->witness = verify_additivity(link, spec, d);
        node->left = build(spec.with_slope(d, node->witness->left_slope), d, spec.denominator(d),
                           false);
        node->right = build(spec.with_slope(d, node->witness->right_slope), d, spec.denominator(d),
                            false);
        return node;
    }
};

} // namespace

CertificateTree certificate_tree(const LinkingMatrix& link, const SurgerySpec& spec,
                                 const Integer& lspace_constant) {
    if (link.size() != spec.size()) {
        throw ValidationError("slope count does not match the number of link components");
    }
    if (lspace_constant < 1) {
        throw ValidationError("L-space constant must be at least 1");
    }
    const Integer slack = link.max_abs_entry() + 1;
    const Integer corner = factorial(static_cast<unsigned long>(link.size())) * slack;
    bool cleared = true;
    const Integer gate = std::max(corner, lspace_constant);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec.slope(i) < gate) {
            cleared = false;
            break;
        }
    }
    TreeBuilder builder{link, lspace_constant};
    auto root = builder.build(spec, 0, Integer(0), true);
    return CertificateTree(link, lspace_constant, corner, cleared, std::move(root));
}

CertificateTree::CertificateTree(LinkingMatrix link, Integer lspace_constant,
                                 Integer sufficient_corner, bool corner_cleared,
                                 std::unique_ptr<CertificateNode> root)
    : link_(std::move(link)),
      C_(std::move(lspace_constant)),
      sufficient_corner_(std::move(sufficient_corner)),
      corner_cleared_(corner_cleared),
      root_(std::move(root)) {
    if (!root_) {
        throw ValidationError("certificate tree needs a root");
    }
}

namespace {

std::size_t count_nodes(const CertificateNode& node, bool leaves_only) {
    if (node.is_leaf()) {
        return 1;
    }
    return (leaves_only ? 0 : 1) + count_nodes(*node.left, leaves_only) +
           count_nodes(*node.right, leaves_only);
}

std::size_t node_depth(const CertificateNode& node) {
    if (node.is_leaf()) {
        return 0;
    }
    return 1 + std::max(node_depth(*node.left), node_depth(*node.right));
}

void dump_node(const CertificateNode& node, std::size_t depth, std::ostream& out) {
    out << "node depth=" << depth << " slopes=" << format_rational_list(node.spec.slopes())
        << " order=" << node.order;
    if (node.is_leaf()) {
        out << " leaf\n";
        return;
    }
    const AdditivityWitness& w = *node.witness;
    out << " split=" << w.split_index << " wit=" << w.left_order << ',' << w.right_order << ','
        << w.parent_order << " affine=" << w.left_affine << ',' << w.right_affine << ','
        << w.parent_affine << "\n";
    dump_node(*node.left, depth + 1, out);
    dump_node(*node.right, depth + 1, out);
}

// One parsed "node" line, before tree structure is rebuilt.
struct FlatNode {
    std::size_t depth = 0;
    std::vector<Rational> slopes;
    Integer order;
    bool leaf = false;
    std::size_t split_index = 0;
    std::vector<Integer> wit, affine;
};

std::pair<std::string, std::string> split_kv(const std::string& token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
        throw ValidationError("tree file: expected key=value, got \"" + token + "\"");
    }
    return {token.substr(0, eq), token.substr(eq + 1)};
}

std::vector<Integer> parse_int_list(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.emplace_back(item, 10);
    }
    return out;
}

FlatNode parse_node_line(const std::string& line) {
    std::istringstream ls(line);
    std::string word;
    ls >> word; // "node"
    FlatNode out;
    bool have_split = false;
    while (ls >> word) {
        if (word == "leaf") {
            out.leaf = true;
            continue;
        }
        const auto [key, value] = split_kv(word);
        if (key == "depth") {
            out.depth = std::stoul(value);
        } else if (key == "slopes") {
            out.slopes = parse_rational_list(value);
        } else if (key == "order") {
            out.order = Integer(value, 10);
        } else if (key == "split") {
            out.split_index = std::stoul(value);
            have_split = true;
        } else if (key == "wit") {
            out.wit = parse_int_list(value);
        } else if (key == "affine") {
            out.affine = parse_int_list(value);
        } else {
            throw ValidationError("tree file: unknown node field \"" + key + "\"");
        }
    }
    if (!out.leaf && (!have_split || out.wit.size() != 3 || out.affine.size() != 3)) {
        throw ValidationError("tree file: internal node is missing split data");
    }
    return out;
}

std::unique_ptr<CertificateNode> rebuild(const std::vector<FlatNode>& flat, std::size_t& cursor,
                                         std::size_t depth) {
    if (cursor >= flat.size()) {
        throw ValidationError("tree file: truncated node list");
    }
    const FlatNode& fn = flat[cursor++];
    if (fn.depth != depth) {
        throw ValidationError("tree file: depth mismatch in node list");
    }
    auto node = std::make_unique<CertificateNode>(
        CertificateNode{SurgerySpec(fn.slopes), fn.order, {}, {}, {}});
    if (fn.leaf) {
        return node;
    }
    node->left = rebuild(flat, cursor, depth + 1);
    node->right = rebuild(flat, cursor, depth + 1);
    AdditivityWitness w;
    w.split_index = fn.split_index;
    w.left_slope = node->left->spec.slope(fn.split_index);
    w.right_slope = node->right->spec.slope(fn.split_index);
    w.left_order = fn.wit[0];
    w.right_order = fn.wit[1];
    w.parent_order = fn.wit[2];
    w.left_affine = fn.affine[0];
    w.right_affine = fn.affine[1];
    w.parent_affine = fn.affine[2];
    node->witness = std::move(w);
    return node;
}

} // namespace

std::size_t CertificateTree::leaf_count() const { return count_nodes(*root_, true); }
std::size_t CertificateTree::node_count() const { return count_nodes(*root_, false); }
std::size_t CertificateTree::depth() const { return node_depth(*root_); }

void CertificateTree::dump(std::ostream& out) const {
    out << "surgery-cert-tree v1\n";
    out << "link n=" << link_.size() << " entries=";
    for (std::size_t i = 0; i < link_.size(); ++i) {
        for (std::size_t j = 0; j < link_.size(); ++j) {
            if (i || j) out << ',';
            out << link_.at(i, j);
        }
    }
    out << "\n";
    out << "C=" << C_ << "\n";
    out << "sufficient_corner=" << sufficient_corner_ << "\n";
    out << "corner_cleared=" << (corner_cleared_ ? 1 : 0) << "\n";
    dump_node(*root_, 0, out);
}

CertificateTree CertificateTree::parse(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "surgery-cert-tree v1") {
        throw ValidationError("tree file: missing or unsupported header");
    }
    if (!std::getline(in, line) || line.rfind("link ", 0) != 0) {
        throw ValidationError("tree file: missing link line");
    }
    std::size_t n = 0;
    std::vector<Integer> entries;
    {
        std::istringstream ls(line);
        std::string word;
        ls >> word; // "link"
        while (ls >> word) {
            const auto [key, value] = split_kv(word);
            if (key == "n") {
                n = std::stoul(value);
            } else if (key == "entries") {
                entries = parse_int_list(value);
            }
        }
        if (n == 0 || entries.size() != n * n) {
            throw ValidationError("tree file: bad link line");
        }
    }
    auto read_kv_line = [&](const std::string& expected_key) {
        if (!std::getline(in, line)) {
            throw ValidationError("tree file: missing " + expected_key + " line");
        }
        const auto [key, value] = split_kv(line);
        if (key != expected_key) {
            throw ValidationError("tree file: expected " + expected_key + ", got " + key);
        }
        return value;
    };
    Integer C(read_kv_line("C"), 10);
    Integer corner(read_kv_line("sufficient_corner"), 10);
    const bool cleared = read_kv_line("corner_cleared") == "1";

    std::vector<FlatNode> flat;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("node ", 0) != 0) {
            throw ValidationError("tree file: unexpected line \"" + line + "\"");
        }
        flat.push_back(parse_node_line(line));
    }
    std::size_t cursor = 0;
    auto root = rebuild(flat, cursor, 0);
    if (cursor != flat.size()) {
        throw ValidationError("tree file: trailing node lines");
    }
    return CertificateTree(LinkingMatrix(n, entries), std::move(C), std::move(corner), cleared,
                           std::move(root));
}

namespace {

bool nodes_equal(const CertificateNode& a, const CertificateNode& b) {
    if (a.spec != b.spec || a.order != b.order || a.is_leaf() != b.is_leaf()) {
        return false;
    }
    if (a.is_leaf()) {
        return true;
    }
    const AdditivityWitness& wa = *a.witness;
    const AdditivityWitness& wb = *b.witness;
    if (wa.split_index != wb.split_index || wa.left_slope != wb.left_slope ||
        wa.right_slope != wb.right_slope || wa.left_order != wb.left_order ||
        wa.right_order != wb.right_order || wa.parent_order != wb.parent_order ||
        wa.left_affine != wb.left_affine || wa.right_affine != wb.right_affine ||
        wa.parent_affine != wb.parent_affine) {
        return false;
    }
    return nodes_equal(*a.left, *b.left) && nodes_equal(*a.right, *b.right);
}

} // namespace

bool trees_equal(const CertificateTree& a, const CertificateTree& b) {
    return a.link() == b.link() && a.lspace_constant() == b.lspace_constant() &&
           a.sufficient_corner() == b.sufficient_corner() &&
           a.corner_cleared() == b.corner_cleared() && nodes_equal(a.root(), b.root());
}

} // namespace surgery
