#include "surgery/linking.hpp"

#include "surgery/errors.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace surgery {

LinkingMatrix::LinkingMatrix(std::size_t n) : n_(n), data_(n * n, Integer(0)) {
    if (n == 0) {
        throw ValidationError("linking matrix needs at least one component");
    }
}

LinkingMatrix::LinkingMatrix(std::size_t n, const std::vector<Integer>& entries) : LinkingMatrix(n) {
    if (entries.size() != n * n) {
        throw ValidationError("linking matrix entry count does not match size");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (entries[i * n + j] != entries[j * n + i]) {
                throw ValidationError("linking matrix must be symmetric");
            }
            if (i != j) {
                data_[i * n + j] = entries[i * n + j];
            }
        }
    }
}

const Integer& LinkingMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw ValidationError("linking matrix index out of range");
    }
    return data_[i * n_ + j];
}

void LinkingMatrix::set(std::size_t i, std::size_t j, const Integer& value) {
    if (i >= n_ || j >= n_) {
        throw ValidationError("linking matrix index out of range");
    }
    if (i == j) {
        throw ValidationError("diagonal linking entries are fixed at zero");
    }
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
}

LinkingMatrix LinkingMatrix::minor_without(std::size_t k) const {
    if (n_ < 2) {
        throw ValidationError("cannot delete the only component");
    }
    if (k >= n_) {
        throw ValidationError("linking matrix index out of range");
    }
    LinkingMatrix out(n_ - 1);
    for (std::size_t i = 0; i < n_; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (j == k || i == j) continue;
            const std::size_t ii = i < k ? i : i - 1;
            const std::size_t jj = j < k ? j : j - 1;
            out.data_[ii * out.n_ + jj] = data_[i * n_ + j];
        }
    }
    return out;
}

Integer LinkingMatrix::max_abs_entry() const {
    Integer best(0);
    for (const Integer& v : data_) {
        if (abs_int(v) > best) {
            best = abs_int(v);
        }
    }
    return best;
}

LinkingMatrix LinkingMatrix::relabelled(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) {
        throw ValidationError("relabelling permutation has wrong length");
    }
    LinkingMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j) continue;
            out.data_[i * n_ + j] = at(perm.at(i), perm.at(j));
        }
    }
    return out;
}

LinkingMatrix LinkingMatrix::chain(std::size_t n, std::string_view signs) {
    if (n < 3) {
        throw ValidationError("chain preset needs at least 3 components (use hopf for 2)");
    }
    if (!signs.empty() && signs.size() != n) {
        throw ValidationError("chain sign string must have one character per adjacent pair");
    }
    LinkingMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer sign(1);
        if (!signs.empty()) {
            const char c = signs[i];
            if (c == '-') {
                sign = -1;
            } else if (c != '+') {
                throw ValidationError("chain sign string may contain only '+' and '-'");
            }
        }
        out.set(i, (i + 1) % n, sign);
    }
    return out;
}

LinkingMatrix LinkingMatrix::hopf() {
    LinkingMatrix out(2);
    out.set(0, 1, Integer(1));
    return out;
}

LinkingMatrix LinkingMatrix::from_preset(std::string_view preset) {
    if (preset == "hopf") {
        return hopf();
    }
    constexpr std::string_view kChain = "chain:";
    if (preset.substr(0, kChain.size()) == kChain) {
        std::string_view rest = preset.substr(kChain.size());
        std::string_view count = rest;
        std::string_view signs;
        const auto colon = rest.find(':');
        if (colon != std::string_view::npos) {
            count = rest.substr(0, colon);
            signs = rest.substr(colon + 1);
        }
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
        if (ec != std::errc() || ptr != count.data() + count.size()) {
            throw ValidationError("malformed chain preset \"" + std::string(preset) + "\"");
        }
        return chain(n, signs);
    }
    throw ValidationError("unknown link preset \"" + std::string(preset) +
                          "\"; available: chain:n[:SIGNS], hopf");
}

LinkingMatrix LinkingMatrix::parse(std::istream& in) {
    std::size_t n = 0;
    bool have_n = false;
    std::string line;
    // Header: comments, then "n <count>", then "linking".
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') {
            continue;
        }
        if (word == "n") {
            if (!(ls >> n) || n == 0) {
                throw ValidationError("link file: bad component count");
            }
            have_n = true;
        } else if (word == "linking") {
            break;
        } else {
            throw ValidationError("link file: unexpected token \"" + word + "\"");
        }
    }
    if (!have_n) {
        throw ValidationError("link file: missing \"n <count>\" line");
    }
    std::vector<Integer> entries;
    entries.reserve(n * n);
    std::string token;
    while (entries.size() < n * n && in >> token) {
        if (token[0] == '#') {
            std::getline(in, line);
            continue;
        }
        try {
            entries.emplace_back(token, 10);
        } catch (const std::invalid_argument&) {
            throw ValidationError("link file: bad matrix entry \"" + token + "\"");
        }
    }
    if (entries.size() != n * n) {
        throw ValidationError("link file: expected " + std::to_string(n * n) +
                              " matrix entries");
    }
    return LinkingMatrix(n, entries);
}

void LinkingMatrix::print(std::ostream& out) const {
    out << "n " << n_ << "\n" << "linking\n";
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j > 0) out << ' ';
            out << data_[i * n_ + j];
        }
        out << "\n";
    }
}

SurgerySpec::SurgerySpec(std::vector<Rational> slopes) : slopes_(std::move(slopes)) {
    if (slopes_.empty()) {
        throw ValidationError("surgery description needs at least one slope");
    }
    for (Rational& s : slopes_) {
        s.canonicalize();
    }
}

Integer SurgerySpec::denominator_product() const {
    Integer out(1);
    for (const Rational& s : slopes_) {
        out *= s.get_den();
    }
    return out;
}

bool SurgerySpec::all_integral() const {
    for (const Rational& s : slopes_) {
        if (s.get_den() != 1) {
            return false;
        }
    }
    return true;
}

std::size_t SurgerySpec::last_fractional_index() const {
    for (std::size_t i = slopes_.size(); i-- > 0;) {
        if (slopes_[i].get_den() != 1) {
            return i;
        }
    }
    return npos;
}

SurgerySpec SurgerySpec::with_slope(std::size_t i, const Rational& value) const {
    std::vector<Rational> out = slopes_;
    out.at(i) = value;
    return SurgerySpec(std::move(out));
}

SurgerySpec SurgerySpec::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != slopes_.size()) {
        throw ValidationError("slope permutation has wrong length");
    }
    std::vector<Rational> out;
    out.reserve(slopes_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.push_back(slopes_.at(perm[i]));
    }
    return SurgerySpec(std::move(out));
}

} // namespace surgery
