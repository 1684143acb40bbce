#include "indyn/cylinder.hpp"

#include <algorithm>
#include <stdexcept>

#include "indyn/errors.hpp"

namespace indyn {

Word odometer_add(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) {
        throw std::invalid_argument("word lengths differ: " + std::to_string(lhs.size()) +
                                    " vs " + std::to_string(rhs.size()));
    }
    Word out(lhs.size());
    std::uint8_t carry = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const std::uint8_t s = static_cast<std::uint8_t>(lhs[i] + rhs[i] + carry);
        out[i] = s & 1u;
        carry = s >> 1;
    }
    return out;  // carry past the last position is discarded
}

std::uint64_t word_value(const Word& w) {
    if (w.size() > 63) throw std::invalid_argument("word too long for a 64-bit value");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v |= static_cast<std::uint64_t>(w[i]) << i;
    return v;
}

Word word_from_value(std::uint64_t value, std::size_t length) {
    if (length > 63) throw std::invalid_argument("word too long for a 64-bit value");
    Word w(length);
    for (std::size_t i = 0; i < length; ++i) w[i] = (value >> i) & 1u;
    return w;
}

std::string word_text(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (std::uint8_t d : w) s += static_cast<char>('0' + d);
    return s;
}

Word parse_word(std::string_view text, std::size_t alphabet) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        if (c < '0' || static_cast<std::size_t>(c - '0') >= alphabet) {
            throw std::invalid_argument(std::string("bad symbol '") + c + "' in cylinder word");
        }
        w.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (w.empty()) throw std::invalid_argument("empty cylinder word");
    return w;
}

CylinderSystem CylinderSystem::full_shift(std::size_t alphabet) {
    if (alphabet < 2 || alphabet > 36) throw std::invalid_argument("alphabet size out of range");
    return CylinderSystem(Kind::full_shift, alphabet);
}

CylinderSystem CylinderSystem::odometer() { return CylinderSystem(Kind::odometer, 2); }

void CylinderSystem::check_word(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("empty cylinder word");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= alphabet_) {
            throw std::invalid_argument("symbol " + std::to_string(w[i]) + " at position " +
                                        std::to_string(i) + " outside alphabet of size " +
                                        std::to_string(alphabet_));
        }
    }
}

ResidueTimeSet CylinderSystem::return_times(const Word& u, const Word& v) const {
    check_word(u);
    check_word(v);
    ResidueTimeSet out;
    if (kind_ == Kind::full_shift) {
        // T^-n[v] fixes coordinates n+1..n+|v|; intersecting [u] constrains
        // only the overlap, so n >= |u| always works and n < |u| works iff
        // the two words agree where they overlap.
        out.modulus = 1;
        out.residues = {0};
        out.prefix_len = u.size();
        for (std::uint64_t n = 0; n < u.size(); ++n) {
            bool ok = true;
            for (std::size_t i = 0; i + n < u.size() && i < v.size(); ++i) {
                if (u[i + n] != v[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.prefix_members.push_back(n);
        }
        return out;
    }
    // Odometer: adding n moves the class of int(u) mod 2^|u| to meet the
    // class of int(v) mod 2^|v| iff the congruence holds mod the coarser of
    // the two moduli.
    const std::size_t k = std::min(u.size(), v.size());
    const std::uint64_t m = std::uint64_t{1} << k;
    out.modulus = m;
    out.residues = {(word_value(v) + m - (word_value(u) & (m - 1))) & (m - 1)};
    return out;
}

FiniteSystem CylinderSystem::finite_quotient(std::size_t depth) const {
    if (kind_ != Kind::odometer) {
        throw std::invalid_argument("finite quotient is only defined for the odometer");
    }
    if (depth == 0 || depth > 20) throw std::invalid_argument("quotient depth out of range (1..20)");
    const std::size_t n = std::size_t{1} << depth;
    std::vector<std::size_t> forward(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        forward[i] = (i + 1) & (n - 1);
        labels[i] = word_text(word_from_value(i, depth));
    }
    return FiniteSystem::create(std::move(forward), Metric::dyadic(depth), true, std::move(labels));
}

std::vector<Word> CylinderSystem::words_up_to(std::size_t max_len) const {
    if (max_len == 0 || max_len > 20) throw std::invalid_argument("cylinder length out of range");
    std::vector<Word> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < len; ++i) count *= alphabet_;
        for (std::uint64_t v = 0; v < count; ++v) {
            Word w(len);
            std::uint64_t rest = v;
            for (std::size_t i = 0; i < len; ++i) {
                w[i] = static_cast<std::uint8_t>(rest % alphabet_);
                rest /= alphabet_;
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace indyn
