#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "pisot/io.hpp"

namespace support {

using namespace pisot;

/// Rules written with 1-based digits: {"12", "1"} is 1 -> 12, 2 -> 1.
inline Substitution sub(const std::vector<std::string>& rules) {
    std::vector<Word> words;
    for (const auto& r : rules) {
        Word w;
        for (char ch : r) w.push_back(ch - '1');
        words.push_back(std::move(w));
    }
    return Substitution(std::move(words));
}

inline oracle::Rules rules_of(const Substitution& s) {
    oracle::Rules out;
    for (const auto& w : s.rules()) out.emplace_back(w.begin(), w.end());
    return out;
}

/// q0 + q1 b + q2 b^2 ... with rationals given as strings.
inline AlgebraicReal el(const FieldPtr& f, const std::vector<std::string>& q) {
    Vector<Rational> c = Vector<Rational>::Zero(f->degree());
    for (std::size_t k = 0; k < q.size(); ++k) c(static_cast<Eigen::Index>(k)) = parse_rational(q[k]);
    return AlgebraicReal(f, std::move(c));
}

inline OverlapClass cls(const FieldPtr& f, int u, int v, const std::vector<std::string>& shift) {
    return {u - 1, v - 1, el(f, shift)};
}

struct CorpusEntry {
    std::string file;
    std::vector<std::string> rules;
    bool overlap;
    bool constant_length;
};

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = {
        {"fibonacci.json", {"12", "1"}, true, false},
        {"tribonacci.json", {"12", "13", "1"}, true, false},
        {"period_doubling.json", {"12", "11"}, true, true},
        {"thue_morse.json", {"12", "21"}, false, true},
        {"s112_12.json", {"112", "12"}, true, false},
        {"s112_221.json", {"112", "221"}, false, true},
        {"s12_3_1.json", {"12", "3", "1"}, true, false},
    };
    return c;
}

inline std::string corpus_dir() { return PISOT_SOURCE_DIR "/corpus"; }
inline std::string fixture(const std::string& name) { return PISOT_SOURCE_DIR "/tests/fixtures/" + name; }

}  // namespace support
