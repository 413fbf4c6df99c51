#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/formal.hpp"
#include "hopf/text.hpp"

namespace support {

inline hopf::Permutation P(const std::string& s) { return hopf::parse_permutation(s); }
inline hopf::Element E(const std::string& s) { return hopf::parse_element(s); }
inline hopf::DescentSet D(std::vector<int> members, int n) { return hopf::DescentSet(std::move(members), n); }

inline std::vector<std::string> words(const std::vector<hopf::Permutation>& perms) {
    std::vector<std::string> out;
    for (const auto& u : perms) out.push_back(hopf::format_permutation(u));
    return out;
}

// Every permutation of 1..n by std::next_permutation; independent of the
// library's enumeration.
inline std::vector<std::vector<int>> raw_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::vector<hopf::Permutation> perms(int n) {
    std::vector<hopf::Permutation> out;
    for (const auto& w : raw_permutations(n)) out.push_back(hopf::Permutation::from_word(w));
    return out;
}

// Transitive closure of the cover relation "swap the values k, k+1 when k
// comes first", by depth-first search over raw words.
inline std::set<std::vector<int>> reachable_up(const std::vector<int>& start) {
    std::set<std::vector<int>> seen{start};
    std::vector<std::vector<int>> stack{start};
    while (!stack.empty()) {
        auto w = stack.back();
        stack.pop_back();
        const std::size_t n = w.size();
        std::vector<std::size_t> pos(n + 2);
        for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[i])] = i;
        for (std::size_t k = 1; k < n; ++k) {
            if (pos[k] < pos[k + 1]) {
                auto y = w;
                std::swap(y[pos[k]], y[pos[k + 1]]);
                if (seen.insert(y).second) stack.push_back(y);
            }
        }
    }
    return seen;
}

}  // namespace support
