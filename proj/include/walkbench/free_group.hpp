#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace walkbench {

/// Freely reduced word over generators a_1..a_r. Letter encoding: +i for
/// a_i, -i for a_i^-1 (1-based). The letter vector never contains an
/// adjacent cancelling pair; reduction is eager, so equality is vector
/// equality.
struct ReducedWord {
    std::vector<std::int8_t> letters;

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) = default;
    friend bool operator<(const ReducedWord& a, const ReducedWord& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

struct FreeGroup {
    using Element = ReducedWord;

    int rank = 2;

    Element identity() const { return {}; }

    Element mul(const Element& a, const Element& b) const {
        Element r = a;
        for (auto l : b.letters) {
            if (!r.letters.empty() && r.letters.back() == -l)
                r.letters.pop_back();
            else
                r.letters.push_back(l);
        }
        return r;
    }

    Element inv(const Element& a) const {
        Element r;
        r.letters.reserve(a.letters.size());
        for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
            r.letters.push_back(static_cast<std::int8_t>(-*it));
        return r;
    }

    Element generator(int i, bool inverse = false) const {
        if (i < 1 || i > rank) throw std::out_of_range("free group generator index");
        Element e;
        e.letters.push_back(static_cast<std::int8_t>(inverse ? -i : i));
        return e;
    }

    Element base_generator(int i) const { return generator(i + 1); }

    std::vector<std::pair<std::string, Element>> generators() const {
        static const char* names = "abcd";
        std::vector<std::pair<std::string, Element>> g;
        for (int i = 1; i <= rank; ++i) {
            std::string n = i <= 4 ? std::string(1, names[i - 1]) : "g" + std::to_string(i);
            g.emplace_back(n, generator(i));
            g.emplace_back(n + "^-1", generator(i, true));
        }
        return g;
    }

    std::int64_t word_length(const Element& a) const {
        return static_cast<std::int64_t>(a.letters.size());
    }

    std::string format(const Element& a) const {
        if (a.letters.empty()) return "e";
        static const char* names = "abcd";
        std::string s;
        for (auto l : a.letters) {
            int i = l < 0 ? -l : l;
            s += i <= 4 ? std::string(1, names[i - 1]) : "g" + std::to_string(i);
            if (l < 0) s += "'";
        }
        return s;
    }
};

}  // namespace walkbench
