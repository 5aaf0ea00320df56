#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace walkbench {

/// Abstract word in a group's base generators: letter +i means generator
/// i (1-based), -i its inverse. Evaluation is the left-to-right product.
struct GroupWord {
    std::vector<int> letters;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

template <class Group>
typename Group::Element word_eval(const Group& g, const GroupWord& w) {
    auto r = g.identity();
    for (int l : w.letters) {
        if (l == 0) throw std::invalid_argument("word letter 0");
        auto gen = g.base_generator((l < 0 ? -l : l) - 1);
        r = g.mul(r, l < 0 ? g.inv(gen) : gen);
    }
    return r;
}

}  // namespace walkbench
