#pragma once

#include "walkbench/dyadic.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace walkbench {

/// Free abelian group Z^d with the standard generator set {±e_i}.
struct IntLattice {
    using Element = std::vector<std::int64_t>;

    int dim = 1;

    Element identity() const { return Element(dim, 0); }

    Element mul(const Element& a, const Element& b) const {
        check(a);
        check(b);
        Element r(dim);
        for (int i = 0; i < dim; ++i) r[i] = a[i] + b[i];
        return r;
    }

    Element inv(const Element& a) const {
        check(a);
        Element r(dim);
        for (int i = 0; i < dim; ++i) r[i] = -a[i];
        return r;
    }

    std::vector<std::pair<std::string, Element>> generators() const {
        std::vector<std::pair<std::string, Element>> g;
        for (int i = 0; i < dim; ++i) {
            Element e = identity();
            e[i] = 1;
            g.emplace_back("e" + std::to_string(i + 1), e);
            e[i] = -1;
            g.emplace_back("e" + std::to_string(i + 1) + "^-1", e);
        }
        return g;
    }

    Element base_generator(int i) const {
        if (i < 0 || i >= dim) throw std::out_of_range("lattice generator index");
        Element e = identity();
        e[i] = 1;
        return e;
    }

    /// Word length for the standard generators is the l1 norm.
    std::int64_t word_length(const Element& a) const {
        check(a);
        std::int64_t s = 0;
        for (auto v : a) s += v < 0 ? -v : v;
        return s;
    }

    std::string format(const Element& a) const {
        std::string s = "(";
        for (int i = 0; i < dim; ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + ")";
    }

    void check(const Element& a) const {
        if (static_cast<int>(a.size()) != dim)
            throw std::invalid_argument("lattice element dimension mismatch");
    }
};

/// Z/m, mainly a test fixture: the uniform measure is exactly invariant.
struct CyclicGroup {
    using Element = std::int64_t;

    std::int64_t modulus = 2;

    Element identity() const { return 0; }
    Element mul(Element a, Element b) const { return norm(a + b); }
    Element inv(Element a) const { return norm(-a); }

    std::vector<std::pair<std::string, Element>> generators() const {
        if (modulus == 1) return {{"0", 0}};
        return {{"1", 1}, {"-1", norm(-1)}};
    }

    Element base_generator(int i) const {
        if (i != 0) throw std::out_of_range("cyclic generator index");
        return modulus == 1 ? 0 : 1;
    }

    std::vector<Element> all_elements() const {
        std::vector<Element> v(static_cast<size_t>(modulus));
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    std::int64_t word_length(Element a) const {
        a = norm(a);
        return std::min(a, modulus - a);
    }

    std::string format(Element a) const { return std::to_string(a); }

private:
    Element norm(Element a) const {
        a %= modulus;
        return a < 0 ? a + modulus : a;
    }
};

}  // namespace walkbench
