#include "quandle/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quandle {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection of 0.." +
                                        std::to_string(n - 1));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    std::vector<char> touched(static_cast<std::size_t>(degree), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree)
                throw std::invalid_argument("from_cycles: point out of range");
            if (touched[static_cast<std::size_t>(from)])
                throw std::invalid_argument("from_cycles: cycles are not disjoint");
            touched[static_cast<std::size_t>(from)] = 1;
            im[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

std::vector<int> Permutation::cycle_structure() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::string Permutation::cycle_string() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) {
            seen[static_cast<std::size_t>(i)] = 1;
            continue;
        }
        out += '(';
        bool first = true;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

std::string Permutation::one_line_string() const {
    std::string out = "[";
    for (int i = 0; i < degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[static_cast<std::size_t>(i)]);
    }
    out += ']';
    return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(f.degree()) +
                                    " vs " + std::to_string(g.degree()) + ")");
    std::vector<int> im(static_cast<std::size_t>(f.degree()));
    for (int x = 0; x < f.degree(); ++x) im[static_cast<std::size_t>(x)] = f(g(x));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& f) {
    std::vector<int> im(static_cast<std::size_t>(f.degree()));
    for (int x = 0; x < f.degree(); ++x) im[static_cast<std::size_t>(f(x))] = x;
    return Permutation(std::move(im));
}

} // namespace quandle
