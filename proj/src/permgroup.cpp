#include "quandle/permgroup.hpp"

#include <algorithm>
#include <deque>

namespace quandle {

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("closure exceeded the element cap of " + std::to_string(cap)),
      cap_(cap) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

PermGroup PermGroup::closure(const std::vector<Permutation>& generators, std::size_t cap) {
    if (generators.empty())
        throw std::invalid_argument("closure: no generators (degree would be ambiguous)");
    const int degree = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("closure: generator degree mismatch");

    // Breadth-first products. In a finite group the multiplicative closure
    // of a generating set containing the identity is already a subgroup, so
    // no explicit inverses are needed.
    std::set<Permutation> seen;
    std::deque<Permutation> todo;
    auto push = [&](Permutation p) {
        if (seen.insert(p).second) {
            if (seen.size() > cap) throw CapExceeded(cap);
            todo.push_back(std::move(p));
        }
    };
    push(Permutation::identity(degree));
    for (const auto& g : generators) push(g);
    while (!todo.empty()) {
        Permutation w = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : generators) push(compose(w, g));
    }
    return PermGroup(degree, generators, std::vector<Permutation>(seen.begin(), seen.end()));
}

PermGroup PermGroup::trivial(int degree) {
    auto id = Permutation::identity(degree);
    return PermGroup(degree, {id}, {id});
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::set<int> PermGroup::orbit(int x) const {
    if (x < 0 || x >= degree_) throw std::invalid_argument("orbit: point out of range");
    std::set<int> orb;
    for (const auto& g : elements_) orb.insert(g(x));
    return orb;
}

PermGroup PermGroup::stabilizer(int x) const {
    if (x < 0 || x >= degree_) throw std::invalid_argument("stabilizer: point out of range");
    std::vector<Permutation> fixed;
    for (const auto& g : elements_)
        if (g(x) == x) fixed.push_back(g);
    return PermGroup(degree_, fixed, fixed); // already sorted; a subgroup by construction
}

bool PermGroup::is_transitive(const std::set<int>& domain) const {
    if (domain.empty()) throw std::invalid_argument("is_transitive: empty domain");
    for (int p : domain)
        if (p < 0 || p >= degree_) throw std::invalid_argument("is_transitive: point out of range");
    for (const auto& g : elements_)
        for (int p : domain)
            if (!domain.count(g(p)))
                throw std::invalid_argument("is_transitive: domain is not G-invariant");
    const int base = *domain.begin();
    std::set<int> reached;
    for (const auto& g : elements_) reached.insert(g(base));
    return reached == domain;
}

} // namespace quandle
