#include "abelcode/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace abelcode::oracle {

Int oracle_bound() {
    if (const char* env = std::getenv("ABELCODE_ORACLE_BOUND")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<Int>(v);
    }
    return Int{1} << 20;
}

namespace {

Int effective(Int bound) { return bound > 0 ? bound : oracle_bound(); }

EnumeratedCode from_set(const SequenceSpace& space, std::set<Vector> s) {
    return EnumeratedCode{space, std::vector<Vector>(s.begin(), s.end())};
}

bool vanishes_on(const SequenceSpace& space, const Vector& x, std::size_t a, std::size_t b) {
    const std::size_t lo = space.offset(std::min(a, space.horizon()));
    const std::size_t hi = b >= space.horizon() ? x.size() : space.offset(b);
    for (std::size_t c = lo; c < hi; ++c)
        if (x[c] != 0) return false;
    return true;
}

bool agree_on(const SequenceSpace& space, const Vector& x, const Vector& y, std::size_t a, std::size_t b) {
    const std::size_t lo = space.offset(std::min(a, space.horizon()));
    const std::size_t hi = b >= space.horizon() ? x.size() : space.offset(b);
    for (std::size_t c = lo; c < hi; ++c)
        if (x[c] != y[c]) return false;
    return true;
}

Vector restrict_to(const SequenceSpace& space, const Vector& x, std::size_t a, std::size_t b) {
    const std::size_t lo = space.offset(std::min(a, space.horizon()));
    const std::size_t hi = b >= space.horizon() ? x.size() : space.offset(b);
    return Vector(x.begin() + static_cast<std::ptrdiff_t>(lo), x.begin() + static_cast<std::ptrdiff_t>(hi));
}

EnumeratedCode intersect_sets(const EnumeratedCode& a, const EnumeratedCode& b) {
    EnumeratedCode out{a.space, {}};
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(out.elements));
    return out;
}

}  // namespace

bool EnumeratedCode::contains(const Vector& v) const { return std::binary_search(elements.begin(), elements.end(), v); }

EnumeratedCode enumerate_span(const SequenceSpace& space, const std::vector<Vector>& generators, Int bound) {
    const Int cap = effective(bound);
    const FiniteAbelianGroup& flat = space.flat();
    std::set<Vector> seen{flat.zero()};
    std::deque<Vector> queue{flat.zero()};
    while (!queue.empty()) {
        const Vector x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Vector y = flat.add(x, g);
            if (seen.insert(y).second) {
                if (static_cast<Int>(seen.size()) > cap)
                    throw BoundExceeded("oracle: enumeration exceeds bound " + std::to_string(cap));
                queue.push_back(std::move(y));
            }
        }
    }
    return from_set(space, std::move(seen));
}

EnumeratedCode enumerate(const BlockCode& code, Int bound) { return enumerate_span(code.space(), code.basis(), bound); }

EnumeratedCode enumerate_ambient(const SequenceSpace& space, Int bound) {
    std::vector<Vector> units;
    const FiniteAbelianGroup& flat = space.flat();
    for (std::size_t j = 0; j < flat.rank(); ++j) {
        Vector e = flat.zero();
        e[j] = flat.moduli()[j] > 1 ? 1 : 0;
        units.push_back(std::move(e));
    }
    return enumerate_span(space, units, bound);
}

bool same_elements(const BlockCode& code, const EnumeratedCode& e) {
    if (!(code.space() == e.space) || code.cardinality() != static_cast<Int>(e.size())) return false;
    return std::all_of(e.elements.begin(), e.elements.end(), [&](const Vector& v) { return code.contains(v); });
}

std::vector<std::vector<Vector>> all_subgroups(const SequenceSpace& space, Int bound) {
    const FiniteAbelianGroup& flat = space.flat();
    const EnumeratedCode group = enumerate_ambient(space, bound);
    std::map<std::vector<Vector>, std::vector<Vector>> found;
    std::deque<std::vector<Vector>> queue;
    found[{flat.zero()}] = {};
    queue.push_back({flat.zero()});
    while (!queue.empty()) {
        const std::vector<Vector> current = std::move(queue.front());
        queue.pop_front();
        const std::vector<Vector> gens = found[current];
        const std::set<Vector> members(current.begin(), current.end());
        for (const auto& g : group.elements) {
            if (members.count(g)) continue;
            std::set<Vector> next;
            Vector multiple = flat.zero();
            do {
                for (const auto& s : current) next.insert(flat.add(s, multiple));
                multiple = flat.add(multiple, g);
            } while (!members.count(multiple));
            std::vector<Vector> key(next.begin(), next.end());
            if (found.count(key)) continue;
            std::vector<Vector> extended = gens;
            extended.push_back(g);
            found.emplace(key, std::move(extended));
            queue.push_back(std::move(key));
        }
    }
    std::vector<std::vector<Vector>> out;
    for (auto& [elements, gens] : found) out.push_back(gens);
    return out;
}

EnumeratedCode reachable_set(const EnumeratedCode& code, std::size_t k, std::size_t window) {
    const SequenceSpace& space = code.space;
    std::set<Vector> out;
    for (const auto& c : code.elements)
        for (const auto& w : code.elements)
            if (vanishes_on(space, w, 0, k) && agree_on(space, w, c, k + window, space.horizon())) {
                out.insert(c);
                break;
            }
    return from_set(space, std::move(out));
}

EnumeratedCode consistency_set(const EnumeratedCode& code, std::size_t k, std::size_t window) {
    const SequenceSpace& space = code.space;
    const std::size_t end = std::min(space.horizon(), k + window + 1);
    std::set<Vector> seen;
    for (const auto& c : code.elements) seen.insert(restrict_to(space, c, k, end));
    std::set<Vector> out;
    for (const auto& x : enumerate_ambient(space).elements)
        if (seen.count(restrict_to(space, x, k, end))) out.insert(x);
    return from_set(space, std::move(out));
}

EnumeratedCode controllable_subcode(const EnumeratedCode& code, std::size_t window) {
    EnumeratedCode out = code;
    for (std::size_t k = 0; k < code.space.horizon(); ++k) out = intersect_sets(out, reachable_set(code, k, window));
    return out;
}

EnumeratedCode observable_supercode(const EnumeratedCode& code, std::size_t window) {
    EnumeratedCode out = enumerate_ambient(code.space);
    for (std::size_t k = 0; k < code.space.horizon(); ++k) out = intersect_sets(out, consistency_set(code, k, window));
    return out;
}

std::vector<std::size_t> control_lengths(const EnumeratedCode& code) {
    const std::size_t n = code.space.horizon();
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t l = 0;
        while (k + l < n && reachable_set(code, k, l).size() != code.size()) ++l;
        out.push_back(l);
    }
    return out;
}

std::size_t control_index(const EnumeratedCode& code) {
    const auto lengths = control_lengths(code);
    return lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
}

std::size_t observe_index(const EnumeratedCode& code) {
    const std::size_t n = code.space.horizon();
    std::size_t l = 0;
    while (l + 1 < n && observable_supercode(code, l).size() != code.size()) ++l;
    return l;
}

std::vector<std::size_t> order_profile(const EnumeratedCode& code) {
    const SequenceSpace& space = code.space;
    const FiniteAbelianGroup& flat = space.flat();
    const std::size_t total = space.horizon();
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l <= total; ++l) {
        std::size_t n = l;
        for (; n < total; ++n) {
            std::vector<const Vector*> heads;
            for (const auto& c : code.elements)
                if (vanishes_on(space, c, n, total)) heads.push_back(&c);
            bool all = true;
            for (const auto& c : code.elements) {
                Vector truncated = c;
                for (std::size_t j = n < total ? space.offset(n) : c.size(); j < c.size(); ++j) truncated[j] = 0;
                const Int limit = element_order(flat, truncated);
                const bool some = std::any_of(heads.begin(), heads.end(), [&](const Vector* c1) {
                    return agree_on(space, *c1, c, 0, l) && element_order(flat, *c1) <= limit;
                });
                if (!some) {
                    all = false;
                    break;
                }
            }
            if (all) break;
        }
        out.push_back(n);
    }
    return out;
}

EnumeratedCode annihilator(const EnumeratedCode& code) {
    const FiniteAbelianGroup& flat = code.space.flat();
    const Int common = flat.exponent();
    std::set<Vector> out;
    for (const auto& chi : enumerate_ambient(code.space).elements) {
        const bool kills = std::all_of(code.elements.begin(), code.elements.end(), [&](const Vector& x) {
            Int s = 0;
            for (std::size_t j = 0; j < x.size(); ++j) s = (s + x[j] * chi[j] % common * (common / flat.moduli()[j])) % common;
            return s == 0;
        });
        if (kills) out.insert(chi);
    }
    return from_set(code.space, std::move(out));
}

Vector invariant_factors(const EnumeratedCode& code) {
    const FiniteAbelianGroup& flat = code.space.flat();
    std::map<Int, std::vector<int>> exponents;
    Int size = static_cast<Int>(code.size());
    for (Int p = 2; size > 1; ++p) {
        if (size % p != 0) continue;
        while (size % p == 0) size /= p;
        // killed[j] = log_p #{x : p^j x = 0}
        std::vector<int> killed{0};
        for (Int pj = p;; pj *= p) {
            Int count = 0;
            for (const auto& x : code.elements) {
                const Vector y = flat.scale(pj, x);
                count += std::all_of(y.begin(), y.end(), [](Int v) { return v == 0; });
            }
            int log = 0;
            for (Int c = count; c > 1; c /= p) ++log;
            if (log == killed.back()) break;
            killed.push_back(log);
        }
        // cyclic factors of exponent >= j number killed[j] - killed[j-1]
        std::vector<int>& es = exponents[p];
        for (std::size_t j = 1; j < killed.size(); ++j) {
            const int at_least_j = killed[j] - killed[j - 1];
            if (es.size() < static_cast<std::size_t>(at_least_j)) es.resize(at_least_j, 0);
            for (int i = 0; i < at_least_j; ++i) es[i] = static_cast<int>(j);
        }
    }
    std::size_t count = 0;
    for (const auto& [p, es] : exponents) count = std::max(count, es.size());
    Vector out(count, 1);
    for (const auto& [p, es] : exponents)
        for (std::size_t i = 0; i < es.size(); ++i)
            for (int e = 0; e < es[i]; ++e) out[i] *= p;
    std::reverse(out.begin(), out.end());
    return out;
}

bool is_direct_decomposition(const EnumeratedCode& code, const std::vector<Claim>& claims) {
    const SequenceSpace& space = code.space;
    const FiniteAbelianGroup& flat = space.flat();
    std::vector<Int> orders;
    for (const auto& c : claims) {
        if (!flat.contains(c.element) || !code.contains(c.element)) return false;
        if (c.begin > c.end || c.end > space.horizon()) return false;
        if (!vanishes_on(space, c.element, 0, c.begin) || !vanishes_on(space, c.element, c.end, space.horizon()))
            return false;
        orders.push_back(element_order(flat, c.element));
    }
    Int tuples = 1;
    for (Int o : orders) {
        tuples *= o;
        if (tuples > static_cast<Int>(code.size())) return false;
    }
    if (tuples != static_cast<Int>(code.size())) return false;
    std::set<Vector> sums;
    std::vector<Int> a(claims.size(), 0);
    for (Int t = 0; t < tuples; ++t) {
        Vector s = flat.zero();
        for (std::size_t m = 0; m < claims.size(); ++m) s = flat.add(s, flat.scale(a[m], claims[m].element));
        if (!sums.insert(std::move(s)).second) return false;
        for (std::size_t m = 0; m < a.size(); ++m) {
            if (++a[m] < orders[m]) break;
            a[m] = 0;
        }
    }
    return true;
}

EnumeratedCode kernel_window(const FiniteAbelianGroup& symbol, const std::vector<std::vector<Vector>>& checks,
                             std::size_t n, std::size_t extra) {
    const std::size_t total = n + extra;
    const SequenceSpace big = SequenceSpace::uniform(symbol, total);
    const SequenceSpace small = SequenceSpace::uniform(symbol, n);
    const Int common = symbol.exponent();
    auto pair = [&](const Vector& x, const Vector& h) {
        Int s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s = (s + x[j] * h[j] % common * (common / symbol.moduli()[j])) % common;
        return s;
    };
    std::set<Vector> out;
    for (const auto& w : enumerate_ambient(big).elements) {
        bool ok = true;
        for (const auto& h : checks) {
            for (std::size_t k = 0; ok && k + h.size() <= total; ++k) {
                Int s = 0;
                for (std::size_t t = 0; t < h.size(); ++t) s = (s + pair(big.at(w, k + t), h[t])) % common;
                ok = s == 0;
            }
            if (!ok) break;
        }
        if (ok) out.insert(restrict_to(big, w, 0, n));
    }
    return from_set(small, std::move(out));
}

}  // namespace abelcode::oracle
