#include "abelcode/engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abelcode {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b);
}

Int lcm_of(std::span<const Int> values) {
    Int l = 1;
    for (Int v : values) l = lcm(l, v);
    return l;
}

Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m) {
    __int128 p = static_cast<__int128>(a) * b;
    p %= m;
    if (p < 0) p += m;
    return static_cast<Int>(p);
}

Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in group arithmetic");
    return out;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int valuation(Int n, Int p) {
    int e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

namespace {

struct Bezout {
    Int g, s, t;
};

// g = s*a + t*b for a, b >= 0.
Bezout gcdex(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    return {old_r, old_s, old_t};
}

Int inverse_mod(Int a, Int m) {
    if (m == 1) return 0;
    auto [g, s, t] = gcdex(mod(a, m), m);
    if (g != 1) throw std::logic_error("inverse_mod: not a unit");
    return mod(s, m);
}

// Unit u modulo n with u*a == gcd(a, n) (mod n).
Int normalizing_unit(Int a, Int n) {
    Int g = gcd(a, n);
    Int reduced_mod = n / g;
    Int c = inverse_mod(a / g, reduced_mod);
    for (Int u = c;; u += reduced_mod) {
        if (gcd(u, n) == 1) return mod(u, n);
    }
}

bool is_zero(std::span<const Int> v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// a := s*a + t*b, b := u*a + v*b (mod n), simultaneously.
void combine_rows(Vector& a, Vector& b, Int s, Int t, Int u, Int v, Int n) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        Int x = a[k], y = b[k];
        a[k] = mod(mul_mod(s, x, n) + mul_mod(t, y, n), n);
        b[k] = mod(mul_mod(u, x, n) + mul_mod(v, y, n), n);
    }
}

void axpy(Vector& target, Int factor, const Vector& row, Int n) {
    if (factor == 0) return;
    for (std::size_t k = 0; k < target.size(); ++k) target[k] = mod(target[k] + mul_mod(factor, row[k], n), n);
}

struct HowellRows {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};

// Howell form over the single ring Z/n. Entries must already be reduced.
HowellRows howell_single_ring(std::vector<Vector> pool, std::size_t ncols, Int n) {
    HowellRows out;
    if (n == 1) return out;
    std::erase_if(pool, [](const Vector& r) { return is_zero(r); });
    for (std::size_t j = 0; j < ncols && !pool.empty(); ++j) {
        std::optional<Vector> pivot;
        std::vector<Vector> rest;
        rest.reserve(pool.size() + 1);
        for (auto& row : pool) {
            if (row[j] == 0) {
                rest.push_back(std::move(row));
                continue;
            }
            if (!pivot) {
                pivot = std::move(row);
                continue;
            }
            Int a = (*pivot)[j], b = row[j];
            auto [g, s, t] = gcdex(a, b);
            combine_rows(*pivot, row, mod(s, n), mod(t, n), mod(-(b / g), n), mod(a / g, n), n);
            if (!is_zero(row)) rest.push_back(std::move(row));
        }
        if (pivot) {
            Vector& p = *pivot;
            Int unit = normalizing_unit(p[j], n);
            for (auto& x : p) x = mul_mod(x, unit, n);
            Int d = p[j];
            Vector annihilated(p.size());
            for (std::size_t k = 0; k < p.size(); ++k) annihilated[k] = mul_mod(n / d, p[k], n);
            if (!is_zero(annihilated)) rest.push_back(std::move(annihilated));
            for (auto& above : out.rows) axpy(above, mod(-(above[j] / d), n), p, n);
            out.rows.push_back(std::move(p));
            out.pivots.push_back(j);
        }
        pool = std::move(rest);
    }
    return out;
}

Vector column_scales(const Vector& moduli, Int exponent) {
    Vector s(moduli.size());
    for (std::size_t j = 0; j < moduli.size(); ++j) s[j] = exponent / moduli[j];
    return s;
}

}  // namespace

ResidueMatrix::ResidueMatrix(Vector moduli) : moduli_(std::move(moduli)) {
    for (Int m : moduli_)
        if (m < 1) throw std::invalid_argument("ResidueMatrix: moduli must be >= 1");
}

ResidueMatrix::ResidueMatrix(Vector moduli, std::vector<Vector> rows) : ResidueMatrix(std::move(moduli)) {
    for (const auto& r : rows) {
        if (r.size() != moduli_.size())
            throw std::invalid_argument("ResidueMatrix: row length " + std::to_string(r.size()) + " != " +
                                        std::to_string(moduli_.size()) + " columns");
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] < 0 || r[j] >= moduli_[j])
                throw std::invalid_argument("ResidueMatrix: entry " + std::to_string(r[j]) + " outside Z/" +
                                            std::to_string(moduli_[j]));
    }
    rows_ = std::move(rows);
}

ResidueMatrix ResidueMatrix::reduced(Vector moduli, std::vector<Vector> rows) {
    for (auto& r : rows) {
        if (r.size() != moduli.size()) throw std::invalid_argument("ResidueMatrix: row length mismatch");
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (moduli[j] < 1) throw std::invalid_argument("ResidueMatrix: moduli must be >= 1");
            r[j] = mod(r[j], moduli[j]);
        }
    }
    return ResidueMatrix(std::move(moduli), std::move(rows));
}

Int ResidueMatrix::exponent() const { return lcm_of(moduli_); }

ResidueMatrix howell_form(const ResidueMatrix& m) {
    const Int n = m.exponent();
    const Vector scale = column_scales(m.moduli(), n);
    std::vector<Vector> embedded;
    embedded.reserve(m.row_count());
    for (const auto& r : m.rows()) {
        Vector e(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) e[j] = mul_mod(r[j], scale[j], n);
        embedded.push_back(std::move(e));
    }
    auto h = howell_single_ring(std::move(embedded), m.cols(), n);
    for (auto& r : h.rows)
        for (std::size_t j = 0; j < r.size(); ++j) r[j] /= scale[j];
    return ResidueMatrix(m.moduli(), std::move(h.rows));
}

std::vector<std::size_t> pivot_columns(const ResidueMatrix& howell) {
    std::vector<std::size_t> out;
    out.reserve(howell.row_count());
    for (const auto& r : howell.rows()) {
        auto it = std::find_if(r.begin(), r.end(), [](Int x) { return x != 0; });
        out.push_back(static_cast<std::size_t>(it - r.begin()));
    }
    return out;
}

Vector pivot_orders(const ResidueMatrix& howell) {
    Vector out;
    auto piv = pivot_columns(howell);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        Int m = howell.moduli()[piv[i]];
        out.push_back(m / gcd(howell.rows()[i][piv[i]], m));
    }
    return out;
}

std::optional<Vector> howell_coordinates(const ResidueMatrix& howell, std::span<const Int> v) {
    if (v.size() != howell.cols()) throw std::invalid_argument("howell_coordinates: length mismatch");
    const auto& moduli = howell.moduli();
    Vector rest(v.begin(), v.end());
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = mod(rest[j], moduli[j]);
    auto piv = pivot_columns(howell);
    Vector coeffs(howell.row_count(), 0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        const auto& row = howell.rows()[i];
        std::size_t p = piv[i];
        Int d = row[p];
        if (rest[p] % d != 0) return std::nullopt;
        Int q = rest[p] / d;
        coeffs[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = mod(rest[j] - mul_mod(q, row[j], moduli[j]), moduli[j]);
    }
    if (!is_zero(rest)) return std::nullopt;
    return coeffs;
}

bool howell_contains(const ResidueMatrix& howell, std::span<const Int> v) {
    return howell_coordinates(howell, v).has_value();
}

Vector invariant_factors_from_cyclic_orders(std::span<const Int> orders) {
    std::map<Int, std::vector<int>> by_prime;
    for (Int o : orders) {
        if (o < 1) throw std::invalid_argument("cyclic order must be positive");
        for (auto [p, e] : factorize(o)) by_prime[p].push_back(e);
    }
    std::size_t count = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.rbegin(), es.rend());
        count = std::max(count, es.size());
    }
    Vector out(count, 1);
    for (const auto& [p, es] : by_prime)
        for (std::size_t k = 0; k < es.size(); ++k)
            for (int e = 0; e < es[k]; ++e) out[k] = checked_mul(out[k], p);
    std::reverse(out.begin(), out.end());
    return out;
}

Vector cokernel_invariants_mod(const std::vector<Vector>& relations, std::size_t cols, Int modulus) {
    if (modulus < 1) throw std::invalid_argument("cokernel_invariants_mod: modulus must be >= 1");
    std::vector<Vector> a;
    for (const auto& r : relations) {
        if (r.size() != cols) throw std::invalid_argument("cokernel_invariants_mod: row length mismatch");
        Vector x(cols);
        for (std::size_t j = 0; j < cols; ++j) x[j] = mod(r[j], modulus);
        a.push_back(std::move(x));
    }
    const Int n = modulus;
    Vector cyclic;
    std::size_t t = 0;
    for (; t < cols && t < a.size(); ++t) {
        // Diagonalize position t. The pivot is an entry of least gcd with n, scaled by a unit to
        // that gcd d. Entries divisible by d are cleared directly; any other entry combines with
        // the pivot into a proper divisor of d, so each restart strictly lowers the pivot.
        bool cleared = false;
        while (!cleared) {
            std::size_t pi = a.size(), pj = cols;
            Int best = n + 1;
            for (std::size_t i = t; i < a.size(); ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && gcd(a[i][j], n) < best) {
                        best = gcd(a[i][j], n);
                        pi = i;
                        pj = j;
                    }
            if (pi == a.size()) break;
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);
            const Int unit = normalizing_unit(a[t][t], n);
            for (auto& x : a[t]) x = mul_mod(x, unit, n);
            const Int d = a[t][t];
            cleared = true;
            for (std::size_t i = t + 1; i < a.size() && cleared; ++i) {
                const Int y = a[i][t];
                if (y == 0) continue;
                if (y % d == 0) {
                    axpy(a[i], mod(-(y / d), n), a[t], n);
                } else {
                    auto [g, s, tt] = gcdex(d, y);
                    combine_rows(a[t], a[i], mod(s, n), mod(tt, n), mod(-(y / g), n), mod(d / g, n), n);
                    cleared = false;
                }
            }
            for (std::size_t j = t + 1; j < cols && cleared; ++j) {
                const Int y = a[t][j];
                if (y == 0) continue;
                if (y % d == 0) {
                    const Int q = mod(-(y / d), n);
                    for (auto& row : a) row[j] = mod(row[j] + mul_mod(q, row[t], n), n);
                } else {
                    auto [g, s, tt] = gcdex(d, y);
                    const Int s1 = mod(s, n), t1 = mod(tt, n), u1 = mod(-(y / g), n), v1 = mod(d / g, n);
                    for (auto& row : a) {
                        const Int c0 = row[t], c1 = row[j];
                        row[t] = mod(mul_mod(s1, c0, n) + mul_mod(t1, c1, n), n);
                        row[j] = mod(mul_mod(u1, c0, n) + mul_mod(v1, c1, n), n);
                    }
                    cleared = false;
                }
            }
        }
        if (a[t][t] == 0 && !cleared) break;
        cyclic.push_back(a[t][t] == 0 ? n : gcd(a[t][t], n));
    }
    for (; t < cols; ++t) cyclic.push_back(n);
    Vector nontrivial;
    for (Int c : cyclic)
        if (c > 1) nontrivial.push_back(c);
    return invariant_factors_from_cyclic_orders(nontrivial);
}

Vector smith_diagonal(const std::vector<Vector>& integer_matrix) {
    std::vector<Vector> a = integer_matrix;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("smith_diagonal: ragged matrix");
    auto add = [](Int x, Int y) {
        Int out;
        if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("smith_diagonal: overflow");
        return out;
    };
    auto lin = [&](Int s, Int x, Int t, Int y) { return add(checked_mul(s, x), checked_mul(t, y)); };
    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    std::swap(a[t], a[i]);
                    for (auto& row : a) std::swap(row[t], row[j]);
                    found = true;
                }
        if (!found) break;
        for (bool dirty = true; dirty;) {
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int x = a[t][t], y = a[i][t];
                auto [g, s, tt] = gcdex(std::abs(x), std::abs(y));
                if (x < 0) s = -s;
                if (y < 0) tt = -tt;
                Int u = -(y / g), v = x / g;
                for (std::size_t k = 0; k < cols; ++k) {
                    Int p = a[t][k], q = a[i][k];
                    a[t][k] = lin(s, p, tt, q);
                    a[i][k] = lin(u, p, v, q);
                }
            }
            dirty = false;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int x = a[t][t], y = a[t][j];
                auto [g, s, tt] = gcdex(std::abs(x), std::abs(y));
                if (x < 0) s = -s;
                if (y < 0) tt = -tt;
                Int u = -(y / g), v = x / g;
                for (std::size_t k = 0; k < rows; ++k) {
                    Int p = a[k][t], q = a[k][j];
                    a[k][t] = lin(s, p, tt, q);
                    a[k][j] = lin(u, p, v, q);
                }
                dirty = true;
            }
            if (dirty) {
                bool column_clean = true;
                for (std::size_t i = t + 1; i < rows; ++i) column_clean &= a[i][t] == 0;
                dirty = !column_clean;
            }
        }
    }
    Vector d(diag);
    for (std::size_t t = 0; t < diag; ++t) d[t] = std::abs(a[t][t]);
    // Restore the divisibility chain: (x, y) -> (gcd, lcm) is an equivalence on diagonals.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < diag; ++i)
            for (std::size_t j = i + 1; j < diag; ++j) {
                Int x = d[i], y = d[j];
                if (x == 0 && y != 0) {
                    std::swap(d[i], d[j]);
                    changed = true;
                } else if (x != 0 && y != 0 && y % x != 0) {
                    Int g = gcd(x, y);
                    d[j] = lcm(x, y);
                    d[i] = g;
                    changed = true;
                }
            }
    }
    return d;
}

Vector quotient_invariants(const ResidueMatrix& larger, const ResidueMatrix& smaller) {
    if (larger.moduli() != smaller.moduli()) throw std::invalid_argument("quotient_invariants: moduli mismatch");
    const ResidueMatrix h = howell_form(larger);
    const Vector orders = pivot_orders(h);
    const std::size_t s = h.row_count();
    std::vector<Vector> relations;
    for (std::size_t i = 0; i < s; ++i) {
        Vector multiple(h.cols());
        for (std::size_t j = 0; j < h.cols(); ++j) multiple[j] = mul_mod(orders[i], h.rows()[i][j], h.moduli()[j]);
        auto c = howell_coordinates(h, multiple);
        if (!c) throw std::logic_error("quotient_invariants: Howell basis not closed");
        Vector rel(s);
        for (std::size_t k = 0; k < s; ++k) rel[k] = -(*c)[k];
        rel[i] += orders[i];
        relations.push_back(std::move(rel));
    }
    for (const auto& r : smaller.rows()) {
        auto c = howell_coordinates(h, r);
        if (!c) throw std::invalid_argument("quotient_invariants: subgroup not contained in the larger group");
        relations.push_back(std::move(*c));
    }
    if (s == 0) return {};
    return cokernel_invariants_mod(relations, s, h.exponent());
}

Vector smith_invariants(const ResidueMatrix& m) { return quotient_invariants(m, ResidueMatrix(m.moduli())); }

std::optional<CongruenceSolution> solve_congruence_system(const ResidueMatrix& a, std::span<const Int> b) {
    if (b.size() != a.cols())
        throw std::invalid_argument("solve_congruence_system: right-hand side has " + std::to_string(b.size()) +
                                    " entries, system has " + std::to_string(a.cols()) + " columns");
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] < 0 || b[j] >= a.moduli()[j])
            throw std::invalid_argument("solve_congruence_system: right-hand side entry out of range");
    const Int n = a.exponent();
    const std::size_t cols = a.cols();
    const std::size_t r = a.row_count();
    const Vector scale = column_scales(a.moduli(), n);
    std::vector<Vector> augmented;
    for (std::size_t i = 0; i < r; ++i) {
        Vector row(cols + r, 0);
        for (std::size_t j = 0; j < cols; ++j) row[j] = mul_mod(a.rows()[i][j], scale[j], n);
        row[cols + i] = mod(1, n);
        augmented.push_back(std::move(row));
    }
    auto h = howell_single_ring(std::move(augmented), cols + r, n);
    Vector rest(cols + r, 0);
    for (std::size_t j = 0; j < cols; ++j) rest[j] = mul_mod(b[j], scale[j], n);
    std::vector<Vector> kernel_rows;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        const std::size_t p = h.pivots[i];
        const auto& row = h.rows[i];
        if (p >= cols) {
            kernel_rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(cols), row.end());
            continue;
        }
        Int d = row[p];
        if (rest[p] % d != 0) return std::nullopt;
        axpy(rest, mod(-(rest[p] / d), n), row, n);
    }
    if (n > 1 && !is_zero(std::span<const Int>(rest).first(cols))) return std::nullopt;
    Vector x(r, 0);
    if (n > 1)
        for (std::size_t i = 0; i < r; ++i) x[i] = mod(-rest[cols + i], n);
    return CongruenceSolution{std::move(x), howell_form(ResidueMatrix(Vector(r, n), std::move(kernel_rows)))};
}

std::string format_vector(std::span<const Int> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace abelcode
