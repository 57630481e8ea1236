#include "ecsf/symfunc.hpp"

#include <algorithm>
#include <mutex>

namespace ecsf {

SymFunc SymFunc::constant(const Rational& c) {
    SymFunc f;
    f.add_term(Partition{}, c);
    return f;
}

Rational SymFunc::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [part, c] : terms_) d = std::max(d, part.size());
    return d;
}

void SymFunc::add_term(const Partition& p, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    for (const auto& [part, c] : other.terms_) add_term(part, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    for (const auto& [part, c] : other.terms_) add_term(part, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [part, v] : terms_) v *= c;
    return *this;
}

static Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

SymFunc& SymFunc::operator*=(const SymFunc& other) {
    SymFunc result;
    for (const auto& [pa, ca] : terms_)
        for (const auto& [pb, cb] : other.terms_)
            result.add_term(merge_parts(pa, pb), ca * cb);
    *this = std::move(result);
    return *this;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [part, c] : terms_) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1 || part.empty()) out += to_string(mag);
        if (!part.empty()) {
            if (mag != 1) out += "*";
            out += "p" + part.str();
        }
    }
    return out;
}

SymFunc p_of(const Partition& l) {
    SymFunc f;
    f.add_term(l, 1);
    return f;
}

// Newton recurrences, memoized per degree.  Returns a copy: the table may
// reallocate under a later call.
static SymFunc newton_table(int n, bool elementary) {
    static std::mutex mtx;
    static std::vector<SymFunc> e_table, h_table;
    std::lock_guard<std::mutex> lock(mtx);
    auto& table = elementary ? e_table : h_table;
    if (table.empty()) table.push_back(SymFunc::constant(1));
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        SymFunc sum;
        for (int i = 1; i <= m; ++i) {
            Rational sign = (elementary && i % 2 == 0) ? -1 : 1;
            sum += sign * (p_of(Partition{i}) * table[static_cast<size_t>(m - i)]);
        }
        sum *= Rational(1, m);
        table.push_back(std::move(sum));
    }
    return table[static_cast<size_t>(n)];
}

SymFunc e_to_p(int n) {
    if (n < 0) throw domain_error("e_to_p requires n >= 0");
    return newton_table(n, true);
}

SymFunc h_to_p(int n) {
    if (n < 0) throw domain_error("h_to_p requires n >= 0");
    return newton_table(n, false);
}

static SymFunc multiplicative(const Partition& l, SymFunc (*gen)(int)) {
    SymFunc f = SymFunc::constant(1);
    for (int part : l.parts()) f *= gen(part);
    return f;
}

SymFunc e_of(const Partition& l) { return multiplicative(l, e_to_p); }
SymFunc h_of(const Partition& l) { return multiplicative(l, h_to_p); }

std::map<Partition, Integer> ribbon_to_h(const Composition& a) {
    if (a.empty()) throw domain_error("ribbon of the empty composition");
    std::map<Partition, Integer> out;
    for (const Composition& b : coarsenings(a)) {
        Integer sign = (a.length() - b.length()) % 2 == 0 ? 1 : -1;
        Partition key = underlying_partition(b);
        out[key] += sign;
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

SymFunc ribbon_to_p(const Composition& a) {
    SymFunc f;
    for (const auto& [part, c] : ribbon_to_h(a)) f += Rational(c) * h_of(part);
    return f;
}

SymFunc omega(const SymFunc& f) {
    SymFunc out;
    for (const auto& [part, c] : f.terms()) {
        Rational sign = (part.size() - part.length()) % 2 == 0 ? 1 : -1;
        out.add_term(part, sign * c);
    }
    return out;
}

std::map<Partition, Rational> to_h_basis(const SymFunc& f) {
    // h_mu expands in p as (1/prod mu_i) p_mu plus strictly longer
    // partitions, so peeling the shortest remaining term is a forward
    // substitution.
    std::map<Partition, Rational> coeffs;
    SymFunc residual = f;
    while (!residual.is_zero()) {
        const auto& [mu, c] = *residual.terms().begin(); // minimal length first
        Rational pivot = 1;
        for (int part : mu.parts()) pivot /= part;
        Rational d = c / pivot;
        coeffs[mu] = d;
        residual -= d * (mu.empty() ? SymFunc::constant(1) : h_of(mu));
    }
    return coeffs;
}

SymFunc U_map(const SymFunc& f) {
    SymFunc out;
    for (const auto& [part, c] : to_h_basis(f)) out.add_term(part, c);
    return out;
}

SymFunc U_inverse(const SymFunc& f) {
    SymFunc out;
    for (const auto& [part, c] : f.terms())
        out += c * (part.empty() ? SymFunc::constant(1) : h_of(part));
    return out;
}

Rational evaluate_all_ones(const SymFunc& f, const Integer& k) {
    if (k < 0) throw domain_error("evaluation point must be nonnegative");
    Rational total = 0;
    for (const auto& [part, c] : f.terms()) {
        Integer pw = 1;
        for (int i = 0; i < part.length(); ++i) pw *= k;
        total += c * pw;
    }
    return total;
}

std::vector<Rational> as_polynomial_in_k(const SymFunc& f) {
    std::vector<Rational> coeffs;
    for (const auto& [part, c] : f.terms()) {
        size_t j = static_cast<size_t>(part.length());
        if (coeffs.size() <= j) coeffs.resize(j + 1, Rational(0));
        coeffs[j] += c;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::map<std::vector<int>, Integer> monomial_oracle(const SymFunc& f, int k) {
    if (k < 1 || k > 4) throw resource_error("monomial oracle supports 1 <= k <= 4");
    if (f.degree() > 10) throw resource_error("monomial oracle supports degree <= 10");
    // accumulate rationally; individual p terms can carry fractional
    // coefficients even when every monomial of f is integral
    std::map<std::vector<int>, Rational> acc;
    for (const auto& [part, c] : f.terms()) {
        // expand p_part over k variables
        std::map<std::vector<int>, Integer> poly;
        poly[std::vector<int>(static_cast<size_t>(k), 0)] = 1;
        for (int piece : part.parts()) {
            std::map<std::vector<int>, Integer> next;
            for (const auto& [expo, m] : poly) {
                for (int var = 0; var < k; ++var) {
                    std::vector<int> e = expo;
                    e[static_cast<size_t>(var)] += piece;
                    next[e] += m;
                }
            }
            poly = std::move(next);
        }
        for (const auto& [expo, m] : poly) acc[expo] += c * m;
    }
    std::map<std::vector<int>, Integer> out;
    for (const auto& [expo, c] : acc)
        if (c != 0) out.emplace(expo, to_integer(c));
    return out;
}

} // namespace ecsf
