#include "ecsf/compositions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ecsf {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw domain_error("composition parts must be positive");
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw parse_error("bad composition: " + text);
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw parse_error("bad composition: " + text);
        if (v < 1) throw parse_error("composition parts must be positive: " + text);
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

int Composition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

static std::string join_parts(const std::vector<int>& parts) {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::string Composition::str() const { return join_parts(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw domain_error("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
    // lexicographically descending: (3,1) before (2,2)
    for (size_t i = 0; i < parts_.size(); ++i)
        if (auto c = other.parts_[i] <=> parts_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Partition::str() const { return join_parts(parts_); }

std::set<int> set_of(const Composition& a) {
    std::set<int> s;
    int acc = 0;
    for (int i = 0; i + 1 < a.length(); ++i) {
        acc += a[i];
        s.insert(acc);
    }
    return s;
}

Composition from_set(const std::set<int>& s, int n) {
    if (n < 1) throw domain_error("from_set requires n >= 1");
    std::vector<int> parts;
    int prev = 0;
    for (int x : s) {
        if (x < 1 || x > n - 1) throw domain_error("set element outside [n-1]");
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition complement(const Composition& a) {
    if (a.empty()) throw domain_error("complement of the empty composition");
    int n = a.size();
    std::set<int> s = set_of(a), comp;
    for (int i = 1; i < n; ++i)
        if (!s.count(i)) comp.insert(i);
    return from_set(comp, n);
}

Composition reversal(const Composition& a) {
    std::vector<int> parts(a.parts().rbegin(), a.parts().rend());
    return Composition(std::move(parts));
}

Partition underlying_partition(const Composition& a) {
    std::vector<int> parts = a.parts();
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty() || b.empty())
        throw domain_error("near concatenation requires nonempty operands");
    std::vector<int> parts = a.parts();
    parts.back() += b[0];
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

bool coarsens(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return false;
    std::set<int> sa = set_of(a), sb = set_of(b);
    return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

bool contains(const Composition& a, const Composition& b) {
    if (a.length() != b.length()) return false;
    for (int i = 0; i < a.length(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

std::vector<Composition> coarsenings(const Composition& a) {
    std::vector<Composition> out;
    if (a.empty()) {
        out.push_back(a);
        return out;
    }
    std::set<int> break_set = set_of(a);
    std::vector<int> breaks(break_set.begin(), break_set.end());
    int n = a.size();
    size_t k = breaks.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        std::set<int> kept;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) kept.insert(breaks[i]);
        out.push_back(from_set(kept, n));
    }
    return out;
}

Composition compose(const Composition& a, const Composition& b) {
    if (a.empty() || b.empty())
        throw domain_error("compose requires nonempty operands");
    Composition result;
    for (int i = 0; i < a.length(); ++i) {
        Composition power = b;
        for (int j = 1; j < a[i]; ++j) power = near_concat(power, b);
        result = result.empty() ? power : concat(result, power);
    }
    return result;
}

bool is_trivial_factorization(const Composition& b, const Composition& g) {
    if (b.empty() || g.empty())
        throw domain_error("factorization operands must be nonempty");
    Composition one{1};
    if (b == one || g == one) return true;
    if (b.length() == 1 && g.length() == 1) return true;
    auto all_ones = [](const Composition& c) {
        return std::all_of(c.parts().begin(), c.parts().end(),
                           [](int p) { return p == 1; });
    };
    return all_ones(b) && all_ones(g);
}

// Finds some nontrivial two-factorization a = b o g, or returns false.
// Exhaustive over factor pairs; fine at the sizes we handle.
static bool find_nontrivial_split(const Composition& a, Composition& b_out,
                                  Composition& g_out) {
    int n = a.size();
    for (int s = 2; s * 2 <= n; ++s) {
        if (n % s != 0) continue;
        int d = n / s;
        for (const Composition& b : compositions_of(s)) {
            for (const Composition& g : compositions_of(d)) {
                if (is_trivial_factorization(b, g)) continue;
                if (compose(b, g) == a) {
                    b_out = b;
                    g_out = g;
                    return true;
                }
            }
        }
    }
    return false;
}

// Factors that admit only trivial two-factorizations.
static void atomic_factors(const Composition& a, std::vector<Composition>& out) {
    Composition b, g;
    if (find_nontrivial_split(a, b, g)) {
        atomic_factors(b, out);
        atomic_factors(g, out);
    } else {
        out.push_back(a);
    }
}

std::vector<Composition> irreducible_factorization(const Composition& a) {
    if (a.empty()) throw domain_error("factorization of the empty composition");
    std::vector<Composition> factors;
    atomic_factors(a, factors);
    // Merge adjacent pairs that would form a trivial factorization; the merge
    // of two length-1 factors is again length-1, and of two all-ones factors
    // again all-ones, so the result stays atomic.
    bool merged = true;
    while (merged && factors.size() > 1) {
        merged = false;
        for (size_t i = 0; i + 1 < factors.size(); ++i) {
            if (is_trivial_factorization(factors[i], factors[i + 1])) {
                factors[i] = compose(factors[i], factors[i + 1]);
                factors.erase(factors.begin() + static_cast<long>(i) + 1);
                merged = true;
                break;
            }
        }
    }
    return factors;
}

bool equivalent(const Composition& a, const Composition& b) {
    if (a.empty() || b.empty())
        throw domain_error("equivalence is defined for nonempty compositions");
    if (a.size() != b.size()) return false;
    auto fa = irreducible_factorization(a);
    auto fb = irreducible_factorization(b);
    if (fa.size() != fb.size()) return false;
    for (size_t i = 0; i < fa.size(); ++i)
        if (fb[i] != fa[i] && fb[i] != reversal(fa[i])) return false;
    return true;
}

std::vector<Composition> equivalence_class(const Composition& a) {
    auto factors = irreducible_factorization(a);
    std::vector<size_t> asym;
    for (size_t i = 0; i < factors.size(); ++i)
        if (reversal(factors[i]) != factors[i]) asym.push_back(i);
    std::vector<Composition> out;
    for (size_t mask = 0; mask < (size_t{1} << asym.size()); ++mask) {
        std::vector<Composition> chosen = factors;
        for (size_t i = 0; i < asym.size(); ++i)
            if (mask & (size_t{1} << i)) chosen[asym[i]] = reversal(chosen[asym[i]]);
        Composition prod = chosen[0];
        for (size_t i = 1; i < chosen.size(); ++i) prod = compose(prod, chosen[i]);
        out.push_back(prod);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long path_class_count(const Composition& a) {
    if (a == reversal(a)) return 1;
    auto factors = irreducible_factorization(a);
    long long m = 0;
    for (const auto& f : factors)
        if (reversal(f) != f) ++m;
    return 1LL << (m - 1);
}

bool canonical_less(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.length() != b.length()) return a.length() < b.length();
    return a.parts() < b.parts();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (size_t mask = 0; mask < (size_t{1} << (n - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i < n; ++i)
            if (mask & (size_t{1} << (i - 1))) s.insert(i);
        out.push_back(from_set(s, n));
    }
    std::sort(out.begin(), out.end(),
              [](const Composition& a, const Composition& b) {
                  return canonical_less(a, b);
              });
    return out;
}

} // namespace ecsf
