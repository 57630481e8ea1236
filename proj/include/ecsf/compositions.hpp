#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "ecsf/errors.hpp"

namespace ecsf {

/// A finite ordered list of positive integers, possibly empty.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts)) {}

    /// Parses "1,2,3" (whitespace tolerated, "" is the empty composition).
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    bool operator==(const Composition&) const = default;

    std::string str() const; // "(1,2,3)"

private:
    std::vector<int> parts_;
};

/// A composition with weakly decreasing parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    Composition as_composition() const { return Composition(parts_); }

    bool operator==(const Partition&) const = default;
    // Canonical order: length ascending, then lexicographically descending.
    // This is the row/column order used for all basis matrices.
    std::strong_ordering operator<=>(const Partition& other) const;

    std::string str() const;

private:
    std::vector<int> parts_;
};

// ---- composition calculus ----

std::set<int> set_of(const Composition& a);
Composition from_set(const std::set<int>& s, int n);
Composition complement(const Composition& a);
Composition reversal(const Composition& a);
Partition underlying_partition(const Composition& a);
Composition concat(const Composition& a, const Composition& b);
Composition near_concat(const Composition& a, const Composition& b);

/// a is a coarsening of b (a's parts are sums of adjacent runs of b's parts).
bool coarsens(const Composition& a, const Composition& b);
/// Same length and a_i >= b_i for all i.
bool contains(const Composition& a, const Composition& b);
/// All coarsenings of a, 2^(len-1) of them.
std::vector<Composition> coarsenings(const Composition& a);

/// Composition of compositions (associative).
Composition compose(const Composition& a, const Composition& b);

bool is_trivial_factorization(const Composition& b, const Composition& g);
std::vector<Composition> irreducible_factorization(const Composition& a);
/// Ribbon / weighted-path equality classifier.
bool equivalent(const Composition& a, const Composition& b);
std::vector<Composition> equivalence_class(const Composition& a);
/// Number of weighted paths, up to isomorphism, with the same extended
/// chromatic symmetric function as the path weighted by a.
long long path_class_count(const Composition& a);

/// Deterministic ordering for printed output: size, then length, then lex.
bool canonical_less(const Composition& a, const Composition& b);

std::vector<Partition> partitions_of(int n);   // canonical order
std::vector<Composition> compositions_of(int n);

} // namespace ecsf
