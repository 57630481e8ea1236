#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ecsf/compositions.hpp"

using namespace ecsf;

TEST_CASE("construction and parsing") {
    CHECK(Composition::parse("1,2,3") == Composition{1, 2, 3});
    CHECK(Composition::parse(" 2 , 1 ") == Composition{2, 1});
    CHECK(Composition::parse("").empty());
    CHECK_THROWS_AS(Composition::parse("0,1"), parse_error);
    CHECK_THROWS_AS(Composition::parse("1,x"), parse_error);
    CHECK_THROWS_AS(Composition({1, 0}), domain_error);
    CHECK_THROWS_AS(Partition({1, 2}), domain_error);
    CHECK(Composition{1, 2, 3}.str() == "(1,2,3)");
    CHECK(Composition{3, 1, 2}.size() == 6);
}

TEST_CASE("subset bijection") {
    Composition a{1, 2, 1};
    CHECK(set_of(a) == std::set<int>{1, 3});
    CHECK(from_set({1, 3}, 4) == a);
    CHECK(set_of(Composition{4}).empty());
    for (const Composition& c : compositions_of(6))
        CHECK(from_set(set_of(c), 6) == c);
    CHECK_THROWS_AS(from_set({5}, 4), domain_error);
}

TEST_CASE("complement and reversal") {
    // complement flips which of 1..n-1 are break points
    CHECK(complement(Composition{2, 3, 1}) == Composition{1, 2, 1, 2});
    CHECK(complement(Composition{1, 1, 1}) == Composition{3});
    CHECK(complement(Composition{4}) == Composition{1, 1, 1, 1});
    CHECK(reversal(Composition{1, 2, 3}) == Composition{3, 2, 1});
    for (const Composition& c : compositions_of(7)) {
        CHECK(complement(complement(c)) == c);
        CHECK(reversal(reversal(c)) == c);
        CHECK(complement(reversal(c)) == reversal(complement(c)));
    }
}

TEST_CASE("concatenation operators") {
    CHECK(concat(Composition{1, 2}, Composition{3}) == Composition{1, 2, 3});
    CHECK(near_concat(Composition{1, 2}, Composition{1, 2}) == Composition{1, 3, 2});
    CHECK(near_concat(Composition{2}, Composition{2}) == Composition{4});
    CHECK_THROWS_AS(near_concat(Composition{}, Composition{1}), domain_error);
}

TEST_CASE("coarsening order") {
    CHECK(coarsens(Composition{3, 1}, Composition{1, 2, 1}));
    CHECK(coarsens(Composition{4}, Composition{1, 2, 1}));
    CHECK_FALSE(coarsens(Composition{2, 2}, Composition{1, 2, 1}));
    CHECK_FALSE(coarsens(Composition{3}, Composition{1, 2, 1}));

    auto cs = coarsenings(Composition{1, 2, 1});
    CHECK(cs.size() == 4);
    for (const Composition& c : cs) CHECK(coarsens(c, Composition{1, 2, 1}));
    std::sort(cs.begin(), cs.end(), canonical_less);
    CHECK(cs == std::vector<Composition>{{4}, {1, 3}, {3, 1}, {1, 2, 1}});

    // every composition of n has 2^(len-1) coarsenings
    for (const Composition& c : compositions_of(6))
        CHECK(coarsenings(c).size() == (size_t{1} << (c.length() - 1)));
}

TEST_CASE("containment") {
    CHECK(contains(Composition{2, 3}, Composition{1, 3}));
    CHECK(contains(Composition{2, 3}, Composition{2, 3}));
    CHECK_FALSE(contains(Composition{2, 3}, Composition{3, 3}));
    CHECK_FALSE(contains(Composition{2, 3, 1}, Composition{2, 3}));
}

TEST_CASE("composition of compositions") {
    CHECK(compose(Composition{1, 2}, Composition{1, 2}) ==
          Composition{1, 2, 1, 3, 2});
    CHECK(compose(Composition{2, 1}, Composition{1, 2}) ==
          Composition{1, 3, 2, 1, 2});
    CHECK(compose(Composition{1, 1}, Composition{2}) == Composition{2, 2});
    CHECK(compose(Composition{3}, Composition{1, 1}) == Composition{1, 2, 2, 1});

    // sizes multiply; len(a o b) = size(a) * (len(b) - 1) + len(a)
    for (const Composition& a : compositions_of(4)) {
        for (const Composition& b : compositions_of(3)) {
            Composition ab = compose(a, b);
            CHECK(ab.size() == a.size() * b.size());
            CHECK(ab.length() == a.size() * (b.length() - 1) + a.length());
        }
    }
}

TEST_CASE("composition is associative with unit (1)") {
    Composition one{1};
    std::vector<Composition> pool;
    for (int n = 1; n <= 3; ++n)
        for (const Composition& c : compositions_of(n)) pool.push_back(c);
    for (const Composition& a : pool) {
        CHECK(compose(a, one) == a);
        CHECK(compose(one, a) == a);
        for (const Composition& b : pool)
            for (const Composition& c : pool)
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("reversal is an antihomomorphism for composition") {
    for (const Composition& a : compositions_of(3))
        for (const Composition& b : compositions_of(3))
            CHECK(reversal(compose(a, b)) == compose(reversal(a), reversal(b)));
}

TEST_CASE("trivial factorizations") {
    CHECK(is_trivial_factorization(Composition{1}, Composition{3, 1}));
    CHECK(is_trivial_factorization(Composition{3, 1}, Composition{1}));
    CHECK(is_trivial_factorization(Composition{2}, Composition{3}));
    CHECK(is_trivial_factorization(Composition{1, 1}, Composition{1, 1, 1}));
    CHECK_FALSE(is_trivial_factorization(Composition{1, 1}, Composition{2}));
    CHECK_FALSE(is_trivial_factorization(Composition{1, 2}, Composition{1, 2}));
}

TEST_CASE("irreducible factorization") {
    auto f = irreducible_factorization(Composition{1, 2, 1, 3, 2});
    CHECK(f == std::vector<Composition>{{1, 2}, {1, 2}});

    // irreducibles factor as themselves
    CHECK(irreducible_factorization(Composition{1, 2}) ==
          std::vector<Composition>{{1, 2}});
    CHECK(irreducible_factorization(Composition{1, 1, 1}) ==
          std::vector<Composition>{{1, 1, 1}});
    CHECK(irreducible_factorization(Composition{5}) == std::vector<Composition>{{5}});
    CHECK(irreducible_factorization(Composition{2, 2}) ==
          std::vector<Composition>{{1, 1}, {2}});

    // recomposing the factors gives the composition back, and no adjacent
    // pair composes trivially
    for (int n = 1; n <= 10; ++n) {
        for (const Composition& c : compositions_of(n)) {
            auto factors = irreducible_factorization(c);
            Composition prod = factors[0];
            for (size_t i = 1; i < factors.size(); ++i)
                prod = compose(prod, factors[i]);
            CHECK(prod == c);
            for (size_t i = 0; i + 1 < factors.size(); ++i)
                CHECK_FALSE(is_trivial_factorization(factors[i], factors[i + 1]));
        }
    }
}

TEST_CASE("factorization is unique: same factors from either association") {
    // a o b o c factored from the composed product recovers the merged atoms
    Composition a{1, 2}, b{2, 1}, c{3};
    Composition prod = compose(compose(a, b), c);
    auto f = irreducible_factorization(prod);
    Composition check = f[0];
    for (size_t i = 1; i < f.size(); ++i) check = compose(check, f[i]);
    CHECK(check == prod);
}

TEST_CASE("equivalence and classes") {
    CHECK(equivalent(Composition{1, 2, 1, 3, 2}, Composition{2, 3, 1, 2, 1}));
    CHECK(equivalent(Composition{1, 2}, Composition{2, 1}));
    CHECK_FALSE(equivalent(Composition{2, 1, 3}, Composition{1, 5}));
    CHECK_FALSE(equivalent(Composition{2, 2}, Composition{1, 3}));

    auto cls = equivalence_class(Composition{1, 2, 1, 3, 2});
    CHECK(cls == std::vector<Composition>{{1, 2, 1, 3, 2},
                                          {1, 3, 2, 1, 2},
                                          {2, 1, 2, 3, 1},
                                          {2, 3, 1, 2, 1}});

    // class size is 2^(number of nonsymmetric irreducible factors)
    for (int n = 1; n <= 8; ++n) {
        for (const Composition& c : compositions_of(n)) {
            auto factors = irreducible_factorization(c);
            size_t m = 0;
            for (const Composition& f : factors)
                if (reversal(f) != f) ++m;
            auto k = equivalence_class(c);
            CHECK(k.size() == (size_t{1} << m));
            for (const Composition& d : k) CHECK(equivalent(c, d));
            CHECK(std::find(k.begin(), k.end(), c) != k.end());
            // reversal always lies in the class
            CHECK(std::find(k.begin(), k.end(), reversal(c)) != k.end());
        }
    }
}

TEST_CASE("path counts") {
    CHECK(path_class_count(Composition{1, 2, 1, 3, 2}) == 2);
    CHECK(path_class_count(Composition{2, 1, 1, 2}) == 1); // symmetric
    CHECK(path_class_count(Composition{1, 2}) == 1);
    CHECK(path_class_count(Composition{5}) == 1);
}

TEST_CASE("canonical partition order") {
    auto ps = partitions_of(4);
    CHECK(ps == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(6).size() == 11);
    CHECK(compositions_of(5).size() == 16);
}
