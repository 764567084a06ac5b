#include "doctest.h"
#include "hew/modarith.hpp"

#include <cstdlib>

using namespace hew;

TEST_CASE("reduce_nonneg definition cases") {
    CHECK(reduce_nonneg(-1, 7) == 6);
    CHECK(reduce_nonneg(7, 7) == 0);
    CHECK(reduce_nonneg(10, 7) == 3);
    CHECK_THROWS_AS(reduce_nonneg(3, 1), ParamError);
}

TEST_CASE("reduce_centered definition cases") {
    CHECK(reduce_centered(6, 7) == -1);
    CHECK(reduce_centered(4, 8) == -4);  // 4 is not in [-4, 4)
    CHECK(reduce_centered(3, 7) == 3);
    CHECK_THROWS_AS(reduce_centered(3, 0), ParamError);
}

TEST_CASE("the two representatives differ by 0 or q") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        BigInt q = 2 + rng.uniform_below(BigInt(1) << 40);
        BigInt z = rng.uniform_below(BigInt(1) << 60) - (BigInt(1) << 59);
        BigInt diff = reduce_nonneg(z, q) - reduce_centered(z, q);
        CHECK((diff == 0 || diff == q));
        CHECK(reduce_nonneg(z, q) >= 0);
        CHECK(reduce_nonneg(z, q) < q);
        CHECK(2 * reduce_centered(z, q) >= -q);
        CHECK(2 * reduce_centered(z, q) < q);
    }
}

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(3, 4, 7) == 4);
    CHECK(mod_pow(123, 0, 77) == 1);
    CHECK(mod_pow(2, 10, 1000) == 24);
}

TEST_CASE("mod_pow agrees with naive repeated multiplication") {
    for (int n = 2; n <= 50; ++n) {
        for (int a = 0; a <= 50; ++a) {
            BigInt naive = 1 % n;
            for (int b = 0; b <= 50; ++b) {
                CHECK(mod_pow(a, b, n) == naive);
                naive = naive * a % n;
            }
        }
    }
}

TEST_CASE("mod_inv") {
    CHECK(mod_inv(3, 7) == 5);
    CHECK(mod_inv(1, 97) == 1);
    CHECK_THROWS_AS(mod_inv(6, 9), NotInvertibleError);

    Rng rng(11);
    int done = 0;
    while (done < 1000) {
        BigInt n = 2 + rng.uniform_below(BigInt(1) << 64);
        BigInt a = rng.uniform_below(n);
        if (gcd(a, n) != 1) {
            continue;
        }
        CHECK(mod_inv(a, n) * a % n == 1);
        ++done;
    }
}

TEST_CASE("gen_prime produces primes of the requested size") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        unsigned bits = 8 + static_cast<unsigned>(trial % 9);
        BigInt p = gen_prime(bits, rng);
        CHECK(mpz_sizeinbase(p.get_mpz_t(), 2) == bits);
        // trial-division oracle, independent of Miller-Rabin
        bool prime = p >= 2;
        for (BigInt d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                prime = false;
                break;
            }
        }
        CHECK(prime);
    }
    CHECK(gen_prime(2, rng) == 3);
    CHECK_THROWS_AS(gen_prime(1, rng), ParamError);
}

TEST_CASE("gen_prime is seed-deterministic") {
    Rng a(42), b(42);
    CHECK(gen_prime(16, a) == gen_prime(16, b));
}

TEST_CASE("uniform sampling stays in range") {
    Rng rng(5);
    BigInt q = 1000003;
    for (int i = 0; i < 10000; ++i) {
        BigInt v = rng.uniform_below(q);
        CHECK(v >= 0);
        CHECK(v < q);
    }
}

TEST_CASE("gaussian sampling: degenerate, cap, and empirical mean") {
    Rng rng(5);
    CHECK(rng.gaussian(0.0) == 0);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        long e = rng.gaussian(3.2);
        CHECK(std::abs(e) <= 6.0 * 3.2);
        sum += static_cast<double>(e);
    }
    CHECK(std::abs(sum / 10000.0) < 0.2);
}
