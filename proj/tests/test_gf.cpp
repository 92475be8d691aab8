#include "brauer/gf.hpp"

#include <doctest.h>

using namespace brauer::gf;

TEST_CASE("prime checks") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("modular inverse") {
    for (long long p : {2, 3, 5, 7})
        for (std::uint32_t a = 1; a < p; ++a)
            CHECK(static_cast<long long>(inverse(a, p)) * a % p == 1);
}

TEST_CASE("rank and nullspace over F_2") {
    FpMat m(2, 3, 4);
    // rows: 1101, 0111, 1010
    std::uint32_t rows[3][4] = {{1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c)
            m.at(r, c) = rows[r][c];
    CHECK(m.rank() == 2); // row3 = row1 + row2
    auto ns = m.nullspace();
    CHECK(static_cast<int>(ns.size()) == 4 - 2);
    for (const auto& v : ns)
        for (int r = 0; r < 3; ++r) {
            std::uint32_t dot = 0;
            for (int c = 0; c < 4; ++c)
                dot ^= rows[r][c] & v[c];
            CHECK(dot == 0);
        }
}

TEST_CASE("rank over F_3") {
    FpMat m(3, 2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 1; // not a multiple of row 0 mod 3: 2*(1,2) = (2,1) -- it is!
    CHECK(m.rank() == 1);
    m.at(1, 1) = 2;
    CHECK(m.rank() == 2);
}

TEST_CASE("row space with column priority") {
    // prefer eliminating the last column first
    RowSpace rs(5, std::vector<int>{2, 1, 0});
    CHECK(rs.add({1, 0, 2}));
    CHECK(rs.is_pivot(2));
    CHECK(rs.add({0, 1, 1}));
    CHECK_FALSE(rs.add({2, 1, 0})); // 2*r1 - ... dependent: 2*(1,0,2)+(0,1,1)*? let's check: residue must vanish
    CHECK(rs.dim() == 2);
    CHECK(rs.contains({1, 0, 2}));
    CHECK(rs.contains({2, 3, 2})); // 2*(1,0,2) + 3*(0,1,1) = (2,3,7) = (2,3,2) mod 5
    CHECK_FALSE(rs.contains({1, 0, 0}));
}
