#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"

#include "qls/models.hpp"

using namespace qls;

namespace {

std::map<std::vector<int>, double> term_map(const IsingHamiltonian& h) {
    std::map<std::vector<int>, double> m;
    for (const auto& t : h.terms()) m[t.qubits] = t.coeff;
    return m;
}

}  // namespace

TEST_CASE("h1 matches its definition") {
    auto m = term_map(models::h1());
    REQUIRE(m.size() == 3);
    CHECK(m[{0}] == -2.75);
    CHECK(m[{1}] == -3.25);
    CHECK(m[{0, 1}] == 3.75);
}

TEST_CASE("h2 term-by-term transcription") {
    // Independent literal expansion of the 6-qubit Hamiltonian, written out
    // summand by summand. The Z2 Z4 Z4 Z5 product reduces to Z2 Z5 and then
    // cancels against the -1/8 Z2 Z5 term, so it is absent below.
    std::map<std::vector<int>, double> expected;
    for (int i = 0; i < 6; ++i) expected[{i}] = 0.25;
    expected[{0, 1}] = 0.75;
    expected[{2, 3}] = 0.75;
    expected[{4, 5}] = 0.75;
    expected[{0, 2, 4, 5}] = 0.125;
    expected[{0, 2}] = -0.125;
    expected[{0, 3}] = 0.125;
    expected[{0, 4}] = -0.125;
    expected[{0, 5}] = 0.125;
    expected[{1, 2}] = 0.125;
    expected[{1, 3}] = -0.125;
    expected[{1, 4}] = 0.125;
    expected[{1, 5}] = -0.125;
    expected[{2, 4}] = 0.125;
    expected[{3, 4}] = -0.125;
    expected[{3, 5}] = 0.125;
    for (int i = 2; i <= 5; ++i) expected[{0, 1, i}] = -0.125;
    for (int i = 0; i <= 3; ++i) expected[{i, 4, 5}] = -0.125;
    expected[{0, 2, 3}] = -0.125;
    expected[{1, 2, 3}] = -0.125;
    expected[{2, 3, 4}] = -0.125;
    expected[{2, 3, 5}] = -0.125;

    auto got = term_map(models::h2());
    CHECK(got.size() == 33);
    CHECK(got == expected);
    CHECK(models::h2().offset() == 0.0);
}

TEST_CASE("toy and klocal families") {
    auto t = term_map(models::toy(-1.5, 2.0, 0.25));
    CHECK(t[{0}] == -1.5);
    CHECK(t[{1}] == 2.0);
    CHECK(t[{0, 1}] == 0.25);

    for (int k = 2; k <= 5; ++k) {
        auto h = models::klocal(k);
        CHECK(h.n_qubits() == 6);
        CHECK(h.terms().size() == 7);
        CHECK(max_pauli_weight(h) == k);
    }
    CHECK_THROWS_AS(models::klocal(1), ConfigError);
    CHECK_THROWS_AS(models::klocal(6), ConfigError);
}

TEST_CASE("dense base and boosted variants") {
    auto h6 = models::h6();
    CHECK(h6.terms().size() == 41);  // 6 + 15 + 20
    for (const auto& t : h6.terms()) CHECK(t.coeff == 1.0);

    auto m7 = term_map(models::h7());
    CHECK(m7[{0}] == 25.0);
    CHECK(m7[{1}] == 1.0);
    auto m8 = term_map(models::h8());
    CHECK(m8[{0, 1}] == 25.0);
    CHECK(m8[{0, 2}] == 1.0);
    auto m9 = term_map(models::h9());
    CHECK(m9[{0, 1, 2}] == 25.0);
    CHECK(m9[{0, 1, 3}] == 1.0);
    CHECK(models::h7().terms().size() == 41);
}
