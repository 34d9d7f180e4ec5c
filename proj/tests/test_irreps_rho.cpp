#include "oracles.hpp"
#include "sbc/irreps_rho.hpp"
#include "sbc/principal_series.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace sbc;

namespace {

using R = ReducedClassification;

}  // namespace

TEST_CASE("canonical representatives") {
    CHECK(canonical_irrep(4, 5, Sign::plus) == IrrepRho{4, 0, Sign::minus});
    CHECK(canonical_irrep(3, 2, Sign::minus) == IrrepRho{3, 2, Sign::plus});
    CHECK(canonical_irrep(4, 2, Sign::plus) == IrrepRho{4, 2, Sign::plus});
    CHECK_THROWS_AS(canonical_irrep(4, 6, Sign::plus), DomainError);
    CHECK_THROWS_AS(canonical_irrep(4, -1, Sign::plus), DomainError);
    CHECK_THROWS_AS(canonical_irrep(-1, 0, Sign::plus), DomainError);
    CHECK(canonical_irrep(0, 1, Sign::minus) == IrrepRho{0, 0, Sign::plus});
}

TEST_CASE("canonical form is idempotent and respects the isomorphism") {
    for (int n = 1; n <= 12; ++n) {
        for (int ell = 0; ell <= n + 1; ++ell) {
            for (Sign d : {Sign::plus, Sign::minus}) {
                const auto c = canonical_irrep(n, ell, d);
                CHECK(c.is_canonical());
                CHECK(canonical_irrep(c.n, c.ell, c.sign) == c);
                CHECK(canonical_irrep(n, n + 1 - ell, -d) == c);
            }
        }
    }
}

TEST_CASE("flat and sharp subquotients") {
    CHECK(flat_sharp(4, 1, Sign::plus, SubquotientMarker::sharp) == IrrepRho{4, 2, Sign::minus});
    CHECK(flat_sharp(4, 1, Sign::plus, SubquotientMarker::flat) == IrrepRho{4, 1, Sign::plus});
    CHECK(flat_sharp(4, 4, Sign::minus, SubquotientMarker::sharp) == IrrepRho{4, 0, Sign::minus});
    CHECK_THROWS_AS(flat_sharp(4, 5, Sign::plus, SubquotientMarker::flat), DomainError);
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i < n; ++i) {
            for (Sign d : {Sign::plus, Sign::minus}) {
                CHECK(flat_sharp(n, i, d, SubquotientMarker::sharp) == flat_sharp(n, i + 1, -d, SubquotientMarker::flat));
            }
        }
    }
}

TEST_CASE("enumeration") {
    const auto three = irreps_with_rho(3);
    CHECK(three == std::vector<IrrepRho>{{3, 0, Sign::plus},
                                         {3, 0, Sign::minus},
                                         {3, 1, Sign::plus},
                                         {3, 1, Sign::minus},
                                         {3, 2, Sign::plus}});
    CHECK(irreps_with_rho(1).size() == 3);
    CHECK_THROWS_AS(irreps_with_rho(0), DomainError);
    for (int n = 1; n <= 12; ++n) {
        const auto list = irreps_with_rho(n);
        CHECK(list.size() == static_cast<std::size_t>(n + 2));
        CHECK(std::set<IrrepRho>(list.begin(), list.end()).size() == list.size());
        int ds = 0, tp = 0;
        for (const auto& r : list) {
            CHECK(r.is_canonical());
            ds += classify_irrep(r) == R::discrete_series;
            tp += classify_irrep(r) == R::tempered_principal;
        }
        CHECK(ds == (n % 2 == 1 ? 1 : 0));
        CHECK(tp == (n % 2 == 0 ? 2 : 0));
    }
}

TEST_CASE("classification") {
    CHECK(classify_irrep({3, 2, Sign::plus}) == R::discrete_series);
    CHECK(classify_irrep({4, 2, Sign::plus}) == R::tempered_principal);
    CHECK(classify_irrep({4, 2, Sign::minus}) == R::tempered_principal);
    CHECK(classify_irrep({4, 0, Sign::plus}) == R::finite_dimensional);
    CHECK(classify_irrep({4, 1, Sign::minus}) == R::nontempered_unitary);
    CHECK(to_string(R::tempered_principal) == "tempered-principal");
    CHECK_THROWS_AS(classify_irrep({4, 3, Sign::plus}), DomainError);
    CHECK_THROWS_AS(classify_irrep({3, 2, Sign::minus}), DomainError);
}

TEST_CASE("central character on the six irreducibles of SO(5,1)") {
    CHECK_FALSE(central_character_nontrivial({4, 0, Sign::plus}));
    CHECK(central_character_nontrivial({4, 0, Sign::minus}));
    CHECK(central_character_nontrivial({4, 1, Sign::plus}));
    CHECK_FALSE(central_character_nontrivial({4, 1, Sign::minus}));
    CHECK_FALSE(central_character_nontrivial({4, 2, Sign::plus}));
    CHECK(central_character_nontrivial({4, 2, Sign::minus}));
    for (const auto& r : irreps_with_rho(5)) CHECK_FALSE(central_character_nontrivial(r));
}

TEST_CASE("Levi factors") {
    CHECK(aq_levi(4, 1) == std::vector<GroupDescriptor>{{2, 0}, {3, 1}});
    CHECK(aq_levi(3, 2) == std::vector<GroupDescriptor>{{2, 0}, {2, 0}, {0, 1}});
    CHECK(aq_levi(4, 0) == std::vector<GroupDescriptor>{{5, 1}});
    CHECK_THROWS_AS(aq_levi(4, 3), DomainError);
}

TEST_CASE("rho_i against the root system") {
    CHECK(rho_i_vector(4, 1) == std::vector<Rational>{2, 0, 0});
    CHECK(rho_i_vector(3, 2) == std::vector<Rational>{Rational{3, 2}, Rational{1, 2}});
    CHECK(rho_i_vector(4, 0) == std::vector<Rational>{0, 0, 0});
    CHECK_THROWS_AS(rho_i_vector(4, 3), DomainError);
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i <= (n + 1) / 2; ++i) {
            CHECK_MESSAGE(rho_i_vector(n, i) == oracle::rho_i_from_roots(n, i), "n=", n, " i=", i);
        }
    }
}

TEST_CASE("theta-stable parameters") {
    const auto a = theta_stable_parameter({4, 1, Sign::plus});
    CHECK(a.head == std::vector<Rational>{2});
    CHECK(a.tail == LeviCharacter{3, Sign::plus});
    CHECK(to_string(a) == "(2 || chi^{+}_{3,1})");

    const auto b = theta_stable_parameter({3, 2, Sign::plus});
    CHECK(b.head == std::vector<Rational>{Rational{3, 2}, Rational{1, 2}});
    CHECK(b.tail.k == 0);
    CHECK(to_string(b) == "(3/2, 1/2 || chi^{+}_{0,1})");

    const auto c = theta_stable_parameter({4, 0, Sign::minus});
    CHECK(c.head.empty());
    CHECK(to_string(c) == "(|| chi^{-}_{5,1})");

    CHECK(LeviCharacter{0, Sign::plus} == LeviCharacter{0, Sign::minus});
    CHECK_FALSE(LeviCharacter{1, Sign::plus} == LeviCharacter{1, Sign::minus});
    CHECK_THROWS_AS(theta_stable_parameter({4, 4, Sign::plus}), DomainError);

    for (int n = 1; n <= 12; ++n) {
        for (const auto& r : irreps_with_rho(n)) {
            const auto t = theta_stable_parameter(r);
            CHECK(t.head.size() == static_cast<std::size_t>(r.ell));
            for (std::size_t s = 1; s < t.head.size(); ++s) CHECK(t.head[s - 1] - t.head[s] == Rational{1});
            if (!t.head.empty()) CHECK(t.head.front() == Rational{n, 2});
            CHECK(t.tail.k + 2 * r.ell == n + 1);
            if (t.tail.k > 0) CHECK(t.tail.sign == r.sign);
        }
    }
}

TEST_CASE("every irreducible occurs in a composition series") {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& r : irreps_with_rho(n)) {
            bool found = false;
            for (int i = 0; i <= n / 2 && !found; ++i) {
                for (Sign d : {Sign::plus, Sign::minus}) {
                    const auto s = composition_series_at_rho(n, i, d);
                    found = found || s.first == r || s.second == r;
                }
            }
            CHECK_MESSAGE(found, to_string(r));
        }
    }
}
