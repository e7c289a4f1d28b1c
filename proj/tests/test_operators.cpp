#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "skewchar/bethe.hpp"
#include "skewchar/characters.hpp"
#include "skewchar/diffops.hpp"
#include "skewchar/enumerate.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/fusion.hpp"
#include "skewchar/tsystems.hpp"

using namespace skewchar;

namespace {

CharPoly sym(const Signature& sig, int i, long c) { return CharPoly::symbol(sig, i, Rat(c)); }

OperatorSeries random_unit_series(std::mt19937_64& rng, const Signature& sig, int order) {
    OperatorSeries s = OperatorSeries::one(sig, order);
    for (int k = 1; k <= order; ++k) s.coeffs[k] = oracle::random_poly(rng, sig, 3, 2);
    return s;
}

bool same_series(const OperatorSeries& a, const OperatorSeries& b) {
    return a.order == b.order && a.coeffs == b.coeffs;
}

bool same_series(const RatOperator& a, const RatOperator& b) {
    if (a.order != b.order) return false;
    for (int k = 0; k <= a.order; ++k)
        if (!(a.coeffs[k] == b.coeffs[k])) return false;
    return true;
}

// x(u) x(u-1) ... x(u-k+1) for a single symbol D(i, 0).
CharPoly falling(const Signature& sig, int i, int k) {
    CharPoly p = CharPoly::constant(sig, 1);
    for (int a = 0; a < k; ++a) p = p * sym(sig, i, -a);
    return p;
}

RatFunc ratfunc(std::initializer_list<long> num, std::initializer_list<long> den) {
    std::vector<Rat> a, b;
    for (long x : num) a.push_back(Rat(x));
    for (long x : den) b.push_back(Rat(x));
    return RatFunc(UPoly(a), UPoly(b));
}

// zeta_1 = (u+1)/u, zeta_2 = (u+3)/(u+1) with the Bethe root t = 1.
BetheData gl11_example(const Rat& root) {
    BetheData d;
    d.sig = {1, 1};
    d.zeta = {ratfunc({1, 1}, {0, 1}), ratfunc({3, 1}, {1, 1})};
    d.roots = {{root}};
    return d;
}

BetheData random_bethe(std::mt19937_64& rng, int m, int n) {
    std::uniform_int_distribution<int> small(-4, 4), count(0, 2);
    BetheData d;
    d.sig = {m, n};
    for (int i = 0; i < m + n; ++i) {
        long a = small(rng), b = small(rng);
        if (a == b) ++a;
        d.zeta.push_back(ratfunc({a, 1}, {b, 1}));
    }
    for (int i = 0; i + 1 < m + n; ++i) {
        d.roots.emplace_back();
        for (int k = count(rng); k > 0; --k) d.roots.back().push_back(make_rat(small(rng), 3) + make_rat(1, 7));
    }
    return d;
}

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace

TEST_SUITE("diffops") {
    TEST_CASE("inverse round trip and associativity") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 10; ++t) {
            Signature sig{1 + t % 2, 1};
            OperatorSeries a = random_unit_series(rng, sig, 4), b = random_unit_series(rng, sig, 4),
                           c = random_unit_series(rng, sig, 4);
            OperatorSeries one = OperatorSeries::one(sig, 4);
            CHECK(same_series(op_mul(a, op_inv(a)), one));
            CHECK(same_series(op_mul(op_inv(a), a), one));
            CHECK(same_series(op_mul(op_mul(a, b), c), op_mul(a, op_mul(b, c))));
        }
        OperatorSeries bad = OperatorSeries::one({1, 0}, 2);
        bad.coeffs[0] = CharPoly::constant({1, 0}, 2);
        CHECK_THROWS_AS(op_inv(bad), NotUnitNormalized);
    }

    TEST_CASE("geometric series") {
        Signature sig{1, 1};
        OperatorSeries a = OperatorSeries::one(sig, 5);
        a.coeffs[1] = -sym(sig, 2, 0);
        OperatorSeries inv = op_inv(a);
        for (int k = 0; k <= 5; ++k) CHECK(inv[k] == falling(sig, 2, k));
    }

    TEST_CASE("Berezinian series by hand") {
        CHECK(hc_berezinian(1, 0, 3)[1] == -sym({1, 0}, 1, 0));
        CHECK(hc_berezinian(1, 0, 3)[2].is_zero());
        for (int k = 0; k <= 4; ++k) CHECK(hc_berezinian(0, 1, 4)[k] == falling({0, 1}, 1, k));
        // (1 - d1 tau)(1 - d2 tau)^{-1}: P_k - d1(u) P_{k-1}(u-1).
        Signature sig{1, 1};
        OperatorSeries b = hc_berezinian(1, 1, 4);
        for (int k = 1; k <= 4; ++k) {
            CharPoly want = falling(sig, 2, k) - sym(sig, 1, 0) * poly_shift(falling(sig, 2, k - 1), Rat(-1));
            CHECK(b[k] == want);
        }
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                if (m + n == 0) continue;
                OperatorSeries s = hc_berezinian(m, n, 4);
                for (int k = 0; k <= 4; ++k)
                    CHECK(s[k] == (k % 2 ? -column_hc(k, Rat(0), {m, n}) : column_hc(k, Rat(0), {m, n})));
            }
    }

    TEST_CASE("Harish-Chandra image of a transfer matrix") {
        Signature sig{1, 1};
        CHECK(hc_transfer(SkewDiagram(Partition{1}), 1, 1) == sym(sig, 1, 0) - sym(sig, 2, 0));
        CHECK(hc_transfer(SkewDiagram(Partition{1, 1}), 1, 1) ==
              -(sym(sig, 1, 0) * sym(sig, 2, -1)) + sym(sig, 2, 0) * sym(sig, 2, -1));
        CHECK_FALSE(hc_transfer(SkewDiagram(Partition{3, 1}, Partition{1}), 1, 1).is_zero());
    }

    TEST_CASE("ratio decomposition at small rank") {
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                if (m + n == 0) continue;
                CAPTURE(m);
                CAPTURE(n);
                RatioReport r = verify_ratio(m, n, m + n + 2);
                for (const auto& c : r.checks) {
                    CAPTURE(c.name);
                    CHECK(c.ok);
                }
                CHECK(verify_center_ratio(m, n).ok);
            }
    }
}

TEST_SUITE("tsystems") {
    TEST_CASE("boundary values") {
        CharPoly one = CharPoly::constant({1, 1}, 1);
        CHECK(classical_T(0, 3, Rat(0), 1, 1) == one);
        CHECK(classical_T(2, 0, Rat(0), 1, 1) == one);
        CHECK(classical_T(-1, 2, Rat(0), 1, 1).is_zero());
        CHECK(classical_T(2, 2, Rat(0), 1, 1).is_zero());
        CHECK(classical_T(2, 1, Rat(0), 1, 1).size() == 2);
    }

    TEST_CASE("classical relation") {
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                if (m + n == 0) continue;
                for (int i = 0; i <= 3; ++i)
                    for (int j = 0; j <= 3; ++j) {
                        if (i == 0 && j == 0) continue;
                        CHECK(verify_classical_tsystem(i, j, m, n).ok);
                    }
            }
    }

    TEST_CASE("extended relation, evaluated at random points") {
        long count = 0;
        for (const auto& d : normalized_skew_shapes(6)) {
            if (!is_prime(d) || d.lambda().part(1) < 2) continue;
            TSystemFamily f = tsystem_family(d);
            for (int m = 1; m <= 2; ++m)
                for (int n = 0; n <= 1; ++n) {
                    CHECK(verify_extended_tsystem(d, m, n).ok);
                    auto v = [](const DSymbol& s) { return oracle::symbol_value(s, 11); };
                    auto K = [&](const SkewDiagram& x) { return oracle::evaluate(q_character(x, m, n), v); };
                    CHECK(K(f.U_plus) * K(f.U_minus) == K(f.U_zero) * K(f.U) + K(f.X) * K(f.Y));
                    ++count;
                }
        }
        CHECK(count > 50);
    }

    TEST_CASE("worked examples") {
        CHECK(verify_extended_tsystem(SkewDiagram(Partition{2, 2, 1}, Partition{1}), 2, 1).ok);
        CHECK(verify_nonprime_product(SkewDiagram(Partition{2, 1, 1}, Partition{1}), 1, 1).ok);
        CHECK(verify_nonprime_product(SkewDiagram(Partition{2, 1, 1}, Partition{1, 1}), 2, 1).ok);
        CHECK_THROWS_AS(verify_extended_tsystem(SkewDiagram(Partition{2, 1, 1}, Partition{1}), 1, 1), NotPrime);
    }
}

TEST_SUITE("bethe") {
    TEST_CASE("rank one example") {
        BetheData d = gl11_example(Rat(1));
        CHECK(d.y(1) == UPoly::from_roots({Rat(1)}));
        CHECK(bae_residual(d, 1, 1) == 0);
        CHECK(bae_satisfied(d));
        BetheData off = gl11_example(Rat(2));
        CHECK(bae_residual(off, 1, 1) != 0);
        CHECK_FALSE(bae_satisfied(off));
        std::vector<std::vector<std::complex<double>>> roots{{{1.0, 0.0}}};
        CHECK(std::abs(bae_residual_numeric(d, roots, 1, 1)) < 1e-12);
        CHECK(verify_factorization(d, 5));
        CHECK(verify_factorization(off, 5));  // holds for any roots
    }

    TEST_CASE("second coefficient without roots") {
        BetheData d;
        d.sig = {1, 1};
        d.zeta = {ratfunc({1, 1}, {0, 1}), ratfunc({3, 1}, {1, 1})};
        d.roots = {{}};
        RatOperator op = build_bethe_operator(d, 3);
        const RatFunc &z1 = d.zeta[0], &z2 = d.zeta[1];
        CHECK(op.coeffs[1] == z2 - z1);
        CHECK(op.coeffs[2] == z2 * z2.shifted(Rat(-1)) - z1 * z2.shifted(Rat(-1)));
    }

    TEST_CASE("purely even data has a trivial odd factor") {
        std::mt19937_64 rng(13);
        BetheData d = random_bethe(rng, 2, 0);
        BetheFactors f = build_factors(d, 4);
        CHECK(same_series(f.D2, RatOperator::one(4)));
        CHECK(same_series(f.D1, build_bethe_operator(d, 4)));
    }

    TEST_CASE("spectra substitution is a ring map") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 10; ++t) {
            BetheData d = random_bethe(rng, 1 + t % 2, 1);
            CharPoly a = oracle::random_poly(rng, d.sig, 3, 2), b = oracle::random_poly(rng, d.sig, 3, 2);
            RatFunc sa = substitute_spectra(a, d), sb = substitute_spectra(b, d);
            CHECK(substitute_spectra(a * b, d) == sa * sb);
            CHECK(substitute_spectra(a + b, d) == sa + sb);
            CHECK(substitute_spectra(CharPoly::symbol(d.sig, 1, Rat(2)), d) == bethe_spectrum(d, 1).shifted(Rat(2)));
        }
    }

    TEST_CASE("substituted Berezinian is the Bethe operator") {
        std::mt19937_64 rng(19);
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                if (m + n == 0) continue;
                BetheData d = random_bethe(rng, m, n);
                CHECK(same_series(substitute_operator(hc_berezinian(m, n, 4), d), build_bethe_operator(d, 4)));
                CHECK(verify_factorization(d, 4));
            }
    }

    TEST_CASE("invalid data") {
        BetheData d = gl11_example(Rat(1));
        d.zeta.pop_back();
        CHECK_THROWS_AS(d.validate(), InvalidArgument);
        BetheData z = gl11_example(Rat(1));
        z.zeta[0] = RatFunc(Rat(0));
        CHECK_THROWS_AS(z.validate(), ZeroSpectral);
        BetheData pole = gl11_example(Rat(0));  // zeta_1 has a pole at 0
        CHECK_THROWS_AS(bae_residual(pole, 1, 1), PoleAtRoot);
    }
}

TEST_SUITE("fusion") {
    TEST_CASE("graded flip") {
        Signature sig{1, 1};
        SuperMatrix p = flip(sig, 2, 1, 2);
        size_t v22 = p.index({2, 2}), v12 = p.index({1, 2}), v21 = p.index({2, 1});
        CHECK(p.at(v22, v22) == -1);
        CHECK(p.at(v21, v12) == 1);
        CHECK(p * p == SuperMatrix::identity(sig, 2));
        CHECK(p == super_flip(sig, 2, 1));
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                if (m + n > 0) CHECK(supertrace(flip({m, n}, 2, 1, 2)) == m - n);
    }

    TEST_CASE("unitarity and the large-argument limit") {
        Signature sig{2, 1};
        Rat u = make_rat(7, 3);
        SuperMatrix prod = r_matrix(sig, 2, 1, 2, u) * r_matrix(sig, 2, 1, 2, -u);
        CHECK(prod == (1 - 1 / (u * u)) * SuperMatrix::identity(sig, 2));
        SuperMatrix diff = r_matrix(sig, 2, 1, 2, Rat(1000000)) - SuperMatrix::identity(sig, 2);
        for (size_t r = 0; r < diff.dim(); ++r)
            for (const auto& [c, v] : diff.row(r)) CHECK(abs_rat(v) <= make_rat(1, 1000000));
    }

    TEST_CASE("two-box fusion operators") {
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                if (m + n == 0) continue;
                Signature sig{m, n};
                SuperMatrix id = SuperMatrix::identity(sig, 2), p = flip(sig, 2, 1, 2);
                SkewDiagram col(Partition{1, 1}), row(Partition{2});
                CHECK(fusion_operator(column_tableau(col), m, n) == id - p);
                CHECK(fusion_operator(row_tableau(row), m, n) == id + p);
                CHECK(Int(static_cast<unsigned long>(rank(id - p))) == count_ssyt(col, m, n));
            }
    }

    TEST_CASE("column fusion is a scaled antisymmetrizer") {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; m + n <= 3; ++n) {
                if (m + n == 0) continue;
                Signature sig{m, n};
                Rat fact = 1;
                for (int k = 1; k <= 3; ++k) {
                    fact *= k;
                    SuperMatrix a = antisymmetrizer(sig, k), s = symmetrizer(sig, k);
                    CHECK(a * a == a);
                    CHECK(s * s == s);
                    SkewDiagram col(Partition(std::vector<int>(k, 1)));
                    CHECK(fusion_operator(column_tableau(col), m, n) == fact * a);
                    if (n == 0) CHECK(static_cast<long>(rank(a)) == oracle::binomial(m, k));
                    if (m == 0) CHECK(static_cast<long>(rank(a)) == oracle::binomial(n + k - 1, k));
                }
            }
    }

    TEST_CASE("weight spaces of the symmetric square") {
        SuperMatrix e = fusion_operator(row_tableau(SkewDiagram(Partition{2})), 1, 1);
        auto dims = weight_space_dims(e);
        std::map<std::vector<int>, size_t> nonzero;
        for (const auto& [w, d] : dims)
            if (d) nonzero[w] = d;
        CHECK(nonzero == std::map<std::vector<int>, size_t>{{{2, 0}, 1}, {{1, 1}, 1}});
    }

    TEST_CASE("reduced words and Yang-Baxter") {
        CHECK(staircase_word(3) == std::vector<int>{1, 2, 1});
        CHECK_THROWS_AS(reduced_word_pairs({1, 1, 2}, 3), InvalidArgument);
        Signature sig{1, 1};
        Rat a = make_rat(1, 2), b = make_rat(-5, 3), c = Rat(4);
        CHECK(r_matrix(sig, 3, 1, 2, a - b) * r_matrix(sig, 3, 1, 3, a - c) * r_matrix(sig, 3, 2, 3, b - c) ==
              r_matrix(sig, 3, 2, 3, b - c) * r_matrix(sig, 3, 1, 3, a - c) * r_matrix(sig, 3, 1, 2, a - b));
        Tableau t = column_tableau(SkewDiagram(Partition{2, 1}));
        CHECK(fusion_operator(t, 1, 1, {1, 2, 1}) == fusion_operator(t, 1, 1, {2, 1, 2}));
    }

    TEST_CASE("supertrace cyclicity and reversal") {
        Signature sig{1, 2};
        SuperMatrix a = r_matrix(sig, 3, 1, 3, make_rat(2, 5)) * flip(sig, 3, 1, 2);
        SuperMatrix b = antisymmetrizer(sig, 3) + r_matrix(sig, 3, 2, 3, Rat(3));
        CHECK(supertrace(a * b) == supertrace(b * a));
        SuperMatrix rev = reversal_operator(sig, 3);
        CHECK(rev == permutation_operator(sig, 3, {3, 2, 1}));
        CHECK(rev * rev == SuperMatrix::identity(sig, 3));
        CHECK(reversal_operator(sig, 2) == flip(sig, 2, 1, 2));
    }

    TEST_CASE("fusion rank matches tableau counts") {
        for (const auto& d : normalized_skew_shapes(3))
            for (int m = 0; m <= 2; ++m)
                for (int n = 0; m + n <= 2; ++n) {
                    if (m + n == 0) continue;
                    SuperMatrix e = fusion_operator(column_tableau(d), m, n);
                    CHECK(Int(static_cast<unsigned long>(rank(e))) == count_ssyt(d, m, n));
                }
    }
}
