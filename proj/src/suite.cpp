#include "skewchar/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "skewchar/bethe.hpp"
#include "skewchar/characters.hpp"
#include "skewchar/charpoly_io.hpp"
#include "skewchar/diffops.hpp"
#include "skewchar/enumerate.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/fusion.hpp"
#include "skewchar/jacobi_trudi.hpp"
#include "skewchar/tableaux.hpp"
#include "skewchar/tsystems.hpp"

namespace skewchar {

int jobs_from_env(int fallback) {
    const char* v = std::getenv("SKEWCHAR_JOBS");
    if (!v || !*v) return fallback;
    try {
        int k = std::stoi(v);
        return k >= 1 ? k : fallback;
    } catch (const std::exception&) {
        return fallback;
    }
}

namespace {

// Collects the first failure message across worker threads.
class Failures {
public:
    void record(long index, std::string msg) {
        std::lock_guard<std::mutex> lock(mu_);
        ++count_;
        if (!first_ || index < first_index_) {
            first_ = std::move(msg);
            first_index_ = index;
        }
    }
    long count() const { return count_; }
    std::string first() const { return first_.value_or(""); }

private:
    std::mutex mu_;
    long count_ = 0;
    long first_index_ = 0;
    std::optional<std::string> first_;
};

// Runs body(i) for i in [0, total); a body returns an error message or "".
void parallel_for(long total, int jobs, Failures& fails,
                  const std::function<std::string(long)>& body) {
    auto guarded = [&](long i) {
        try {
            std::string msg = body(i);
            if (!msg.empty()) fails.record(i, std::move(msg));
        } catch (const std::exception& e) {
            fails.record(i, std::string("exception: ") + e.what());
        }
    };
    if (jobs <= 1 || total <= 1) {
        for (long i = 0; i < total; ++i) guarded(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    int workers = static_cast<int>(std::min<long>(jobs, total));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (long i = next++; i < total; i = next++) guarded(i);
        });
    for (auto& th : pool) th.join();
}

CriterionResult head(int id, std::string title) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

CriterionResult finish(CriterionResult r, long cases, const Failures& f) {
    r.cases = cases;
    r.ok = f.count() == 0;
    std::ostringstream os;
    if (r.ok) os << cases << " cases";
    else os << f.count() << "/" << cases << " failed; first: " << f.first();
    r.detail = os.str();
    return r;
}

std::string sig_tag(int m, int n) {
    return " (m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
}

struct ShapeSig {
    SkewDiagram d;
    int m, n;
};

// -- 1 ---------------------------------------------------------------------

CriterionResult c1_jacobi_trudi(const SuiteOptions& o) {
    std::vector<ShapeSig> cases;
    for (const auto& d : normalized_skew_shapes(8))
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n) cases.push_back({d, m, n});
    Failures f;
    parallel_for(static_cast<long>(cases.size()), o.jobs, f, [&](long i) -> std::string {
        const auto& c = cases[i];
        JTReport rep = verify_jt(c.d, c.m, c.n);
        if (rep.ok()) return "";
        return c.d.to_string() + sig_tag(c.m, c.n) + ": " + rep.counterexample.value_or("mismatch");
    });
    return finish(head(1, "Jacobi-Trudi, |lambda/mu| <= 8, m,n in {1,2}"), static_cast<long>(cases.size()), f);
}

// -- 2 ---------------------------------------------------------------------

CriterionResult c2_vanishing(const SuiteOptions& o) {
    std::vector<ShapeSig> cases;
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) {
            for (int k = 1; k <= 3; ++k)
                cases.push_back({SkewDiagram(Partition(std::vector<int>(m + k, n + 1)),
                                             Partition(std::vector<int>(k - 1, n))),
                                 m, n});
            std::vector<int> tail(m + 1, n + 1);
            tail.push_back(1);
            cases.push_back({SkewDiagram(Partition(tail)), m, n});
            cases.push_back({SkewDiagram(Partition(std::vector<int>(m + 1, n + 2)), Partition{1}), m, n});
        }
    Failures f;
    parallel_for(static_cast<long>(cases.size()), o.jobs, f, [&](long i) -> std::string {
        const auto& c = cases[i];
        std::string tag = c.d.to_string() + sig_tag(c.m, c.n);
        if (!contains_rectangle(c.d, c.m + 1, c.n + 1)) return tag + ": no (m+1)x(n+1) rectangle";
        Signature sig{c.m, c.n};
        CharPoly ds = det(jt_matrix_S(c.d.lambda(), c.d.mu(), sig), sig);
        CharPoly da = det(jt_matrix_A(c.d.lambda(), c.d.mu(), sig), sig);
        if (!ds.is_zero()) return tag + ": S-determinant nonzero";
        if (!da.is_zero()) return tag + ": A-determinant nonzero";
        if (count_ssyt(c.d, c.m, c.n) != 0) return tag + ": tableaux exist";
        return "";
    });
    return finish(head(2, "vanishing determinants on rectangle-containing shapes"), static_cast<long>(cases.size()), f);
}

// -- 3 ---------------------------------------------------------------------

CriterionResult c3_dimension(const SuiteOptions&) {
    Failures f;
    long cases = 0;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n, ++cases) {
            Int got = count_ssyt(rectangle(m, n), m, n);
            Int want = Int(1) << (m * n);
            if (got != want)
                f.record(cases, "Xi" + sig_tag(m, n) + ": " + to_string(got) + " != " + to_string(want));
        }
    return finish(head(3, "dim Xi = 2^{mn}, 1 <= m,n <= 3"), cases, f);
}

// -- 4 ---------------------------------------------------------------------

CriterionResult c4_lgv(const SuiteOptions& o) {
    std::vector<ShapeSig> cases;
    for (const auto& d : normalized_skew_shapes(8))
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                if (m + n > 0) cases.push_back({d, m, n});
    Failures f;
    parallel_for(static_cast<long>(cases.size()), o.jobs, f, [&](long i) -> std::string {
        const auto& c = cases[i];
        Int paths = count_lgv_tuples(c.d.lambda(), c.d.mu(), c.m, c.n);
        Int tabs = count_ssyt(c.d, c.m, c.n);
        if (paths == tabs) return "";
        return c.d.to_string() + sig_tag(c.m, c.n) + ": paths " + to_string(paths) + ", tableaux " +
               to_string(tabs);
    });
    return finish(head(4, "LGV path tuples = tableaux, <= 8 boxes, m,n <= 2"), static_cast<long>(cases.size()), f);
}

// -- 5 ---------------------------------------------------------------------

CriterionResult c5_divisibility(const SuiteOptions& o) {
    struct Case {
        Partition p;
        int m, n;
        bool west;
    };
    std::vector<Case> cases;
    auto parts = partitions_up_to(6);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& p : parts) {
                if (p.length() <= m) cases.push_back({p, m, n, true});
                if (p.part(1) <= n) cases.push_back({p, m, n, false});
            }
    Failures f;
    parallel_for(static_cast<long>(cases.size()), o.jobs, f, [&](long i) -> std::string {
        const auto& c = cases[i];
        DivisibilityReport r = c.west ? check_divisibility_W(c.p, c.m, c.n) : check_divisibility_S(c.p, c.m, c.n);
        std::string tag = std::string(c.west ? "W(" : "S(") + c.p.to_string() + ")" + sig_tag(c.m, c.n);
        if (!r.ok) return tag + ": quotient differs from the glued character";
        CharPoly back = r.expected * q_character(rectangle(c.m, c.n), c.m, c.n);
        if (!(back == q_character(r.diagram, c.m, c.n))) return tag + ": product does not restore K";
        return "";
    });
    return finish(head(5, "divisibility of K_W(lambda), K_S(mu) by K_Xi"), static_cast<long>(cases.size()), f);
}

// -- 6 ---------------------------------------------------------------------

CriterionResult c6_central(const SuiteOptions& o) {
    std::vector<ShapeSig> cases;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            for (const auto& p : partitions_up_to(6))
                if (!p.empty() && is_hook(p, m, n)) cases.push_back({SkewDiagram(p), m, n});
        }
    Failures f;
    parallel_for(static_cast<long>(cases.size()), o.jobs, f, [&](long i) -> std::string {
        const auto& c = cases[i];
        Signature sig{c.m, c.n};
        CharPoly k = q_character(c.d, c.m, c.n);
        // Expected value built directly from the contents.
        RatFunc want(Rat(1));
        for (const auto& b : c.d.boxes()) {
            Rat cb = c.d.content(b);
            want = want * RatFunc(UPoly::linear(cb + 1), UPoly::linear(cb));
        }
        for (const auto& [mono, coeff] : k.terms()) {
            (void)coeff;
            if (!(central_eigenvalue(mono, sig) == want))
                return c.d.to_string() + sig_tag(c.m, c.n) + ": eigenvalue differs at " + term_to_text(mono, 1);
        }
        return "";
    });
    return finish(head(6, "central eigenvalue on hook characters, <= 6 boxes"), static_cast<long>(cases.size()), f);
}

// -- 7 ---------------------------------------------------------------------

// Sum over sequences i_1 < .. < i_b <= m < i_{b+1} <= .. <= i_k (increasing)
// or j_1 > .. > j_b > m >= j_{b+1} >= .. >= j_k (decreasing) of
// prod_a s D(i_a, 1 - a).
CharPoly sequence_sum(int k, const Signature& sig, bool increasing) {
    CharPoly total(sig);
    std::vector<int> seq;
    std::function<void(int)> rec = [&](int a) {
        if (a == k) {
            CharPoly term = CharPoly::constant(sig, 1);
            for (int t = 0; t < k; ++t)
                term = term * CharPoly::symbol(sig, seq[t], Rat(-t));
            for (int t = 0; t < k; ++t)
                if (sig.odd(seq[t])) term = -term;
            total += term;
            return;
        }
        for (int i = 1; i <= sig.size(); ++i) {
            if (a > 0) {
                int prev = seq.back();
                if (increasing) {
                    if (i < prev) continue;
                    if (i == prev && !sig.odd(i)) continue;
                } else {
                    if (i > prev) continue;
                    if (i == prev && sig.odd(i)) continue;
                }
            }
            seq.push_back(i);
            rec(a + 1);
            seq.pop_back();
        }
    };
    rec(0);
    return total;
}

CriterionResult c7_berezinian(const SuiteOptions&) {
    Failures f;
    long cases = 0;
    const int K = 5;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            Signature sig{m, n};
            OperatorSeries ber = hc_berezinian(m, n, K);
            OperatorSeries inv = op_inv(ber);
            for (int k = 1; k <= K; ++k, ++cases) {
                std::string tag = "k=" + std::to_string(k) + sig_tag(m, n);
                CharPoly col = column_hc(k, Rat(0), sig);
                if (k % 2) col = -col;
                if (!(ber[k] == col)) f.record(cases, tag + ": differs from (-1)^k signed column character");
                CharPoly seq_i = sequence_sum(k, sig, true);
                if (k % 2) seq_i = -seq_i;
                if (!(ber[k] == seq_i)) f.record(cases, tag + ": differs from the increasing-sequence sum");
                if (!(inv[k] == sequence_sum(k, sig, false)))
                    f.record(cases, tag + ": inverse differs from the decreasing-sequence sum");
                CharPoly row = signed_view(row_character(k, Rat(1 - k), sig));
                if (!(inv[k] == row)) f.record(cases, tag + ": inverse differs from the shifted row character");
            }
        }
    return finish(head(7, "Berezinian coefficients at Harish-Chandra level, k <= 5"), cases, f);
}

// -- 8, 9 ------------------------------------------------------------------

CriterionResult c8_ratio(const SuiteOptions& o) {
    const std::vector<std::pair<int, int>> sigs = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}};
    Failures f;
    long checks = 0;
    std::mutex mu;
    parallel_for(static_cast<long>(sigs.size()), o.jobs, f, [&](long i) -> std::string {
        auto [m, n] = sigs[i];
        RatioReport rep = verify_ratio(m, n, m + n + 3);
        {
            std::lock_guard<std::mutex> lock(mu);
            checks += static_cast<long>(rep.checks.size());
        }
        for (const auto& c : rep.checks)
            if (!c.ok) return c.name + sig_tag(m, n) + ": " + c.detail;
        return "";
    });
    CriterionResult r = finish(head(8, "Berezinian ratio decompositions, order m+n+3"), static_cast<long>(sigs.size()), f);
    if (r.ok) r.detail += " (" + std::to_string(checks) + " identities)";
    return r;
}

CriterionResult c9_center(const SuiteOptions&) {
    Failures f;
    long cases = 0;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n, ++cases) {
            if (m + n == 0) continue;
            CheckResult c = verify_center_ratio(m, n);
            if (!c.ok) f.record(cases, c.name + sig_tag(m, n) + ": " + c.detail);
        }
    return finish(head(9, "center series as a ratio, m,n <= 2"), cases - 1, f);
}

// -- 10 --------------------------------------------------------------------

int columns(const SkewDiagram& d) {
    SkewDiagram nd = normalize(d);
    return nd.lambda().part(1);
}

CriterionResult c10_tsystems(const SuiteOptions& o) {
    Failures f;
    long cases = 0;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; j <= 3; ++j) {
                    if (i == 0 && j == 0) continue;
                    TSystemCheck c = verify_classical_tsystem(i, j, m, n);
                    if (!c.ok) f.record(cases, "classical (" + std::to_string(i) + "," + std::to_string(j) + ")" +
                                                   sig_tag(m, n) + ": " + c.detail);
                    ++cases;
                }
        }

    std::vector<ShapeSig> prime, nonprime;
    for (const auto& d : normalized_skew_shapes(8)) {
        int cols = columns(d);
        if (cols < 2 || cols > 4) continue;
        bool p = is_prime(d);
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                if (m + n == 0) continue;
                if (p) prime.push_back({d, m, n});
            }
        if (!p && nonprime.size() < 10 && d.size() <= 6) nonprime.push_back({d, 1, 1});
    }
    long base = cases;
    parallel_for(static_cast<long>(prime.size()), o.jobs, f, [&](long i) -> std::string {
        const auto& c = prime[i];
        TSystemCheck t = verify_extended_tsystem(c.d, c.m, c.n);
        return t.ok ? "" : "extended " + c.d.to_string() + sig_tag(c.m, c.n) + ": " + t.detail;
    });
    cases += static_cast<long>(prime.size());
    for (size_t i = 0; i < nonprime.size(); ++i, ++cases) {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            TSystemCheck t = verify_nonprime_product(nonprime[i].d, m, n);
            if (!t.ok) f.record(base + cases, "non-prime " + nonprime[i].d.to_string() + sig_tag(m, n) + ": " + t.detail);
        }
    }
    CriterionResult r = finish(head(10, "classical and extended T-systems"), cases, f);
    if (r.ok)
        r.detail = std::to_string(cases - static_cast<long>(prime.size() + nonprime.size())) + " classical, " +
                   std::to_string(prime.size()) + " extended, " + std::to_string(nonprime.size()) +
                   " non-prime shapes";
    return r;
}

// -- 11 --------------------------------------------------------------------

Rat random_rat(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return make_rat(num(rng), den(rng));
}

Rat random_nonzero(std::mt19937_64& rng, int span = 9) {
    for (;;) {
        Rat r = random_rat(rng, span);
        if (r != 0) return r;
    }
}

CriterionResult c11_fusion(const SuiteOptions& o) {
    std::vector<ShapeSig> cases;
    for (const auto& d : normalized_skew_shapes(4))
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; m + n <= 3; ++n)
                if (m + n > 0) cases.push_back({d, m, n});
    Failures f;
    parallel_for(static_cast<long>(cases.size()), o.jobs, f, [&](long i) -> std::string {
        const auto& c = cases[i];
        std::string tag = c.d.to_string() + sig_tag(c.m, c.n);
        Int want = count_ssyt(c.d, c.m, c.n);
        Int rc(static_cast<unsigned long>(rank(fusion_operator(column_tableau(c.d), c.m, c.n))));
        if (rc != want) return tag + ": column-tableau rank " + to_string(rc) + ", tableaux " + to_string(want);
        if (c.d.size() == 3) {
            SuperMatrix a = fusion_operator(column_tableau(c.d), c.m, c.n, {1, 2, 1});
            SuperMatrix b = fusion_operator(column_tableau(c.d), c.m, c.n, {2, 1, 2});
            if (!(a == b)) return tag + ": reduced words s1s2s1 and s2s1s2 disagree";
        }
        return "";
    });
    long total = static_cast<long>(cases.size());

    std::mt19937_64 rng(o.seed ^ 0x11);
    const std::vector<std::pair<int, int>> sigs = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};
    for (int t = 0; t < 100; ++t, ++total) {
        auto [m, n] = sigs[t % sigs.size()];
        Signature sig{m, n};
        Rat u1 = random_rat(rng), u2, u3;
        do u2 = random_rat(rng); while (u2 == u1);
        do u3 = random_rat(rng); while (u3 == u1 || u3 == u2);
        SuperMatrix lhs = r_matrix(sig, 3, 1, 2, u1 - u2) * r_matrix(sig, 3, 1, 3, u1 - u3) * r_matrix(sig, 3, 2, 3, u2 - u3);
        SuperMatrix rhs = r_matrix(sig, 3, 2, 3, u2 - u3) * r_matrix(sig, 3, 1, 3, u1 - u3) * r_matrix(sig, 3, 1, 2, u1 - u2);
        if (!(lhs == rhs))
            f.record(total, "Yang-Baxter fails at (" + to_string(u1) + "," + to_string(u2) + "," + to_string(u3) + ")" +
                                sig_tag(m, n));
    }
    return finish(head(11, "fusion ranks, reduced words, Yang-Baxter"), total, f);
}

// -- 12 --------------------------------------------------------------------

RatFunc random_ratfunc(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 2);
    std::vector<Rat> roots;
    std::vector<Rat> poles;
    for (int k = deg(rng); k > 0; --k) roots.push_back(random_rat(rng, 5));
    for (int k = deg(rng); k > 0; --k) poles.push_back(random_rat(rng, 5));
    return RatFunc(random_nonzero(rng, 4) * UPoly::from_roots(roots), UPoly::from_roots(poles));
}

BetheData random_bethe(std::mt19937_64& rng, int m, int n) {
    BetheData d;
    d.sig = {m, n};
    for (int i = 0; i < m + n; ++i) d.zeta.push_back(random_ratfunc(rng));
    std::uniform_int_distribution<int> count(0, 2);
    for (int i = 1; i < m + n; ++i) {
        std::vector<Rat> r;
        for (int k = count(rng); k > 0; --k) r.push_back(random_rat(rng, 6));
        d.roots.push_back(r);
    }
    d.validate();
    return d;
}

bool same(const RatOperator& a, const RatOperator& b, int order) {
    for (int k = 0; k <= order; ++k)
        if (!(a.coeffs.at(k) == b.coeffs.at(k))) return false;
    return true;
}

CriterionResult c12_bethe(const SuiteOptions& o) {
    Failures f;
    std::mt19937_64 rng(o.seed ^ 0x12);
    const std::vector<std::pair<int, int>> sigs = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}, {2, 0}, {0, 2}};
    std::vector<std::pair<BetheData, int>> fact;
    std::uniform_int_distribution<int> ord(1, 6);
    for (int t = 0; t < 100; ++t) {
        auto [m, n] = sigs[t % sigs.size()];
        fact.emplace_back(random_bethe(rng, m, n), ord(rng));
    }
    std::vector<std::pair<BetheData, int>> square;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            for (int rep = 0; rep < 2; ++rep) square.emplace_back(random_bethe(rng, m, n), 5);
        }
    long nf = static_cast<long>(fact.size());
    long total = nf + static_cast<long>(square.size());
    parallel_for(total, o.jobs, f, [&](long i) -> std::string {
        if (i < nf) {
            const auto& [d, order] = fact[i];
            if (verify_factorization(d, order)) return "";
            return "factorization fails" + sig_tag(d.sig.m, d.sig.n) + " at order " + std::to_string(order);
        }
        const auto& [d, order] = square[i - nf];
        RatOperator lhs = substitute_operator(hc_berezinian(d.sig.m, d.sig.n, order), d);
        RatOperator rhs = build_bethe_operator(d, order);
        return same(lhs, rhs, order) ? "" : "substitution square fails" + sig_tag(d.sig.m, d.sig.n);
    });
    return finish(head(12, "Bethe operator factorization and substitution"), total, f);
}

// -- 13 --------------------------------------------------------------------

CriterionResult c13_irreducibility(const SuiteOptions& o) {
    Failures f;
    long cases = 0;
    Partition two{2};
    std::vector<Rat> diffs;
    for (int k = -12; k <= 12; ++k) diffs.push_back(Rat(k));
    for (int num : {-7, -5, -3, -1, 1, 3, 5, 7}) diffs.push_back(make_rat(num, 2));
    for (int num : {-8, -4, -2, 2, 4, 8}) diffs.push_back(make_rat(num, 3));
    for (const Rat& d : diffs) {
        bool bad = d == 1 || d == -1 || d == 2 || d == -2;
        bool got = irreducibility_condition(two, two, d, Rat(0));
        if (got == bad) f.record(cases, "z-w=" + to_string(d) + ": condition " + (got ? "holds" : "fails"));
        ++cases;
    }
    std::mt19937_64 rng(o.seed ^ 0x13);
    std::uniform_int_distribution<int> len(1, 6), part(1, 7);
    for (int t = 0; t < 50; ++t, ++cases) {
        std::vector<int> p;
        for (int k = len(rng); k > 0; --k) p.push_back(part(rng));
        std::sort(p.rbegin(), p.rend());
        Partition lam(p);
        Rat z = random_rat(rng);
        if (!irreducibility_condition(lam, lam, z, z))
            f.record(cases, "lambda=mu=" + lam.to_string() + ", z=w: condition fails");
    }
    return finish(head(13, "irreducibility condition boundary"), cases, f);
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
    using Fn = CriterionResult (*)(const SuiteOptions&);
    static const Fn table[] = {c1_jacobi_trudi, c2_vanishing, c3_dimension,   c4_lgv,       c5_divisibility,
                               c6_central,      c7_berezinian, c8_ratio,      c9_center,    c10_tsystems,
                               c11_fusion,      c12_bethe,     c13_irreducibility};
    if (id < 1 || id > kCriterionCount) throw InvalidArgument("criterion id outside 1..13");
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1](opts);
    } catch (const std::exception& e) {
        r = head(id, "criterion " + std::to_string(id));
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
    return out;
}

}  // namespace skewchar
