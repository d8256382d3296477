// Acceptance run: one PASS/FAIL line per criterion.
//
// Criterion 1 cannot pass as stated: four rows of the length <= 31 reference
// table disagree with exhaustive computation (see README, "Known errata").
// Those rows are listed below; the process exits 0 only when every failure
// is exactly that known set.

#include "oracles.hpp"

#include "cyclo/reproduce.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using namespace cyclo;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

const std::set<std::string> kKnownUnattainable{
    "n25:C(3)+C(5)",
    "n27:C(3)",
    "n31:C(3)+C(7)",
    "n31:C(5)+C(9)+C(15)",
};

Poly P(std::vector<std::uint32_t> e) { return poly::from_exponents(e); }

std::string params(const CyclicCode& code, std::uint32_t d)
{
    std::ostringstream os;
    os << "dim " << code.dimension() << ", Delta " << bch_bound(code) << ", d " << d;
    return os.str();
}

// 1. Every row of the length <= 31 table, dimension and exhaustive distance.
Outcome small_codes()
{
    Outcome o;
    const auto rep = repro::reproduce("small-codes");
    std::size_t rows = 0;
    for (const auto& r : rep.rows) {
        ++rows;
        if (!r.computed) {
            o.check(false, r.golden.label + ": not recomputed");
            continue;
        }
        const auto& g = r.golden;
        const auto& c = *r.computed;
        const bool same = g.dimension == repro::cell(c.dimension) && g.min_distance == repro::cell(c.min_distance);
        o.check(same, g.label + ": expected dim " + g.dimension + " d " + g.min_distance + ", got dim " +
                          repro::cell(c.dimension) + " d " + repro::cell(c.min_distance));
    }
    o.check(rows >= 59, "fewer rows than the reference table");
    return o;
}

Outcome table_rows(std::string_view id, const std::vector<std::tuple<std::string, std::uint32_t, std::uint32_t>>& want)
{
    Outcome o;
    const auto rep = repro::reproduce(id);
    for (const auto& [label, dim, d] : want) {
        const auto it = std::find_if(rep.rows.begin(), rep.rows.end(),
                                     [&](const repro::RowOutcome& r) { return r.golden.label == label; });
        if (it == rep.rows.end() || !it->computed) {
            o.check(false, label + ": missing");
            continue;
        }
        const auto& c = *it->computed;
        o.check(c.dimension == dim && c.min_distance == d && c.bch_bound == d,
                label + ": got dim " + repro::cell(c.dimension) + " d " + repro::cell(c.min_distance) + " Delta " +
                    repro::cell(c.bch_bound));
    }
    return o;
}

// 2. n = 15 divisor codes, also checked to come out of divisor-mode forging.
Outcome fifteen()
{
    auto o = table_rows("n15", {{"x*g2", 10, 2}, {"x*g3", 8, 4}, {"x^3*g4", 8, 4}, {"h2*h3*h5", 7, 5}});
    const auto a = repro::binary_root(15, 4, {4, 1, 0});
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> got;
    for (auto& r : forge_divisors(a, 2)) {
        verify_record(r);
        o.check(r.verified, "forged record not verified");
        got.insert({r.dimension, r.claimed_distance});
    }
    o.check(got.count({10, 2}) >= 1 && got.count({8, 4}) >= 2 && got.count({7, 5}) >= 1,
            "divisor mode lacks one of 10/2, 8/4, 8/4, 7/5");
    return o;
}

// 3. n = 21 construction table.
Outcome twenty_one()
{
    return table_rows("n21", {{"x*g2", 14, 2},
                              {"g3", 12, 3},
                              {"x^3*g4", 12, 3},
                              {"x*g5", 8, 6},
                              {"x^5*g6", 8, 6},
                              {"h1*h3*h5*h6", 10, 5}});
}

// 4. n = 45 chain.
Outcome forty_five()
{
    auto o = table_rows("n45", {{"x^5*g", 21, 5}, {"D-C(21)", 25, 5}, {"->B(5;1)", 29, 5}, {"->B(5;16)", 29, 5}});
    const auto b = repro::binary_root(45, 12, {12, 3, 0});
    const CyclicCode c(b, 2, cosets_union(45, 2, std::vector<std::uint32_t>{1, 3, 9, 21}));
    const auto cert = certify_equality(c);
    o.check(cert && validate_certificate(c, *cert), "no valid certificate for the dim-21 code");
    return o;
}

// 5. n = 33 extension.
Outcome thirty_three()
{
    Outcome o;
    const auto a = repro::binary_root(33, 10, {10, 7, 5, 3, 0});
    const GaloisField& F = a.gf();
    const Poly g = repro::product(F, {minimal_polynomial(a, 1, 2), minimal_polynomial(a, 3, 2), minimal_polynomial(a, 5, 2)});
    const auto rec = construct_from_divisor(a, 2, g, 0);
    o.check(rec.generator_word == poly::reduce(F, P({22, 11, 0}), 33), "idft of g is not x^22+x^11+1");
    const auto target = bch_code(a, 2, 3, 31).code.defining_set();
    bool found = false;
    for (const auto& e : extend_to_bch(a, 2, g, 0)) {
        if (e.code.defining_set() != target)
            continue;
        found = true;
        const auto d = min_distance(e.code);
        o.check(e.code.dimension() == 23 && d.exhaustive && d.distance == 3 && bch_bound(e.code) == 3,
                "B(3;31): " + params(e.code, d.distance));
    }
    o.check(found, "B(3;31) not among the extensions");
    return o;
}

// 6. n = 41, D = C(1).
Outcome forty_one()
{
    Outcome o;
    const CyclicCode c(nth_root(build_field(2, 20), 41), 2, cosets_union(41, 2, std::vector<std::uint32_t>{1}));
    const auto rep = code_apparent_distance(c);
    o.check(rep.overall == 6, "Delta = " + std::to_string(rep.overall));
    o.check(rep.optimal_reps == std::vector<std::uint32_t>{3}, "optimal representative is not 3");
    return o;
}

// 7. Bose distance below the bound at n = 21.
Outcome bose()
{
    Outcome o;
    const auto a = repro::binary_root(21, 6, {6, 5, 4, 2, 0});
    const auto bch = bch_code(a, 2, 4, 6);
    const auto bd = bose_distance(bch.code);
    o.check(bd == std::optional<std::uint32_t>{4}, "Bose distance is not 4");
    o.check(bch_bound(bch.code) == 5, "Delta is not 5");
    return o;
}

// 8. Primitive family counts.
Outcome primitive()
{
    Outcome o;
    for (auto [m, count] : {std::pair{4u, 2u}, std::pair{5u, 6u}}) {
        auto recs = primitive_family(m);
        o.check(recs.size() == count, "m=" + std::to_string(m) + ": " + std::to_string(recs.size()) + " records");
        for (auto& r : recs) {
            verify_record(r);
            o.check(r.verified && bch_bound(r.code) == r.claimed_distance,
                    "m=" + std::to_string(m) + " record not verified");
        }
    }
    return o;
}

RootOfUnity root_for(std::uint32_t n, std::uint64_t q)
{
    const auto p = static_cast<std::uint32_t>(detail::prime_factors(q).front());
    return nth_root(build_field(p, multiplicative_order(q, n)), n);
}

// 9. Property suites.
Outcome properties()
{
    Outcome o;
    std::mt19937_64 rng(2026);
    std::size_t violations = 0;
    for (auto [n, q] : {std::pair{15u, 2u}, std::pair{21u, 2u}, std::pair{17u, 2u}, std::pair{11u, 3u}}) {
        const auto a = root_for(n, q);
        const GaloisField& F = a.gf();
        for (int t = 0; t < 1000; ++t) {
            const auto f = oracle::random_poly(rng, F, n, F.degree());
            violations += idft(dft(f, a)) != f;
        }
        for (int t = 0; t < 1000; ++t) {
            const auto f = oracle::random_poly(rng, F, n, 1);
            if (!f.is_zero())
                violations += apparent_distance(dft(f, a)) > f.weight();
        }
        const auto sets = oracle::all_defining_sets(cyclotomic_cosets(n, q));
        for (int t = 0; t < 1000; ++t) {
            const CyclicCode code(a, q, sets[rng() % sets.size()]);
            const auto c = oracle::random_codeword(rng, code);
            if (c.is_zero())
                continue;
            const QuotientPoly s(n, dft(c, a).values);
            violations += static_cast<int>(n) - gcd_with_xn(F, s).degree() != static_cast<int>(c.weight());
        }
    }
    o.check(violations == 0, std::to_string(violations) + " transform/weight violations");

    std::size_t bound_violations = 0;
    for (std::uint32_t n : {7u, 9u, 15u, 17u, 21u}) {
        const auto a = root_for(n, 2);
        for (const auto& D : oracle::all_defining_sets(cyclotomic_cosets(n, 2))) {
            const CyclicCode code(a, 2, D);
            bound_violations += bch_bound(code) > min_distance(code).distance;
        }
    }
    o.check(bound_violations == 0, std::to_string(bound_violations) + " codes with Delta > d");

    std::size_t divisor_violations = 0;
    for (std::uint32_t n = 3; n <= 21; n += 2) {
        const auto a = root_for(n, 2);
        const auto fl = factor_xn(a);
        for (std::uint32_t deg = 0; deg < n; ++deg)
            for (const auto& div : divisors_of_degree(fl, deg))
                divisor_violations += apparent_distance(poly::reduce(a.gf(), div.poly, n)) != n - deg;
    }
    o.check(divisor_violations == 0, std::to_string(divisor_violations) + " divisors with d*(g) != n - deg g");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"length <= 31 table: dimension and exhaustive distance", small_codes},
        {"n=15 construction table", fifteen},
        {"n=21 construction table", twenty_one},
        {"n=45 chain: dims 21/25/29 with Delta = d = 5", forty_five},
        {"n=33 extension to B(3;31)", thirty_three},
        {"n=41 D=C(1): Delta 6 at representative 3", forty_one},
        {"n=21 Bose distance 4, Delta 5", bose},
        {"primitive family counts for m=4,5", primitive},
        {"property suites", properties},
    };
    bool unexpected = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (out.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << secs
                  << " s)\n";
        for (const auto& f : out.failures)
            std::cout << "     " << f << "\n";
        if (out.pass)
            continue;
        // Only criterion 1 has known-unattainable rows, and only those.
        bool known = i == 0;
        for (const auto& f : out.failures)
            known = known && kKnownUnattainable.count(f.substr(0, f.find(": ")));
        if (known)
            std::cout << "     known-unattainable: these rows contradict exhaustive computation\n";
        unexpected = unexpected || !known;
    }
    return unexpected ? 1 : 0;
}
