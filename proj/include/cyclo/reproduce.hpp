#pragma once

#include "cyclo/golden_data.hpp"
#include "cyclo/serialize.hpp"

#include <functional>
#include <map>

namespace cyclo::repro {

/// One recomputed table row. Optional columns are left empty when a recipe
/// does not compute them; bose_distance holds "-" for codes that are not BCH.
struct ReportRow {
    std::string label;
    std::uint32_t n = 0;
    std::uint64_t q = 2;
    std::string complement;
    std::optional<std::uint32_t> dimension;
    std::optional<std::uint32_t> min_distance;
    std::optional<std::uint32_t> bch_bound;
    std::optional<std::string> bose_distance;
};

struct GoldenRow {
    std::string label;
    std::uint32_t n = 0;
    std::uint64_t q = 2;
    std::string complement;
    std::string dimension, min_distance, bch_bound, bose_distance;
    /// "", "dup" or "erratum"; marked rows never fail a run.
    std::string marker;
    std::string provenance;
};

enum class Status { match, mismatch, informational, missing };

struct RowOutcome {
    GoldenRow golden;
    std::optional<ReportRow> computed;
    Status status = Status::match;
    std::vector<std::string> differences;
};

struct Report {
    std::string table;
    std::vector<RowOutcome> rows;
    /// Recomputed rows with no golden counterpart.
    std::vector<ReportRow> extra;

    bool ok() const
    {
        return std::none_of(rows.begin(), rows.end(), [](const RowOutcome& r) {
            return r.status == Status::mismatch || r.status == Status::missing;
        });
    }
};

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::match: return "MATCH";
    case Status::mismatch: return "MISMATCH";
    case Status::informational: return "INFO";
    case Status::missing: return "MISSING";
    }
    return "?";
}

// ---- golden data --------------------------------------------------------

inline std::vector<std::string_view> table_ids()
{
    return {"small-codes", "n15", "n21", "n45", "n33", "n41", "n17", "bose21"};
}

inline std::string_view embedded_csv(std::string_view id)
{
    for (const auto& t : golden::kTables)
        if (t.name == id)
            return t.csv;
    throw UnknownTable("unknown table '" + std::string(id) + "'");
}

inline std::vector<GoldenRow> parse_golden(std::string_view csv)
{
    std::vector<GoldenRow> rows;
    bool header = true;
    for (auto line : io::split(csv, '\n')) {
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#')
            continue;
        if (header) {
            header = false;
            continue;
        }
        const auto f = io::split(line, ',');
        if (f.size() < 9)
            throw InvalidArgument("malformed golden row: " + std::string(line));
        GoldenRow r;
        r.label = f[0];
        r.n = io::parse_uint(f[1]);
        r.q = io::parse_uint(f[2]);
        r.complement = f[3];
        r.dimension = f[4];
        r.min_distance = f[5];
        r.bch_bound = f[6];
        r.bose_distance = f[7];
        r.marker = f[8];
        for (std::size_t i = 9; i < f.size(); ++i)
            r.provenance += (i > 9 ? "," : "") + std::string(f[i]);
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---- recomputation helpers ----------------------------------------------

/// "C(0)+C(3)" with the minimal representatives of the cosets covering a set.
inline std::string coset_notation(const CosetPartition& part, std::span<const std::uint32_t> set)
{
    std::vector<std::uint32_t> reps;
    for (auto x : set)
        reps.push_back(part.coset_of(x).front());
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::string s;
    for (auto r : reps)
        s += (s.empty() ? "" : "+") + std::string("C(") + std::to_string(r) + ")";
    return s.empty() ? "{}" : s;
}

/// Inverse of coset_notation; the listed representatives need not be minimal.
inline std::vector<std::uint32_t> parse_coset_notation(std::string_view text)
{
    std::vector<std::uint32_t> reps;
    if (text == "{}")
        return reps;
    for (auto tok : io::split(text, '+')) {
        if (tok.size() < 4 || tok.substr(0, 2) != "C(" || tok.back() != ')')
            throw InvalidArgument("bad coset term '" + std::string(tok) + "'");
        reps.push_back(io::parse_uint(tok.substr(2, tok.size() - 3)));
    }
    return reps;
}

struct RowOptions {
    bool distance = true;
    DistanceOptions distance_options{};
};

inline ReportRow code_row(std::string label, const CyclicCode& code, const RowOptions& opts = {})
{
    ReportRow r;
    r.label = std::move(label);
    r.n = code.length();
    r.q = code.q();
    r.complement = coset_notation(code.partition(), code.nonzeros());
    r.dimension = code.dimension();
    r.bch_bound = bch_bound(code);
    const auto bose = bose_distance(code);
    r.bose_distance = bose ? std::to_string(*bose) : "-";
    if (opts.distance)
        r.min_distance = min_distance(code, opts.distance_options).distance;
    return r;
}

inline RootOfUnity binary_root(std::uint32_t n, std::uint32_t m, std::vector<std::uint32_t> min_poly_exponents)
{
    auto field = build_field(2, m);
    return root_with_minimal_polynomial(field, n, 2, poly::from_exponents(min_poly_exponents));
}

inline Poly binary_poly(std::vector<std::uint32_t> exponents) { return poly::from_exponents(exponents); }

inline Poly product(const GaloisField& F, std::initializer_list<Poly> ps)
{
    Poly out = poly::constant(F.one());
    for (const auto& p : ps)
        out = poly::mul(F, out, p);
    return out;
}

inline Poly cofactor(const GaloisField& F, std::uint32_t n, const Poly& h)
{
    return poly::divmod(F, poly::xn_minus_one(F, n), h).first;
}

/// The extension of (g, k) whose defining set equals that of B(delta, b);
/// the label records the requested (delta, b) even when a different window
/// of the same code was found first.
inline std::optional<CyclicCode> extension_matching(const RootOfUnity& root, const Poly& g, std::uint32_t k,
                                                    std::uint32_t delta, std::uint32_t b)
{
    const auto target = bch_code(root, 2, delta, b).code.defining_set();
    for (auto& bch : extend_to_bch(root, 2, g, k))
        if (bch.code.defining_set() == target)
            return bch.code;
    return std::nullopt;
}

// ---- table recipes ------------------------------------------------------

inline std::vector<ReportRow> recompute_small_codes(const std::vector<GoldenRow>& golden)
{
    std::vector<ReportRow> out;
    std::set<std::string> seen;
    std::map<std::uint32_t, RootOfUnity> roots;
    for (const auto& g : golden) {
        if (g.marker == "dup" || !seen.insert(g.label).second)
            continue;
        auto it = roots.find(g.n);
        if (it == roots.end())
            it = roots.emplace(g.n, nth_root(build_field(2, multiplicative_order(2, g.n)), g.n)).first;
        const auto comp = cosets_union(g.n, 2, parse_coset_notation(g.complement));
        out.push_back(code_row(g.label, CyclicCode(it->second, 2, complement_set(comp, g.n))));
    }
    return out;
}

inline void add_divisor_row(std::vector<ReportRow>& out, const std::string& label, const RootOfUnity& root,
                            const Poly& g, std::uint32_t k)
{
    const auto rec = construct_from_divisor(root, 2, g, k);
    auto row = code_row(label, rec.code);
    out.push_back(std::move(row));
}

inline void add_extension_row(std::vector<ReportRow>& out, const std::string& label, const RootOfUnity& root,
                              const Poly& g, std::uint32_t k, std::uint32_t delta, std::uint32_t b)
{
    if (auto code = extension_matching(root, g, k, delta, b))
        out.push_back(code_row(label, *code));
}

inline std::vector<ReportRow> recompute_n15()
{
    const auto a = binary_root(15, 4, {4, 1, 0});
    const GaloisField& F = a.gf();
    const Poly h1 = binary_poly({1, 0}), h2 = binary_poly({2, 1, 0}), h3 = binary_poly({4, 1, 0}),
               h4 = binary_poly({4, 3, 0}), h5 = binary_poly({4, 3, 2, 1, 0});
    const Poly g2 = cofactor(F, 15, h2), g3 = cofactor(F, 15, h3), g4 = cofactor(F, 15, h4);
    std::vector<ReportRow> out;
    add_divisor_row(out, "x*g2", a, g2, 1);
    add_divisor_row(out, "x*g3", a, g3, 1);
    add_divisor_row(out, "x^3*g4", a, g4, 3);
    add_divisor_row(out, "h2*h3*h5", a, product(F, {h2, h3, h5}), 0);
    add_extension_row(out, "x*g2->B(2;0)", a, g2, 1, 2, 0);
    add_extension_row(out, "x*g2->B(2;3)", a, g2, 1, 2, 3);
    add_extension_row(out, "x*g3->B(4;13)", a, g3, 1, 4, 13);
    add_extension_row(out, "x^3*g4->B(4;0)", a, g4, 3, 4, 0);
    out.push_back(code_row("B(5;11)", bch_code(a, 2, 5, 11).code));
    (void)h1;
    return out;
}

inline std::vector<ReportRow> recompute_n21()
{
    const auto a = binary_root(21, 6, {6, 5, 4, 2, 0});
    const GaloisField& F = a.gf();
    const Poly h1 = binary_poly({1, 0}), h2 = binary_poly({2, 1, 0}), h3 = binary_poly({3, 1, 0}),
               h4 = binary_poly({3, 2, 0}), h5 = binary_poly({6, 4, 2, 1, 0}), h6 = binary_poly({6, 5, 4, 2, 0});
    const Poly g2 = cofactor(F, 21, h2), g3 = cofactor(F, 21, h3), g4 = cofactor(F, 21, h4),
               g5 = cofactor(F, 21, h5), g6 = cofactor(F, 21, h6);
    std::vector<ReportRow> out;
    add_divisor_row(out, "x*g2", a, g2, 1);
    add_divisor_row(out, "g3", a, g3, 0);
    add_divisor_row(out, "x^3*g4", a, g4, 3);
    add_divisor_row(out, "x*g5", a, g5, 1);
    add_divisor_row(out, "x^5*g6", a, g6, 5);
    add_divisor_row(out, "h1*h3*h5*h6", a, product(F, {h1, h3, h5, h6}), 0);
    add_extension_row(out, "x*g2->B(2;0)", a, g2, 1, 2, 0);
    add_extension_row(out, "g3->B(3;19)", a, g3, 0, 3, 19);
    add_extension_row(out, "g3->B(3;12)", a, g3, 0, 3, 12);
    add_extension_row(out, "x^3*g4->B(3;15)", a, g4, 3, 3, 15);
    add_extension_row(out, "x^3*g4->B(3;1)", a, g4, 3, 3, 1);
    add_extension_row(out, "x*g5->B(6;17)", a, g5, 1, 6, 17);
    add_extension_row(out, "x^5*g6->B(6;0)", a, g6, 5, 6, 0);
    out.push_back(code_row("B(10;17)", bch_code(a, 2, 10, 17).code));
    return out;
}

inline std::vector<ReportRow> recompute_n45()
{
    const auto b = binary_root(45, 12, {12, 3, 0});
    const Poly g = binary_poly({40, 39, 38, 36, 35, 32, 30, 25, 24, 23, 21, 20, 17, 15, 10, 9, 8, 6, 5, 2, 0});
    const auto k = find_shift(b, 2, g);
    if (!k)
        throw NotRational("the degree-40 divisor admits no rational shift");
    const auto rec = construct_from_divisor(b, 2, g, *k);
    std::vector<ReportRow> out;
    out.push_back(code_row("x^" + std::to_string(*k) + "*g", rec.code));
    const auto& part = rec.code.partition();
    std::vector<std::uint32_t> smaller;
    for (auto d : rec.code.defining_set())
        if (part.coset_index[d] != part.coset_index[21])
            smaller.push_back(d);
    out.push_back(code_row("D-C(21)", CyclicCode(b, 2, smaller)));
    add_extension_row(out, "->B(5;1)", b, g, *k, 5, 1);
    add_extension_row(out, "->B(5;16)", b, g, *k, 5, 16);
    return out;
}

inline std::vector<ReportRow> recompute_n33()
{
    const auto a = binary_root(33, 10, {10, 7, 5, 3, 0});
    const GaloisField& F = a.gf();
    const Poly g = product(F, {minimal_polynomial(a, 1, 2), minimal_polynomial(a, 3, 2), minimal_polynomial(a, 5, 2)});
    std::vector<ReportRow> out;
    add_extension_row(out, "g->B(3;31)", a, g, 0, 3, 31);
    return out;
}

// Rows for a single code, plus one row per representative carrying d* of
// F_{aD} in the bch_bound column.
inline void add_apparent_rows(std::vector<ReportRow>& out, const std::string& label, const CyclicCode& code)
{
    out.push_back(code_row(label, code, RowOptions{.distance = false}));
    for (const auto& r : code_apparent_distance(code).per_representative) {
        ReportRow row;
        row.label = label + "@" + std::to_string(r.representative);
        row.n = code.length();
        row.q = code.q();
        row.complement = out.back().complement;
        row.bch_bound = r.apparent_distance;
        out.push_back(std::move(row));
    }
}

inline std::vector<ReportRow> recompute_n41()
{
    const auto a = nth_root(build_field(2, multiplicative_order(2, 41)), 41);
    std::vector<ReportRow> out;
    add_apparent_rows(out, "D=C(1)", CyclicCode(a, 2, cosets_union(41, 2, std::vector<std::uint32_t>{1})));
    return out;
}

inline std::vector<ReportRow> recompute_n17()
{
    const auto a = binary_root(17, 8, {8, 7, 6, 4, 2, 1, 0});
    std::vector<ReportRow> out;
    add_apparent_rows(out, "D=C(1)", CyclicCode(a, 2, cosets_union(17, 2, std::vector<std::uint32_t>{1})));
    return out;
}

inline std::vector<ReportRow> recompute_bose21()
{
    const auto a = binary_root(21, 6, {6, 5, 4, 2, 0});
    std::vector<ReportRow> out;
    out.push_back(code_row("D=C(1)+C(3)+C(7)",
                           CyclicCode(a, 2, cosets_union(21, 2, std::vector<std::uint32_t>{1, 3, 7}))));
    return out;
}

inline std::vector<ReportRow> recompute(std::string_view id, const std::vector<GoldenRow>& golden)
{
    if (id == "small-codes")
        return recompute_small_codes(golden);
    if (id == "n15")
        return recompute_n15();
    if (id == "n21")
        return recompute_n21();
    if (id == "n45")
        return recompute_n45();
    if (id == "n33")
        return recompute_n33();
    if (id == "n41")
        return recompute_n41();
    if (id == "n17")
        return recompute_n17();
    if (id == "bose21")
        return recompute_bose21();
    throw UnknownTable("unknown table '" + std::string(id) + "'");
}

// ---- diff ---------------------------------------------------------------

inline std::string cell(const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : ""; }
inline std::string cell(const std::optional<std::string>& v) { return v ? *v : ""; }

inline Report diff(std::string_view id, const std::vector<GoldenRow>& golden, const std::vector<ReportRow>& computed)
{
    Report rep;
    rep.table = id;
    std::map<std::string, const ReportRow*> by_label;
    for (const auto& r : computed)
        by_label.emplace(r.label, &r);
    std::set<std::string> used;
    for (const auto& g : golden) {
        RowOutcome o;
        o.golden = g;
        const auto it = by_label.find(g.label);
        if (it == by_label.end()) {
            o.status = g.marker.empty() ? Status::missing : Status::informational;
            o.differences.push_back("no recomputed row");
            rep.rows.push_back(std::move(o));
            continue;
        }
        used.insert(g.label);
        const ReportRow& c = *it->second;
        o.computed = c;
        const std::pair<const char*, std::pair<std::string, std::string>> cols[] = {
            {"dimension", {g.dimension, cell(c.dimension)}},
            {"min_distance", {g.min_distance, cell(c.min_distance)}},
            {"bch_bound", {g.bch_bound, cell(c.bch_bound)}},
            {"bose_distance", {g.bose_distance, cell(c.bose_distance)}},
        };
        for (const auto& [name, vals] : cols)
            if (!vals.first.empty() && vals.first != vals.second)
                o.differences.push_back(std::string(name) + ": expected " + vals.first + ", got " +
                                        (vals.second.empty() ? "nothing" : vals.second));
        if (!o.differences.empty())
            o.status = g.marker.empty() ? Status::mismatch : Status::informational;
        rep.rows.push_back(std::move(o));
    }
    for (const auto& r : computed)
        if (!used.count(r.label))
            rep.extra.push_back(r);
    return rep;
}

inline Report reproduce(std::string_view id)
{
    const auto golden = parse_golden(embedded_csv(id));
    return diff(id, golden, recompute(id, golden));
}

// ---- emission -----------------------------------------------------------

inline std::string rows_csv(const std::vector<ReportRow>& rows)
{
    std::string s = "n,q,complement_defining_set,dimension,min_distance,bch_bound,bose_distance,label\n";
    for (const auto& r : rows)
        s += std::to_string(r.n) + "," + std::to_string(r.q) + "," + r.complement + "," + cell(r.dimension) + "," +
             cell(r.min_distance) + "," + cell(r.bch_bound) + "," + cell(r.bose_distance) + "," + r.label + "\n";
    return s;
}

inline io::json to_json(const ReportRow& r)
{
    auto opt = [](const auto& v) { return v ? io::json(*v) : io::json(nullptr); };
    return io::json{{"label", r.label},
                    {"n", r.n},
                    {"q", r.q},
                    {"complement_defining_set", r.complement},
                    {"dimension", opt(r.dimension)},
                    {"min_distance", opt(r.min_distance)},
                    {"bch_bound", opt(r.bch_bound)},
                    {"bose_distance", opt(r.bose_distance)}};
}

inline io::json rows_json(const std::vector<ReportRow>& rows)
{
    io::json a = io::json::array();
    for (const auto& r : rows)
        a.push_back(to_json(r));
    return a;
}

inline std::vector<ReportRow> computed_rows(const Report& rep)
{
    std::vector<ReportRow> out;
    for (const auto& o : rep.rows)
        if (o.computed && o.golden.marker != "dup")
            out.push_back(*o.computed);
    out.insert(out.end(), rep.extra.begin(), rep.extra.end());
    return out;
}

} // namespace cyclo::repro
