// cyclo: command-line front end for the cyclic-code library.
//
// Exit codes: 0 success, 1 golden mismatch, 2 usage error, 3 computational error.

#include "cyclo/reproduce.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace {

using namespace cyclo;
using io::json;

constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kComputation = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldArgs {
    std::uint32_t n = 0;
    std::uint64_t q = 2;
    std::string field_poly;
    std::string alpha_poly;
};

void add_field_options(CLI::App* cmd, FieldArgs& f)
{
    cmd->add_option("--n", f.n, "code length")->required()->check(CLI::Range(1u, kMaxLength));
    cmd->add_option("--q", f.q, "alphabet size (prime power)")->default_val(2);
    cmd->add_option("--field-poly", f.field_poly, "modulus of the splitting field as exponents, e.g. 12,3,0");
    cmd->add_option("--alpha-poly", f.alpha_poly, "minimal polynomial of alpha over GF(p) as exponents");
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q)
{
    if (q < 2)
        throw UsageError("q must be a prime power");
    const auto factors = detail::prime_factors(q);
    if (factors.size() != 1)
        throw UsageError(std::to_string(q) + " is not a prime power");
    const auto p = static_cast<std::uint32_t>(factors.front());
    std::uint32_t s = 0;
    for (std::uint64_t v = q; v > 1; v /= p)
        ++s;
    return {p, s};
}

RootOfUnity setup_root(const FieldArgs& f)
{
    const auto [p, s] = prime_power(f.q);
    if (std::gcd<std::uint64_t>(f.n, p) != 1)
        throw NotCoprime("gcd(n, q) > 1");
    FieldPtr field;
    if (!f.field_poly.empty()) {
        const auto mod = io::parse_exponent_poly(f.field_poly);
        field = build_field(p, static_cast<std::uint32_t>(mod.size() - 1), mod);
        if (field->degree() % s != 0)
            throw InvalidSubfield("the field does not contain GF(" + std::to_string(f.q) + ")");
    } else {
        field = build_field(p, s * multiplicative_order(f.q, f.n));
    }
    if (f.alpha_poly.empty())
        return nth_root(field, f.n);
    const Poly mp = io::poly_from_coefficients(*field, io::parse_exponent_poly(f.alpha_poly));
    return root_with_minimal_polynomial(field, f.n, p, mp);
}

std::string format_poly(const GaloisField& F, std::span<const Element> c)
{
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].value == 0)
            continue;
        if (!s.empty())
            s += "+";
        std::string coef = c[i].value == 1 ? "" : std::to_string(c[i].value);
        if (F.degree() > 1 && c[i].value > 1)
            coef = "[" + coef + "]";
        if (i == 0)
            s += coef.empty() ? "1" : coef;
        else
            s += coef + (i == 1 ? "x" : "x^" + std::to_string(i));
    }
    return s.empty() ? "0" : s;
}

std::string format_poly(const GaloisField& F, const Poly& p) { return format_poly(F, p.coeffs); }
std::string format_poly(const GaloisField& F, const QuotientPoly& p) { return format_poly(F, p.coeffs); }

std::string format_set(std::span<const std::uint32_t> v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::vector<std::uint32_t> defining_set_from(const std::string& text, bool complement, const CosetPartition& part)
{
    auto D = io::parse_defining_set(text, part);
    if (complement)
        D = complement_set(D, part.n);
    return D;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommands -----------------------------------------------------------

int cmd_cosets(const FieldArgs& f, bool as_json)
{
    const auto part = cyclotomic_cosets(f.n, f.q);
    if (as_json) {
        print_json(io::to_json(part));
        return 0;
    }
    const auto A = representative_set(part);
    std::cout << "n = " << f.n << ", q = " << f.q << ", ord_n(q) = " << A.order << "\n";
    for (const auto& c : part.cosets)
        std::cout << "C(" << c.front() << ") = " << format_set(c) << "\n";
    std::cout << "A(n) = " << format_set(A.members) << "\n";
    return 0;
}

int cmd_factor(const FieldArgs& f, std::uint32_t subfield, bool as_json)
{
    const auto root = setup_root(f);
    const auto [p, s] = prime_power(f.q);
    const std::uint32_t d = subfield ? subfield : s;
    const auto list = factor_xn(root, d);
    if (as_json) {
        auto j = io::to_json(list);
        j["q"] = f.q;
        j["field_poly"] = io::field_modulus_json(root.gf());
        print_json(j);
        return 0;
    }
    std::cout << "x^" << f.n << "-1 over GF(" << p << "^" << d << "): " << list.factors.size() << " factors\n";
    for (const auto& fac : list.factors)
        std::cout << "  " << format_poly(root.gf(), fac.poly) << "  roots alpha^" << format_set(fac.exponents) << "\n";
    return 0;
}

struct CodeArgs {
    std::string defining_set;
    bool complement = false;
};

void add_code_options(CLI::App* cmd, CodeArgs& c)
{
    cmd->add_option("--defining-set", c.defining_set, "list like 1,2,4 or coset:1,3")->required();
    cmd->add_flag("--complement", c.complement, "the list gives the nonzeros instead of the zeros");
}

CyclicCode build_code(const FieldArgs& f, const CodeArgs& c)
{
    const auto root = setup_root(f);
    const auto part = cyclotomic_cosets(f.n, f.q);
    return CyclicCode(root, f.q, defining_set_from(c.defining_set, c.complement, part));
}

int cmd_analyze(const FieldArgs& f, const CodeArgs& c, bool certify, const CertifyOptions& copts, bool as_json)
{
    const auto code = build_code(f, c);
    const auto report = code_apparent_distance(code);
    const auto bose = bose_distance(code);
    std::optional<Certificate> cert;
    bool budget_hit = false;
    if (certify) {
        try {
            cert = certify_equality(code, copts);
        } catch (const BudgetExceeded&) {
            budget_hit = true;
        }
    }
    if (as_json) {
        auto j = io::code_record(code);
        j["apparent_distance"] = io::to_json(report);
        if (certify) {
            j["certificate"] = cert ? io::to_json(*cert) : json(nullptr);
            j["certificate_budget_exceeded"] = budget_hit;
        }
        print_json(j);
        return 0;
    }
    const GaloisField& F = code.root().gf();
    std::cout << "n = " << code.length() << ", q = " << code.q() << ", field modulus "
              << format_poly(F, io::poly_from_json(io::field_modulus_json(F))) << "\n";
    std::cout << "defining set " << format_set(code.defining_set()) << "\n";
    std::cout << "dimension " << code.dimension() << "\n";
    std::cout << "generator " << format_poly(F, code.generator()) << "\n";
    std::cout << "idempotent " << format_poly(F, code.idempotent()) << "\n";
    for (const auto& r : report.per_representative) {
        std::cout << "  a = " << r.representative << ": d* = " << r.apparent_distance << ", runs";
        for (const auto& z : r.runs)
            std::cout << " {" << z.start << ".." << (z.start + z.length - 1) % code.length() << "}";
        std::cout << "\n";
    }
    std::cout << "BCH bound " << report.overall << " at a in " << format_set(report.optimal_reps) << "\n";
    std::cout << "Bose distance " << (bose ? std::to_string(*bose) : std::string("- (not a BCH code)")) << "\n";
    if (certify) {
        if (cert)
            std::cout << "certificate: g = " << format_poly(F, cert->divisor) << ", k = " << cert->shift
                      << ", a = " << cert->representative << ", over GF(p^" << cert->subfield_degree
                      << "): d = BCH bound = " << report.overall << "\n";
        else if (budget_hit)
            std::cout << "certificate: search budget exhausted\n";
        else
            std::cout << "certificate: none found\n";
    }
    return 0;
}

int cmd_mindist(const FieldArgs& f, const CodeArgs& c, const DistanceOptions& opts, bool as_json)
{
    const auto code = build_code(f, c);
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = min_distance(code, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (as_json) {
        auto j = io::to_json(res);
        j["n"] = code.length();
        j["q"] = code.q();
        j["dimension"] = code.dimension();
        print_json(j);
        return 0;
    }
    std::cout << (res.exhaustive ? "d = " : "d <= ") << res.distance << " (dimension " << code.dimension() << ", "
              << res.enumerated << " codewords, " << secs << " s)\n";
    std::cout << "witness " << format_poly(code.root().gf(), res.witness) << "\n";
    return 0;
}

struct ForgeArgs {
    std::string mode = "divisor";
    std::uint32_t subfield = 0;
    bool verify = false;
    std::uint64_t budget = 1'000'000;
    std::uint64_t cap = std::uint64_t{1} << 30;
    std::string divisor;
    std::optional<std::uint32_t> shift;
};

void print_record(const GaloisField& F, const ConstructionRecord& r)
{
    std::cout << to_string(r.source) << ": dim " << r.dimension << ", Delta = d = " << r.claimed_distance;
    if (r.bch_delta)
        std::cout << ", B(delta " << *r.bch_delta << ", b " << *r.bch_offset << ")";
    std::cout << ", g = " << format_poly(F, r.divisor) << ", k = " << r.shift;
    if (r.measured_distance)
        std::cout << ", brute-force d = " << *r.measured_distance << (r.verified ? " [verified]" : " [NOT verified]");
    std::cout << "\n    D = " << format_set(r.code.defining_set()) << "\n";
}

int cmd_forge(const FieldArgs& f, const ForgeArgs& a, bool as_json)
{
    std::vector<ConstructionRecord> recs;
    std::optional<RootOfUnity> root;
    if (a.mode == "primitive") {
        std::uint32_t m = 0;
        while ((std::uint64_t{1} << m) - 1 < f.n)
            ++m;
        if (f.q != 2 || (std::uint64_t{1} << m) - 1 != f.n)
            throw UsageError("primitive mode needs q = 2 and n = 2^m - 1");
        recs = primitive_family(m);
    } else {
        root = setup_root(f);
        const ForgeOptions fo{.subfield_degree = a.subfield, .budget = a.budget};
        if (a.mode == "divisor" || a.mode == "congruence") {
            const auto [p, s] = prime_power(f.q);
            const std::uint32_t d = a.subfield ? a.subfield : s;
            const auto list = factor_xn(*root, d);
            if (!as_json)
                std::cout << "x^" << f.n << "-1 has " << list.factors.size() << " irreducible factors over GF(" << p
                          << "^" << d << ")\n";
            recs = a.mode == "divisor" ? forge_divisors(*root, f.q, fo) : forge_congruence(*root, f.q, fo);
        } else if (a.mode == "extend") {
            if (a.divisor.empty())
                throw UsageError("extend mode needs --divisor");
            const Poly g = io::poly_from_coefficients(root->gf(), io::parse_exponent_poly(a.divisor));
            auto k = a.shift ? a.shift : find_shift(*root, f.q, g);
            if (!k)
                throw NotRational("no shift makes x^k g rational");
            recs = extension_records(construct_from_divisor(*root, f.q, g, *k));
        } else {
            throw UsageError("unknown mode '" + a.mode + "'");
        }
    }
    if (a.verify) {
        DistanceOptions dopts;
        dopts.cap = a.cap;
        for (auto& r : recs)
            verify_record(r, dopts);
    }
    if (as_json) {
        json arr = json::array();
        for (const auto& r : recs)
            arr.push_back(io::to_json(r));
        print_json(json{{"n", f.n}, {"q", f.q}, {"mode", a.mode}, {"records", arr}});
        return 0;
    }
    for (const auto& r : recs)
        print_record(r.code.root().gf(), r);
    std::cout << recs.size() << " record(s)\n";
    return 0;
}

int cmd_reproduce(const std::string& table, const std::string& emit, bool list)
{
    if (list) {
        for (auto id : repro::table_ids())
            std::cout << id << "\n";
        return 0;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = repro::reproduce(table);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostream& log = emit.empty() ? std::cout : std::cerr;
    std::size_t counts[4] = {};
    for (const auto& o : rep.rows) {
        ++counts[static_cast<int>(o.status)];
        log << repro::to_string(o.status) << "  " << o.golden.label;
        if (!o.golden.marker.empty())
            log << " [" << o.golden.marker << "]";
        for (const auto& d : o.differences)
            log << "; " << d;
        log << "\n";
    }
    for (const auto& r : rep.extra)
        log << "EXTRA  " << r.label << "\n";
    log << table << ": " << counts[0] << " match, " << counts[1] << " mismatch, " << counts[2] << " informational, "
        << counts[3] << " missing (" << secs << " s)\n";
    if (emit == "csv")
        std::cout << repro::rows_csv(repro::computed_rows(rep));
    else if (emit == "json")
        print_json(repro::rows_json(repro::computed_rows(rep)));
    return rep.ok() ? 0 : kMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic and BCH codes: BCH bound via apparent distance, certificates and constructions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    FieldArgs field;
    CodeArgs code;

    auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets modulo n and the set A(n)");
    cosets->add_option("--n", field.n, "length")->required()->check(CLI::Range(1u, kMaxLength));
    cosets->add_option("--q", field.q, "alphabet size")->default_val(2);
    cosets->add_flag("--json", as_json, "machine-readable output");

    auto* factor = app.add_subcommand("factor", "irreducible factors of x^n - 1");
    add_field_options(factor, field);
    std::uint32_t subfield = 0;
    factor->add_option("--subfield", subfield, "factor over GF(p^d)");
    factor->add_flag("--json", as_json, "machine-readable output");

    auto* analyze = app.add_subcommand("analyze", "dimension, BCH bound, Bose distance and certificate");
    add_field_options(analyze, field);
    add_code_options(analyze, code);
    bool certify = false;
    CertifyOptions copts;
    analyze->add_flag("--certify", certify, "search for a divisor certificate of d = BCH bound");
    analyze->add_option("--budget", copts.budget, "certificate search budget");
    analyze->add_option("--extra-subfield", copts.extra_subfields, "also search divisors over GF(p^d)");
    analyze->add_flag("--json", as_json, "machine-readable output");

    auto* mindist = app.add_subcommand("mindist", "exact minimum distance by enumeration");
    add_field_options(mindist, field);
    add_code_options(mindist, code);
    DistanceOptions dopts;
    mindist->add_option("--cap", dopts.cap, "maximum number of codewords to enumerate");
    mindist->add_option("--threads", dopts.threads, "worker count (default: CYCLO_THREADS or all cores)");
    mindist->add_flag("--json", as_json, "machine-readable output");

    auto* forge = app.add_subcommand("forge", "construct codes with d equal to the BCH bound");
    add_field_options(forge, field);
    ForgeArgs fargs;
    forge->add_option("--mode", fargs.mode, "divisor | congruence | primitive | extend")
        ->check(CLI::IsMember({"divisor", "congruence", "primitive", "extend"}));
    forge->add_option("--subfield", fargs.subfield, "divisors over GF(p^d)");
    forge->add_flag("--verify", fargs.verify, "brute-force check each record");
    forge->add_option("--budget", fargs.budget, "maximum number of divisors examined");
    forge->add_option("--cap", fargs.cap, "enumeration cap for --verify");
    forge->add_option("--divisor", fargs.divisor, "extend mode: divisor g as exponents");
    forge->add_option("--shift", fargs.shift, "extend mode: shift k (default: smallest that works)");
    forge->add_flag("--json", as_json, "machine-readable output");

    auto* reproduce = app.add_subcommand("reproduce", "recompute a reference table and diff it against golden data");
    std::string table, emit;
    bool list = false;
    reproduce->add_option("table", table, "table id");
    reproduce->add_option("--emit", emit, "write the recomputed table")->check(CLI::IsMember({"csv", "json"}));
    reproduce->add_flag("--list", list, "list table ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cosets)
            return cmd_cosets(field, as_json);
        if (*factor)
            return cmd_factor(field, subfield, as_json);
        if (*analyze)
            return cmd_analyze(field, code, certify, copts, as_json);
        if (*mindist)
            return cmd_mindist(field, code, dopts, as_json);
        if (*forge)
            return cmd_forge(field, fargs, as_json);
        if (*reproduce) {
            if (table.empty() && !list)
                throw UsageError("reproduce needs a table id (see --list)");
            return cmd_reproduce(table, emit, list);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.kind() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownTable& e) {
        std::cerr << "usage error: " << e.kind() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return kComputation;
    }
    return 0;
}
