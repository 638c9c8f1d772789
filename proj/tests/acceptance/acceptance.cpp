// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// the criterion's limit. Usage: acceptance [path-to-horadam-binary]

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "horadam/catalog.hpp"
#include "horadam/cli.hpp"
#include "horadam/dsl.hpp"
#include "horadam/error.hpp"
#include "horadam/kernel.hpp"
#include "horadam/sequence.hpp"
#include "reference_table.hpp"

using namespace horadam;

namespace {

std::string g_binary;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 means no limit
    std::function<Outcome()> run;
};

Rational small_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (;;) {
        const int n = num(rng);
        if (!nonzero || n != 0) return rat(n, den(rng));
    }
}

struct SeqPair {
    Sequence g;
    Sequence h;
};

/// The named pairs plus five random pairs sharing a rational recurrence.
std::vector<SeqPair> test_pairs() {
    std::vector<SeqPair> pairs = {{fibonacci(), lucas()}, {pell(), pell_lucas()}, {jacobsthal(), jacobsthal_lucas()}};
    std::mt19937_64 rng(20240601);
    while (pairs.size() < 8) {
        const Rational p = small_rational(rng, true), q = small_rational(rng, true);
        const Rational g0 = small_rational(rng, false), g1 = small_rational(rng, true);
        const Rational h0 = small_rational(rng, false), h1 = small_rational(rng, true);
        pairs.push_back({make_sequence(p, q, g0, g1), make_sequence(p, q, h0, h1)});
    }
    return pairs;
}

std::string pair_label(const SeqPair& p) { return p.g.label() + "/" + p.h.label(); }

Outcome table_reproduction() {
    Outcome o;
    int matched = 0;
    for (const auto& row : testing::kReferenceTable) {
        const Sequence s = *named_sequence(row.sequence);
        for (std::int64_t n = testing::kTableLo; n <= testing::kTableHi; ++n) {
            const std::string_view want = row.values[static_cast<std::size_t>(n - testing::kTableLo)];
            const std::string got = term(s, n).to_string();
            if (got == want) {
                ++matched;
            } else {
                o.pass = false;
                o.detail += std::string(row.sequence) + "[" + std::to_string(n) + "]=" + got + " ";
            }
        }
    }
    o.detail = std::to_string(matched) + "/84 values match " + o.detail;
    o.pass = o.pass && matched == 84;
    return o;
}

Outcome kernel_grid(const std::string& identity, const GridSpec& grid) {
    Outcome o;
    const auto selection = KernelSelection::parse(identity);
    std::uint64_t cases = 0, failures = 0;
    for (const auto& p : test_pairs()) {
        const auto report = run_grid(make_kernel_checker(selection, p.g, p.h, std::nullopt, grid), grid);
        cases += report.cases_total;
        failures += report.counterexamples.size();
        if (report.cases_skipped_precondition > 0 || !report.holds()) {
            o.pass = false;
            o.detail += pair_label(p) + " failed; ";
        }
    }
    o.detail += std::to_string(cases) + " cases over 8 pairs, " + std::to_string(failures) + " nonzero residuals";
    return o;
}

Outcome lemmas() {
    Outcome o;
    std::vector<Sequence> seqs;
    for (auto id : named_sequence_ids()) seqs.push_back(*named_sequence(id));
    std::mt19937_64 rng(99);
    while (seqs.size() < 11)
        seqs.push_back(make_sequence(small_rational(rng, true), small_rational(rng, true), small_rational(rng, false),
                                     small_rational(rng, true)));
    std::uint64_t cases = 0;
    for (const auto& s : seqs) {
        const TermTable t(s, -64, 64);
        const auto rel = ThreeTermRelation::of(s);
        for (std::int64_t n = -5; n <= 5; ++n)
            for (std::int64_t k = 0; k <= 6; ++k) {
                std::vector<CaseResult> results = {lemma1_case(t, t, rel, n, k)};
                for (int v = 1; v <= 3; ++v) {
                    results.push_back(lemma2_case(t, rel, v, n, k));
                    results.push_back(lemma3_case(t, rel, v, n, k));
                }
                for (const auto& r : results) {
                    ++cases;
                    if (r.status != CaseResult::Status::holds) {
                        o.pass = false;
                        o.detail += s.label() + " n=" + std::to_string(n) + " k=" + std::to_string(k) + "; ";
                    }
                }
            }
    }
    o.detail += std::to_string(cases) + " lemma instances (lemma 1, lemma 2 variants 1-3, lemma 3 variants 1-3) on 11 sequences";
    return o;
}

Outcome summations() {
    Outcome o;
    const GridSpec grid({{"n", -2, 2}, {"m", -2, 2}, {"a", -1, 2}, {"b", -1, 2}, {"c", -1, 2}, {"d", -1, 2}, {"k", 0, 5}});
    std::uint64_t total = 0, skipped = 0, failures = 0;
    for (const auto& p : test_pairs())
        for (const char* kind : {"sum-ordinary", "sum-binomial"})
            for (int v = 1; v <= 3; ++v) {
                const auto selection = KernelSelection::parse(std::string(kind) + ":" + std::to_string(v));
                const auto report = run_grid(make_kernel_checker(selection, p.g, p.h, std::nullopt, grid), grid);
                total += report.cases_total;
                skipped += report.cases_skipped_precondition;
                failures += report.counterexamples.size();
                if (!report.holds()) o.pass = false;
                if (report.skipped_fraction() >= 0.5) {
                    o.pass = false;
                    o.detail += selection.to_string() + " on " + pair_label(p) + " skipped " +
                                std::to_string(report.skipped_fraction()) + "; ";
                }
            }
    std::ostringstream os;
    os << total << " cases, " << failures << " failures, " << skipped << " skipped (fraction " << std::fixed
       << std::setprecision(4) << static_cast<double>(skipped) / static_cast<double>(total) << ")";
    o.detail += os.str();
    return o;
}

Outcome catalog_sweep_all() {
    Outcome o;
    const auto list = catalog_list();
    std::uint64_t cases = 0;
    const std::array<Initials, 3> required = {Initials{0, 1}, Initials{2, 1}, Initials{3, -5}};
    for (const auto& e : list) {
        const auto defaults = catalog_default_initials(e);
        if (e.generalized_slot)
            for (const auto& r : required)
                if (std::none_of(defaults.begin(), defaults.end(),
                                 [&](const Initials& d) { return d.h0 == r.h0 && d.h1 == r.h1; })) {
                    o.pass = false;
                    o.detail += e.id + " misses a required initial pair; ";
                }
        const auto report = catalog_sweep(e);
        cases += report.cases_total;
        if (!report.holds() || report.cases_total == 0) {
            o.pass = false;
            o.detail += e.id + " has " + std::to_string(report.counterexamples.size()) + " counterexamples; ";
        }
    }
    if (list.size() < 40) o.pass = false;
    o.detail += std::to_string(list.size()) + " entries, " + std::to_string(cases) + " cases";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(4242);
    std::uint64_t compared = 0;
    for (int s_i = 0; s_i < 20; ++s_i) {
        const Sequence s = make_sequence(small_rational(rng, true), small_rational(rng, true), small_rational(rng, false),
                                         small_rational(rng, true));
        for (std::int64_t n = -500; n <= 500; ++n) {
            ++compared;
            if (term(s, n) != term_iterative_oracle(s, n)) {
                o.pass = false;
                o.detail += s.label() + " n=" + std::to_string(n) + "; ";
                break;
            }
        }
    }
    o.detail += std::to_string(compared) + " terms compared on 20 random sequences";
    return o;
}

Outcome negative_index() {
    Outcome o;
    const Rational half = rat(1, 2);
    int checks = 0;
    for (std::int64_t n = 0; n <= 40; ++n) {
        const std::array<std::pair<Rational, Rational>, 6> pairs = {{
            {term(fibonacci(), -n), sign_power(n - 1) * term(fibonacci(), n)},
            {term(lucas(), -n), sign_power(n) * term(lucas(), n)},
            {term(pell(), -n), sign_power(n - 1) * term(pell(), n)},
            {term(pell_lucas(), -n), sign_power(n) * term(pell_lucas(), n)},
            {term(jacobsthal(), -n), sign_power(n - 1) * pow(half, n) * term(jacobsthal(), n)},
            {term(jacobsthal_lucas(), -n), sign_power(n) * pow(half, n) * term(jacobsthal_lucas(), n)},
        }};
        for (const auto& [lhs, rhs] : pairs) {
            ++checks;
            if (lhs != rhs) o.pass = false;
        }
    }
    o.detail = std::to_string(checks) + " closed-form checks";
    return o;
}

Outcome big_term() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const Rational big = term(fibonacci(), 100000);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Rational oracle = term_iterative_oracle(fibonacci(), 100000);
    const std::size_t digits = decimal_digits(big.numerator());
    const std::size_t oracle_digits = decimal_digits(oracle.numerator());
    o.pass = seconds < 2.0 && digits == oracle_digits && big == oracle && big.is_integer();
    std::ostringstream os;
    os << "F_100000 has " << digits << " digits (oracle " << oracle_digits << "), term() took " << std::fixed
       << std::setprecision(3) << seconds << " s";
    o.detail = os.str();
    return o;
}

Outcome dsl_agreement() {
    Outcome o;
    std::uint64_t cases = 0;
    for (const auto& e : catalog_list()) {
        const GridSpec grid = catalog_default_grid(e);
        const auto ast = dsl::parse_identity(e.dsl);
        for (const auto& init : catalog_default_initials(e)) {
            const std::optional<Initials> slot = e.generalized_slot ? std::optional<Initials>(init) : std::nullopt;
            dsl::Registry registry = dsl::Registry::standard();
            registry.define("H", catalog_slot_sequence(e, slot));
            const auto native = catalog_run(e.id, grid, slot, {true});
            const auto text = dsl::verify_over_grid(ast, grid, registry, {true});
            bool same = native.cases.size() == text.cases.size() && text.holds();
            for (std::size_t i = 0; same && i < native.cases.size(); ++i) {
                const auto& a = native.cases[i];
                const auto& b = text.cases[i];
                same = a.bindings == b.bindings && a.result.status == b.result.status && a.result.lhs == b.result.lhs &&
                       a.result.rhs == b.result.rhs;
            }
            cases += text.cases_total;
            if (!same) {
                o.pass = false;
                o.detail += e.id + " disagrees; ";
            }
        }
    }

    std::ostringstream out, err;
    const int code = run_cli({"check", "--expr", "F[n+1]=F[n]", "--grid", "n=0..3"}, out, err);
    const auto doc = nlohmann::json::parse(out.str());
    const auto& first = doc["counterexamples"][0];
    const bool false_ok = code == 1 && first["bindings"]["n"] == 0 && first["lhs"] == "1" && first["rhs"] == "0";
    if (!false_ok) o.pass = false;
    o.detail += std::to_string(cases) + " DSL cases equal to native runs; F[n+1]=F[n] -> exit " + std::to_string(code) +
                (false_ok ? ", counterexample n=0 lhs 1 rhs 0" : ", unexpected report");
    return o;
}

struct Process {
    int code = -1;
    std::string out;
};

Process run_binary(const std::string& args) {
    Process p;
    const std::string cmd = "'" + g_binary + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return p;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
    const int status = pclose(pipe);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

bool valid_report(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    const std::array<const char*, 6> keys = {"identity", "grid", "cases_total", "cases_checked",
                                             "cases_skipped_precondition", "counterexamples"};
    if (!doc.is_object() || doc.size() != keys.size()) return false;
    for (const char* k : keys)
        if (!doc.contains(k)) return false;
    if (!doc["identity"].is_string() || !doc["grid"].is_string()) return false;
    for (const char* k : {"cases_total", "cases_checked", "cases_skipped_precondition"})
        if (!doc[k].is_number_unsigned()) return false;
    if (!doc["counterexamples"].is_array()) return false;
    for (const auto& cx : doc["counterexamples"]) {
        if (!cx.is_object() || cx.size() != 3 || !cx.contains("bindings") || !cx["bindings"].is_object()) return false;
        for (const auto& [k, v] : cx["bindings"].items())
            if (!v.is_number_integer()) return false;
        if (!cx.contains("lhs") || !cx["lhs"].is_string() || !cx.contains("rhs") || !cx["rhs"].is_string()) return false;
        for (const char* side : {"lhs", "rhs"}) {
            try {
                if (Rational::parse(cx[side].get<std::string>()).to_string() != cx[side].get<std::string>()) return false;
            } catch (const Error&) {
                return false;
            }
        }
    }
    return true;
}

Outcome cli_contract() {
    Outcome o;
    if (g_binary.empty()) return {false, "no binary path given"};
    struct Case {
        std::string args;
        int code;
        bool json;
    };
    const std::vector<Case> cases = {
        {"verify --identity theorem1 --seq fibonacci --h-seq lucas", 0, true},
        {"verify --identity sum-ordinary:1 --seq fibonacci --h-seq fibonacci --grid 'n=2,m=1,a=0,b=1,c=0,d=1,k=0..3'", 0, true},
        {"catalog run fib.catalan --grid 'n=0..8,m=0..8'", 0, true},
        {"check --expr 'F[n-m]*F[n+m] = F[n]^(2) + (-1)^(n+m+1)*F[m]^(2)' --grid 'n=0..6,m=0..6'", 0, true},
        {"check --expr 'F[n+1]=F[n]' --grid 'n=0..3'", 1, true},
        {"check --expr 'L[n] = 2*F[n+1]' --let 'X=1,1,0,1' --grid 'n=-3..3'", 1, true},
        {"eval --seq fibonacci -n 8", 0, false},
        {"table --all --from -5 --to 8 --format csv", 0, false},
        {"catalog list", 0, false},
        {"check --expr 'F[n'", 2, false},
        {"catalog run nosuch.id", 2, false},
        {"verify --identity theorem7", 2, false},
        {"verify --identity theorem1 --grid 'n=0..1'", 2, false},
        {"table --seq lucas --from 2 --to 1", 2, false},
        {"eval --p 0 --q 1 --g0 0 --g1 1 -n 1", 2, false},
        {"eval --p 1/0 --q 1 --g0 0 --g1 1 -n 1", 2, false},
        {"frobnicate", 2, false},
        {"", 2, false},
    };
    int ok = 0;
    for (const auto& c : cases) {
        const Process first = run_binary(c.args);
        const Process second = run_binary(c.args);
        bool good = first.code == c.code && first.out == second.out && first.code == second.code;
        if (c.json) good = good && valid_report(first.out);
        if (good) {
            ++ok;
        } else {
            o.pass = false;
            o.detail += "[" + c.args + "] exit " + std::to_string(first.code) + "; ";
        }
    }
    o.detail += std::to_string(ok) + "/" + std::to_string(cases.size()) +
                " invocations with expected exit code, byte-identical reruns, schema-valid JSON";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];

    const std::vector<Criterion> criteria = {
        {1, "table reproduction", 1.0, table_reproduction},
        {2, "two-sequence identity grid", 60.0,
         [] { return kernel_grid("theorem1", KernelSelection::parse("theorem1").default_grid()); }},
        {3, "corollary grid", 10.0,
         [] { return kernel_grid("corollary", KernelSelection::parse("corollary").default_grid()); }},
        {4, "three-term lemmas", 30.0, lemmas},
        {5, "summation theorems", 120.0, summations},
        {6, "catalog sweep", 120.0, catalog_sweep_all},
        {7, "oracle equivalence", 10.0, oracle_equivalence},
        {8, "negative-index closed forms", 0.0, negative_index},
        {9, "large-index performance", 0.0, big_term},
        {10, "expression language", 0.0, dsl_agreement},
        {11, "command-line contract", 0.0, cli_contract},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0.0 || seconds < c.limit_seconds;
        const bool pass = outcome.pass && in_time;
        if (!pass) ++failed;

        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << std::left << std::setw(28)
             << c.name << std::right << std::fixed << std::setprecision(2) << std::setw(8) << seconds << " s";
        if (c.limit_seconds > 0) line << " (limit " << std::setprecision(0) << c.limit_seconds << " s)";
        line << "  " << outcome.detail;
        if (!in_time) line << "  [time limit exceeded]";
        std::cout << line.str() << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
