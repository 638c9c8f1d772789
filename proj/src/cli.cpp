#include "horadam/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "horadam/catalog.hpp"
#include "horadam/dsl.hpp"
#include "horadam/error.hpp"
#include "horadam/kernel.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

namespace {

constexpr std::int64_t kMaxEvalIndex = 10'000'000;
constexpr std::int64_t kMaxTableIndex = 100'000;

/// A sequence given either by name or by its four parameters.
struct SequenceFlags {
    std::string name;
    std::string p, q, g0, g1;
    CLI::Option* name_opt = nullptr;
    std::vector<CLI::Option*> param_opts;

    void add(CLI::App& app, const std::string& what) {
        name_opt = app.add_option("--seq", name, what + " by name (" + join_ids() + ")");
        const std::pair<std::string*, const char*> params[] = {{&p, "--p"}, {&q, "--q"}, {&g0, "--g0"}, {&g1, "--g1"}};
        for (const auto& [target, flag] : params)
            param_opts.push_back(app.add_option(flag, *target, what + " parameter (rational n or n/d)"));
        for (auto* o : param_opts) o->excludes(name_opt);
    }

    bool given() const {
        if (name_opt->count() > 0) return true;
        for (auto* o : param_opts)
            if (o->count() > 0) return true;
        return false;
    }

    Sequence resolve() const {
        if (name_opt->count() > 0) {
            if (auto s = named_sequence(name)) return *s;
            throw UsageError("unknown sequence '" + name + "' (known: " + join_ids() + ")");
        }
        for (auto* o : param_opts)
            if (o->count() == 0) throw UsageError("custom sequence needs " + o->get_name() + " as well");
        return make_sequence(Rational::parse(p), Rational::parse(q), Rational::parse(g0), Rational::parse(g1));
    }

    static std::string join_ids() {
        std::string s;
        for (auto id : named_sequence_ids()) s += (s.empty() ? "" : ", ") + std::string(id);
        return s;
    }
};

std::string render(const VerificationReport& report, const std::string& format) {
    if (format == "csv") return to_csv(report);
    if (format == "text") return to_text(report);
    return to_json(report);
}

int verdict(const VerificationReport& report) { return report.holds() ? kExitHolds : kExitCounterexample; }

Sequence companion_of(const Sequence& g) {
    const auto& n = g.name();
    if (n == "fibonacci") return lucas();
    if (n == "lucas") return fibonacci();
    if (n == "pell") return pell_lucas();
    if (n == "pell-lucas") return pell();
    if (n == "jacobsthal") return jacobsthal_lucas();
    if (n == "jacobsthal-lucas") return jacobsthal();
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Parses "NAME=p,q,g0,g1".
std::pair<std::string, Sequence> parse_let(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("--let expects NAME=p,q,g0,g1, got '" + text + "'");
    std::vector<Rational> values;
    std::stringstream ss(text.substr(eq + 1));
    for (std::string item; std::getline(ss, item, ',');) values.push_back(Rational::parse(item));
    if (values.size() != 4) throw UsageError("--let expects four values p,q,g0,g1, got '" + text + "'");
    return {text.substr(0, eq), make_sequence(values[0], values[1], values[2], values[3])};
}

std::string table_output(const std::vector<Sequence>& columns, std::int64_t lo, std::int64_t hi,
                         const std::string& format) {
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> values;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        names.push_back(columns[i].name().value_or(columns.size() == 1 ? "custom" : "custom" + std::to_string(i)));
        values.push_back(term_range(columns[i], lo, hi));
    }
    std::ostringstream os;
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["from"] = lo;
        doc["to"] = hi;
        doc["sequences"] = names;
        doc["rows"] = nlohmann::ordered_json::array();
        for (std::int64_t n = lo; n <= hi; ++n) {
            nlohmann::ordered_json row;
            row["n"] = n;
            for (std::size_t c = 0; c < names.size(); ++c) row[names[c]] = values[c][static_cast<std::size_t>(n - lo)].to_string();
            doc["rows"].push_back(std::move(row));
        }
        os << doc.dump(2) << "\n";
    } else if (format == "text") {
        std::vector<std::size_t> width{1};
        for (std::int64_t n = lo; n <= hi; ++n) width[0] = std::max(width[0], std::to_string(n).size());
        for (std::size_t c = 0; c < names.size(); ++c) {
            std::size_t w = names[c].size();
            for (const auto& v : values[c]) w = std::max(w, v.to_string().size());
            width.push_back(w);
        }
        os << std::setw(static_cast<int>(width[0])) << "n";
        for (std::size_t c = 0; c < names.size(); ++c) os << "  " << std::setw(static_cast<int>(width[c + 1])) << names[c];
        os << "\n";
        for (std::int64_t n = lo; n <= hi; ++n) {
            os << std::setw(static_cast<int>(width[0])) << n;
            for (std::size_t c = 0; c < names.size(); ++c)
                os << "  " << std::setw(static_cast<int>(width[c + 1])) << values[c][static_cast<std::size_t>(n - lo)].to_string();
            os << "\n";
        }
    } else {
        os << "n";
        for (const auto& name : names) os << "," << name;
        os << "\n";
        for (std::int64_t n = lo; n <= hi; ++n) {
            os << n;
            for (const auto& column : values) os << "," << column[static_cast<std::size_t>(n - lo)].to_string();
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact evaluation of Horadam sequences and verification of their identities.", "horadam"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string output_path;
    std::string format;
    auto add_output = [&](CLI::App* sub, bool with_format) {
        sub->add_option("-o,--output", output_path, "Write the result to a file instead of standard output");
        if (with_format)
            sub->add_option("--format", format, "Output format: json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    };

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Print one term of a sequence");
    SequenceFlags eval_seq;
    eval_seq.add(*eval_cmd, "Sequence");
    std::int64_t eval_n = 0;
    eval_cmd->add_option("-n,--index", eval_n, "Term index (any integer)")->required();
    add_output(eval_cmd, false);

    // table
    auto* table_cmd = app.add_subcommand("table", "Tabulate sequences over an index range");
    std::vector<std::string> table_names;
    bool table_all = false;
    SequenceFlags table_custom;
    auto* table_seq_opt = table_cmd->add_option("--seq", table_names, "Named sequence column(s)");
    auto* table_all_opt = table_cmd->add_flag("--all", table_all, "All six named sequences");
    table_all_opt->excludes(table_seq_opt);
    const std::pair<std::string*, const char*> custom_params[] = {
        {&table_custom.p, "--p"}, {&table_custom.q, "--q"}, {&table_custom.g0, "--g0"}, {&table_custom.g1, "--g1"}};
    std::vector<CLI::Option*> table_custom_opts;
    for (const auto& [target, flag] : custom_params)
        table_custom_opts.push_back(table_cmd->add_option(flag, *target, "Custom sequence parameter"));
    std::int64_t table_from = 0, table_to = 0;
    table_cmd->add_option("--from", table_from, "First index")->required();
    table_cmd->add_option("--to", table_to, "Last index")->required();
    add_output(table_cmd, true);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verify a two-sequence identity, lemma or summation theorem over a grid");
    std::string verify_identity;
    verify_cmd->add_option("--identity", verify_identity,
                           "theorem1 | corollary | lemma1 | lemma2:V | lemma3:V | sum-ordinary:V | sum-binomial:V")
        ->required();
    SequenceFlags verify_g;
    verify_g.add(*verify_cmd, "Base sequence G");
    std::string verify_h, verify_h0, verify_h1;
    auto* h_opt = verify_cmd->add_option("--h-seq", verify_h, "Second sequence H by name");
    auto* h0_opt = verify_cmd->add_option("--h0", verify_h0, "H_0 for an H sharing G's recurrence");
    auto* h1_opt = verify_cmd->add_option("--h1", verify_h1, "H_1 for an H sharing G's recurrence");
    h0_opt->excludes(h_opt);
    h1_opt->excludes(h_opt);
    std::string rel_f1, rel_f2;
    std::int64_t rel_a = 1, rel_b = 2;
    auto* f1_opt = verify_cmd->add_option("--f1", rel_f1, "Lemma relation coefficient f1 (default p)");
    auto* f2_opt = verify_cmd->add_option("--f2", rel_f2, "Lemma relation coefficient f2 (default q)");
    verify_cmd->add_option("--ra", rel_a, "Lemma relation shift a")->default_val(1);
    verify_cmd->add_option("--rb", rel_b, "Lemma relation shift b")->default_val(2);
    std::string verify_grid;
    auto* verify_grid_opt = verify_cmd->add_option("--grid", verify_grid, "Grid, e.g. \"n=-3..3,m=-3..3;m<=n\"");
    add_output(verify_cmd, true);

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "List or run the named identity catalog");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "Print id<TAB>description for every entry");
    list_cmd->add_option("-o,--output", output_path, "Write the result to a file instead of standard output");
    auto* run_cmd = catalog_cmd->add_subcommand("run", "Verify one catalog entry");
    std::string run_id, run_grid_text, run_h0, run_h1;
    run_cmd->add_option("id", run_id, "Entry id, e.g. fib.catalan")->required();
    auto* run_grid_opt = run_cmd->add_option("--grid", run_grid_text, "Grid over the entry's free variables");
    auto* run_h0_opt = run_cmd->add_option("--h0", run_h0, "Initial H_0 of the generalized sequence");
    auto* run_h1_opt = run_cmd->add_option("--h1", run_h1, "Initial H_1 of the generalized sequence");
    add_output(run_cmd, true);

    // check
    auto* check_cmd = app.add_subcommand("check", "Verify an identity written in the expression language");
    std::string check_expr, check_file, check_grid;
    std::vector<std::string> check_lets;
    auto* expr_opt = check_cmd->add_option("--expr", check_expr, "Identity text, e.g. \"F[n+1] = F[n] + F[n-1]\"");
    auto* file_opt = check_cmd->add_option("--file", check_file, "Read the identity from a file");
    expr_opt->excludes(file_opt);
    check_cmd->add_option("--grid", check_grid, "Grid over the identity's free variables");
    check_cmd->add_option("--let", check_lets, "Declare a sequence NAME=p,q,g0,g1 (repeatable)");
    add_output(check_cmd, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? kExitHolds : kExitUsage;
    }

    std::string result;
    int code = kExitHolds;
    try {
        if (format.empty()) format = *table_cmd ? "csv" : "json";
        if (*eval_cmd) {
            if (!eval_seq.given()) throw UsageError("eval needs --seq NAME or --p --q --g0 --g1");
            if (eval_n > kMaxEvalIndex || eval_n < -kMaxEvalIndex)
                throw UsageError("index " + std::to_string(eval_n) + " outside the supported range");
            result = term(eval_seq.resolve(), eval_n).to_string() + "\n";
        } else if (*table_cmd) {
            if (table_from > table_to)
                throw UsageError("--from " + std::to_string(table_from) + " is greater than --to " + std::to_string(table_to));
            if (std::max(std::abs(table_from), std::abs(table_to)) > kMaxTableIndex)
                throw UsageError("table indices must lie within +-" + std::to_string(kMaxTableIndex));
            std::vector<Sequence> columns;
            if (table_all)
                for (auto id : named_sequence_ids()) columns.push_back(*named_sequence(id));
            for (const auto& n : table_names) {
                auto s = named_sequence(n);
                if (!s) throw UsageError("unknown sequence '" + n + "' (known: " + SequenceFlags::join_ids() + ")");
                columns.push_back(*s);
            }
            std::size_t custom_count = 0;
            for (auto* o : table_custom_opts) custom_count += o->count() > 0 ? 1 : 0;
            if (custom_count > 0) {
                if (custom_count != 4) throw UsageError("custom sequence needs all of --p --q --g0 --g1");
                columns.push_back(make_sequence(Rational::parse(table_custom.p), Rational::parse(table_custom.q),
                                                Rational::parse(table_custom.g0), Rational::parse(table_custom.g1)));
            }
            if (columns.empty()) throw UsageError("table needs --seq, --all or --p --q --g0 --g1");
            result = table_output(columns, table_from, table_to, format);
        } else if (*verify_cmd) {
            const auto selection = KernelSelection::parse(verify_identity);
            const Sequence g = verify_g.given() ? verify_g.resolve() : fibonacci();
            const bool lemma = selection.identity == KernelIdentity::lemma1 ||
                               selection.identity == KernelIdentity::lemma2 ||
                               selection.identity == KernelIdentity::lemma3;
            std::optional<Sequence> h;
            if (h_opt->count() > 0) {
                h = named_sequence(verify_h);
                if (!h) throw UsageError("unknown sequence '" + verify_h + "'");
            } else if (h0_opt->count() > 0 || h1_opt->count() > 0) {
                if (h0_opt->count() == 0 || h1_opt->count() == 0) throw UsageError("--h0 and --h1 go together");
                h = Sequence(g.params(), Rational::parse(verify_h0), Rational::parse(verify_h1));
            } else {
                h = lemma ? g : companion_of(g);
            }
            std::optional<ThreeTermRelation> rel;
            if (f1_opt->count() > 0 || f2_opt->count() > 0 || rel_a != 1 || rel_b != 2) {
                if (!lemma) throw UsageError("--f1/--f2/--ra/--rb apply to the lemmas only");
                rel = ThreeTermRelation(f1_opt->count() > 0 ? Rational::parse(rel_f1) : g.p(),
                                        f2_opt->count() > 0 ? Rational::parse(rel_f2) : g.q(), rel_a, rel_b);
            }
            const GridSpec grid = verify_grid_opt->count() > 0 ? GridSpec::parse(verify_grid) : selection.default_grid();
            const auto report = run_grid(make_kernel_checker(selection, g, *h, rel, grid), grid);
            result = render(report, format);
            code = verdict(report);
        } else if (*list_cmd) {
            std::ostringstream os;
            for (const auto& e : catalog_list()) os << e.id << "\t" << e.description << "\n";
            result = os.str();
        } else if (*run_cmd) {
            const CatalogEntry* entry = catalog_find(run_id);
            if (!entry)
                throw UsageError("unknown catalog id '" + run_id + "'; did you mean '" + catalog_suggest(run_id) + "'?");
            std::optional<Initials> init;
            if (run_h0_opt->count() > 0 || run_h1_opt->count() > 0) {
                if (run_h0_opt->count() == 0 || run_h1_opt->count() == 0) throw UsageError("--h0 and --h1 go together");
                init = Initials{Rational::parse(run_h0), Rational::parse(run_h1)};
            }
            const GridSpec grid = run_grid_opt->count() > 0 ? GridSpec::parse(run_grid_text) : catalog_default_grid(*entry);
            const auto report = catalog_run(run_id, grid, init);
            result = render(report, format);
            code = verdict(report);
        } else if (*check_cmd) {
            if (expr_opt->count() == 0 && file_opt->count() == 0) throw UsageError("check needs --expr or --file");
            const std::string text = expr_opt->count() > 0 ? check_expr : read_file(check_file);
            dsl::Registry registry = dsl::Registry::standard();
            for (const auto& let : check_lets) {
                auto [name, seq] = parse_let(let);
                registry.define(name, std::move(seq));
            }
            const auto ast = dsl::parse_identity(text);
            const GridSpec grid = GridSpec::parse(check_grid);
            const auto report = dsl::verify_over_grid(ast, grid, registry);
            result = render(report, format);
            code = verdict(report);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!output_path.empty()) {
        std::ofstream file(output_path, std::ios::binary);
        if (!(file << result)) {
            err << "error: cannot write '" << output_path << "'\n";
            return kExitUsage;
        }
    } else {
        out << result;
    }
    return code;
}

}  // namespace horadam
