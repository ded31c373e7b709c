#include "tcone/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <thread>
#include <tuple>

#include <CLI11.hpp>

#include "tcone/apery.hpp"
#include "tcone/enumerate.hpp"
#include "tcone/oracle.hpp"
#include "tcone/report.hpp"

namespace tcone::cli {

namespace {

constexpr Value kDeskScaleGenus = 25;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Filter {
    std::string key;
    Value number = 0;
    bool flag = false;
};

bool parse_bool(const std::string& text)
{
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "true" || lower == "1" || lower == "yes") return true;
    if (lower == "false" || lower == "0" || lower == "no") return false;
    throw UsageError("expected a boolean, got '" + text + "'");
}

Filter parse_filter(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("filter '" + text + "' is not of the form key=value");
    Filter f;
    f.key = text.substr(0, eq);
    const std::string value = text.substr(eq + 1);
    if (f.key == "multiplicity") f.key = "e";
    if (f.key == "e" || f.key == "r") {
        try {
            std::size_t used = 0;
            f.number = std::stoll(value, &used);
            if (used != value.size()) throw UsageError("");
        } catch (const std::exception&) {
            throw UsageError("filter '" + text + "' needs an integer value");
        }
    } else if (f.key == "cm" || f.key == "buchsbaum") {
        f.flag = parse_bool(value);
    } else {
        throw UsageError("unknown filter key '" + f.key + "' (expected e, r, cm or buchsbaum)");
    }
    return f;
}

bool accepts(const std::vector<Filter>& filters, const Report& report)
{
    for (const auto& f : filters) {
        if (f.key == "e" && report.e != f.number) return false;
        if (f.key == "r" && report.r != f.number) return false;
        if (f.key == "cm" && report.cohen_macaulay != f.flag) return false;
        if (f.key == "buchsbaum" && report.buchsbaum != f.flag) return false;
    }
    return true;
}

// Writes to --out when given, else to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }

    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_report(const std::vector<Value>& generators, const std::string& format, const std::string& path,
               std::ostream& out)
{
    const NumericalSemigroup s(generators);
    const Report report = make_report(s);
    Sink sink(path, out);
    if (format == "json") {
        sink.stream() << to_json(report).dump(2) << '\n';
    } else if (format == "csv") {
        sink.stream() << csv_header() << '\n' << csv_row(report) << '\n';
    } else {
        sink.stream() << render_text(report);
    }

    AperyTable table{report.e, report.r, report.apery_table};
    const bool consistent = validate_table(table).empty() &&
                            std::all_of(report.checks.begin(), report.checks.end(),
                                        [](const ReportCheck& c) { return c.passed; });
    return consistent ? kSuccess : kInternalError;
}

int cmd_table(const std::vector<Value>& generators, const std::string& format, const std::string& path,
              std::ostream& out)
{
    const NumericalSemigroup s(generators);
    const AperyTable table = build_apery_table(s);
    Sink sink(path, out);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["generators"] = s.minimal_generators();
        j["e"] = table.e;
        j["r"] = table.r;
        j["apery_table"] = table.rows;
        sink.stream() << j.dump(2) << '\n';
    } else if (format == "csv") {
        for (const auto& row : table.rows) sink.stream() << format_generators(row, ",") << '\n';
    } else {
        sink.stream() << format_table(table);
    }
    return validate_table(table).empty() ? kSuccess : kInternalError;
}

int cmd_selfcheck(const std::vector<Value>& generators, std::ostream& out)
{
    const NumericalSemigroup s(generators);
    const auto report = oracle::consistency_report(s);
    for (const auto& check : report.checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.passed) out << ": " << check.detail;
        out << '\n';
    }
    out << "tangent cone is " << (report.buchsbaum ? "" : "not ") << "Buchsbaum\n";
    return report.all_passed() ? kSuccess : kInternalError;
}

struct BatchOptions {
    FamilyBounds bounds;
    std::vector<std::string> filters;
    std::string format = "csv";
    std::string path;
    unsigned jobs = 0;
};

int cmd_batch(const BatchOptions& options, std::ostream& out, std::ostream& err)
{
    if (!options.bounds.max_genus && !options.bounds.max_frobenius)
        throw UsageError("batch needs --max-genus or --max-frobenius");
    if (options.bounds.max_genus && *options.bounds.max_genus > kDeskScaleGenus)
        err << "warning: --max-genus " << *options.bounds.max_genus << " exceeds the documented desk-scale bound of "
            << kDeskScaleGenus << "; enumeration may take very long\n";

    std::vector<Filter> filters;
    for (const auto& text : options.filters) filters.push_back(parse_filter(text));

    const std::vector<NumericalSemigroup> family = enumerate_semigroups(options.bounds);
    std::vector<Report> reports(family.size());

    // Workers classify disjoint indices; rows come out in tree order.
    unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, family.size())));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t k = next++; k < family.size(); k = next++)
                    reports[k] = make_report(family[k], false);
            });
    }

    using ClassKey = std::tuple<Value, int, bool, bool>;
    std::map<ClassKey, std::size_t> summary;
    std::vector<const Report*> selected;
    for (const auto& report : reports) {
        if (!accepts(filters, report)) continue;
        selected.push_back(&report);
        ++summary[{report.e, report.r, report.cohen_macaulay, report.buchsbaum}];
    }

    Sink sink(options.path, out);
    auto& stream = sink.stream();
    auto yes_no = [](bool v) { return v ? "true" : "false"; };
    if (options.format == "json") {
        nlohmann::ordered_json j;
        j["semigroups"] = nlohmann::ordered_json::array();
        for (const Report* report : selected) j["semigroups"].push_back(to_json(*report));
        j["summary"] = nlohmann::ordered_json::array();
        for (const auto& [key, count] : summary)
            j["summary"].push_back({{"e", std::get<0>(key)},
                                    {"r", std::get<1>(key)},
                                    {"cohen_macaulay", std::get<2>(key)},
                                    {"buchsbaum", std::get<3>(key)},
                                    {"count", count}});
        stream << j.dump(2) << '\n';
        return kSuccess;
    }

    std::ostream& summary_stream = options.format == "text" ? stream : err;
    if (options.format == "text") {
        for (const Report* report : selected)
            stream << '<' << format_generators(report->generators, ",") << ">  e=" << report->e
                   << " b=" << report->b << " r=" << report->r << " cm=" << yes_no(report->cohen_macaulay)
                   << " buchsbaum=" << yes_no(report->buchsbaum) << "  " << report->decomposition << '\n';
    } else {
        stream << csv_header() << '\n';
        for (const Report* report : selected) stream << csv_row(*report) << '\n';
    }
    summary_stream << "# " << selected.size() << " semigroups\n";
    for (const auto& [key, count] : summary)
        summary_stream << "# e=" << std::get<0>(key) << " r=" << std::get<1>(key)
                       << " cm=" << yes_no(std::get<2>(key)) << " buchsbaum=" << yes_no(std::get<3>(key))
                       << " count=" << count << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tangent cones of numerical semigroup rings"};
    app.require_subcommand(1);

    std::vector<Value> generators;
    std::string format = "text";
    std::string path;
    BatchOptions batch;
    Value max_genus = -1;
    Value max_multiplicity = -1;
    Value max_frobenius = -1;

    const std::vector<std::string> formats{"text", "json", "csv"};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("generators", generators, "Generators of the semigroup")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", path, "Write output to FILE");
    };

    CLI::App* report = app.add_subcommand("report", "Apery table, decomposition and classification of one semigroup");
    add_common(report);
    CLI::App* table = app.add_subcommand("table", "Print the Apery table of one semigroup");
    add_common(table);
    CLI::App* selfcheck = app.add_subcommand("selfcheck", "Cross-check every derived quantity against brute force");
    selfcheck->add_option("generators", generators, "Generators of the semigroup")->required();

    CLI::App* batch_cmd = app.add_subcommand("batch", "Classify a whole family of semigroups");
    batch_cmd->add_option("--max-genus", max_genus, "Enumerate all semigroups up to this genus");
    batch_cmd->add_option("--max-multiplicity", max_multiplicity, "Keep only semigroups with e at most this");
    batch_cmd->add_option("--max-frobenius", max_frobenius, "Keep only semigroups with F at most this");
    batch_cmd->add_option("--filter", batch.filters, "key=value with key in e, r, cm, buchsbaum (repeatable)");
    batch_cmd->add_option("--format", batch.format, "Output format")->check(CLI::IsMember(formats));
    batch_cmd->add_option("--out", batch.path, "Write output to FILE");
    batch_cmd->add_option("--jobs", batch.jobs, "Worker threads (0 = hardware concurrency)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (report->parsed()) return cmd_report(generators, format, path, out);
        if (table->parsed()) return cmd_table(generators, format, path, out);
        if (selfcheck->parsed()) return cmd_selfcheck(generators, out);
        if (batch_cmd->parsed()) {
            if (max_genus >= 0) batch.bounds.max_genus = max_genus;
            if (max_multiplicity >= 0) batch.bounds.max_multiplicity = max_multiplicity;
            if (max_frobenius >= 0) batch.bounds.max_frobenius = max_frobenius;
            return cmd_batch(batch, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::ReductionBoundExceeded ? kInternalError : kInvalidInput;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInvalidInput;
}

}  // namespace tcone::cli
