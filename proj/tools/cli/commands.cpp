#include "commands.hpp"

#include "cache.hpp"
#include "format.hpp"
#include "reference_data.hpp"

#include "flc/labeling.hpp"
#include "flc/numtheory.hpp"
#include "flc/serialize.hpp"
#include "flc/survey.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace flc::cli {

namespace {

// Options shared by the scanning subcommands.
struct ScanFlags {
    std::string format = "human";
    std::string cache_file;
    bool no_cache = false;
    unsigned workers = 1;
};

void add_format(CLI::App* sub, std::string& format)
{
    sub->add_option("--format", format, "Output format: human, csv or json")
        ->check(CLI::IsMember({"human", "csv", "json"}));
}

void add_scan_flags(CLI::App* sub, ScanFlags& flags)
{
    add_format(sub, flags.format);
    sub->add_option("--cache", flags.cache_file, std::string("Classification cache file (default: $") + kCacheEnvVar + ")");
    sub->add_flag("--no-cache", flags.no_cache, "Recompute everything; ignore any cache file");
    sub->add_option("--workers", flags.workers, "Parallel scan workers")->check(CLI::Range(1U, 256U));
}

// Owns the cache (if any) for the duration of one command.
class ScanContext {
public:
    explicit ScanContext(const ScanFlags& flags)
    {
        options_.workers = flags.workers;
        if (flags.no_cache) {
            return;
        }
        std::string file = flags.cache_file;
        if (file.empty()) {
            if (const char* env = std::getenv(kCacheEnvVar); env != nullptr) {
                file = env;
            }
        }
        if (!file.empty()) {
            cache_ = std::make_unique<JsonLinesCache>(file);
            options_.cache = cache_.get();
        }
    }

    const ScanOptions& options() const noexcept { return options_; }

private:
    std::unique_ptr<JsonLinesCache> cache_;
    ScanOptions options_;
};

Json optional_cell(const std::optional<std::uint64_t>& value) { return value ? Json(*value) : Json(nullptr); }

std::string k_text(std::int64_t k) { return k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k); }

Json read_json_file(const std::string& file)
{
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot read " + file);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(file + ": " + e.what());
    }
}

void write_text_file(const std::string& file, const std::string& text)
{
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot write " + file);
    }
    out << text;
}

// Raw F_i when it fits in 64 bits.
std::vector<std::optional<std::int64_t>> raw_terms(const InitialPair& pair, std::uint64_t count)
{
    std::vector<std::optional<std::int64_t>> terms;
    std::int64_t x = pair.a();
    std::int64_t y = pair.b();
    bool overflow = false;
    for (std::uint64_t i = 0; i < count; ++i) {
        terms.push_back(overflow ? std::nullopt : std::optional<std::int64_t>(x));
        std::int64_t next = 0;
        overflow = overflow || __builtin_add_overflow(x, y, &next);
        x = y;
        y = next;
    }
    return terms;
}

} // namespace

Graph parse_graph_spec(const std::string& spec)
{
    std::vector<std::string> parts;
    std::stringstream stream(spec);
    for (std::string part; std::getline(stream, part, ':');) {
        parts.push_back(part);
    }
    auto number = [&](std::size_t i) -> std::uint64_t {
        if (i >= parts.size()) {
            throw std::invalid_argument("graph spec '" + spec + "' is missing an argument");
        }
        std::size_t used = 0;
        const unsigned long long value = std::stoull(parts[i], &used);
        if (used != parts[i].size()) {
            throw std::invalid_argument("bad number '" + parts[i] + "' in graph spec");
        }
        return value;
    };
    if (parts.empty()) {
        throw std::invalid_argument("empty graph spec");
    }
    const std::string& family = parts[0];
    if (family == "path") {
        return path(number(1));
    }
    if (family == "cycle") {
        return cycle(number(1));
    }
    if (family == "star") {
        return star(number(1));
    }
    if (family == "wheel") {
        return wheel(number(1));
    }
    if (family == "complete") {
        return complete(number(1));
    }
    if (family == "empty") {
        return empty_graph(number(1));
    }
    if (family == "connected") {
        return connected_graph(number(1), number(2), parts.size() > 3 ? number(3) : 1);
    }
    throw std::invalid_argument("unknown graph family '" + family +
                                "' (path, cycle, star, wheel, complete, empty, connected)");
}

namespace {

// pisano ----------------------------------------------------------------------

struct PisanoArgs {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::uint64_t m = 0;
    std::string format = "human";
};

void cmd_pisano(const PisanoArgs& args, std::ostream& out)
{
    const InitialPair pair(args.a, args.b);
    const std::uint64_t period = pisano_period(pair, args.m);
    const auto format = parse_format(args.format);
    if (format == OutputFormat::human) {
        out << period << '\n';
        return;
    }
    render({{"a", "b", "m", "period"}, {{args.a, args.b, args.m, period}}}, format, out);
}

// classify --------------------------------------------------------------------

struct ClassifyArgs {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::uint64_t p = 0;
    bool members = false;
    std::string format = "human";
};

void cmd_classify(const ClassifyArgs& args, std::ostream& out)
{
    const InitialPair pair(args.a, args.b);
    require_odd_prime(args.p);
    const PLRecord record = classify(args.p, pair);
    const auto format = parse_format(args.format);

    std::optional<LambdaPartition> partition;
    if (args.members) {
        partition = lambda_partition(args.p, pair);
    }
    if (format == OutputFormat::human) {
        out << "p        " << record.prime << '\n'
            << "pair     " << to_string(pair) << '\n'
            << "period   " << record.period << '\n'
            << "|L_-1|   " << record.lambda.minus << '\n'
            << "|L_0|    " << record.lambda.zero << '\n'
            << "|L_1|    " << record.lambda.plus << '\n'
            << "k        " << record.k << '\n';
        if (partition) {
            auto list = [](const std::vector<std::uint64_t>& xs) {
                std::string text;
                for (const std::uint64_t x : xs) {
                    text += (text.empty() ? "" : " ") + std::to_string(x);
                }
                return "{" + text + "}";
            };
            out << "L_-1     " << list(partition->members_minus) << '\n'
                << "L_0      " << list(partition->members_zero) << '\n'
                << "L_1      " << list(partition->members_plus) << '\n';
        }
        out << record.prime << " is a " << k_text(record.k) << "-PL prime relative to " << to_string(pair) << '\n';
        return;
    }
    Table table{{"a", "b", "p", "period", "l_minus", "l_zero", "l_plus", "k"}, {}};
    std::vector<Json> row{args.a,
                          args.b,
                          record.prime,
                          record.period,
                          record.lambda.minus,
                          record.lambda.zero,
                          record.lambda.plus,
                          record.k};
    if (partition) {
        table.columns.insert(table.columns.end(), {"members_minus", "members_zero", "members_plus"});
        row.emplace_back(partition->members_minus);
        row.emplace_back(partition->members_zero);
        row.emplace_back(partition->members_plus);
    }
    table.rows.push_back(std::move(row));
    render(table, format, out);
}

// zeta / theta / omega / curve --------------------------------------------------

struct ZetaArgs {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::optional<std::int64_t> k;
    std::int64_t k_min = 0;
    std::int64_t k_max = -1;
    std::uint64_t bound = kDefaultSurveyBound;
    ScanFlags scan;
};

Table zeta_rows(const std::vector<ZetaEntry>& entries)
{
    Table table{{"k", "prime", "bound"}, {}};
    for (const ZetaEntry& e : entries) {
        table.rows.push_back({e.k, e.prime, e.bound});
    }
    return table;
}

void cmd_zeta(const ZetaArgs& args, std::ostream& out)
{
    const InitialPair pair(args.a, args.b);
    const ScanContext context(args.scan);
    std::vector<ZetaEntry> entries;
    if (args.k) {
        if (auto entry = zeta(pair, *args.k, args.bound, context.options())) {
            entries.push_back(*entry);
        }
    } else {
        entries = zeta_table(pair, args.k_min, args.k_max, args.bound, context.options());
    }
    const auto format = parse_format(args.scan.format);
    if (format == OutputFormat::human && args.k && entries.empty()) {
        out << "no " << k_text(*args.k) << "-PL prime relative to " << to_string(pair) << " up to " << args.bound
            << '\n';
        return;
    }
    if (format == OutputFormat::human && args.k) {
        out << entries.front().prime << '\n';
        return;
    }
    render(zeta_rows(entries), format, out);
}

struct ThetaArgs {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::int64_t k = 0;
    std::size_t count = 10;
    std::uint64_t bound = kDefaultSurveyBound;
    ScanFlags scan;
};

void cmd_theta(const ThetaArgs& args, std::ostream& out)
{
    const InitialPair pair(args.a, args.b);
    const ScanContext context(args.scan);
    const auto primes = theta_prefix(pair, args.k, args.count, args.bound, context.options());
    const auto format = parse_format(args.scan.format);
    if (format == OutputFormat::human) {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            out << (i ? ", " : "") << primes[i];
        }
        out << '\n';
        return;
    }
    Table table{{"n", "prime"}, {}};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        table.rows.push_back({i + 1, primes[i]});
    }
    render(table, format, out);
}

struct OmegaArgs {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::int64_t k = 0;
    std::uint64_t n_max = kDefaultSurveyBound;
    std::uint64_t step = 0;
    ScanFlags scan;
};

void cmd_omega(const OmegaArgs& args, std::ostream& out)
{
    const InitialPair pair(args.a, args.b);
    const ScanContext context(args.scan);
    const std::uint64_t step = args.step == 0 ? std::max<std::uint64_t>(args.n_max, 1) : args.step;
    const SurveyCounts counts = omega_series(pair, args.k, args.n_max, step, context.options());
    const auto format = parse_format(args.scan.format);
    if (format == OutputFormat::human && counts.series.size() == 1) {
        out << counts.series.front().second << '\n';
        return;
    }
    Table table{{"n", "count"}, {}};
    for (const auto& [n, count] : counts.series) {
        table.rows.push_back({n, count});
    }
    render(table, format, out);
}

struct CurveArgs {
    double c = 0.0;
    std::int64_t k_min = -42;
    std::int64_t k_max = 42;
    std::int64_t k_step = 1;
    std::string format = "csv";
};

void cmd_curve(const CurveArgs& args, std::ostream& out)
{
    if (args.k_step <= 0) {
        throw std::invalid_argument("--k-step must be positive");
    }
    std::vector<std::int64_t> ks;
    for (std::int64_t k = args.k_min; k <= args.k_max; k += args.k_step) {
        ks.push_back(k);
    }
    Table table{{"k", "g"}, {}};
    for (const ReferencePoint& point : reference_curve(args.c, ks)) {
        table.rows.push_back({point.k, real(point.g)});
    }
    render(table, parse_format(args.format), out);
}

// label / verify ----------------------------------------------------------------

struct LabelArgs {
    std::string theorem;
    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::uint64_t q = 1;
    std::string op;
    std::string g_spec;
    std::string g_file;
    std::string h_spec;
    std::string h_file;
    std::string hs_spec;
    std::string hs_file;
    std::string out_file;
    bool unchecked = false;
    std::string format = "human";
};

Graph graph_input(const std::string& spec, const std::string& file, const char* what)
{
    if (!file.empty()) {
        return graph_from_json(read_json_file(file));
    }
    if (!spec.empty()) {
        return parse_graph_spec(spec);
    }
    throw std::invalid_argument(std::string("this theorem needs ") + what);
}

Construction construct(const LabelArgs& args)
{
    const InitialPair pair(args.a, args.b);
    const Checking checking = args.unchecked ? Checking::unchecked : Checking::strict;
    require_odd_prime(args.p);
    const std::string& t = args.theorem;
    if (t == "path") {
        return label_path(args.p, pair, args.q, checking);
    }
    if (t == "star") {
        return label_star(args.p, pair, args.q, checking);
    }
    if (t == "wheel") {
        return label_wheel(args.p, pair, args.q, checking);
    }
    if (t == "product") {
        if (args.op.empty()) {
            throw std::invalid_argument("--theorem product needs --op");
        }
        return label_cycle_product(args.p, pair, args.q, graph_input(args.g_spec, args.g_file, "--g or --graph-file"),
                                   parse_product_kind(args.op), checking);
    }
    if (t == "corona-path") {
        return label_corona_path(args.p, pair, graph_input(args.g_spec, args.g_file, "--g or --graph-file"),
                                 checking);
    }
    if (t == "corona") {
        return label_corona(args.p, pair, graph_input(args.g_spec, args.g_file, "--g or --graph-file"),
                            graph_input(args.h_spec, args.h_file, "--h or --h-file"), checking);
    }
    if (t == "join") {
        std::vector<Graph> hs;
        if (!args.hs_file.empty()) {
            const Json list = read_json_file(args.hs_file);
            if (!list.is_array()) {
                throw std::invalid_argument("--hs-file must hold a JSON array of graphs");
            }
            for (const Json& item : list) {
                hs.push_back(graph_from_json(item));
            }
        } else if (!args.hs_spec.empty()) {
            const std::uint64_t pi = pisano_period(pair, args.p);
            hs.assign(pi > 1 ? pi - 1 : 0, parse_graph_spec(args.hs_spec));
        } else {
            throw std::invalid_argument("--theorem join needs --hs or --hs-file");
        }
        return label_join(args.p, pair, graph_input(args.g_spec, args.g_file, "--g or --graph-file"), hs, checking);
    }
    throw std::invalid_argument("unknown theorem '" + t + "'");
}

int cmd_label(const LabelArgs& args, std::ostream& out, std::ostream& err)
{
    const InitialPair pair(args.a, args.b);
    const Construction built = construct(args);
    const EdgeLabelSummary actual = evaluate(built.labeling, args.p, pair);
    const bool matches = actual == built.predicted;

    if (!args.out_file.empty()) {
        write_text_file(args.out_file, labeling_to_json(built.labeling, args.p, pair).dump(2) + "\n");
    }
    const auto format = parse_format(args.format);
    if (format == OutputFormat::human) {
        out << args.theorem << ": order " << built.labeling.graph().order() << ", size "
            << built.labeling.graph().size() << '\n'
            << (actual.cordial() ? "cordial" : "not cordial") << ": e0 = " << actual.e0 << ", e1 = " << actual.e1
            << '\n'
            << "predicted: e0 = " << built.predicted.e0 << ", e1 = " << built.predicted.e1
            << ", e0 - e1 = " << built.epsilon << (matches ? " (matches)" : " (MISMATCH)") << '\n';
    } else {
        render({{"theorem", "p", "a", "b", "order", "size", "e0", "e1", "cordial", "predicted_e0", "predicted_e1",
                 "epsilon", "matches_prediction"},
                {{args.theorem, args.p, args.a, args.b, built.labeling.graph().order(),
                  built.labeling.graph().size(), actual.e0, actual.e1, actual.cordial(), built.predicted.e0,
                  built.predicted.e1, built.epsilon, matches}}},
               format, out);
    }
    if (!args.unchecked && (!matches || !actual.cordial())) {
        err << "error: constructed labeling failed verification\n";
        return 1;
    }
    return 0;
}

struct VerifyArgs {
    std::string file;
    std::string format = "human";
};

void cmd_verify(const VerifyArgs& args, std::ostream& out)
{
    const Json document = read_json_file(args.file);
    const LabelingDocument doc = labeling_from_json(document);
    require_odd_prime(doc.p);
    const EdgeLabelSummary actual = evaluate(doc.labeling, doc.p, doc.pair);
    if (document.contains("e0") && document.contains("e1") && !(doc.summary == actual)) {
        throw std::invalid_argument("stored summary (e0 = " + std::to_string(doc.summary.e0) + ", e1 = " +
                                    std::to_string(doc.summary.e1) + ") does not match the labeling (e0 = " +
                                    std::to_string(actual.e0) + ", e1 = " + std::to_string(actual.e1) + ")");
    }
    if (document.contains("cordial") && document.at("cordial").get<bool>() != actual.cordial()) {
        throw std::invalid_argument("stored cordial flag does not match the labeling");
    }
    const auto format = parse_format(args.format);
    if (format == OutputFormat::human) {
        out << (actual.cordial() ? "cordial" : "not cordial") << ": e0 = " << actual.e0 << ", e1 = " << actual.e1
            << '\n';
        return;
    }
    render({{"p", "a", "b", "order", "size", "e0", "e1", "cordial"},
            {{doc.p, doc.pair.a(), doc.pair.b(), doc.labeling.graph().order(), doc.labeling.graph().size(),
              actual.e0, actual.e1, actual.cordial()}}},
           format, out);
}

// tables / plotdata -------------------------------------------------------------

struct TablesArgs {
    int which = 0;
    std::optional<std::uint64_t> bound;
    std::uint64_t p = 3;
    std::int64_t a = 0;
    std::int64_t b = 1;
    ScanFlags scan;
};

void table_legendre_row(const TablesArgs& args, std::ostream& out)
{
    const InitialPair pair(args.a, args.b);
    const LambdaPartition partition = lambda_partition(args.p, pair);
    const PeriodTable residues(pair, args.p);
    const auto raw = raw_terms(pair, partition.period);
    const auto format = parse_format(args.scan.format);
    Table table{{"i", "F_i", "F_i_mod_p", "legendre"}, {}};
    for (std::uint64_t i = 0; i < partition.period; ++i) {
        const std::uint64_t r = residues.at(i);
        table.rows.push_back({i, raw[i] ? Json(*raw[i]) : Json(nullptr), r,
                              legendre_symbol(static_cast<std::int64_t>(r), args.p)});
    }
    if (format != OutputFormat::human) {
        render(table, format, out);
        return;
    }
    // Transposed, one row per quantity.
    const std::vector<std::string> heads{"i", "F_i", "(F_i/" + std::to_string(args.p) + ")"};
    const std::vector<std::size_t> source{0, 1, 3};
    std::vector<std::size_t> width(table.rows.size(), 0);
    for (std::size_t c = 0; c < table.rows.size(); ++c) {
        for (const std::size_t s : source) {
            width[c] = std::max(width[c], cell_text(table.rows[c][s]).size());
        }
    }
    std::size_t head_width = 0;
    for (const auto& h : heads) {
        head_width = std::max(head_width, h.size());
    }
    for (std::size_t r = 0; r < heads.size(); ++r) {
        std::string line = heads[r];
        line.resize(head_width, ' ');
        for (std::size_t c = 0; c < table.rows.size(); ++c) {
            std::string cell = cell_text(table.rows[c][source[r]]);
            line += " | " + std::string(width[c] - cell.size(), ' ') + cell;
        }
        out << line << '\n';
    }
}

void table_zeta(const TablesArgs& args, std::ostream& out)
{
    const InitialPair pair(0, 1);
    const ScanContext context(args.scan);
    const std::uint64_t bound = args.bound.value_or(kDefaultSurveyBound);
    const std::int64_t k_min = kPublishedZeta.front().k;
    const std::int64_t k_max = kPublishedZeta.back().k;

    std::map<std::int64_t, std::pair<std::optional<std::uint64_t>, std::optional<std::uint64_t>>> rows;
    for (const ZetaEntry& e : zeta_table(pair, k_min, k_max, bound, context.options())) {
        rows[e.k].first = e.prime;
    }
    for (const PublishedZeta& z : kPublishedZeta) {
        rows[z.k].second = z.prime;
    }
    Table table{{"k", "prime", "bound", "published", "published_is_k_pl", "discrepant"}, {}};
    for (const auto& [k, values] : rows) {
        const auto& [computed, published] = values;
        Json verified = nullptr;
        if (published) {
            verified = classify(*published, pair).k == k;
        }
        const bool discrepant = published && computed != published;
        table.rows.push_back({k, optional_cell(computed), bound, optional_cell(published), verified, discrepant});
    }
    render(table, parse_format(args.scan.format), out);
}

void table_theta(const TablesArgs& args, std::ostream& out)
{
    const ScanContext context(args.scan);
    const std::uint64_t bound = args.bound.value_or(300);
    Table table{{"a", "b", "primes", "published", "matches", "flag"}, {}};
    for (const PublishedThetaRow& row : published_theta_rows()) {
        const auto primes = theta_prefix(InitialPair(row.a, row.b), 0, 10, bound, context.options());
        const std::vector<std::uint64_t> first_ten(row.primes.begin(),
                                                   row.primes.begin() + std::min<std::size_t>(10, row.primes.size()));
        const std::string flag =
            row.primes.size() == 10 ? "" : "published row lists " + std::to_string(row.primes.size()) + " values";
        table.rows.push_back({row.a, row.b, primes, row.primes, primes == first_ten, flag});
    }
    render(table, parse_format(args.scan.format), out);
}

void cmd_tables(const TablesArgs& args, std::ostream& out)
{
    switch (args.which) {
    case 1: table_legendre_row(args, out); return;
    case 2: table_zeta(args, out); return;
    case 3: table_theta(args, out); return;
    default: throw std::invalid_argument("unknown table " + std::to_string(args.which) + " (1, 2 or 3)");
    }
}

struct PlotArgs {
    int figure = 0;
    std::optional<double> c;
    std::uint64_t bound = kDefaultSurveyBound;
    std::uint64_t step = 100;
    ScanFlags scan;
};

void cmd_plotdata(const PlotArgs& args, std::ostream& out)
{
    const ScanContext context(args.scan);
    const auto format = parse_format(args.scan.format);
    if (args.figure == 6) {
        Table table{{"a", "b", "n", "count"}, {}};
        for (const auto& [a, b] : kOmegaFigurePairs) {
            const SurveyCounts counts = omega_series(InitialPair(a, b), 0, args.bound, args.step, context.options());
            for (const auto& [n, count] : counts.series) {
                table.rows.push_back({a, b, n, count});
            }
        }
        render(table, format, out);
        return;
    }
    for (const FigureSpec& spec : kScatterFigures) {
        if (spec.id != args.figure) {
            continue;
        }
        const double c = args.c.value_or(spec.c);
        const auto entries = zeta_scatter(InitialPair(spec.a, spec.b), args.bound, context.options());
        Table table = zeta_rows(entries);
        if (c > 0.0) {
            std::vector<std::int64_t> ks;
            for (const ZetaEntry& e : entries) {
                ks.push_back(e.k);
            }
            const auto curve = reference_curve(c, ks);
            table.columns.insert(table.columns.end(), {"g", "above"});
            for (std::size_t i = 0; i < entries.size(); ++i) {
                table.rows[i].push_back(real(curve[i].g));
                table.rows[i].push_back(above_reference(entries[i], c));
            }
        }
        render(table, format, out);
        return;
    }
    throw std::invalid_argument("unknown figure " + std::to_string(args.figure) + " (1-6)");
}

// graph -------------------------------------------------------------------------

struct GraphArgs {
    std::string spec;
    std::string op;
    std::vector<std::string> with;
    std::string out_file;
};

void cmd_graph(const GraphArgs& args, std::ostream& out)
{
    Graph g = parse_graph_spec(args.spec);
    if (!args.op.empty()) {
        if (args.with.empty()) {
            throw std::invalid_argument("--op needs --with");
        }
        if (args.op == "union") {
            std::vector<Graph> parts{g};
            for (const auto& spec : args.with) {
                parts.push_back(parse_graph_spec(spec));
            }
            g = graph_union(parts);
        } else {
            const Graph other = parse_graph_spec(args.with.front());
            if (args.op == "join") {
                g = join(g, other);
            } else if (args.op == "corona") {
                g = corona(g, other);
            } else {
                g = product(parse_product_kind(args.op), g, other);
            }
        }
    }
    const std::string text = graph_to_json(g).dump(2) + "\n";
    if (args.out_file.empty()) {
        out << text;
    } else {
        write_text_file(args.out_file, text);
    }
}

// Turns argv-style strings into a CLI11 parse.
void parse(CLI::App& app, const std::vector<std::string>& args)
{
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fibonacci-Legendre cordial labelings and k-Pisano-Legendre prime surveys", "flc"};
    app.require_subcommand(1);

    PisanoArgs pisano;
    auto* sub_pisano = app.add_subcommand("pisano", "Pisano period of (a,b) modulo m");
    sub_pisano->add_option("--a", pisano.a, "F_0");
    sub_pisano->add_option("--b", pisano.b, "F_1");
    sub_pisano->add_option("--m", pisano.m, "Modulus (>= 2)")->required();
    add_format(sub_pisano, pisano.format);

    ClassifyArgs classify_args;
    auto* sub_classify = app.add_subcommand("classify", "Lambda partition and k of an odd prime");
    sub_classify->add_option("--a", classify_args.a, "F_0");
    sub_classify->add_option("--b", classify_args.b, "F_1");
    sub_classify->add_option("--p", classify_args.p, "Odd prime")->required();
    sub_classify->add_flag("--lambda-members", classify_args.members, "List the member indices of each class");
    add_format(sub_classify, classify_args.format);

    ZetaArgs zeta_args;
    auto* sub_zeta = app.add_subcommand("zeta", "Smallest k-PL prime(s) up to a bound");
    sub_zeta->add_option("--a", zeta_args.a, "F_0");
    sub_zeta->add_option("--b", zeta_args.b, "F_1");
    auto* k_opt = sub_zeta->add_option("--k", zeta_args.k, "Single k");
    sub_zeta->add_option("--k-min", zeta_args.k_min, "Range start")->excludes(k_opt);
    sub_zeta->add_option("--k-max", zeta_args.k_max, "Range end")->excludes(k_opt);
    sub_zeta->add_option("--bound", zeta_args.bound, "Largest prime scanned");
    add_scan_flags(sub_zeta, zeta_args.scan);

    ThetaArgs theta_args;
    auto* sub_theta = app.add_subcommand("theta", "First k-PL primes up to a bound");
    sub_theta->add_option("--a", theta_args.a, "F_0");
    sub_theta->add_option("--b", theta_args.b, "F_1");
    sub_theta->add_option("--k", theta_args.k, "k (default 0)");
    sub_theta->add_option("--count", theta_args.count, "How many primes (default 10)");
    sub_theta->add_option("--bound", theta_args.bound, "Largest prime scanned");
    add_scan_flags(sub_theta, theta_args.scan);

    OmegaArgs omega_args;
    auto* sub_omega = app.add_subcommand("omega", "Number of k-PL primes up to n");
    sub_omega->add_option("--a", omega_args.a, "F_0");
    sub_omega->add_option("--b", omega_args.b, "F_1");
    sub_omega->add_option("--k", omega_args.k, "k (default 0)");
    sub_omega->add_option("--nmax", omega_args.n_max, "Largest n");
    sub_omega->add_option("--step", omega_args.step, "Spacing of the sample points (default: nmax)");
    add_scan_flags(sub_omega, omega_args.scan);

    CurveArgs curve_args;
    auto* sub_curve = app.add_subcommand("curve", "Reference curve g(k) = c k^2");
    sub_curve->add_option("--c", curve_args.c, "Constant in (0, 1)")->required();
    sub_curve->add_option("--k-min", curve_args.k_min, "First k");
    sub_curve->add_option("--k-max", curve_args.k_max, "Last k");
    sub_curve->add_option("--k-step", curve_args.k_step, "Spacing of k");
    add_format(sub_curve, curve_args.format);

    LabelArgs label_args;
    auto* sub_label = app.add_subcommand("label", "Build and verify a constructive FLC labeling");
    sub_label->set_help_flag("--help", "Print this help message and exit"); // -h is not free: --h names graph H
    sub_label->add_option("--theorem", label_args.theorem, "path, star, wheel, product, corona-path, join, corona")
        ->required()
        ->check(CLI::IsMember({"path", "star", "wheel", "product", "corona-path", "join", "corona"}));
    sub_label->add_option("--p", label_args.p, "Odd prime")->required();
    sub_label->add_option("--a", label_args.a, "F_0");
    sub_label->add_option("--b", label_args.b, "F_1");
    sub_label->add_option("--q", label_args.q, "Number of periods (default 1)");
    sub_label->add_option("--op", label_args.op, "Product: lexicographic, cartesian, tensor, strong");
    sub_label->add_option("--g", label_args.g_spec, "Graph G as a spec, e.g. path:2 or connected:32:480:7");
    sub_label->add_option("--graph-file", label_args.g_file, "Graph G as a JSON file");
    sub_label->add_option("--h", label_args.h_spec, "Graph H as a spec (corona)");
    sub_label->add_option("--h-file", label_args.h_file, "Graph H as a JSON file (corona)");
    sub_label->add_option("--hs", label_args.hs_spec, "Spec replicated pi-1 times for the join's H");
    sub_label->add_option("--hs-file", label_args.hs_file, "JSON array of graphs for the join's H");
    sub_label->add_option("--out", label_args.out_file, "Write the labeling JSON here");
    sub_label->add_flag("--unchecked", label_args.unchecked, "Skip hypothesis checks");
    add_format(sub_label, label_args.format);

    VerifyArgs verify_args;
    auto* sub_verify = app.add_subcommand("verify", "Re-evaluate a labeling JSON file");
    sub_verify->add_option("--labeling-file", verify_args.file, "Labeling JSON")->required();
    add_format(sub_verify, verify_args.format);

    TablesArgs tables_args;
    auto* sub_tables = app.add_subcommand("tables", "Regenerate a reproduction table");
    sub_tables->add_option("--which", tables_args.which, "1, 2 or 3")->required();
    sub_tables->add_option("--bound", tables_args.bound, "Largest prime scanned");
    sub_tables->add_option("--p", tables_args.p, "Prime for table 1 (default 3)");
    sub_tables->add_option("--a", tables_args.a, "F_0 for table 1");
    sub_tables->add_option("--b", tables_args.b, "F_1 for table 1");
    add_scan_flags(sub_tables, tables_args.scan);

    PlotArgs plot_args;
    auto* sub_plot = app.add_subcommand("plotdata", "Emit the dataset behind a figure");
    sub_plot->add_option("--figure", plot_args.figure, "1-6")->required();
    sub_plot->add_option("--c", plot_args.c, "Reference constant (figures 1-5)");
    sub_plot->add_option("--bound", plot_args.bound, "Largest prime / n scanned");
    sub_plot->add_option("--step", plot_args.step, "Sample spacing for figure 6");
    add_scan_flags(sub_plot, plot_args.scan);

    GraphArgs graph_args;
    auto* sub_graph = app.add_subcommand("graph", "Write a graph as JSON");
    sub_graph->add_option("--spec", graph_args.spec, "Graph spec")->required();
    sub_graph->add_option("--op", graph_args.op, "union, join, corona, lexicographic, cartesian, tensor, strong");
    sub_graph->add_option("--with", graph_args.with, "Second operand spec(s)");
    sub_graph->add_option("--out", graph_args.out_file, "Output file");

    try {
        parse(app, args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*sub_pisano) {
            cmd_pisano(pisano, out);
        } else if (*sub_classify) {
            cmd_classify(classify_args, out);
        } else if (*sub_zeta) {
            if (!zeta_args.k && zeta_args.k_min > zeta_args.k_max) {
                throw std::invalid_argument("zeta needs --k or a range --k-min/--k-max");
            }
            cmd_zeta(zeta_args, out);
        } else if (*sub_theta) {
            cmd_theta(theta_args, out);
        } else if (*sub_omega) {
            cmd_omega(omega_args, out);
        } else if (*sub_curve) {
            cmd_curve(curve_args, out);
        } else if (*sub_label) {
            return cmd_label(label_args, out, err);
        } else if (*sub_verify) {
            cmd_verify(verify_args, out);
        } else if (*sub_tables) {
            cmd_tables(tables_args, out);
        } else if (*sub_plot) {
            cmd_plotdata(plot_args, out);
        } else if (*sub_graph) {
            cmd_graph(graph_args, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace flc::cli
