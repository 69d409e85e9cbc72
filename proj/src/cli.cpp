#include "ore/cli.hpp"

#include "ore/bound.hpp"
#include "ore/construct.hpp"
#include "ore/errors.hpp"
#include "ore/graph6.hpp"
#include "ore/oracle.hpp"
#include "ore/recognize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace ore::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { G6, Json };

struct Config {
    int n = 0;
    int d = 0;
    Format format = Format::G6;
    unsigned jobs = 1;
    bool pruned = false;
    std::size_t limit = kDefaultGeodesicLimit;
    bool certificate = false;
    bool strict = false;
};

std::string join(const std::vector<Vertex>& vs, char sep)
{
    std::string out;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k)
            out.push_back(sep);
        out += std::to_string(vs[k]);
    }
    return out;
}

std::string choice_letters(const Certificate& c)
{
    std::string out;
    for (auto ch : c.choice)
        out.push_back(ch == TripleChoice::FirstThree ? 'F' : 'L');
    return out;
}

Json certificate_json(const Certificate& c)
{
    Json choices = Json::array();
    for (auto ch : c.choice)
        choices.push_back(ch == TripleChoice::FirstThree ? "first" : "last");
    return Json{{"path", c.path},
                {"s", c.s_vertices},
                {"window_start", c.window_start},
                {"window_len", c.window_len},
                {"choice", choices}};
}

int cmd_bound(const Config& cfg, std::ostream& out)
{
    const auto b = bound_breakdown({cfg.n, cfg.d});
    if (cfg.format == Format::Json) {
        out << Json{{"n", cfg.n},
                    {"d", cfg.d},
                    {"total", b.total},
                    {"path_edges", b.path_edges},
                    {"cross_edges", b.cross_edges},
                    {"clique_edges", b.clique_edges}}
                   .dump()
            << '\n';
    } else {
        out << "n=" << cfg.n << " d=" << cfg.d << " total=" << b.total
            << " path_edges=" << b.path_edges << " cross_edges=" << b.cross_edges
            << " clique_edges=" << b.clique_edges << '\n';
    }
    return kSuccess;
}

int cmd_construct(const Config& cfg, std::ostream& out)
{
    const auto classes = enumerate_extremal_up_to_iso(cfg.n, cfg.d);
    for (const auto& cls : classes) {
        if (cfg.format == Format::Json) {
            out << Json{{"n", cfg.n},
                        {"d", cfg.d},
                        {"g6", encode_g6(cls.graph)},
                        {"classes", classes.size()},
                        {"size", cls.graph.size()},
                        {"diameter", diameter(cls.graph).value()}}
                       .dump()
                << '\n';
        } else {
            out << encode_g6(cls.graph) << '\n';
        }
    }
    return kSuccess;
}

int cmd_check(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err)
{
    if (cfg.d < 2)
        throw DomainError("d must be >= 2 (got d=" + std::to_string(cfg.d) +
                          "); d = 1 means the complete graph");
    bool parse_failed = false;
    bool any_negative = false;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        Graph g;
        try {
            g = decode_g6(line);
        } catch (const ParseError& e) {
            err << "line " << number << ": " << e.what() << '\n';
            parse_failed = true;
            continue;
        }
        std::optional<Certificate> cert;
        const bool extremal = is_extremal(g, cfg.d);
        if (extremal && cfg.certificate) {
            cert = extract_certificate(g, cfg.d, cfg.limit);
            if (!cert)
                throw std::logic_error("extremal graph without a certificate on line " +
                                       std::to_string(number));
        }
        any_negative = any_negative || !extremal;

        if (cfg.format == Format::Json) {
            Json row{{"line", number},
                     {"g6", line},
                     {"d", cfg.d},
                     {"extremal", extremal}};
            if (cert)
                row["certificate"] = certificate_json(*cert);
            out << row.dump() << '\n';
        } else {
            out << line << ' ' << (extremal ? "extremal" : "not-extremal");
            if (cert)
                out << " path=" << join(cert->path, '-') << " s=" << join(cert->s_vertices, ',')
                    << " window=" << cert->window_start << '+' << cert->window_len
                    << " choice=" << choice_letters(*cert);
            out << '\n';
        }
    }
    if (parse_failed)
        return kUsage;
    return cfg.strict && any_negative ? kNegative : kSuccess;
}

std::set<CanonicalForm> constructor_forms(int n, int d)
{
    std::set<CanonicalForm> forms;
    for (const auto& cls : enumerate_extremal_up_to_iso(n, d))
        forms.insert(cls.form);
    return forms;
}

int cmd_verify(const Config& cfg, std::ostream& out)
{
    if (cfg.n > kMaxOracleOrder)
        throw CapacityError("verify supports n <= " + std::to_string(kMaxOracleOrder) +
                            ", got n=" + std::to_string(cfg.n));
    if (cfg.n > kMaxFullOracleOrder && !cfg.pruned)
        throw CapacityError("verify -n " + std::to_string(cfg.n) + " requires --pruned");

    OracleOptions options;
    options.workers = cfg.jobs;
    options.pruned = cfg.pruned;
    const auto reports = oracle_table(cfg.n, options);

    std::size_t failures = 0;
    for (const auto& r : reports) {
        const auto formula = ore_max_size({r.n, r.d});
        const auto expected = constructor_forms(r.n, r.d);
        const std::set<CanonicalForm> found(r.extremal_forms.begin(), r.extremal_forms.end());
        const bool pass = r.max_size == formula && found == expected;
        failures += pass ? 0 : 1;
        out << "n=" << r.n << " d=" << r.d << " mode=" << (r.pruned ? "pruned" : "full")
            << " formula=" << formula << " oracle=" << r.max_size
            << " labeled=" << r.labeled_count << " oracle_classes=" << found.size()
            << " constructor_classes=" << expected.size() << ' ' << (pass ? "PASS" : "FAIL")
            << '\n';
    }
    if (failures == 0)
        out << "all " << reports.size() << " rows PASS\n";
    else
        out << failures << " of " << reports.size() << " rows FAIL\n";
    return failures == 0 ? kSuccess : kNegative;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Largest graphs of given order and diameter: bound, construction, "
                 "recognition and exhaustive verification"};
    app.require_subcommand(1);
    Config cfg;

    const std::map<std::string, Format> formats{{"g6", Format::G6}, {"json", Format::Json}};
    const char* d_help = "diameter, at least 2 (d = 1 is the complete graph K_n)";

    auto* bound = app.add_subcommand("bound", "maximum size and its edge-count decomposition");
    bound->add_option("-n,--order", cfg.n, "order")->required();
    bound->add_option("-d,--diameter", cfg.d, d_help)->required();
    bound->add_option("--format", cfg.format, "g6 (plain text) or json")
        ->transform(CLI::CheckedTransformer(formats));

    auto* construct = app.add_subcommand("construct", "one graph per extremal isomorphism class");
    construct->add_option("-n,--order", cfg.n, "order")->required();
    construct->add_option("-d,--diameter", cfg.d, d_help)->required();
    construct->add_option("--format", cfg.format, "g6 or json")
        ->transform(CLI::CheckedTransformer(formats));

    auto* check = app.add_subcommand("check", "classify graph6 lines read from stdin");
    check->add_option("-d,--diameter", cfg.d, d_help)->required();
    check->add_flag("--certificate", cfg.certificate, "print a structural certificate");
    check->add_flag("--strict", cfg.strict, "exit 1 if any graph is not extremal");
    check->add_option("--limit", cfg.limit, "cap on geodesics examined per graph")
        ->check(CLI::PositiveNumber);
    check->add_option("--format", cfg.format, "g6 (plain text) or json")
        ->transform(CLI::CheckedTransformer(formats));

    auto* verify = app.add_subcommand("verify", "exhaustive check of every (n, d) up to -n");
    verify->add_option("-n,--order", cfg.n, "largest order to verify")->required();
    verify->add_option("-j,--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--pruned", cfg.pruned,
                     "only examine graphs at or above the bound (required for n = 8)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (bound->parsed())
            return cmd_bound(cfg, out);
        if (construct->parsed())
            return cmd_construct(cfg, out);
        if (check->parsed())
            return cmd_check(cfg, in, out, err);
        return cmd_verify(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

} // namespace ore::cli
