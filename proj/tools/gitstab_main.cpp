// gitstab command-line front end. All mathematics goes through the C API of
// libgitstab; this file only parses arguments, reads files, and wraps the
// JSON payloads in a report envelope.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gitstab.h"

namespace {

using nlohmann::json;

constexpr unsigned long long kDefaultSeed = 42;

struct CliError {
    int code;
    std::string message;
};

const char* code_kind(int code) {
    switch (code) {
        case GITSTAB_ERR_PARSE: return "parse";
        case GITSTAB_ERR_INVALID: return "invalid";
        case GITSTAB_ERR_UNDECIDED: return "undecided";
        case GITSTAB_ERR_NULL: return "null";
        default: return "internal";
    }
}

void check(int rc) {
    if (rc != GITSTAB_OK) throw CliError{rc, gitstab_last_error()};
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    gitstab_free_string(s);
    return out;
}

std::string read_source(const std::string& path, const std::string& inline_text,
                        const char* what) {
    if (path.empty() == inline_text.empty())
        throw CliError{GITSTAB_ERR_INVALID,
                       std::string("provide exactly one of --") + what + " and --" + what +
                           "-text"};
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw CliError{GITSTAB_ERR_INVALID, "cannot read file '" + path + "'"};
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return inline_text;
}

using MapHandle = std::unique_ptr<gitstab_map, decltype(&gitstab_map_free)>;
using HenonHandle = std::unique_ptr<gitstab_henon, decltype(&gitstab_henon_free)>;

MapHandle parse_map(const std::string& text) {
    gitstab_map* m = nullptr;
    check(gitstab_map_parse(text.c_str(), &m));
    return MapHandle(m, &gitstab_map_free);
}

HenonHandle parse_henon(const std::string& text) {
    gitstab_henon* h = nullptr;
    check(gitstab_henon_parse(text.c_str(), &h));
    return HenonHandle(h, &gitstab_henon_free);
}

std::vector<long long> parse_weight_list(const std::string& text) {
    std::vector<long long> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        try {
            size_t pos = 0;
            long long v = std::stoll(cur, &pos);
            while (pos < cur.size() && std::isspace(static_cast<unsigned char>(cur[pos]))) ++pos;
            if (pos != cur.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw CliError{GITSTAB_ERR_PARSE, "bad weight entry '" + cur + "'"};
        }
    }
    if (out.empty()) throw CliError{GITSTAB_ERR_PARSE, "empty weight list"};
    return out;
}

void emit_report(const std::string& command, unsigned long long seed, const std::string& payload) {
    json report = {{"schema", "gitstab/1"},
                   {"command", command},
                   {"seed", seed},
                   {"exact", true},
                   {"result", json::parse(payload)}};
    std::cout << report.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GIT stability analysis of rational self-maps of projective space"};
    app.require_subcommand(1);

    std::string map_path, map_text, spec_path, spec_text, weights_text, line_text;
    unsigned long long seed = kDefaultSeed;
    int iterate_n = 2, table_n = 2, table_k = 2, table_d = 2, per_class = 5;
    bool nonstrict = false;

    app.add_option("--seed", seed, "seed echoed in reports and used by randomized audits");

    auto add_map_opts = [&](CLI::App* cmd) {
        cmd->add_option("-m,--map", map_path, "file containing a map");
        cmd->add_option("--map-text", map_text, "inline map text");
    };
    auto add_spec_opts = [&](CLI::App* cmd) {
        cmd->add_option("-s,--spec", spec_path, "file containing a Henon spec");
        cmd->add_option("--spec-text", spec_text, "inline Henon spec text");
    };

    CLI::App* cmd_mu = app.add_subcommand("mu", "minimum alpha-exponent under a diagonal 1-PS");
    add_map_opts(cmd_mu);
    cmd_mu->add_option("-w,--weights", weights_text, "comma-separated integer weights")
        ->required();

    CLI::App* cmd_destab =
        app.add_subcommand("destab", "search for a diagonal destabilizing 1-PS");
    add_map_opts(cmd_destab);
    CLI::Option* strict_flag = cmd_destab->add_flag("--strict", "require mu > 0 (default)");
    cmd_destab->add_flag("--nonstrict", nonstrict, "require only mu >= 0, nonzero weights");
    strict_flag->excludes(cmd_destab->get_option("--nonstrict"));

    CLI::App* cmd_build = app.add_subcommand("henon-build", "affine/inverse/homogenized forms");
    add_spec_opts(cmd_build);

    CLI::App* cmd_iter = app.add_subcommand("iterate", "degrees of the first n iterates");
    add_map_opts(cmd_iter);
    cmd_iter->add_option("-n,--n", iterate_n, "number of iterates")->required();

    CLI::App* cmd_classify =
        app.add_subcommand("classify22", "classification verdict on quadratic maps of P^2");
    add_map_opts(cmd_classify);

    CLI::App* cmd_line = app.add_subcommand("line-image", "image of a line under a quadratic map");
    add_map_opts(cmd_line);
    cmd_line->add_option("-l,--line", line_text, "line equation, e.g. \"y - 2*z\"")->required();

    CLI::App* cmd_table = app.add_subcommand("table", "symbolic exponent table for block weights");
    cmd_table->add_option("-N,--N", table_n, "dimension N")->required();
    cmd_table->add_option("-k,--k", table_k, "Henon parameter k")->required();
    cmd_table->add_option("-d,--d", table_d, "degree d")->required();

    CLI::App* cmd_audit =
        app.add_subcommand("audit-henon22", "line-image trichotomy audit for a quadratic Henon");
    add_spec_opts(cmd_audit);
    cmd_audit->add_option("--per-class", per_class, "lines sampled per class (default 5)");

    CLI11_PARSE(app, argc, argv);

    try {
        char* payload = nullptr;
        if (cmd_mu->parsed()) {
            MapHandle m = parse_map(read_source(map_path, map_text, "map"));
            std::vector<long long> w = parse_weight_list(weights_text);
            check(gitstab_mu(m.get(), w.data(), static_cast<int>(w.size()), &payload));
            emit_report("mu", seed, take_string(payload));
        } else if (cmd_destab->parsed()) {
            MapHandle m = parse_map(read_source(map_path, map_text, "map"));
            check(gitstab_destab(m.get(), nonstrict ? 0 : 1, &payload));
            emit_report("destab", seed, take_string(payload));
        } else if (cmd_build->parsed()) {
            HenonHandle h = parse_henon(read_source(spec_path, spec_text, "spec"));
            check(gitstab_henon_build(h.get(), &payload));
            emit_report("henon-build", seed, take_string(payload));
        } else if (cmd_iter->parsed()) {
            MapHandle m = parse_map(read_source(map_path, map_text, "map"));
            check(gitstab_iterate(m.get(), iterate_n, &payload));
            emit_report("iterate", seed, take_string(payload));
        } else if (cmd_classify->parsed()) {
            MapHandle m = parse_map(read_source(map_path, map_text, "map"));
            check(gitstab_classify22(m.get(), &payload));
            emit_report("classify22", seed, take_string(payload));
        } else if (cmd_line->parsed()) {
            MapHandle m = parse_map(read_source(map_path, map_text, "map"));
            check(gitstab_line_image(m.get(), line_text.c_str(), &payload));
            emit_report("line-image", seed, take_string(payload));
        } else if (cmd_table->parsed()) {
            check(gitstab_table(table_n, table_k, table_d, &payload));
            emit_report("table", seed, take_string(payload));
        } else if (cmd_audit->parsed()) {
            HenonHandle h = parse_henon(read_source(spec_path, spec_text, "spec"));
            check(gitstab_audit_henon22(h.get(), seed, per_class, &payload));
            emit_report("audit-henon22", seed, take_string(payload));
        }
    } catch (const CliError& e) {
        json err = {{"schema", "gitstab/1"},
                    {"error",
                     {{"code", e.code}, {"kind", code_kind(e.code)}, {"message", e.message}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
