#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "concord/cli.hpp"
#include "concord/errors.hpp"

namespace {

using nlohmann::json;

// payload argument: inline JSON, '@file', or '-' for stdin
std::string slurp(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw concord::invalid_input_error("cannot open input file " + arg.substr(1));
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    return arg;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw concord::invalid_input_error(what + ": " + e.what());
    }
}

void parse_bounds(const std::string& spec, concord::SearchBounds& b) {
    int mf = 0;
    long mk = 0;
    int mn = 0;
    char c1 = 0, c2 = 0;
    std::istringstream s(spec);
    if (!(s >> mf >> c1 >> mk >> c2 >> mn) || c1 != ',' || c2 != ',')
        throw concord::invalid_input_error("--bounds expects max_factors,max_k,max_n");
    b.max_factors = mf;
    b.max_k = mk;
    b.max_n = mn;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact knot-concordance and clover-surgery obstruction calculator"};
    app.require_subcommand(0, 1);

    bool json_output = false;
    std::string bounds_spec, batch_file;
    long degree_limit = concord::kDefaultDegreeLimit;
    app.add_flag("--json", json_output, "emit structured JSON instead of text");
    app.add_option("--bounds", bounds_spec, "witness search bounds: max_factors,max_k,max_n");
    app.add_option("--degree-limit", degree_limit, "factorization degree guard (default 24)");
    app.add_option("--batch", batch_file, "run a JSON file holding a list of jobs");

    std::string input;
    std::string delta, delta2;
    long wheel_legs = 0, wheel_k = 0, fam_k = 0, fam_n = 0;
    std::string sign = "+";

    CLI::App* c_alex = app.add_subcommand("alexander", "Alexander polynomial and concordance tests");
    c_alex->add_option("input", input, "knot JSON (inline, @file, or - for stdin)")->required();

    CLI::App* c_obstruct = app.add_subcommand("obstruct", "spectrum and c1 obstructions");
    c_obstruct->add_option("--delta", delta, "Alexander polynomial, e.g. '1 - t + t^2'");
    c_obstruct->add_option("--delta2", delta2, "second polynomial for the pair tests");
    c_obstruct->add_option("input", input, "payload JSON {\"delta\":..., \"delta2\":...}");

    CLI::App* c_wheel = app.add_subcommand("wheel", "wheel surgery linking matrix and ratio");
    c_wheel->add_option("--legs", wheel_legs, "number of legs n >= 1");
    c_wheel->add_option("--k", wheel_k, "linking exponent k");
    c_wheel->add_option("--sign", sign, "+ or -");
    c_wheel->add_option("input", input, "payload JSON {\"legs\":..,\"k\":..,\"sign\":..}");

    CLI::App* c_clover = app.add_subcommand("clover", "clover classification and splitting");
    c_clover->add_option("input", input, "graph JSON (inline, @file, or - for stdin)")->required();

    CLI::App* c_family = app.add_subcommand("family", "expand a family polynomial 1 +- t^k (t-1)^n");
    c_family->add_option("--k", fam_k, "exponent k");
    c_family->add_option("--n", fam_n, "power n >= 1");
    c_family->add_option("--sign", sign, "+ or -");
    c_family->add_option("input", input, "payload JSON {\"k\":..,\"n\":..,\"sign\":..}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        concord::cli::Defaults defaults;
        defaults.degree_limit = degree_limit;
        if (!bounds_spec.empty()) parse_bounds(bounds_spec, defaults.bounds);

        json result;
        bool is_batch = false;
        if (!batch_file.empty()) {
            json jobs = parse_json(slurp("@" + batch_file), "batch file");
            result = concord::cli::run_batch(jobs, defaults);
            is_batch = true;
        } else if (app.get_subcommands().empty()) {
            throw concord::invalid_input_error("nothing to do: give a subcommand or --batch FILE");
        } else {
            json job;
            if (c_alex->parsed()) {
                job = {{"command", "alexander"}, {"payload", parse_json(slurp(input), "knot input")}};
            } else if (c_obstruct->parsed()) {
                json payload;
                if (!input.empty()) payload = parse_json(slurp(input), "obstruct input");
                if (!delta.empty()) payload["delta"] = delta;
                if (!delta2.empty()) payload["delta2"] = delta2;
                job = {{"command", "obstruct"}, {"payload", payload}};
            } else if (c_wheel->parsed()) {
                json payload;
                if (!input.empty())
                    payload = parse_json(slurp(input), "wheel input");
                else
                    payload = {{"legs", wheel_legs}, {"k", wheel_k}, {"sign", sign}};
                job = {{"command", "wheel"}, {"payload", payload}};
            } else if (c_clover->parsed()) {
                job = {{"command", "clover"}, {"payload", parse_json(slurp(input), "clover input")}};
            } else if (c_family->parsed()) {
                json payload;
                if (!input.empty())
                    payload = parse_json(slurp(input), "family input");
                else
                    payload = {{"k", fam_k}, {"n", fam_n}, {"sign", sign}};
                job = {{"command", "family"}, {"payload", payload}};
            }
            result = concord::cli::run_job(job, defaults);
        }

        if (json_output)
            std::cout << result.dump(2) << "\n";
        else
            std::cout << (is_batch ? concord::cli::render_batch_text(result)
                                   : concord::cli::render_text(result));
        return 0;
    } catch (const concord::invalid_input_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const concord::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
