#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cyclochar/emit.hpp"
#include "cyclochar/verify.hpp"

using namespace cyclochar;

namespace {

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "cannot open " << out_path << "\n";
        return 2;
    }
    os << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the Hopf-cyclic characteristic cocycles"};
    app.require_subcommand(1);

    std::string task_id, format = "text", out_path;
    int codim = 0;
    unsigned seed = 1;
    int max_degree = -1;

    CLI::App* verify = app.add_subcommand("verify", "run a verification task");
    verify->add_option("task", task_id, "task id, or 'all'")->required();
    verify->add_option("--codim", codim, "restrict to codimension 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--max-degree", max_degree, "degree bound for the identity suites");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to a file");

    std::string emit_name, emit_format = "text", emit_out;
    CLI::App* emit = app.add_subcommand("emit", "emit an element in canonical form");
    emit->add_option("name", emit_name, "element name")->required();
    emit->add_option("--format", emit_format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    emit->add_option("--out", emit_out, "write the element to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            TaskOptions opts;
            opts.codim = codim;
            opts.seed = seed;
            opts.max_degree = max_degree;
            std::vector<TaskResult> results;
            if (task_id == "all")
                results = run_all(opts);
            else
                results.push_back(run_task(task_id, opts));
            bool pass = true;
            std::ostringstream os;
            if (format == "json") {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& r : results) {
                    pass = pass && r.pass;
                    out.push_back({{"id", r.id},
                                   {"anchor", r.anchor},
                                   {"pass", r.pass},
                                   {"lines", r.lines}});
                }
                os << out.dump(2) << "\n";
            } else {
                for (const auto& r : results) {
                    pass = pass && r.pass;
                    os << format_report(r) << "\n";
                }
                os << (pass ? "all tasks PASS" : "verification FAILED") << "\n";
            }
            int rc = write_out(os.str(), out_path);
            if (rc)
                return rc;
            return pass ? 0 : 1;
        }

        // emit
        std::vector<std::pair<std::string, EmittedElement>> elements;
        try {
            elements = build_emittable(emit_name);
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\nknown names:";
            for (const auto& n : emittable_names())
                std::cerr << ' ' << n;
            std::cerr << "\n";
            return 2;
        }
        std::ostringstream os;
        if (emit_format == "json") {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& [name, e] : elements) {
                nlohmann::json j = emit_json(e);
                j["name"] = name;
                out.push_back(std::move(j));
            }
            os << out.dump(2) << "\n";
        } else if (emit_format == "latex") {
            for (const auto& [name, e] : elements)
                os << "% " << name << "\n" << emit_latex(e) << "\n";
        } else {
            for (const auto& [name, e] : elements)
                os << "# " << name << "\n" << emit_text(e);
        }
        return write_out(os.str(), emit_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
