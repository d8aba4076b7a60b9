#include "rbar/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Batch verification and integration jobs on the configuration space R u R_Bohr"};

    std::string job_path, out_path;
    bool from_stdin = false, emit_csv = false;
    long long seed_override = -1;

    app.add_option("--job", job_path, "Path to a JSON job file");
    app.add_flag("--stdin", from_stdin, "Read the JSON job from standard input");
    app.add_option("--seed", seed_override, "Override the job's seed");
    app.add_option("--out", out_path, "Write the result to this path instead of stdout");
    app.add_flag("--csv", emit_csv, "Emit plot data as CSV (commands that produce it)");

    CLI11_PARSE(app, argc, argv);

    if (job_path.empty() == !from_stdin) {
        std::cerr << "exactly one of --job or --stdin is required\n";
        return 2;
    }

    std::string text;
    if (from_stdin) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(job_path);
        if (!in) {
            std::cerr << "cannot open job file: " << job_path << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    rbar::Json job = rbar::Json::parse(text, nullptr, false);
    if (job.is_discarded()) {
        std::cerr << "job file is not valid JSON\n";
        return 2;
    }
    if (seed_override >= 0) job["seed"] = seed_override;

    rbar::JobResult res = rbar::run_job(job);

    std::string output;
    if (emit_csv) {
        if (!res.csv) {
            std::cerr << "this command produces no CSV data\n";
            return 2;
        }
        output = *res.csv;
    } else {
        output = rbar::dump_json_17(res.envelope);
    }

    if (out_path.empty()) {
        std::cout << output;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write: " << out_path << "\n";
            return 2;
        }
        out << output;
    }
    return res.exit_code;
}
