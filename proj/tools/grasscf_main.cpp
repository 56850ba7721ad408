// Command-line front end: compute Pluecker vectors, run the elimination
// algorithms, generate random instances, and re-verify traces.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 non-decomposable input, 4 internal invariant violation.

#include "grasscf/errors.hpp"
#include "grasscf/io.hpp"
#include "grasscf/mee.hpp"
#include "grasscf/minee.hpp"
#include "grasscf/positivity.hpp"
#include "grasscf/reconstruct.hpp"
#include "grasscf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace grasscf;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_plucker(const std::string& file, const std::string& format) {
    LatticeMatrix m = matrix_from_any(read_input(file));
    PluckerVector p = compute_plucker(m);
    if (format == "json")
        std::cout << plucker_to_json(p).dump(2) << "\n";
    else
        std::cout << to_text(p) << "\n";
    return 0;
}

int run_algorithm(const std::string& file, const std::string& algo, const std::string& format,
                  bool strict_trace) {
    PluckerVector p = plucker_from_any(read_input(file));
    Trace trace;
    if (algo == "mee") {
        MeeOptions options;
        options.strict_positivize = strict_trace;
        trace = mee_run(p, options);
    } else {
        trace = minee_run(p);
    }
    ReconstructionResult result = assemble(trace, p);
    if (format == "json") {
        Json doc;
        doc["trace"] = trace_to_json(trace);
        doc["result"] = result_to_json(result);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "algorithm: " << algo << "\n"
                  << "steps: " << trace.steps.size() << "\n"
                  << "p_hat: " << to_decimal(result.p_hat) << "\n"
                  << "sublattice index: " << to_decimal(result.sublattice_index) << "\n"
                  << "matrix:\n"
                  << matrix_to_text(result.matrix);
    }
    return 0;
}

int run_random(int k, int n, std::uint64_t bound, std::uint64_t seed, const std::string& format) {
    LatticeMatrix m = random_full_rank_matrix(k, n, bound, seed);
    PluckerVector p = compute_plucker(m);
    if (format == "json") {
        Json doc;
        doc["matrix"] = matrix_to_json(m);
        doc["plucker"] = plucker_to_json(p);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << matrix_to_text(m) << to_text(p) << "\n";
    }
    return 0;
}

int run_verify(const std::vector<std::string>& files) {
    if (files.size() % 2 != 0 || files.empty())
        throw ValidationError("verify expects trace/vector file pairs");
    bool all_ok = true;
    for (std::size_t i = 0; i < files.size(); i += 2) {
        Json doc = Json::parse(read_input(files[i]), nullptr, true);
        // Accept both a bare trace and a full `run` output document.
        Trace trace = trace_from_json(doc.contains("trace") ? doc["trace"] : doc);
        PluckerVector p = plucker_from_any(read_input(files[i + 1]));
        if (trace.k != p.k() || trace.n_initial != p.n())
            throw ValidationError("trace dimensions (k=" + std::to_string(trace.k) + ", n=" +
                                  std::to_string(trace.n_initial) +
                                  ") do not match the vector file");
        VerifyReport report = verify_trace(trace, p);
        for (const auto& check : report.checks) {
            std::cout << (check.passed ? "ok   " : "FAIL ") << check.name;
            if (!check.detail.empty())
                std::cout << ": " << check.detail;
            std::cout << "\n";
        }
        all_ok &= report.all_passed();
    }
    return all_ok ? 0 : 1;
}

int run_positivize(const std::string& file, const std::string& format, bool strict_trace) {
    PluckerVector p = plucker_from_any(read_input(file));
    // zero entries and wrong k are input errors; only then judge the relations
    if (p.k() == 2 && !has_zero_entry(p) && !check_relations(p))
        throw NonDecomposableError("input fails the Pluecker relations");
    PositivizeResult result = positivize_g2n(p, strict_trace);
    if (format == "json") {
        Json doc;
        doc["vector"] = plucker_to_json(result.vector);
        Json transforms = Json::array();
        for (const auto& u : result.transforms) {
            Json step;
            step["n"] = u.n();
            step["matrix"] = matrix_to_json(u.matrix());
            transforms.push_back(std::move(step));
        }
        doc["transforms"] = std::move(transforms);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << to_text(result.vector) << "\n"
                  << "transforms: " << result.transforms.size() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subtractive Euclidean algorithms on integer Grassmannians"};
    app.require_subcommand(1);

    std::string format = "json";
    bool strict_trace = false;

    auto* plucker_cmd = app.add_subcommand("plucker", "Pluecker vector of a k x n integer matrix");
    std::string plucker_file;
    plucker_cmd->add_option("file", plucker_file, "matrix file, or - for stdin")->required();
    plucker_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* run_cmd = app.add_subcommand("run", "reduce a Pluecker vector to G(k,k)");
    std::string run_file, algo = "minee";
    run_cmd->add_option("file", run_file, "Pluecker vector file, or - for stdin")->required();
    run_cmd->add_option("--algo", algo, "mee (k = 2 only) or minee")
        ->check(CLI::IsMember({"mee", "minee"}));
    run_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_flag("--strict-trace", strict_trace, "literal-scan positivization");

    auto* random_cmd = app.add_subcommand("random", "seeded full-rank instance");
    int rand_k = 2, rand_n = 4;
    std::uint64_t bound = 10, seed = 0;
    random_cmd->add_option("--k", rand_k, "rows")->required();
    random_cmd->add_option("--n", rand_n, "columns")->required();
    random_cmd->add_option("--bound", bound, "entry magnitude bound (>= 1)");
    random_cmd->add_option("--seed", seed, "64-bit generator seed");
    random_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify_cmd = app.add_subcommand("verify", "re-check a trace against its input vector");
    std::vector<std::string> verify_files;
    verify_cmd->add_option("files", verify_files, "trace.json vector [trace.json vector ...]")
        ->required();

    auto* positivize_cmd = app.add_subcommand("positivize", "all-positive form of a G(2,n) vector");
    std::string positivize_file;
    positivize_cmd->add_option("file", positivize_file, "Pluecker vector file, or - for stdin")
        ->required();
    positivize_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    positivize_cmd->add_flag("--strict-trace", strict_trace, "literal-scan positivization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(plucker_cmd))
            return run_plucker(plucker_file, format);
        if (app.got_subcommand(run_cmd))
            return run_algorithm(run_file, algo, format, strict_trace);
        if (app.got_subcommand(random_cmd))
            return run_random(rand_k, rand_n, bound, seed, format);
        if (app.got_subcommand(verify_cmd))
            return run_verify(verify_files);
        if (app.got_subcommand(positivize_cmd))
            return run_positivize(positivize_file, format, strict_trace);
    } catch (const NonDecomposableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
