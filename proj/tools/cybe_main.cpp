// Command line front end; talks to the core exclusively through the C API.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cybe/cybe.h"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct DocHandle {
    cybe_document* d = nullptr;
    ~DocHandle() { cybe_document_free(d); }
};

int run(const std::string& command, const std::string& options_json,
        const std::vector<std::string>& paths) {
    std::vector<DocHandle> docs(paths.size());
    std::vector<const cybe_document*> raw;
    for (size_t i = 0; i < paths.size(); ++i) {
        std::string text = read_input(paths[i]);
        char* err = nullptr;
        docs[i].d = cybe_document_parse(text.c_str(), text.size(), &err);
        if (!docs[i].d) {
            std::cerr << "error: " << (err ? err : "parse failed") << "\n";
            cybe_string_free(err);
            return 3;
        }
        raw.push_back(docs[i].d);
    }
    char* err = nullptr;
    cybe_document* report = nullptr;
    cybe_status st = cybe_run_command(command.c_str(), options_json.c_str(), raw.data(),
                                      raw.size(), &report, &err);
    if (err) {
        std::cerr << "error: " << err << "\n";
        cybe_string_free(err);
    }
    if (report) {
        char* text = cybe_document_emit(report);
        if (text) {
            std::cout << text;
            cybe_string_free(text);
        }
        cybe_document_free(report);
    }
    return int(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for formal classical Yang-Baxter solutions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cybe_version()));

    std::string input, second;
    long order = 0, max_pole = 0, depth = 0, tail = 0;
    bool cybe_eq = false, gcybe_eq = false;

    auto add_input = [&](CLI::App* cmd, bool second_input = false) {
        cmd->add_option("input", input, "input document (JSON file, or - for stdin)")
            ->required();
        if (second_input)
            cmd->add_option("second", second, "second input document")->required();
    };

    CLI::App* verify = app.add_subcommand("verify", "check the GCYBE or CYBE to a given order");
    add_input(verify);
    verify->add_flag("--gcybe", gcybe_eq, "check the generalized equation (default)");
    verify->add_flag("--cybe", cybe_eq, "check the classical equation");
    verify->add_option("--order", order, "certified cube order");

    CLI::App* skew = app.add_subcommand("skew-check", "test skew-symmetry of a standard form");
    add_input(skew);

    CLI::App* extract = app.add_subcommand("extract", "extract the complementary subalgebra");
    add_input(extract);
    extract->add_option("--depth", depth, "tracked pole depths");
    extract->add_option("--tail-prec", tail, "tail order");

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "rebuild the r-matrix from a tail map");
    add_input(reconstruct);

    CLI::App* normal = app.add_subcommand("normalize", "coordinate-normalize to lambda = 1");
    add_input(normal);

    CLI::App* equiv = app.add_subcommand("equiv-apply", "apply an equivalence (mu, w, phi)");
    add_input(equiv, true);

    CLI::App* diff =
        app.add_subcommand("diff-normalize", "gauge to a difference-dependent form s(x-y)");
    add_input(diff);
    diff->add_option("--order", order, "verification order");

    CLI::App* cob = app.add_subcommand("cobracket-check", "Lie bialgebra cobracket checks");
    add_input(cob);
    cob->add_option("--order", order, "window order");

    CLI::App* mult = app.add_subcommand("multipliers", "multiplier lattice Mult(W)");
    add_input(mult);
    mult->add_option("--max-pole", max_pole, "largest pole order to solve for");
    mult->add_option("--order", order, "tail certification order");

    CLI::App* classify = app.add_subcommand("classify", "trichotomy classification");
    add_input(classify);
    classify->add_option("--order", order, "verification order");
    classify->add_option("--max-pole", max_pole, "multiplier order bound");
    classify->add_option("--depth", depth, "extraction depth");
    classify->add_option("--tail-prec", tail, "extraction tail order");

    CLI::App* index = app.add_subcommand("lattice-index", "index (h0, h1) of a lattice");
    add_input(index);

    CLI11_PARSE(app, argc, argv);

    std::ostringstream opts;
    opts << "{";
    bool first = true;
    auto put = [&](const std::string& key, const std::string& value, bool quote) {
        if (!first) opts << ",";
        first = false;
        opts << "\"" << key << "\":";
        if (quote)
            opts << "\"" << value << "\"";
        else
            opts << value;
    };
    if (verify->parsed() && cybe_eq) put("equation", "cybe", true);
    if (verify->parsed() && gcybe_eq && cybe_eq) {
        std::cerr << "error: choose one of --gcybe/--cybe\n";
        return 3;
    }
    if (order > 0) put("order", std::to_string(order), false);
    if (max_pole > 0) put("max-pole", std::to_string(max_pole), false);
    if (depth > 0) put("depth", std::to_string(depth), false);
    if (tail > 0) put("tail-prec", std::to_string(tail), false);
    opts << "}";

    std::string command = app.get_subcommands().front()->get_name();
    std::vector<std::string> paths{input};
    if (!second.empty()) paths.push_back(second);
    try {
        return run(command, opts.str(), paths);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
}
