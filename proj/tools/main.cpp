// Command-line front end for the barcode toolkit.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "barkit/bottleneck.hpp"
#include "barkit/io.hpp"
#include "barkit/persistence.hpp"
#include "barkit/shift_space.hpp"
#include "barkit/torus_model.hpp"
#include "barkit/twist_word.hpp"

namespace {

using namespace barkit;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input_error = 2;

curve_class parse_class(const std::string& token) {
    const std::size_t slash = token.find('/');
    if (slash == std::string::npos)
        throw parse_error("bad curve class '" + token + "' (expected p/q)");
    curve_class c;
    try {
        c.p = std::stoll(token.substr(0, slash));
        c.q = std::stoll(token.substr(slash + 1));
    } catch (const std::exception&) {
        throw parse_error("bad curve class '" + token + "' (expected p/q)");
    }
    validation_report r = validate(c);
    if (!r.ok) throw parse_error(r.message);
    return c;
}

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty())
        std::cout << content;
    else
        write_file(output_path, content);
}

int run_persist(const std::string& input, const std::string& output) {
    filtered_complex c = read_complex_file(input);
    emit(write_barcode(barcode_of_complex(c)), output);
    return exit_ok;
}

int run_bottleneck(const std::string& left, const std::string& right) {
    value_t d = bottleneck_distance(read_barcode_file(left), read_barcode_file(right));
    std::cout << format_value(d) << "\n";
    return exit_ok;
}

int run_shiftdist(const std::string& left, const std::string& right, value_t oracle_res) {
    barcode a = read_barcode_file(left), b = read_barcode_file(right);
    std::cout << format_value(shift_distance(a, b)) << "\n";
    if (oracle_res > 0)
        std::cout << "oracle " << format_value(grid_oracle_shift_distance(a, b, oracle_res))
                  << "\n";
    return exit_ok;
}

int run_sigma(const std::string& input) {
    std::cout << sigma_inf(read_barcode_file(input)) << "\n";
    return exit_ok;
}

int run_pathcheck(const std::string& input, value_t eps) {
    barcode_path p;
    p.steps = read_path_file(input);
    p.epsilon = eps;
    path_report r = check_path(p);
    if (r.ok) {
        std::cout << "ok\n";
        return exit_ok;
    }
    std::cout << "violation at index " << r.index << ": " << r.message << "\n";
    return exit_violation;
}

int run_perturb(const std::string& input, value_t delta, std::uint64_t seed,
                const std::string& output) {
    filtered_complex c = read_complex_file(input);
    filtered_complex p;
    try {
        p = perturb_actions(c, delta, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return exit_violation;
    }
    emit(write_complex_text(p), output);
    return exit_ok;
}

int run_wordcheck(const std::string& word_text, const std::string& hyp_path) {
    twist_word w = parse_and_reduce(word_text);
    rank_hypotheses h = read_hypotheses_file(hyp_path);
    obstruction_certificate cert;
    try {
        cert = derive_obstruction(w, h);
    } catch (const hypothesis_error& e) {
        std::cout << "refused: " << e.what() << "\n";
        return exit_violation;
    }
    verify_result check = verify_certificate_detailed(cert, w, h);
    if (!check.ok) {
        std::cerr << "internal error: certificate failed verification at step "
                  << check.step << ": " << check.reason << "\n";
        return exit_violation;
    }
    std::cout << render(cert);
    return cert.conclusion == certificate_conclusion::obstructed ? exit_ok
                                                                 : exit_violation;
}

int run_torus(const std::string& first, const std::string& second,
              const std::string& word_text, const std::string& output) {
    const curve_class u = parse_class(first);
    const curve_class v = parse_class(second);
    curve_class moved = u;
    if (!word_text.empty()) {
        twist_word w = parse_and_reduce(word_text);
        // letters act by their bound classes: A twists about u, B about v;
        // innermost syllable applies first
        for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
            moved = twist_action(it->letter == twist_letter::A ? u : v, moved,
                                 it->exponent);
    } else {
        moved = v;
    }
    emit(write_complex_text(build_complex(u, moved)), output);
    return exit_ok;
}

int run_plot(const std::string& input, const std::string& output) {
    barcode b = read_barcode_file(input);
    if (output.size() >= 4 && output.substr(output.size() - 4) == ".svg") {
        write_file(output, plot_svg(b));
        return exit_ok;
    }
    if (output.size() >= 4 && output.substr(output.size() - 4) == ".csv") {
        write_file(output, plot_csv(b));
        return exit_ok;
    }
    throw parse_error("plot output must end in .svg or .csv, got '" + output + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistence barcodes, shift-space distances and Dehn-twist word obstructions"};
    app.require_subcommand(1);

    std::string in1, in2, output, word_text, hyp_path;
    value_t eps = 0, delta = 0, oracle_res = 0;
    std::uint64_t seed = 0;

    CLI::App* persist = app.add_subcommand("persist", "barcode of a filtered complex");
    persist->add_option("complex", in1)->required();
    persist->add_option("-o,--output", output);

    CLI::App* bottleneck = app.add_subcommand("bottleneck", "bottleneck distance of two barcodes");
    bottleneck->add_option("first", in1)->required();
    bottleneck->add_option("second", in2)->required();

    CLI::App* shiftdist = app.add_subcommand("shiftdist", "distance in the shift-quotient space");
    shiftdist->add_option("first", in1)->required();
    shiftdist->add_option("second", in2)->required();
    shiftdist->add_option("--oracle", oracle_res, "also run the grid oracle at this resolution");

    CLI::App* sigma = app.add_subcommand("sigma", "number of semi-infinite bars");
    sigma->add_option("barcode", in1)->required();

    CLI::App* pathcheck = app.add_subcommand("pathcheck", "verify a discrete barcode path");
    pathcheck->add_option("path", in1)->required();
    pathcheck->add_option("--eps", eps, "declared mesh")->required();

    CLI::App* perturb = app.add_subcommand("perturb", "perturb the action values of a complex");
    perturb->add_option("complex", in1)->required();
    perturb->add_option("--delta", delta)->required();
    perturb->add_option("--seed", seed)->required();
    perturb->add_option("-o,--output", output);

    CLI::App* wordcheck = app.add_subcommand("wordcheck", "obstruction certificate for a twist word");
    wordcheck->add_option("word", word_text)->required();
    wordcheck->add_option("--hf", hyp_path, "rank hypothesis file")->required();

    CLI::App* torus = app.add_subcommand("torus", "torus-model fixture complex");
    torus->add_option("first", in1)->required();
    torus->add_option("second", in2)->required();
    torus->add_option("--word", word_text, "twist word applied to the first class");
    torus->add_option("-o,--output", output);

    CLI::App* plot = app.add_subcommand("plot", "barcode plot as static SVG or CSV");
    plot->add_option("barcode", in1)->required();
    plot->add_option("-o,--output", output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        if (persist->parsed()) return run_persist(in1, output);
        if (bottleneck->parsed()) return run_bottleneck(in1, in2);
        if (shiftdist->parsed()) return run_shiftdist(in1, in2, oracle_res);
        if (sigma->parsed()) return run_sigma(in1);
        if (pathcheck->parsed()) return run_pathcheck(in1, eps);
        if (perturb->parsed()) return run_perturb(in1, delta, seed, output);
        if (wordcheck->parsed()) return run_wordcheck(word_text, hyp_path);
        if (torus->parsed()) return run_torus(in1, in2, word_text, output);
        if (plot->parsed()) return run_plot(in1, output);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
