// evfa command line tool: compile event regexes to automata, run traces,
// minimize, compare, export DOT, and classify classroom sessions.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <evfa/evfa.hpp>

namespace fs = std::filesystem;

namespace {

// exit codes: 0 success/accept/equivalent, 1 reject/not-equivalent, 2 error
constexpr int exit_ok = 0;
constexpr int exit_reject = 1;
constexpr int exit_error = 2;

evfa::dfa resolve_automaton(const std::string& arg) {
    if (fs::exists(arg) && fs::is_regular_file(arg)) return evfa::load_automaton_file(arg);
    if (arg == "simple") return evfa::simple_model().machine;
    if (arg == "emotional") return evfa::emotional_model().machine;
    throw evfa::error("no such automaton file or built-in model: " + arg);
}

std::string regex_text_of(const std::string& arg) {
    if (fs::exists(arg) && fs::is_regular_file(arg)) return evfa::read_text_file(arg);
    return arg;
}

evfa::alphabet parse_alphabet_list(const std::string& csv) {
    std::vector<evfa::symbol> symbols;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string name = csv.substr(pos, comma - pos);
        while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.erase(0, 1);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        if (!name.empty()) {
            if (!evfa::is_valid_symbol_name(name))
                throw evfa::error("bad alphabet symbol: '" + name + "'");
            symbols.emplace_back(name);
        }
        pos = comma + 1;
    }
    if (symbols.empty()) throw evfa::error("empty --alphabet list");
    return evfa::alphabet(std::move(symbols));
}

void write_output(const std::optional<std::string>& out_path, const std::string& text) {
    if (!out_path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw evfa::error("cannot write file: " + *out_path);
    out << text;
}

/// Rounds num/den to 4 decimal places, half to even.
std::string format_rate(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        num = 0;
        den = 1;
    }
    const std::uint64_t scaled = num * 10000;
    std::uint64_t q = scaled / den;
    const std::uint64_t r = scaled % den;
    if (2 * r > den || (2 * r == den && (q & 1))) ++q;
    std::string frac = std::to_string(q % 10000);
    frac.insert(0, 4 - frac.size(), '0');
    return std::to_string(q / 10000) + "." + frac;
}

evfa::classroom_model model_by_name(const std::string& name) {
    if (name == "simple") return evfa::simple_model();
    if (name == "emotional") return evfa::emotional_model();
    throw evfa::error("unknown model: " + name + " (expected 'simple' or 'emotional')");
}

int run_compile(const std::string& regex_arg, const std::optional<std::string>& alphabet_csv,
                bool minimize, const std::string& out_path) {
    evfa::regex_source src{regex_text_of(regex_arg), std::nullopt};
    if (alphabet_csv) src.declared_alphabet = parse_alphabet_list(*alphabet_csv);
    evfa::dfa machine = evfa::compile_regex(src);
    if (minimize) machine = evfa::hopcroft_minimize(machine);
    write_output(out_path, evfa::serialize_dfa(machine));
    std::cout << machine.state_count() << "\n";
    return exit_ok;
}

void print_run(const std::vector<evfa::configuration>& steps) {
    for (const auto& c : steps)
        std::cout << "[" << c.state << ", " << c.remaining.size() << "]\n";
}

int run_accept(const std::string& automaton_arg, const std::string& trace_path, bool show_run,
               bool reject_unknown) {
    const evfa::dfa machine = resolve_automaton(automaton_arg);
    const evfa::word trace = evfa::load_trace_file(trace_path);
    std::vector<evfa::configuration> steps;
    try {
        steps = evfa::run(machine, trace);
    } catch (const evfa::truncated_run_error& e) {
        if (show_run) print_run(e.partial_run());
        if (reject_unknown) return exit_reject;
        throw;
    }
    if (show_run) print_run(steps);
    return machine.is_accepting(steps.back().state) ? exit_ok : exit_reject;
}

int run_minimize(const std::string& in_arg, const std::optional<std::string>& out_path) {
    write_output(out_path, evfa::serialize_dfa(evfa::hopcroft_minimize(resolve_automaton(in_arg))));
    return exit_ok;
}

int run_equiv(const std::string& left_arg, const std::string& right_arg) {
    const auto result = evfa::equivalent(resolve_automaton(left_arg), resolve_automaton(right_arg));
    if (result.equal) return exit_ok;
    for (const evfa::symbol& s : result.counterexample) std::cout << s.name() << "\n";
    return exit_reject;
}

int run_dot(const std::string& in_arg, const std::optional<std::string>& out_path,
            std::optional<std::string> name) {
    if (!name) {
        if (in_arg == "simple" || in_arg == "emotional")
            name = in_arg;
        else
            name = "automaton";
    }
    if (!evfa::is_valid_symbol_name(*name)) throw evfa::error("bad graph name: '" + *name + "'");
    write_output(out_path, evfa::export_dot(resolve_automaton(in_arg), *name));
    return exit_ok;
}

int run_classify(const std::string& model_name, const std::vector<std::string>& trace_paths) {
    const evfa::classroom_model model = model_by_name(model_name);
    bool any_rejected = false;
    for (const std::string& path : trace_paths) {
        const evfa::word trace = evfa::load_trace_file(path);
        const evfa::trace_verdict verdict = evfa::classify_trace(model, trace);
        if (!verdict.accepted) any_rejected = true;
        std::cout << path << "\t" << (verdict.accepted ? "ACCEPT" : "REJECT") << "\t";
        if (verdict.failure_offset)
            std::cout << *verdict.failure_offset;
        else
            std::cout << "-";
        std::cout << "\t" << verdict.query_count << "\n";
    }
    return any_rejected ? exit_reject : exit_ok;
}

int run_profile(const std::string& model_name, const std::string& sessions_dir) {
    const evfa::classroom_model_id model_id = model_by_name(model_name).id;
    if (!fs::is_directory(sessions_dir))
        throw evfa::error("not a directory: " + sessions_dir);

    struct session_file {
        unsigned number;
        std::string filename;
        fs::path path;
    };
    std::map<std::string, std::vector<session_file>> students;
    for (const auto& entry : fs::directory_iterator(sessions_dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string filename = entry.path().filename().string();
        if (!filename.ends_with(".trace")) continue;
        const auto parsed = evfa::parse_session_filename(filename);
        if (!parsed)
            throw evfa::error("session file name must be <student-id>__<nn>.trace: " + filename);
        students[parsed->first].push_back({parsed->second, filename, entry.path()});
    }

    for (auto& [student_id, files] : students) {
        std::sort(files.begin(), files.end(), [](const session_file& a, const session_file& b) {
            return a.number != b.number ? a.number < b.number : a.filename < b.filename;
        });
        std::vector<evfa::session> sessions;
        sessions.reserve(files.size());
        for (const session_file& f : files)
            sessions.push_back({model_id, evfa::load_trace_file(f.path)});
        const evfa::student_profile profile = evfa::profile_student(student_id, sessions);
        const std::size_t accepted = model_id == evfa::classroom_model_id::simple
                                         ? profile.accepted_simple
                                         : profile.accepted_emotional;
        const evfa::rational rate = profile.mean_query_rate();
        std::cout << profile.student_id << "\t" << profile.sessions << "\t" << accepted << "\t"
                  << format_rate(rate.numerator, rate.denominator) << "\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-automata toolkit for symbolic event traces"};
    app.require_subcommand(1);
    int exit_code = exit_ok;

    // compile
    std::string compile_regex_arg;
    std::optional<std::string> compile_alphabet;
    bool compile_minimize = false;
    std::string compile_out;
    auto* compile = app.add_subcommand("compile", "compile a regex to an automaton file");
    compile->add_option("regex", compile_regex_arg, "regex text, or a file containing one")
        ->required();
    compile->add_option("--alphabet", compile_alphabet, "comma-separated alphabet symbols");
    compile->add_flag("--minimize", compile_minimize, "minimize the compiled machine");
    compile->add_option("-o,--output", compile_out, "output automaton file")->required();
    compile->callback([&] {
        exit_code = run_compile(compile_regex_arg, compile_alphabet, compile_minimize, compile_out);
    });

    // accept
    std::string accept_automaton, accept_trace;
    bool accept_show_run = false, accept_reject_unknown = false;
    auto* accept = app.add_subcommand("accept", "run a trace through an automaton");
    accept->add_option("automaton", accept_automaton, "automaton file, or 'simple'/'emotional'")
        ->required();
    accept->add_option("trace", accept_trace, "trace file")->required();
    accept->add_flag("--show-run", accept_show_run, "print one configuration per line");
    accept->add_flag("--reject-unknown", accept_reject_unknown,
                     "treat unknown events as rejection instead of error");
    accept->callback([&] {
        exit_code = run_accept(accept_automaton, accept_trace, accept_show_run,
                               accept_reject_unknown);
    });

    // minimize
    std::string minimize_in;
    std::optional<std::string> minimize_out;
    auto* minimize = app.add_subcommand("minimize", "write the canonical minimal machine");
    minimize->add_option("automaton", minimize_in, "automaton file, or 'simple'/'emotional'")
        ->required();
    minimize->add_option("-o,--output", minimize_out, "output file (default stdout)");
    minimize->callback([&] { exit_code = run_minimize(minimize_in, minimize_out); });

    // equiv
    std::string equiv_left, equiv_right;
    auto* equiv = app.add_subcommand("equiv", "decide language equivalence of two machines");
    equiv->add_option("left", equiv_left, "automaton file, or 'simple'/'emotional'")->required();
    equiv->add_option("right", equiv_right, "automaton file, or 'simple'/'emotional'")->required();
    equiv->callback([&] { exit_code = run_equiv(equiv_left, equiv_right); });

    // dot
    std::string dot_in;
    std::optional<std::string> dot_out;
    std::optional<std::string> dot_name;
    auto* dot = app.add_subcommand("dot", "export a machine as a DOT digraph");
    dot->add_option("automaton", dot_in, "automaton file, or 'simple'/'emotional'")->required();
    dot->add_option("-o,--output", dot_out, "output file (default stdout)");
    dot->add_option("--name", dot_name, "digraph name");
    dot->callback([&] { exit_code = run_dot(dot_in, dot_out, dot_name); });

    // classroom
    auto* classroom = app.add_subcommand("classroom", "built-in classroom model workflows");
    classroom->require_subcommand(1);

    std::string classify_model;
    std::vector<std::string> classify_traces;
    auto* classify = classroom->add_subcommand("classify", "classify traces against a model");
    classify->add_option("--model", classify_model, "simple or emotional")->required();
    classify->add_option("traces", classify_traces, "trace files")->required()->expected(-1);
    classify->callback([&] { exit_code = run_classify(classify_model, classify_traces); });

    std::string profile_model = "simple";
    std::string profile_dir;
    auto* profile = classroom->add_subcommand("profile", "aggregate per-student session verdicts");
    profile->add_option("--model", profile_model, "simple or emotional (default simple)");
    profile->add_option("--sessions", profile_dir, "directory of <student-id>__<nn>.trace files")
        ->required();
    profile->callback([&] { exit_code = run_profile(profile_model, profile_dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    } catch (const evfa::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_code;
}
