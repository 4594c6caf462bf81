// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 a reproduction item expected to match did not,
// 2 invalid input, 3 I/O failure.

#include <wisealice/wisealice.h>

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReproductionFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct CliError {
    int code;
    std::string message;
};

struct StringDeleter {
    void operator()(char* s) const { wa_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GameDeleter {
    void operator()(wa_game* g) const { wa_game_destroy(g); }
};
struct SolutionDeleter {
    void operator()(wa_solution* s) const { wa_solution_destroy(s); }
};
struct CurvesDeleter {
    void operator()(wa_curves* c) const { wa_curves_destroy(c); }
};
struct ReproductionDeleter {
    void operator()(wa_reproduction* r) const { wa_reproduction_destroy(r); }
};

void check(wa_status status)
{
    if (status == WA_OK)
        return;
    const int code = status == WA_ERR_INPUT ? kExitInput : status == WA_ERR_IO ? kExitIo : 4;
    throw CliError{code, wa_last_error()};
}

std::vector<double> parse_payoffs(const std::string& text)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        double v = 0.0;
        const char* first = text.data() + start;
        const char* last = text.data() + end;
        const auto res = std::from_chars(first, last, v);
        if (first == last || res.ec != std::errc() || res.ptr != last)
            throw CliError{kExitInput, "invalid payoff list '" + text + "' (expected a,b,c,d)"};
        out.push_back(v);
        start = end + 1;
    }
    if (out.size() != 4)
        throw CliError{kExitInput, "expected exactly 4 payoffs a,b,c,d, got " +
                                       std::to_string(out.size())};
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw CliError{kExitIo, "cannot open '" + path.string() + "' for writing"};
    out << content;
    out.flush();
    if (!out)
        throw CliError{kExitIo, "failed writing '" + path.string() + "'"};
}

// Prints to stdout, or writes to `out_path` when given.
void emit(const std::string& content, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::unique_ptr<wa_game, GameDeleter> make_game(const std::string& payoffs, double theta_a,
                                                double theta_b)
{
    const auto p = parse_payoffs(payoffs);
    wa_game* game = nullptr;
    check(wa_game_create(p.data(), theta_a, theta_b, &game));
    return std::unique_ptr<wa_game, GameDeleter>(game);
}

struct Options {
    std::string payoffs;
    double theta_a = 0.0;
    double theta_b = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double step = 0.0;
    double refine_tol = 0.0;
    std::string out;
    bool json = false;
    std::string example;
};

int run_classical_solve(const Options& o)
{
    const auto p = parse_payoffs(o.payoffs);
    char* json = nullptr;
    check(wa_classical_solve_json(p.data(), &json));
    OwnedString owned(json);
    emit(json, o.out);
    return kExitOk;
}

int run_quantum_solve(const Options& o)
{
    auto game = make_game(o.payoffs, o.theta_a, o.theta_b);
    wa_solution* raw = nullptr;
    check(wa_game_solve(game.get(), o.step, o.refine_tol, &raw));
    std::unique_ptr<wa_solution, SolutionDeleter> solution(raw);
    char* json = nullptr;
    check(wa_solution_json(solution.get(), &json));
    OwnedString owned(json);
    emit(json, o.out);
    return kExitOk;
}

int run_quantum_payoff(const Options& o)
{
    auto game = make_game(o.payoffs, o.theta_a, o.theta_b);
    char* json = nullptr;
    check(wa_game_payoff_json(game.get(), o.alpha, o.beta, &json));
    OwnedString owned(json);
    emit(json, o.out);
    return kExitOk;
}

int run_quantum_amplitudes(const Options& o)
{
    auto game = make_game(o.payoffs, o.theta_a, o.theta_b);
    char* json = nullptr;
    check(wa_game_amplitudes_json(game.get(), o.alpha, o.beta, &json));
    OwnedString owned(json);
    emit(json, o.out);
    return kExitOk;
}

int run_quantum_curves(const Options& o)
{
    auto game = make_game(o.payoffs, o.theta_a, o.theta_b);
    wa_curves* raw = nullptr;
    check(wa_game_reaction_curves(game.get(), o.step, &raw));
    std::unique_ptr<wa_curves, CurvesDeleter> curves(raw);

    char* alice = nullptr;
    check(wa_curves_csv(curves.get(), WA_ALICE, &alice));
    OwnedString alice_owned(alice);
    char* bob = nullptr;
    check(wa_curves_csv(curves.get(), WA_BOB, &bob));
    OwnedString bob_owned(bob);
    char* degenerate = nullptr;
    check(wa_curves_degeneracy_json(curves.get(), &degenerate));
    OwnedString degenerate_owned(degenerate);

    const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw CliError{kExitIo, "cannot create directory '" + dir.string() + "': " + ec.message()};
    write_file(dir / "alice.csv", alice);
    write_file(dir / "bob.csv", bob);
    write_file(dir / "degenerate.json", degenerate);
    std::cout << "wrote " << wa_curves_size(curves.get()) << " rows per curve to "
              << (dir / "alice.csv").string() << " and " << (dir / "bob.csv").string() << "\n";
    return kExitOk;
}

int run_lattice_audit(const Options& o)
{
    char* json = nullptr;
    check(wa_lattice_audit_json(&json));
    OwnedString owned(json);
    emit(json, o.out);
    return kExitOk;
}

int run_reproduce(const Options& o)
{
    wa_reproduction* raw = nullptr;
    check(wa_reproduce(o.example.c_str(), &raw));
    std::unique_ptr<wa_reproduction, ReproductionDeleter> rep(raw);

    char* json = nullptr;
    check(wa_reproduction_json(rep.get(), &json));
    OwnedString json_owned(json);
    if (o.json) {
        std::cout << json;
    } else {
        char* text = nullptr;
        check(wa_reproduction_text(rep.get(), &text));
        OwnedString text_owned(text);
        std::cout << text;
    }
    if (!o.out.empty())
        write_file(o.out, json);
    return wa_reproduction_passed(rep.get()) ? kExitOk : kExitReproductionFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Classical and quantized Wise Alice game solver"};
    app.require_subcommand(1);
    Options o;

    auto add_payoffs = [&o](CLI::App* cmd) {
        cmd->add_option("-p,--payoff", o.payoffs, "Payoffs a,b,c,d")->required();
    };
    auto add_thetas = [&o](CLI::App* cmd) {
        cmd->add_option("--theta-a", o.theta_a, "Alice's representation angle (deg)")->required();
        cmd->add_option("--theta-b", o.theta_b, "Bob's representation angle (deg)")->required();
    };
    auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "Write output to PATH");
        cmd->add_flag("--json", o.json, "JSON output");
    };

    auto* classical = app.add_subcommand("classical", "Classical mixed-strategy game");
    classical->require_subcommand(1);
    auto* classical_solve = classical->add_subcommand("solve", "Closed-form equilibrium");
    add_payoffs(classical_solve);
    add_common(classical_solve);

    auto* quantum = app.add_subcommand("quantum", "Quantized game");
    quantum->require_subcommand(1);

    auto* q_solve = quantum->add_subcommand("solve", "Locate and verify equilibria");
    add_payoffs(q_solve);
    add_thetas(q_solve);
    q_solve->add_option("--step", o.step, "Scan step (deg, default 0.25)");
    q_solve->add_option("--refine-tol", o.refine_tol, "Bisection tolerance (deg, default 0.005)");
    add_common(q_solve);

    auto* q_curves = quantum->add_subcommand("curves", "Export reaction curves as CSV");
    add_payoffs(q_curves);
    add_thetas(q_curves);
    double curve_step = 1.0;
    q_curves->add_option("--step", curve_step, "Sampling step (deg, default 1)");
    q_curves->add_option("--out", o.out, "Output directory (default .)");

    auto* q_payoff = quantum->add_subcommand("payoff", "Average payoff at (alpha, beta)");
    add_payoffs(q_payoff);
    add_thetas(q_payoff);
    q_payoff->add_option("--alpha", o.alpha, "Alice's angle (deg)")->required();
    q_payoff->add_option("--beta", o.beta, "Bob's angle (deg)")->required();
    add_common(q_payoff);

    auto* q_amplitudes = quantum->add_subcommand("amplitudes", "Squared amplitudes at (alpha, beta)");
    add_payoffs(q_amplitudes);
    add_thetas(q_amplitudes);
    q_amplitudes->add_option("--alpha", o.alpha, "Alice's angle (deg)")->required();
    q_amplitudes->add_option("--beta", o.beta, "Bob's angle (deg)")->required();
    add_common(q_amplitudes);

    auto* lattice = app.add_subcommand("lattice", "Lattice of propositions");
    lattice->require_subcommand(1);
    auto* audit = lattice->add_subcommand("audit", "Check the lattice laws");
    add_common(audit);

    auto* reproduce = app.add_subcommand("reproduce", "Reproduce a published example");
    reproduce->add_option("example", o.example, "classical, 1, 2 or 3")->required();
    add_common(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (classical_solve->parsed())
            return run_classical_solve(o);
        if (q_solve->parsed())
            return run_quantum_solve(o);
        if (q_curves->parsed()) {
            o.step = curve_step;
            return run_quantum_curves(o);
        }
        if (q_payoff->parsed())
            return run_quantum_payoff(o);
        if (q_amplitudes->parsed())
            return run_quantum_amplitudes(o);
        if (audit->parsed())
            return run_lattice_audit(o);
        if (reproduce->parsed())
            return run_reproduce(o);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return kExitInput;
}
