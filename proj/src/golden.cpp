#include "golden.hpp"

#include "angles.hpp"
#include "classical.hpp"
#include "equilibrium.hpp"
#include "error.hpp"
#include "format.hpp"
#include "quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace wisealice::golden {

namespace {

constexpr auto EM = Status::ExpectedMatch;
constexpr auto KD = Status::KnownDiscrepancy;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<GoldenRecord> build_records()
{
    std::vector<GoldenRecord> r;

    r.push_back({"classical", "Classical mixed-strategy game, payoffs (3,3,5,1)",
                 {3, 3, 5, 1}, {}, {
        {"value", EM, {15.0 / 28.0}, 1e-12, "value of the game 15/28"},
        {"value_printed", EM, {0.536}, 5e-4, "value as printed, 0.536"},
        {"alice_strategy", EM, {5.0 / 28, 5.0 / 28, 3.0 / 28, 15.0 / 28}, 1e-12,
         "Alice's equilibrium frequencies x"},
        {"bob_strategy", EM, {3.0 / 28, 15.0 / 28, 5.0 / 28, 5.0 / 28}, 1e-12,
         "Bob's equilibrium frequencies y"},
        {"alice_conditionals", EM, {5.0 / 8, 3.0 / 8, 1.0 / 4, 3.0 / 4}, 1e-12,
         "p13^1, p13^3, p24^2, p24^4"},
        {"bob_conditionals", EM, {3.0 / 8, 5.0 / 8, 3.0 / 4, 1.0 / 4}, 1e-12,
         "q13^1, q13^3, q24^2, q24^4"},
        {"conditional_payoffs", EM, {1.875, 0.75}, 1e-12, "E13, E24"},
        {"nash_verified", EM, {1}, 0.0, "pure-deviation check passes"},
    }});

    r.push_back({"1", "Two equilibria claimed, payoffs (3,3,5,1), theta (10, 70)",
                 {3, 3, 5, 1}, {10, 70}, {
        {"first.alpha", EM, {145.5}, 0.5, "Alice's angle at the interior equilibrium"},
        {"first.value", EM, {2.452}, 0.005, "quantum value at the interior equilibrium"},
        {"first.alice_amplitudes", EM, {0.679, 0.509, 0.321, 0.491}, 0.005, "p1..p4"},
        {"first.bob_amplitudes", EM, {0.258, 0.967, 0.742, 0.033}, 0.005, "q1..q4"},
        {"first.terms", EM, {1.927, 0.525}, 0.01, "a p1 q3 + c p3 q1, b p2 q4 + d p4 q2"},
        {"first.verified", EM, {1}, 0.0, "interior point passes the deviation check"},
        {"first.beta", KD, {149.5}, 0.5, "Bob's reported angle vs located angle"},
        {"second.alice_amplitudes", EM, {1.000, 0.967, 0.000, 0.033}, 0.005,
         "p1..p4 at the reported alpha = 180"},
        {"second.beta", KD, {123.5}, 0.5,
         "Bob's reported angle vs angle reproducing the reported q-list"},
        {"second.bob_amplitudes", EM, {0.695, 0.646, 0.305, 0.354}, 0.005,
         "q1..q4 at beta = reported 123.5 - 90"},
        {"second.terms", EM, {0.915, 1.048}, 0.01, "diagonal terms at (180, 33.5)"},
        {"second.value", KD, {1.926}, 0.005, "stated value vs F(180, 33.5)"},
        {"second.verified", KD, {1}, 0.0, "deviation check at (180, 33.5)"},
        {"second.alice_best_response", KD, {180.0}, 0.5,
         "reported alpha vs Alice's best response to beta = 33.5"},
        {"verified_count", KD, {2}, 0.0, "number of verified equilibria"},
    }});

    r.push_back({"2", "Unique equilibrium claimed, payoffs (1,1,1,1), theta (45, 45)",
                 {1, 1, 1, 1}, {45, 45}, {
        {"claimed.value", EM, {0.5}, 1e-9, "F at the claimed corner (180, 180)"},
        {"claimed.alice_amplitudes", EM, {1, 0.5, 0, 0.5}, 1e-9, "p1..p4 at alpha = 180"},
        {"claimed.bob_amplitudes", EM, {1, 0.5, 0, 0.5}, 1e-9, "q1..q4 at beta = 180"},
        {"claimed.verified", KD, {1}, 0.0, "deviation check at (180, 180)"},
        {"claimed.alice_best_deviation", KD, {0.5}, 1e-9,
         "claimed value vs max over alpha of F(alpha, 180)"},
        {"verified_count", KD, {1}, 0.0, "number of verified equilibria"},
        {"classical.value", KD, {0.125}, 1e-12, "classical value with payoffs (1,1,1,1)"},
        {"classical.alice_strategy", EM, {0.25, 0.25, 0.25, 0.25}, 1e-12,
         "all vertices equally probable"},
        {"interior.verified_count", EM, {1}, 0.0,
         "payoffs (3,3,5,1), theta (15, 35): number of verified equilibria"},
        {"interior.is_interior", EM, {1}, 0.0,
         "payoffs (3,3,5,1), theta (15, 35): equilibrium away from the square's edges"},
    }});

    r.push_back({"3", "Absence of equilibrium claimed, payoffs (3,3,5,1), theta (30, 20)",
                 {3, 3, 5, 1}, {30, 20}, {
        {"verified_count", EM, {0}, 0.0, "verified equilibria at scan step 0.25"},
        {"verified_count_fine", EM, {0}, 0.0, "verified equilibria at scan step 0.125"},
    }});
    return r;
}

const std::vector<GoldenRecord>& records()
{
    static const std::vector<GoldenRecord> all = build_records();
    return all;
}

struct Measurement {
    std::vector<double> values;
    std::string note;
};

using Measurements = std::map<std::string, Measurement>;

quantum::GameParams params_of(const GoldenRecord& r)
{
    return {{r.payoffs[0], r.payoffs[1], r.payoffs[2], r.payoffs[3]},
            quantum::LogicRepresentation(r.thetas[0]),
            quantum::LogicRepresentation(r.thetas[1])};
}

std::vector<double> to_vector(const quantum::AmplitudeSquares& a)
{
    return {a.values.begin(), a.values.end()};
}

// Angle in [0, 180) whose squared amplitudes best fit `target` (0.01 deg grid).
double fit_angle(const std::vector<double>& target, const quantum::LogicRepresentation& rep)
{
    double best = 0.0;
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 18000; ++i) {
        const double angle = 0.01 * i;
        const auto a = quantum::amplitudes(angle, rep);
        double err = 0.0;
        for (std::size_t k = 0; k < 4; ++k)
            err += (a[k] - target[k]) * (a[k] - target[k]);
        if (err < best_err) {
            best_err = err;
            best = angle;
        }
    }
    return best;
}

Measurements measure_classical()
{
    Measurements m;
    const Payoffs p{3, 3, 5, 1};
    const auto sol = classical::solve_closed_form(p);
    const auto h = classical::PayoffMatrix::diagonal_game(p);
    const auto d = classical::decompose_conditional(sol.alice, sol.bob, p);
    const auto& w = sol.alice.weights();
    const auto& v = sol.bob.weights();
    m["value"] = {{sol.value}, {}};
    m["value_printed"] = {{sol.value}, {}};
    m["alice_strategy"] = {{w.begin(), w.end()}, {}};
    m["bob_strategy"] = {{v.begin(), v.end()}, {}};
    m["alice_conditionals"] = {{d.diag13->alice[0], d.diag13->alice[1], d.diag24->alice[0],
                                d.diag24->alice[1]}, {}};
    m["bob_conditionals"] = {{d.diag13->bob[0], d.diag13->bob[1], d.diag24->bob[0],
                              d.diag24->bob[1]}, {}};
    m["conditional_payoffs"] = {{d.diag13->expected_payoff, d.diag24->expected_payoff}, {}};
    m["nash_verified"] = {{classical::verify_nash(sol.alice, sol.bob, h, 1e-12).passed ? 1.0 : 0.0},
                          {}};
    return m;
}

Measurements measure_example1(const GoldenRecord& r)
{
    Measurements m;
    const auto params = params_of(r);
    const auto search = equilibrium::find_equilibria(params);
    const auto verified = search.verified();

    const equilibrium::EquilibriumReport* first = nullptr;
    for (const auto& e : verified)
        if (!first || wrapped_distance(e.alpha_deg, 145.5) < wrapped_distance(first->alpha_deg, 145.5))
            first = &e;

    if (first) {
        m["first.alpha"] = {{first->alpha_deg}, {}};
        m["first.value"] = {{first->value}, {}};
        m["first.alice_amplitudes"] = {to_vector(first->alice_amplitudes), {}};
        m["first.bob_amplitudes"] = {to_vector(first->bob_amplitudes), {}};
        m["first.terms"] = {{first->terms.diagonal13, first->terms.diagonal24}, {}};
        m["first.verified"] = {{1.0}, {}};
        m["first.beta"] = {{first->beta_deg},
                           "the published q-list is reproduced at the located beta; the reported "
                           "beta is offset by " +
                               format_number(149.5 - first->beta_deg, 4) +
                               " deg (half-period shift)"};
    } else {
        for (const char* key : {"first.alpha", "first.value", "first.beta"})
            m[key] = {{kNaN}, "no verified equilibrium near alpha = 145.5"};
        m["first.alice_amplitudes"] = {{kNaN, kNaN, kNaN, kNaN}, {}};
        m["first.bob_amplitudes"] = {{kNaN, kNaN, kNaN, kNaN}, {}};
        m["first.terms"] = {{kNaN, kNaN}, {}};
        m["first.verified"] = {{0.0}, {}};
    }

    const double alpha2 = 180.0;
    const double beta2 = 123.5 - 90.0;
    const auto p2 = quantum::amplitudes(alpha2, params.alice);
    const auto q2 = quantum::amplitudes(beta2, params.bob);
    const auto terms2 = quantum::payoff_terms(p2, q2, params.payoffs);
    const double tol = equilibrium::default_tolerance(params);
    const auto check2 = equilibrium::verify_equilibrium(alpha2, beta2, params, 720, tol);
    const auto ra2 = equilibrium::best_response_alice(beta2, params);
    const double value2 = quantum::payoff_closed_form(alpha2, beta2, params);

    m["second.alice_amplitudes"] = {to_vector(p2), {}};
    m["second.beta"] = {{fit_angle({0.695, 0.646, 0.305, 0.354}, params.bob)},
                        "the reported q-list is reproduced 90 deg away from the reported beta"};
    m["second.bob_amplitudes"] = {to_vector(q2), {}};
    m["second.terms"] = {{terms2.diagonal13, terms2.diagonal24}, {}};
    m["second.value"] = {{value2},
                         "the reported terms sum to 0.915 + 1.048 = 1.963, not the stated 1.926"};
    m["second.verified"] = {{check2.verified ? 1.0 : 0.0},
                            "fails the unilateral-deviation check, max gain " +
                                format_number(check2.max_violation, 6)};
    m["second.alice_best_response"] = {{ra2.angle_deg},
                                       "Alice strictly improves by leaving alpha = 180"};
    m["verified_count"] = {{static_cast<double>(search.verified_count())},
                           "only the interior equilibrium survives verification"};
    return m;
}

Measurements measure_example2(const GoldenRecord& r)
{
    Measurements m;
    const auto params = params_of(r);
    const double tol = equilibrium::default_tolerance(params);
    const auto check = equilibrium::verify_equilibrium(180.0, 180.0, params, 720, tol);
    double best_deviation = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 18000; ++i)
        best_deviation = std::max(best_deviation, quantum::payoff_closed_form(0.01 * i, 180.0, params));
    const auto search = equilibrium::find_equilibria(params);

    m["claimed.value"] = {{quantum::payoff_closed_form(180.0, 180.0, params)}, {}};
    m["claimed.alice_amplitudes"] = {to_vector(quantum::amplitudes(180.0, params.alice)), {}};
    m["claimed.bob_amplitudes"] = {to_vector(quantum::amplitudes(180.0, params.bob)), {}};
    m["claimed.verified"] = {{check.verified ? 1.0 : 0.0},
                             "max deviation gain " + format_number(check.max_violation, 6) +
                                 "; F(90, 180) = " +
                                 format_number(quantum::payoff_closed_form(90.0, 180.0, params), 6)};
    m["claimed.alice_best_deviation"] = {{best_deviation},
                                         "F reduces to 1 - cos(2 alpha - 2 beta) / 2; best responses "
                                         "alpha = beta + 90 and beta = alpha never meet"};
    m["verified_count"] = {{static_cast<double>(search.verified_count())}, {}};

    const auto cls = classical::solve_closed_form({1, 1, 1, 1});
    const auto& w = cls.alice.weights();
    m["classical.value"] = {{cls.value}, "closed form gives 1/4 for unit payoffs"};
    m["classical.alice_strategy"] = {{w.begin(), w.end()}, {}};

    const quantum::GameParams interior{{3, 3, 5, 1},
                                       quantum::LogicRepresentation(15),
                                       quantum::LogicRepresentation(35)};
    const auto found = equilibrium::find_equilibria(interior).verified();
    bool is_interior = found.size() == 1;
    std::string where;
    for (const auto& e : found) {
        is_interior = is_interior && wrapped_distance(e.alpha_deg, 0.0) > 1.0 &&
                      wrapped_distance(e.beta_deg, 0.0) > 1.0;
        where += "(" + format_number(e.alpha_deg, 6) + ", " + format_number(e.beta_deg, 6) + ") ";
    }
    m["interior.verified_count"] = {{static_cast<double>(found.size())}, where};
    m["interior.is_interior"] = {{is_interior ? 1.0 : 0.0}, {}};
    return m;
}

Measurements measure_example3(const GoldenRecord& r)
{
    Measurements m;
    const auto params = params_of(r);
    auto describe = [](const equilibrium::SearchResult& s) {
        std::string out;
        for (const auto& e : s.verified())
            out += "verified at (" + format_number(e.alpha_deg, 6) + ", " +
                   format_number(e.beta_deg, 6) + "), value " + format_number(e.value, 6) + " ";
        return out;
    };
    equilibrium::SearchOptions coarse;
    equilibrium::SearchOptions fine;
    fine.scan_step_deg = 0.125;
    const auto s1 = equilibrium::find_equilibria(params, coarse);
    const auto s2 = equilibrium::find_equilibria(params, fine);
    m["verified_count"] = {{static_cast<double>(s1.verified_count())}, describe(s1)};
    m["verified_count_fine"] = {{static_cast<double>(s2.verified_count())}, describe(s2)};
    return m;
}

bool close(const std::vector<double>& computed, const std::vector<double>& published, double tol)
{
    if (computed.size() != published.size())
        return false;
    for (std::size_t i = 0; i < computed.size(); ++i)
        if (!(std::abs(computed[i] - published[i]) <= tol))
            return false;
    return true;
}

} // namespace

const std::vector<std::string>& example_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& r : records())
            out.push_back(r.id);
        return out;
    }();
    return ids;
}

const GoldenRecord& record(std::string_view id)
{
    for (const auto& r : records())
        if (r.id == id)
            return r;
    throw InputError("unknown example id '" + std::string(id) + "' (expected classical, 1, 2 or 3)");
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::KnownDiscrepancy: return "KNOWN-DISCREPANCY";
    }
    return "?";
}

bool Reproduction::passed() const
{
    return std::all_of(items.begin(), items.end(), [](const ItemResult& i) {
        return i.item.status != Status::ExpectedMatch || i.within_tolerance;
    });
}

std::string Reproduction::text() const
{
    std::ostringstream os;
    os << "reproduce " << record->id << ": " << record->title << "\n";
    std::size_t matches = 0, discrepancies = 0, failures = 0;
    for (const auto& r : items) {
        os << "  " << verdict_name(r.verdict);
        for (std::size_t pad = verdict_name(r.verdict).size(); pad < 18; ++pad)
            os << ' ';
        os << r.item.key << "\n"
           << "      " << r.item.description << "\n"
           << "      published " << format_list(r.item.published, 6) << "  computed "
           << format_list(r.computed, 6) << "  tol " << format_number(r.item.tolerance, 3) << "\n";
        if (!r.note.empty())
            os << "      note: " << r.note << "\n";
        switch (r.verdict) {
        case Verdict::Match: ++matches; break;
        case Verdict::Mismatch: ++failures; break;
        case Verdict::KnownDiscrepancy: ++discrepancies; break;
        }
    }
    os << "result: " << (passed() ? "PASS" : "FAIL") << " (" << matches << " match, "
       << discrepancies << " known discrepancies, " << failures << " mismatches)\n";
    return os.str();
}

Reproduction reproduce(std::string_view id)
{
    const GoldenRecord& rec = record(id);
    Measurements measured;
    if (rec.id == "classical")
        measured = measure_classical();
    else if (rec.id == "1")
        measured = measure_example1(rec);
    else if (rec.id == "2")
        measured = measure_example2(rec);
    else
        measured = measure_example3(rec);

    Reproduction out;
    out.record = &rec;
    for (const auto& item : rec.items) {
        ItemResult r;
        r.item = item;
        if (auto it = measured.find(item.key); it != measured.end()) {
            r.computed = it->second.values;
            r.note = it->second.note;
        } else {
            r.computed.assign(item.published.size(), kNaN);
            r.note = "not measured";
        }
        r.within_tolerance = close(r.computed, item.published, item.tolerance);
        if (item.status == Status::KnownDiscrepancy)
            r.verdict = Verdict::KnownDiscrepancy;
        else
            r.verdict = r.within_tolerance ? Verdict::Match : Verdict::Mismatch;
        out.items.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> discrepancy_notes(const std::vector<double>& payoffs,
                                           const std::vector<double>& thetas)
{
    std::vector<std::string> notes;
    for (const auto& rec : records()) {
        if (rec.thetas.empty() || rec.payoffs != payoffs || rec.thetas != thetas)
            continue;
        for (const auto& item : rec.items) {
            if (item.status != Status::KnownDiscrepancy)
                continue;
            notes.push_back("example " + rec.id + ", " + item.key + ": published " +
                            format_list(item.published, 6) + " (" + item.description +
                            ") is not reproduced; see `reproduce " + rec.id + "`");
        }
    }
    return notes;
}

} // namespace wisealice::golden
