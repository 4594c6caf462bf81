#include "quantum.hpp"

#include "angles.hpp"
#include "error.hpp"
#include "format.hpp"

#include <cmath>
#include <string>

namespace wisealice::quantum {

LogicRepresentation::LogicRepresentation(double theta_deg) : theta_deg_(theta_deg)
{
    if (!std::isfinite(theta_deg))
        throw InputError("representation angle must be finite");
    if (std::fmod(theta_deg, 90.0) == 0.0)
        throw InputError("representation angle must not be a multiple of 90 degrees, got " +
                         format_number(theta_deg, 10));
}

double LogicRepresentation::radians() const { return to_radians(theta_deg_); }

QuantumStrategy::QuantumStrategy(double angle_deg)
{
    if (!std::isfinite(angle_deg))
        throw InputError("strategy angle must be finite");
    angle_deg_ = canonical_angle(angle_deg);
}

Vector2 QuantumStrategy::state() const
{
    const double t = to_radians(angle_deg_);
    return {std::cos(t), std::sin(t)};
}

namespace {

Matrix2 multiply(const Matrix2& x, const Matrix2& y)
{
    Matrix2 r{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

Matrix2 line_projector(double theta_rad)
{
    const double c = std::cos(theta_rad);
    const double s = std::sin(theta_rad);
    return {{{c * c, s * c}, {s * c, s * s}}};
}

double quadratic_form(const Matrix2& m, const Vector2& v)
{
    return v[0] * (m[0][0] * v[0] + m[0][1] * v[1]) + v[1] * (m[1][0] * v[0] + m[1][1] * v[1]);
}

double square(double v) { return v * v; }

} // namespace

ProjectorFamily build_family(const LogicRepresentation& rep)
{
    ProjectorFamily f;
    f.P[0] = {{{1.0, 0.0}, {0.0, 0.0}}};
    f.P[2] = {{{0.0, 0.0}, {0.0, 1.0}}};
    f.P[1] = line_projector(rep.radians());
    const Matrix2& p2 = f.P[1];
    f.P[3] = {{{1.0 - p2[0][0], -p2[0][1]}, {-p2[1][0], 1.0 - p2[1][1]}}};
    return f;
}

Matrix2 rotation(double theta_deg)
{
    const double t = to_radians(theta_deg);
    const double c = std::cos(t);
    const double s = std::sin(t);
    return {{{c, -s}, {s, c}}};
}

Matrix2 commutator_unchecked(double theta_deg)
{
    const Matrix2 p1{{{1.0, 0.0}, {0.0, 0.0}}};
    const Matrix2 p2 = line_projector(to_radians(theta_deg));
    const Matrix2 l = multiply(p1, p2);
    const Matrix2 r = multiply(p2, p1);
    return {{{l[0][0] - r[0][0], l[0][1] - r[0][1]}, {l[1][0] - r[1][0], l[1][1] - r[1][1]}}};
}

Matrix2 commutator(const LogicRepresentation& rep) { return commutator_unchecked(rep.degrees()); }

AmplitudeSquares amplitudes(double angle_deg, const LogicRepresentation& rep)
{
    const double a = to_radians(angle_deg);
    const double shifted = a - rep.radians();
    return {{square(std::cos(a)), square(std::cos(shifted)), square(std::sin(a)),
             square(std::sin(shifted))}};
}

AmplitudeSquares amplitudes(const QuantumStrategy& s, const LogicRepresentation& rep)
{
    return amplitudes(s.degrees(), rep);
}

AmplitudeSquares amplitudes(const QuantumStrategy& s, const ProjectorFamily& family)
{
    const Vector2 v = s.state();
    AmplitudeSquares out;
    for (std::size_t k = 0; k < 4; ++k)
        out.values[k] = quadratic_form(family.P[k], v);
    return out;
}

PayoffTerms payoff_terms(const AmplitudeSquares& p, const AmplitudeSquares& q,
                         const Payoffs& payoffs)
{
    return {payoffs.a * p[0] * q[2] + payoffs.c * p[2] * q[0],
            payoffs.b * p[1] * q[3] + payoffs.d * p[3] * q[1]};
}

double payoff_closed_form(double alpha_deg, double beta_deg, const GameParams& params)
{
    return payoff_terms(amplitudes(alpha_deg, params.alice), amplitudes(beta_deg, params.bob),
                        params.payoffs)
        .total();
}

double payoff_closed_form(const QuantumStrategy& alpha, const QuantumStrategy& beta,
                          const GameParams& params)
{
    return payoff_closed_form(alpha.degrees(), beta.degrees(), params);
}

Matrix4 kronecker(const Matrix2& left, const Matrix2& right)
{
    Matrix4 r{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r[2 * i + k][2 * j + l] = left[i][j] * right[k][l];
    return r;
}

PayoffOperator payoff_operator(const LogicRepresentation& alice,
                               const LogicRepresentation& bob,
                               const classical::PayoffMatrix& h)
{
    const ProjectorFamily fa = build_family(alice);
    const ProjectorFamily fb = build_family(bob);
    PayoffOperator op;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
            const double w = h(j, k);
            if (w == 0.0)
                continue;
            const Matrix4 term = kronecker(fa.P[j], fb.P[k]);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    op.H[r][c] += w * term[r][c];
        }
    }
    return op;
}

double expectation(const QuantumStrategy& alpha, const QuantumStrategy& beta,
                   const PayoffOperator& op)
{
    const Vector2 u = alpha.state();
    const Vector2 v = beta.state();
    const std::array<double, 4> s{u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
    double total = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < 4; ++c)
            row += op.H[r][c] * s[c];
        total += s[r] * row;
    }
    return total;
}

Comparison compare_with_classical(const classical::MixedStrategy& x,
                                  const classical::MixedStrategy& y,
                                  const Payoffs& payoffs)
{
    const auto d = classical::decompose_conditional(x, y, payoffs);
    if (!d.diag13 || !d.diag24)
        throw InputError("both diagonals must carry positive mass for both players");
    // Squared amplitudes taken equal to the conditional probabilities; the
    // quantum average sums the conditional payoffs instead of mixing them.
    const AmplitudeSquares p{{d.diag13->alice[0], d.diag24->alice[0], d.diag13->alice[1],
                              d.diag24->alice[1]}};
    const AmplitudeSquares q{{d.diag13->bob[0], d.diag24->bob[0], d.diag13->bob[1],
                              d.diag24->bob[1]}};
    return {payoff_terms(p, q, payoffs).total(), d.mixture()};
}

} // namespace wisealice::quantum
