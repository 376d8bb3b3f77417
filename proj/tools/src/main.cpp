// lande-spin: command-line front end for the spin amplitude library.
//
// exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 numerical error. every failure writes a single-line JSON record
// {"error":...,"type":...} to standard error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <lande/algebra.hpp>
#include <lande/direction.hpp>
#include <lande/engine.hpp>
#include <lande/general_j.hpp>
#include <lande/simulate.hpp>
#include <lande/spin1.hpp>

#include "CLI11.hpp"
#include "json_canon.hpp"
#include "verify.hpp"

namespace {

using lande_cli::canonical_dump;
using lande_cli::format_double;
using ojson = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cli {
    double j = 1.0;
    bool degrees = false;
    std::string output = "json";
    std::string kind;
    std::string basis = "0,0";
    std::string axis = "0,0";
    std::string from = "0,0";
    std::string to = "0,0";
    std::string prepared = "0,0";
    std::string projection;  // spin projection m; empty means +j where optional
    std::vector<std::string> analyzers;
    long long shots = 10000;
    int trials = 1000;
    std::string seed;       // empty -> LANDE_SPIN_SEED env var -> 0
    std::string tolerance;  // empty -> per-tier defaults
};

// ---- input parsing --------------------------------------------------------

double parse_number(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw UsageError(std::string(what) + ": trailing characters in '" + s + "'");
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": cannot parse '" + s + "'");
    }
}

lande::Direction parse_direction(const std::string& s, bool degrees, const char* what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw UsageError(std::string(what) + ": expected 'theta,phi', got '" + s + "'");
    double theta = parse_number(s.substr(0, comma), what);
    double phi = parse_number(s.substr(comma + 1), what);
    if (degrees) {
        theta *= kPi / 180.0;
        phi *= kPi / 180.0;
    }
    try {
        return lande::Direction(theta, phi);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

int parse_two_j(double j) {
    const double doubled = 2.0 * j;
    const double rounded = std::round(doubled);
    if (std::abs(doubled - rounded) > 1e-9)
        throw UsageError("j must be an integer or half-integer");
    const int two_j = static_cast<int>(rounded);
    if (two_j < 1 || two_j > 20) throw UsageError("j must lie between 1/2 and 10");
    return two_j;
}

// returns the 0-based index of projection m in the descending ladder J..-J
int projection_index(const std::string& s, int two_j) {
    const double m = parse_number(s, "--projection");
    const double doubled = 2.0 * m;
    const double rounded = std::round(doubled);
    if (std::abs(doubled - rounded) > 1e-9)
        throw UsageError("--projection must be an integer or half-integer");
    const int two_m = static_cast<int>(rounded);
    if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
        throw UsageError("--projection must be one of j, j-1, ..., -j");
    return (two_j - two_m) / 2;
}

std::uint64_t resolve_seed(const std::string& opt) {
    std::string text = opt;
    const char* source = "--seed";
    if (text.empty()) {
        const char* env = std::getenv("LANDE_SPIN_SEED");
        if (env == nullptr) return 0;
        text = env;
        source = "LANDE_SPIN_SEED";
    }
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (errno != 0 || end == text.c_str() || *end != '\0' || text[0] == '-')
        throw UsageError(std::string(source) + ": expected an unsigned integer, got '" + text + "'");
    return v;
}

lande::EigenvalueWeights projection_weights(const lande::SpinSystem& s) {
    lande::EigenvalueWeights w;
    for (int k = 0; k < s.dim(); ++k) w.r.push_back(s.projection(k));
    return w;
}

// ---- output helpers -------------------------------------------------------

ojson angle_json(const lande::Direction& d) {
    ojson o;
    o["theta"] = d.theta();
    o["phi"] = d.phi();
    return o;
}

ojson complex_json(lande::complex z) {
    ojson o;
    o["re"] = z.real();
    o["im"] = z.imag();
    return o;
}

ojson matrix_json(const lande::ComplexMatrix& m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.dim(); ++i) {
        ojson row = ojson::array();
        for (int f = 0; f < m.dim(); ++f) row.push_back(complex_json(m(i, f)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_json(const ojson& doc) { std::cout << canonical_dump(doc) << '\n'; }

// complex tables as CSV with 1-based initial/final indices
void print_matrix_csv(const lande::ComplexMatrix& m) {
    std::cout << "i,f,re,im\n";
    for (int i = 0; i < m.dim(); ++i)
        for (int f = 0; f < m.dim(); ++f)
            std::cout << (i + 1) << ',' << (f + 1) << ',' << format_double(m(i, f).real()) << ','
                      << format_double(m(i, f).imag()) << '\n';
}

std::string pretty_complex(lande::complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.9f%+.9fi", z.real(), z.imag());
    return buf;
}

void print_matrix_pretty(const lande::ComplexMatrix& m) {
    for (int i = 0; i < m.dim(); ++i) {
        std::cout << "[ ";
        for (int f = 0; f < m.dim(); ++f) std::cout << pretty_complex(m(i, f)) << ' ';
        std::cout << "]\n";
    }
}

void emit_error_record(const std::string& type, std::string message) {
    for (char& ch : message)
        if (ch == '\n' || ch == '\r') ch = ' ';
    ojson o;
    o["error"] = message;
    o["type"] = type;
    std::cerr << canonical_dump(o) << '\n';
}

// ---- subcommands ----------------------------------------------------------

lande::ComplexMatrix operator_matrix(int two_j, const std::string& kind, const lande::Direction& b,
                                     const lande::Direction& c) {
    if (two_j == 2) {
        if (kind == "sigma-z") return lande::generalized_sigma_c(b, c).matrix;
        if (kind == "sigma-x") return lande::generalized_sigma_x(b, c).op.matrix;
        if (kind == "sigma-y") return lande::generalized_sigma_y(b, c).op.matrix;
        if (kind == "sigma-plus") return lande::generalized_ladder(b, c).plus.matrix;
        if (kind == "sigma-minus") return lande::generalized_ladder(b, c).minus.matrix;
        return lande::sigma_squared(b, c).matrix;
    }
    const lande::SpinSystem s{two_j};
    if (kind == "sigma-z") return lande::generalized_operator_j(s, b, c, projection_weights(s));
    if (kind == "sigma-squared") return lande::standard_operators_j(s).sigma_squared;
    const auto comps = lande::component_operators_j(s, b, c);
    if (kind == "sigma-x") return comps.sigma_x;
    if (kind == "sigma-y") return comps.sigma_y;
    if (kind == "sigma-plus") return comps.sigma_x + lande::complex(0.0, 1.0) * comps.sigma_y;
    return comps.sigma_x + lande::complex(0.0, -1.0) * comps.sigma_y;
}

int cmd_operator(const Cli& cli) {
    const int two_j = parse_two_j(cli.j);
    const auto basis = parse_direction(cli.basis, cli.degrees, "--basis");
    const auto axis = parse_direction(cli.axis, cli.degrees, "--axis");
    const auto m = operator_matrix(two_j, cli.kind, basis, axis);
    if (cli.output == "csv") {
        print_matrix_csv(m);
    } else if (cli.output == "pretty") {
        std::cout << "operator " << cli.kind << "  j=" << format_double(0.5 * two_j) << '\n';
        print_matrix_pretty(m);
    } else {
        ojson doc;
        doc["command"] = "operator";
        doc["j"] = 0.5 * two_j;
        doc["kind"] = cli.kind;
        doc["basis"] = angle_json(basis);
        doc["axis"] = angle_json(axis);
        doc["matrix"] = matrix_json(m);
        print_json(doc);
    }
    return 0;
}

lande::AmplitudeTable amplitudes_for(int two_j, const lande::Direction& from,
                                     const lande::Direction& to) {
    if (two_j == 2) return lande::general_amplitudes(from, to);
    return lande::general_amplitudes_j(lande::SpinSystem{two_j}, from, to);
}

int cmd_amplitudes(const Cli& cli) {
    const int two_j = parse_two_j(cli.j);
    const auto from = parse_direction(cli.from, cli.degrees, "--from");
    const auto to = parse_direction(cli.to, cli.degrees, "--to");
    const auto table = amplitudes_for(two_j, from, to);
    if (cli.output == "csv") {
        print_matrix_csv(table.entries);
    } else if (cli.output == "pretty") {
        std::cout << "amplitudes  j=" << format_double(0.5 * two_j) << '\n';
        print_matrix_pretty(table.entries);
    } else {
        ojson doc;
        doc["command"] = "amplitudes";
        doc["j"] = 0.5 * two_j;
        doc["from"] = angle_json(from);
        doc["to"] = angle_json(to);
        doc["matrix"] = matrix_json(table.entries);
        print_json(doc);
    }
    return 0;
}

int cmd_probabilities(const Cli& cli) {
    const int two_j = parse_two_j(cli.j);
    const auto from = parse_direction(cli.from, cli.degrees, "--from");
    const auto to = parse_direction(cli.to, cli.degrees, "--to");
    const int dim = two_j + 1;
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(dim),
                                          std::vector<double>(static_cast<std::size_t>(dim)));
    if (two_j == 2) {
        const auto table = lande::probability_table(from, to);
        for (int i = 0; i < 3; ++i)
            for (int f = 0; f < 3; ++f)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] =
                    table[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
    } else {
        const auto table = amplitudes_for(two_j, from, to);
        for (int i = 0; i < dim; ++i)
            for (int f = 0; f < dim; ++f)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] =
                    std::norm(table.entries(i, f));
    }
    if (cli.output == "csv") {
        std::cout << "i,f,re,im\n";
        for (int i = 0; i < dim; ++i)
            for (int f = 0; f < dim; ++f)
                std::cout << (i + 1) << ',' << (f + 1) << ','
                          << format_double(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)])
                          << ",0\n";
    } else if (cli.output == "pretty") {
        std::cout << "probabilities  j=" << format_double(0.5 * two_j) << '\n';
        for (int i = 0; i < dim; ++i) {
            std::cout << "[ ";
            for (int f = 0; f < dim; ++f) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.9f ",
                              rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)]);
                std::cout << buf;
            }
            std::cout << "]\n";
        }
    } else {
        ojson doc;
        doc["command"] = "probabilities";
        doc["j"] = 0.5 * two_j;
        doc["from"] = angle_json(from);
        doc["to"] = angle_json(to);
        ojson table = ojson::array();
        for (const auto& row : rows) table.push_back(row);
        doc["table"] = std::move(table);
        print_json(doc);
    }
    return 0;
}

int cmd_eigvecs(const Cli& cli) {
    const int two_j = parse_two_j(cli.j);
    const auto basis = parse_direction(cli.basis, cli.degrees, "--basis");
    const auto axis = parse_direction(cli.axis, cli.degrees, "--axis");
    const lande::SpinSystem s{two_j};
    // eigenvector k of the axis-direction operator, written in `basis`,
    // is row k of the axis -> basis amplitude table
    lande::ComplexMatrix rows(s.dim());
    if (two_j == 2) {
        const auto vecs = lande::generalized_sigma_c_eigvecs(basis, axis);
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i) rows(k, i) = vecs[static_cast<std::size_t>(k)].entries[i];
    } else {
        rows = lande::general_amplitudes_j(s, axis, basis).entries;
    }
    if (cli.output == "csv") {
        print_matrix_csv(rows);
    } else if (cli.output == "pretty") {
        std::cout << "eigvecs  j=" << format_double(0.5 * two_j) << '\n';
        for (int k = 0; k < s.dim(); ++k) {
            std::cout << "m=" << format_double(s.projection(k)) << ": ";
            for (int i = 0; i < s.dim(); ++i) std::cout << pretty_complex(rows(k, i)) << ' ';
            std::cout << '\n';
        }
    } else {
        ojson doc;
        doc["command"] = "eigvecs";
        doc["j"] = 0.5 * two_j;
        doc["basis"] = angle_json(basis);
        doc["axis"] = angle_json(axis);
        ojson values = ojson::array();
        for (int k = 0; k < s.dim(); ++k) values.push_back(s.projection(k));
        doc["eigenvalues"] = std::move(values);
        doc["vectors"] = matrix_json(rows);
        print_json(doc);
    }
    return 0;
}

int cmd_expect(const Cli& cli) {
    const int two_j = parse_two_j(cli.j);
    const auto prepared = parse_direction(cli.prepared, cli.degrees, "--prepared");
    const auto basis = parse_direction(cli.basis, cli.degrees, "--basis");
    const auto axis = parse_direction(cli.axis, cli.degrees, "--axis");
    const int idx = projection_index(cli.projection, two_j);
    const lande::SpinSystem s{two_j};
    const auto table = amplitudes_for(two_j, prepared, basis);
    lande::ComplexVector state(s.dim());
    for (int i = 0; i < s.dim(); ++i) state[i] = table.entries(idx, i);
    const auto r = two_j == 2
                       ? lande::generalized_sigma_c(basis, axis).matrix
                       : lande::generalized_operator_j(s, basis, axis, projection_weights(s));
    const double value = lande::expectation(state, r);
    if (cli.output == "csv") {
        std::cout << "value\n" << format_double(value) << '\n';
    } else if (cli.output == "pretty") {
        std::cout << "expectation = " << format_double(value) << '\n';
    } else {
        ojson doc;
        doc["command"] = "expect";
        doc["j"] = 0.5 * two_j;
        doc["prepared"] = angle_json(prepared);
        doc["projection"] = s.projection(idx);
        doc["basis"] = angle_json(basis);
        doc["axis"] = angle_json(axis);
        doc["value"] = value;
        print_json(doc);
    }
    return 0;
}

int cmd_verify(const Cli& cli) {
    const int two_j = parse_two_j(cli.j);
    if (cli.trials < 1) throw UsageError("--trials must be at least 1");
    std::optional<double> tolerance;
    if (!cli.tolerance.empty()) {
        tolerance = parse_number(cli.tolerance, "--tolerance");
        if (*tolerance <= 0.0) throw UsageError("--tolerance must be positive");
    }
    const auto results = lande_cli::run_verify(two_j, cli.trials, resolve_seed(cli.seed), tolerance);
    int passed = 0;
    for (const auto& r : results) {
        char worst[32];
        std::snprintf(worst, sizeof worst, "%.3g", r.worst);
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.trials
                  << " trials, worst residual " << worst << ")\n";
        if (r.pass) ++passed;
    }
    std::cout << passed << '/' << results.size() << " suites passed\n";
    if (passed == static_cast<int>(results.size())) return 0;
    emit_error_record("VerifyFailure", std::to_string(results.size() - passed) + " suite(s) failed");
    return 2;
}

std::string outcome_key(const lande::OutcomeSequence& seq, const lande::SpinSystem& s) {
    std::string key;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) key += ',';
        key += format_double(s.projection(seq[i]));
    }
    return key;
}

int cmd_simulate(const Cli& cli) {
    const int two_j = parse_two_j(cli.j);
    if (cli.shots < 1) throw UsageError("--shots must be at least 1");
    if (cli.analyzers.empty()) throw UsageError("at least one --analyzer is required");
    const auto prepared = parse_direction(cli.prepared, cli.degrees, "--prepared");
    const int idx = cli.projection.empty() ? 0 : projection_index(cli.projection, two_j);
    lande::MeasurementChain chain{lande::SpinSystem{two_j}, prepared, idx, {}};
    for (const auto& a : cli.analyzers)
        chain.analyzers.push_back(parse_direction(a, cli.degrees, "--analyzer"));
    const std::uint64_t seed = resolve_seed(cli.seed);
    const auto dist = lande::chain_distribution(chain);
    const auto hist = lande::simulate(chain, cli.shots, seed);
    const auto gof = lande::goodness_of_fit(hist, dist);
    if (cli.output == "csv") {
        std::cout << "outcome,count,expected\n";
        for (const auto& [seq, p] : dist) {
            const auto it = hist.counts.find(seq);
            const std::int64_t count = it == hist.counts.end() ? 0 : it->second;
            std::cout << '"' << outcome_key(seq, chain.system) << "\"," << count << ','
                      << format_double(p * static_cast<double>(cli.shots)) << '\n';
        }
    } else if (cli.output == "pretty") {
        std::cout << "simulate  j=" << format_double(0.5 * two_j) << "  shots=" << cli.shots
                  << "  seed=" << seed << '\n';
        for (const auto& [seq, p] : dist) {
            const auto it = hist.counts.find(seq);
            const std::int64_t count = it == hist.counts.end() ? 0 : it->second;
            std::cout << "  " << outcome_key(seq, chain.system) << ": " << count << " (expected "
                      << format_double(p * static_cast<double>(cli.shots)) << ")\n";
        }
        char p_buf[32];
        std::snprintf(p_buf, sizeof p_buf, "%.6g", gof.p_value);
        std::cout << "chi2=" << format_double(gof.chi2) << " dof=" << gof.dof << " p=" << p_buf
                  << (gof.pass ? " (pass)" : " (fail)") << '\n';
    } else {
        ojson doc;
        doc["command"] = "simulate";
        doc["j"] = 0.5 * two_j;
        doc["prepared"] = angle_json(prepared);
        doc["projection"] = chain.system.projection(idx);
        ojson analyzers = ojson::array();
        for (const auto& a : chain.analyzers) analyzers.push_back(angle_json(a));
        doc["analyzers"] = std::move(analyzers);
        doc["shots"] = cli.shots;
        doc["seed"] = seed;
        ojson counts;
        ojson expected;
        for (const auto& [seq, p] : dist) {
            const auto key = outcome_key(seq, chain.system);
            const auto it = hist.counts.find(seq);
            counts[key] = it == hist.counts.end() ? std::int64_t{0} : it->second;
            expected[key] = p * static_cast<double>(cli.shots);
        }
        doc["counts"] = std::move(counts);
        doc["expected"] = std::move(expected);
        doc["chi2"] = gof.chi2;
        doc["dof"] = gof.dof;
        doc["p_value"] = gof.p_value;
        doc["pass"] = gof.pass;
        print_json(doc);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"spin projection amplitudes, generalized operators and measurement simulation"};
    app.require_subcommand(1);

    const auto add_common = [&cli](CLI::App* sub, bool with_output = true) {
        sub->add_option("--j", cli.j, "total spin (integer or half-integer, 1/2 to 10)")->required();
        sub->add_flag("--degrees", cli.degrees, "interpret angles as degrees instead of radians");
        if (with_output)
            sub->add_option("--output", cli.output,
                            "output format: json (canonical, one line), csv (tables use the "
                            "header i,f,re,im with 1-based indices), or pretty")
                ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    auto* op = app.add_subcommand("operator", "print a generalized spin operator matrix");
    add_common(op);
    op->add_option("--kind", cli.kind, "which operator")
        ->required()
        ->check(CLI::IsMember(
            {"sigma-z", "sigma-x", "sigma-y", "sigma-plus", "sigma-minus", "sigma-squared"}));
    op->add_option("--basis", cli.basis, "direction whose eigenbasis the matrix is written in (theta,phi)");
    op->add_option("--axis", cli.axis, "measurement frame direction (theta,phi)");

    auto* amp = app.add_subcommand("amplitudes", "print the projection amplitude table between two directions");
    add_common(amp);
    amp->add_option("--from", cli.from, "initial direction (theta,phi)");
    amp->add_option("--to", cli.to, "final direction (theta,phi)");

    auto* prob = app.add_subcommand("probabilities", "print the transition probability table between two directions");
    add_common(prob);
    prob->add_option("--from", cli.from, "initial direction (theta,phi)");
    prob->add_option("--to", cli.to, "final direction (theta,phi)");

    auto* eig = app.add_subcommand("eigvecs", "print eigenvectors of the direction operator along --axis in the --basis eigenbasis");
    add_common(eig);
    eig->add_option("--basis", cli.basis, "direction whose eigenbasis components are written in (theta,phi)");
    eig->add_option("--axis", cli.axis, "direction the operator points along (theta,phi)");

    auto* exp = app.add_subcommand("expect", "expectation value of the spin component along --axis");
    add_common(exp);
    exp->add_option("--prepared", cli.prepared, "preparation direction (theta,phi)");
    exp->add_option("--projection", cli.projection, "prepared projection m")->required();
    exp->add_option("--basis", cli.basis, "working eigenbasis direction (theta,phi)");
    exp->add_option("--axis", cli.axis, "measurement direction (theta,phi)");

    auto* ver = app.add_subcommand("verify", "run randomized invariant suites and report pass/fail");
    add_common(ver, /*with_output=*/false);
    ver->add_option("--trials", cli.trials, "random trials per suite");
    ver->add_option("--seed", cli.seed, "RNG seed (default: LANDE_SPIN_SEED or 0)");
    ver->add_option("--tolerance", cli.tolerance, "override the per-suite residual tolerance");

    auto* sim = app.add_subcommand("simulate", "sample a chain of sequential spin measurements");
    add_common(sim);
    sim->add_option("--prepared", cli.prepared, "preparation direction (theta,phi)");
    sim->add_option("--projection", cli.projection, "prepared projection m (default +j)");
    sim->add_option("--analyzer", cli.analyzers, "analyzer direction (theta,phi); repeatable")
        ->required();
    sim->add_option("--shots", cli.shots, "number of simulated measurements");
    sim->add_option("--seed", cli.seed, "RNG seed (default: LANDE_SPIN_SEED or 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error_record("UsageError", e.what());
        return 1;
    }

    try {
        if (op->parsed()) return cmd_operator(cli);
        if (amp->parsed()) return cmd_amplitudes(cli);
        if (prob->parsed()) return cmd_probabilities(cli);
        if (eig->parsed()) return cmd_eigvecs(cli);
        if (exp->parsed()) return cmd_expect(cli);
        if (ver->parsed()) return cmd_verify(cli);
        if (sim->parsed()) return cmd_simulate(cli);
        emit_error_record("UsageError", "no subcommand given");
        return 1;
    } catch (const UsageError& e) {
        emit_error_record("UsageError", e.what());
        return 1;
    } catch (const lande::NoValidTransform& e) {
        emit_error_record("NoValidTransform", e.what());
        return 3;
    } catch (const lande::InsufficientShots& e) {
        emit_error_record("InsufficientShots", e.what());
        return 3;
    } catch (const lande::LabelMismatch& e) {
        emit_error_record("LabelMismatch", e.what());
        return 3;
    } catch (const lande::NotNormalized& e) {
        emit_error_record("NotNormalized", e.what());
        return 3;
    } catch (const lande::DimMismatch& e) {
        emit_error_record("DimMismatch", e.what());
        return 3;
    } catch (const lande::DimTooLarge& e) {
        emit_error_record("DimTooLarge", e.what());
        return 3;
    } catch (const lande::NotHermitian& e) {
        emit_error_record("NotHermitian", e.what());
        return 3;
    } catch (const lande::NoConvergence& e) {
        emit_error_record("NoConvergence", e.what());
        return 3;
    } catch (const lande::Error& e) {
        emit_error_record("NumericalError", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        emit_error_record("UsageError", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error_record("InternalError", e.what());
        return 3;
    }
}
