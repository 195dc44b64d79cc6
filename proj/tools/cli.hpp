#pragma once

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fk/fk.hpp"

namespace fk::cli {

enum Exit { Ok = 0, VerificationFailed = 1, InputError = 2 };

struct Config {
    Tolerances tol{};
    int jobs = 1;
    std::string format = "csv";
    std::uint64_t seed = 1;
};

namespace detail {

inline Supertree load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    return io::parse_supertree(in);
}

// Aligns a CSV block into space-padded columns; non-CSV lines pass through.
inline std::string to_plain(const std::string& csv) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> passthrough;
    std::istringstream in(csv);
    std::vector<std::size_t> width;
    std::vector<std::pair<bool, std::size_t>> layout;  // (is_row, index)
    for (std::string line; std::getline(in, line);) {
        if (line.find(',') == std::string::npos) {
            layout.push_back({false, passthrough.size()});
            passthrough.push_back(line);
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
        if (width.size() < cells.size()) width.resize(cells.size(), 0);
        for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
        layout.push_back({true, rows.size()});
        rows.push_back(std::move(cells));
    }
    std::ostringstream out;
    for (auto [is_row, idx] : layout) {
        if (!is_row) {
            out << passthrough[idx] << '\n';
            continue;
        }
        const auto& cells = rows[idx];
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i + 1 < cells.size()) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cells[i];
            else out << cells[i];
        }
        out << '\n';
    }
    return out.str();
}

inline std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

inline const char* boolean(bool b) { return b ? "true" : "false"; }

} // namespace detail

/// Runs one subcommand. Diagnostics go to `err`; everything else to `out`.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Faber-Krahn toolkit for k-uniform supertrees"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--jobs", cfg.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"csv", "plain"}));
    app.add_option("--eps", cfg.tol.compare_rel, "relative tolerance for value comparisons")->check(CLI::PositiveNumber);
    app.add_option("--jacobi-threshold", cfg.tol.jacobi_threshold, "Jacobi stopping threshold relative to ||M||_F")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for random generators");

    std::string file;
    int k = 3, n = 0, n0 = 0, d = 2, p = 0, m = 0;
    std::vector<int> pi, pi_prime, order, u1, v1, edges;
    int e1 = 0, e2 = 0, u = 0, v = 0;

    auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "supertree in .sht format")->required(); };
    auto with_pi = [&](CLI::App* sub, bool required) {
        sub->add_option("--k", k, "edge size")->check(CLI::Range(2, 1000));
        auto* o = sub->add_option("--pi", pi, "degree sequence d0,d1,...")->delimiter(',');
        if (required) o->required();
    };

    auto* validate = app.add_subcommand("validate", "check a .sht file");
    with_file(validate);
    auto* eigen = app.add_subcommand("eigen", "first Dirichlet eigenpair");
    with_file(eigen);
    auto* slo_check = app.add_subcommand("slo-check", "check an ordering against the SLO rules");
    with_file(slo_check);
    slo_check->add_option("--order", order, "vertex ids in order")->delimiter(',')->required();
    auto* slo_find = app.add_subcommand("slo-find", "search for an SLO ordering");
    with_file(slo_find);
    auto* slo_construct = app.add_subcommand("slo-construct", "build the SLO-supertree of a degree sequence");
    with_pi(slo_construct, true);
    auto* relabel_cmd = app.add_subcommand("relabel", "relabel vertices from the first eigenfunction");
    with_file(relabel_cmd);
    auto* switch_cmd = app.add_subcommand("switch", "switching operation");
    with_file(switch_cmd);
    switch_cmd->add_option("--e1", e1, "first edge index")->required();
    switch_cmd->add_option("--e2", e2, "second edge index")->required();
    switch_cmd->add_option("--u1", u1, "vertices taken from e1")->delimiter(',');
    switch_cmd->add_option("--v1", v1, "vertices taken from e2")->delimiter(',');
    auto* shift_cmd = app.add_subcommand("shift", "shifting operation");
    with_file(shift_cmd);
    shift_cmd->add_option("--u", u, "vertex losing the edges")->required();
    shift_cmd->add_option("--edges", edges, "edge indices to move")->delimiter(',');
    shift_cmd->add_option("--v", v, "vertex receiving the edges")->required();
    auto* unit_cmd = app.add_subcommand("unit", "unit transformation on a degree sequence");
    with_pi(unit_cmd, true);
    unit_cmd->add_option("--p", p, "interior index")->required();
    auto* enumerate_cmd = app.add_subcommand("enumerate", "one supertree per isomorphism class");
    with_pi(enumerate_cmd, false);
    enumerate_cmd->add_option("--n", n, "vertex count (all degree sequences)");
    auto* fk1 = app.add_subcommand("verify-fk1", "check the Faber-Krahn property over T_pi");
    with_pi(fk1, true);
    auto* fk2 = app.add_subcommand("verify-fk2", "check the Faber-Krahn property over (n, n0, k, d) families");
    fk2->add_option("--n", n, "vertex count")->required();
    fk2->add_option("--n0", n0, "interior vertex count")->required();
    fk2->add_option("--k", k, "edge size")->required()->check(CLI::Range(2, 1000));
    fk2->add_option("--d", d, "minimum interior degree")->required();
    auto* majorize = app.add_subcommand("majorize", "majorization test, unit chain and eigenvalue monotonicity");
    with_pi(majorize, true);
    majorize->add_option("--pi-prime", pi_prime, "degree sequence expected to be majorized by pi")->delimiter(',')->required();
    auto* random_cmd = app.add_subcommand("random", "random supertree (uses --seed)");
    random_cmd->add_option("--k", k, "edge size")->check(CLI::Range(2, 1000));
    random_cmd->add_option("--m", m, "edge count")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        for (char& c : what)
            if (c == '\n') c = ' ';
        err << "UsageError: " << what << '\n';
        return InputError;
    }

    auto emit = [&](const std::string& csv) { out << (cfg.format == "plain" ? detail::to_plain(csv) : csv); };
    auto sequence = [&](const std::vector<int>& xs) { return DegreeSequence::from_degrees(k, xs); };

    try {
        if (*validate) {
            const auto g = detail::load(file);
            out << "valid k=" << g.k() << " n=" << g.order() << " m=" << g.size() << " n0=" << g.interior_count()
                << " pi=" << degree_sequence(g).to_string() << '\n';
        } else if (*eigen) {
            const auto g = detail::load(file);
            const auto ep = first_dirichlet_eigenpair(g, cfg.tol);
            emit(io::eigen_report(g, ep));
        } else if (*slo_check) {
            const auto g = detail::load(file);
            const auto violations = check_slo(g, VertexOrdering{order});
            out << "slo=" << detail::boolean(violations.empty()) << '\n';
            for (const auto& viol : violations) out << viol.describe() << '\n';
            return violations.empty() ? Ok : VerificationFailed;
        } else if (*slo_find) {
            const auto g = detail::load(file);
            const auto found = find_slo_ordering(g);
            if (!found) {
                out << "slo=false\n";
                return VerificationFailed;
            }
            out << io::serialize(*found);
        } else if (*slo_construct) {
            const auto slo = construct_slo_supertree(sequence(pi));
            out << io::serialize(slo.tree) << "# " << io::serialize(slo.ordering);
        } else if (*relabel_cmd) {
            const auto g = detail::load(file);
            const auto ep = first_dirichlet_eigenpair(g, cfg.tol);
            emit(io::relabel_report(relabel(g, ep.f, cfg.tol), ep.f));
        } else if (*switch_cmd) {
            const auto g = detail::load(file);
            const SwitchSpec s{e1, e2, u1, v1};
            const auto ep = first_dirichlet_eigenpair(g, cfg.tol);
            const auto h = check_switch_hypothesis(g, ep.f, s, cfg.tol);
            const auto g2 = apply_switch(g, s);
            out << io::serialize(g2) << "# weak=" << detail::boolean(h.weak) << " strict=" << detail::boolean(h.strict)
                << " lambda_before=" << io::fixed12(ep.lambda) << " lambda_after=" << io::fixed12(first_dirichlet_eigenpair(g2, cfg.tol).lambda) << '\n';
        } else if (*shift_cmd) {
            const auto g = detail::load(file);
            const ShiftSpec s{u, edges, v};
            const auto ep = first_dirichlet_eigenpair(g, cfg.tol);
            const auto h = check_shift_hypothesis(g, ep.f, s, cfg.tol);
            const auto g2 = apply_shift(g, s);
            out << io::serialize(g2) << "# weak=" << detail::boolean(h.weak) << " strict=" << detail::boolean(h.strict)
                << " lambda_before=" << io::fixed12(ep.lambda) << " lambda_after=" << io::fixed12(first_dirichlet_eigenpair(g2, cfg.tol).lambda) << '\n';
        } else if (*unit_cmd) {
            out << "pi=" << unit_transformation(sequence(pi), p).to_string() << '\n';
        } else if (*enumerate_cmd) {
            std::vector<Supertree> family;
            if (!pi.empty()) family = enumerate_supertrees(sequence(pi), cfg.jobs);
            else if (n > 0) family = enumerate_all(k, n, cfg.jobs);
            else fail(ErrorCode::InvalidSpec, "enumerate needs --pi or --n");
            std::string csv = "canonical_code,degree_sequence\n";
            for (const auto& g : family) {
                std::string seq = degree_sequence(g).to_string();
                for (char& c : seq)
                    if (c == ',') c = ' ';
                csv += canonical_code(g).code + "," + seq + "\n";
            }
            emit(csv + "count=" + std::to_string(family.size()) + "\n");
        } else if (*fk1) {
            const auto cert = verify_fk_theorem1(sequence(pi), {cfg.tol, cfg.jobs});
            emit(io::certificate_report(cert));
            return cert.passed() ? Ok : VerificationFailed;
        } else if (*fk2) {
            const auto cert = verify_fk_theorem2(n, n0, k, d, {cfg.tol, cfg.jobs});
            emit(io::certificate_report(cert));
            return cert.passed() ? Ok : VerificationFailed;
        } else if (*majorize) {
            const auto a = sequence(pi);
            const auto b = sequence(pi_prime);
            const bool rel = majorizes(a, b) && a.n0 == b.n0;
            out << "majorized=" << detail::boolean(rel) << '\n';
            if (!rel) return VerificationFailed;
            if (a == b) return Ok;
            std::vector<int> ps;
            for (const auto& t : unit_transform_chain(a, b)) ps.push_back(t.p);
            const double la = first_dirichlet_eigenpair(construct_slo_supertree(a).tree, cfg.tol).lambda;
            const double lb = first_dirichlet_eigenpair(construct_slo_supertree(b).tree, cfg.tol).lambda;
            const bool mono = verify_majorization_monotonicity(a, b, cfg.tol);
            out << "chain=" << detail::join(ps) << '\n'
                << "lambda_pi=" << io::fixed12(la) << '\n'
                << "lambda_pi_prime=" << io::fixed12(lb) << '\n'
                << "monotone=" << detail::boolean(mono) << '\n';
            return mono ? Ok : VerificationFailed;
        } else if (*random_cmd) {
            std::mt19937_64 rng(cfg.seed);
            out << io::serialize(random_supertree(k, m, rng));
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return InputError;
    }
    return Ok;
}

} // namespace fk::cli
