// Command-line surface for the disk-function toolkit: variability regions,
// Schur analysis, sharpened bound chains, and the seeded property suite.
//
// Exit codes: 0 ok, 1 input error, 2 infeasible data, 3 chain truncated by a
// Blaschke termination, 4 property failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mpsp/peschl.hpp"
#include "mpsp/serialization.hpp"
#include "mpsp/verify.hpp"

namespace {

using namespace mpsp;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitPropertyFailure = 4;

enum class Output { json, csv, plain };

struct GlobalConfig {
    std::uint64_t seed = 20259281ULL;
    int samples = 200;
    int jet_order = 8;
    std::vector<std::string> tol_overrides;
    Output output = Output::json;
};

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

Complex complex_from_pair(const std::vector<double>& v) {
    return Complex(v.at(0), v.at(1));
}

void print_json(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

// ---- region ----------------------------------------------------------------

int cmd_region(const GlobalConfig& cfg, const std::string& data_file,
               const std::vector<double>& z_pair, int emit_boundary) {
    const InterpolationData data = dataset_from_json(load_json_file(data_file));
    const DiskPoint z = DiskPoint::interior(complex_from_pair(z_pair));

    FeasibilityVerdict verdict;
    try {
        verdict = feasibility(data);
    } catch (const VerdictDisagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailure;
    }
    if (verdict.status == Feasibility::Infeasible) {
        Json diag = to_json(verdict);
        diag["pick_matrix"] = [&] {
            Json rows = Json::array();
            for (const auto& row : pick_matrix(data)) {
                Json r = Json::array();
                for (Complex e : row) r.push_back(to_json(e));
                rows.push_back(r);
            }
            return rows;
        }();
        if (cfg.output == Output::json)
            print_json(diag);
        else
            std::cout << "infeasible (min pivot " << verdict.min_eigen_or_pivot << ")\n";
        return kExitInfeasible;
    }

    const ClosedDisk region = variability_region(data, z);
    std::vector<Complex> boundary;
    for (int k = 0; k < emit_boundary; ++k) {
        const double theta = 2.0 * M_PI * static_cast<double>(k) / emit_boundary;
        boundary.push_back(region.center + region.radius * std::polar(1.0, theta));
    }

    switch (cfg.output) {
    case Output::json: {
        Json out{{"center", to_json(region.center)},
                 {"radius", region.radius},
                 {"status", to_string(verdict.status)},
                 {"min_pivot", verdict.min_eigen_or_pivot}};
        if (emit_boundary > 0) {
            Json pts = Json::array();
            for (Complex b : boundary) pts.push_back(to_json(b));
            out["boundary"] = pts;
        }
        print_json(out);
        break;
    }
    case Output::csv:
        std::cout << "center_re,center_im,radius,status\n";
        std::printf("%.17g,%.17g,%.17g,%s\n", region.center.real(), region.center.imag(),
                    region.radius, to_string(verdict.status));
        if (emit_boundary > 0) {
            std::cout << "boundary_re,boundary_im\n";
            for (Complex b : boundary) std::printf("%.17g,%.17g\n", b.real(), b.imag());
        }
        break;
    case Output::plain:
        std::cout << "status: " << to_string(verdict.status) << "\n"
                  << "center: " << region.center.real() << " + " << region.center.imag() << "i\n"
                  << "radius: " << region.radius << "\n";
        for (Complex b : boundary)
            std::cout << "boundary: " << b.real() << " + " << b.imag() << "i\n";
        break;
    }
    return kExitOk;
}

// ---- schur -----------------------------------------------------------------

int cmd_schur(const GlobalConfig& cfg, const std::string& function_file,
              const std::string& nodes_file, int length) {
    const AnalyticFn f = function_from_json(load_json_file(function_file));

    std::vector<DiskPoint> nodes;
    if (!nodes_file.empty()) {
        for (const Json& j : load_json_file(nodes_file))
            nodes.push_back(DiskPoint::interior(complex_from_json(j)));
        if (nodes.empty()) throw std::invalid_argument("nodes file holds no nodes");
    } else {
        if (length < 1) throw std::invalid_argument("--length must be >= 1");
        nodes.assign(static_cast<std::size_t>(length), DiskPoint::interior(Complex(0.0)));
    }

    const SchurSequence seq = gamma_sequence(f, nodes);
    const std::optional<int> degree = blaschke_degree_detect(seq);

    // dual-path cross-check: Taylor-coefficient closed forms apply when the
    // nodes are classical (all zero) and f(0) = 0
    bool classic = true;
    for (const DiskPoint& n : nodes)
        if (n.value() != Complex(0.0)) classic = false;
    std::optional<std::array<Complex, 4>> taylor_route;
    if (classic && std::abs(f.eval(Complex(0.0))) <= 1e-12) {
        try {
            const Jet jet = f.eval_jet(Complex(0.0), 4);
            taylor_route =
                gamma_from_taylor({jet.coeff(1), jet.coeff(2), jet.coeff(3), jet.coeff(4)});
        } catch (const DegenerateDenominator&) {
            taylor_route.reset();
        }
    }

    switch (cfg.output) {
    case Output::json: {
        Json out = to_json(seq);
        out["blaschke_degree"] = degree ? Json(*degree) : Json(nullptr);
        if (taylor_route) {
            Json t = Json::array();
            for (Complex g : *taylor_route) t.push_back(to_json(g));
            out["gamma_taylor"] = t;
        }
        print_json(out);
        break;
    }
    case Output::csv:
        std::cout << "index,gamma_re,gamma_im,abs_gamma,taylor_re,taylor_im\n";
        for (std::size_t j = 0; j < seq.gammas.size(); ++j) {
            std::printf("%zu,%.17g,%.17g,%.17g", j, seq.gammas[j].real(), seq.gammas[j].imag(),
                        std::abs(seq.gammas[j]));
            if (taylor_route && j >= 1 && j <= 4) {
                const Complex t = (*taylor_route)[j - 1];
                std::printf(",%.17g,%.17g", t.real(), t.imag());
            } else {
                std::printf(",,");
            }
            std::printf("\n");
        }
        break;
    case Output::plain:
        for (std::size_t j = 0; j < seq.gammas.size(); ++j) {
            std::cout << "gamma_" << j << " = " << seq.gammas[j].real() << " + "
                      << seq.gammas[j].imag() << "i  (|.| = " << std::abs(seq.gammas[j]) << ")";
            if (taylor_route && j >= 1 && j <= 4) {
                const Complex t = (*taylor_route)[j - 1];
                std::cout << "  taylor-route: " << t.real() << " + " << t.imag() << "i";
            }
            std::cout << "\n";
        }
        std::cout << "raw |gamma| at stop: " << seq.raw_last_abs << "\n";
        if (degree)
            std::cout << "blaschke degree: " << *degree << "\n";
        else
            std::cout << "blaschke degree: none detected\n";
        break;
    }
    return kExitOk;
}

// ---- bounds ----------------------------------------------------------------

int cmd_bounds(const GlobalConfig& cfg, const std::string& function_file,
               const std::string& data_file, const std::vector<double>& z_pair,
               const std::vector<double>& z0_pair, int depth) {
    if (depth < 0) throw std::invalid_argument("--depth must be >= 0");
    const DiskPoint z = DiskPoint::interior(complex_from_pair(z_pair));

    std::vector<Complex> nodes;
    std::vector<Complex> gammas;
    std::size_t interior_prefix = 0;   // usable chain length
    std::optional<double> realized_modulus, realized_exp_distance;
    Complex z0;

    if (!function_file.empty()) {
        const AnalyticFn f = function_from_json(load_json_file(function_file));
        if (z0_pair.empty())
            throw std::invalid_argument("--z0 is required with --function");
        z0 = complex_from_pair(z0_pair);
        nodes.assign(static_cast<std::size_t>(depth) + 1, z0);
        const SchurSequence seq = gamma_sequence(f, interior_nodes(nodes));
        gammas = seq.gammas;
        interior_prefix = seq.status == SchurSequence::Status::Unimodular
                              ? seq.terminal_index
                              : gammas.size();
        realized_modulus = std::abs(f.eval(z.value()));
        realized_exp_distance = exp_hyperbolic_distance(f.eval(z.value()), f.eval(z0));
    } else {
        const InterpolationData data = dataset_from_json(load_json_file(data_file));
        FeasibilityVerdict verdict;
        try {
            verdict = feasibility(data);
        } catch (const VerdictDisagreement& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitPropertyFailure;
        }
        if (verdict.status == Feasibility::Infeasible) {
            if (cfg.output == Output::json)
                print_json(to_json(verdict));
            else
                std::cout << "infeasible (min pivot " << verdict.min_eigen_or_pivot << ")\n";
            return kExitInfeasible;
        }
        nodes = data.node_values();
        gammas = verdict.gammas.gammas;
        z0 = nodes.front();
        if (!z0_pair.empty() && complex_from_pair(z0_pair) != z0)
            throw std::invalid_argument("--z0 must equal the first dataset node");
        if (static_cast<std::size_t>(depth) + 1 > nodes.size())
            throw std::invalid_argument("--depth exceeds the dataset (need depth+1 points)");
        const std::size_t available =
            verdict.gammas.status == SchurSequence::Status::Unimodular
                ? verdict.gammas.terminal_index
                : gammas.size();
        interior_prefix = std::min(available, static_cast<std::size_t>(depth) + 1);
        nodes.resize(std::min(nodes.size(), static_cast<std::size_t>(depth) + 1));
        gammas.resize(nodes.size());
    }

    const bool truncated = interior_prefix < static_cast<std::size_t>(depth) + 1;
    std::vector<double> t_chain, r_chain;
    if (interior_prefix >= 1) {
        std::vector<Complex> n(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(interior_prefix));
        std::vector<Complex> g(gammas.begin(), gammas.begin() + static_cast<std::ptrdiff_t>(interior_prefix));
        t_chain = modulus_bound_chain(interior_nodes(n), g, z).values;
        if (n.front() == z0)
            r_chain = distance_bound_chain(interior_nodes(n), g, z,
                                           DiskPoint::interior(z0)).values;
    }

    switch (cfg.output) {
    case Output::json: {
        Json out{{"t_chain", t_chain},
                 {"r_chain", r_chain},
                 {"truncated", truncated},
                 {"depth_used", interior_prefix == 0 ? 0 : interior_prefix - 1}};
        Json gs = Json::array();
        for (std::size_t j = 0; j < interior_prefix; ++j) gs.push_back(to_json(gammas[j]));
        out["gammas"] = gs;
        out["realized_modulus"] = realized_modulus ? Json(*realized_modulus) : Json(nullptr);
        out["realized_exp_distance"] =
            realized_exp_distance ? Json(*realized_exp_distance) : Json(nullptr);
        print_json(out);
        break;
    }
    case Output::csv:
        std::cout << "index,t_chain,r_chain\n";
        for (std::size_t j = 0; j < t_chain.size(); ++j) {
            std::printf("%zu,%.17g,", j, t_chain[j]);
            if (j < r_chain.size()) std::printf("%.17g", r_chain[j]);
            std::printf("\n");
        }
        break;
    case Output::plain:
        for (std::size_t j = 0; j < t_chain.size(); ++j) {
            std::cout << "depth " << j << ": |f(z)| <= " << t_chain[j];
            if (j < r_chain.size()) std::cout << ", exp d <= " << r_chain[j];
            std::cout << "\n";
        }
        if (realized_modulus) std::cout << "realized |f(z)| = " << *realized_modulus << "\n";
        if (realized_exp_distance)
            std::cout << "realized exp d = " << *realized_exp_distance << "\n";
        if (truncated) std::cout << "chain truncated by Blaschke termination\n";
        break;
    }
    return truncated ? kExitTruncated : kExitOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const GlobalConfig& cfg) {
    VerifyOptions options;
    options.seed = cfg.seed;
    options.samples = cfg.samples;
    options.jet_order = cfg.jet_order;
    for (const std::string& entry : cfg.tol_overrides) {
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--tol expects name=value, got: " + entry);
        options.tolerance_overrides[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    }

    const std::vector<PropertyResult> results = run_verification(options);
    bool all_pass = true;
    for (const PropertyResult& r : results) all_pass = all_pass && r.pass;

    switch (cfg.output) {
    case Output::json: {
        Json props = Json::array();
        for (const PropertyResult& r : results)
            props.push_back(Json{{"name", r.name},
                                 {"samples", r.samples},
                                 {"tolerance", r.tolerance},
                                 {"max_violation", r.max_violation},
                                 {"pass", r.pass}});
        print_json(Json{{"seed", options.seed},
                        {"samples", options.samples},
                        {"properties", props},
                        {"all_pass", all_pass}});
        break;
    }
    case Output::csv:
        std::cout << "property,samples,tolerance,max_violation,pass\n";
        for (const PropertyResult& r : results)
            std::printf("%s,%d,%.17g,%.17g,%s\n", r.name.c_str(), r.samples, r.tolerance,
                        r.max_violation, r.pass ? "true" : "false");
        break;
    case Output::plain:
        for (const PropertyResult& r : results)
            std::printf("%-36s max violation %12.5e  tolerance %9.1e  %s\n", r.name.c_str(),
                        r.max_violation, r.tolerance, r.pass ? "pass" : "FAIL");
        std::cout << (all_pass ? "all properties pass\n" : "PROPERTY FAILURE\n");
        break;
    }
    return all_pass ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur/Pick toolkit for bounded analytic functions on the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();   // global options may follow the subcommand name

    GlobalConfig cfg;
    std::string output_name = "json";
    app.add_option("--seed", cfg.seed, "master seed for randomized commands");
    app.add_option("--samples", cfg.samples, "samples per property (verify)")
        ->check(CLI::PositiveNumber);
    app.add_option("--jet-order", cfg.jet_order, "max jet order for series checks")
        ->check(CLI::Range(3, 16));
    app.add_option("--tol", cfg.tol_overrides, "tolerance override name=value (repeatable)");
    app.add_option("--output", output_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    // region
    auto* region = app.add_subcommand("region", "variability region of f(z) for a dataset");
    std::string region_data;
    std::vector<double> region_z;
    int emit_boundary = 0;
    region->add_option("--data", region_data, "dataset JSON file")->required();
    region->add_option("--z", region_z, "query point: RE IM")->expected(2)->required();
    region->add_option("--emit-boundary", emit_boundary, "also print N boundary points");

    // schur
    auto* schur = app.add_subcommand("schur", "Schur parameters and Blaschke detection");
    std::string schur_fn, schur_nodes;
    int schur_length = 5;
    schur->add_option("--function", schur_fn, "function tree JSON file")->required();
    schur->add_option("--nodes", schur_nodes, "nodes JSON file (array of {re, im})");
    schur->add_option("--length", schur_length, "number of classical (zero) nodes");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "sharpened modulus/distance bound chains");
    std::string bounds_fn, bounds_data;
    std::vector<double> bounds_z, bounds_z0;
    int bounds_depth = 2;
    auto* fn_opt = bounds->add_option("--function", bounds_fn, "function tree JSON file");
    auto* data_opt = bounds->add_option("--data", bounds_data, "dataset JSON file");
    fn_opt->excludes(data_opt);
    bounds->add_option("--z", bounds_z, "query point: RE IM")->expected(2)->required();
    bounds->add_option("--z0", bounds_z0, "base point: RE IM")->expected(2);
    bounds->add_option("--depth", bounds_depth, "chain depth n");

    // verify
    app.add_subcommand("verify", "run the seeded property-verification suite");

    CLI11_PARSE(app, argc, argv);

    if (output_name == "csv")
        cfg.output = Output::csv;
    else if (output_name == "plain")
        cfg.output = Output::plain;

    try {
        if (region->parsed()) return cmd_region(cfg, region_data, region_z, emit_boundary);
        if (schur->parsed()) return cmd_schur(cfg, schur_fn, schur_nodes, schur_length);
        if (bounds->parsed()) {
            if (bounds_fn.empty() && bounds_data.empty())
                throw std::invalid_argument("bounds: provide --function or --data");
            return cmd_bounds(cfg, bounds_fn, bounds_data, bounds_z, bounds_z0, bounds_depth);
        }
        return cmd_verify(cfg);
    } catch (const InfeasibleData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const VerdictDisagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailure;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
