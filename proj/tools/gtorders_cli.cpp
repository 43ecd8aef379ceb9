// gtorders: command-line front end. Exit status 0 on success, 1 when a
// verification fails, 2 on usage errors.

#include "gtorders/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace gtorders;
using io::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    json report;
    std::string summary;
    bool ok = true;
};

struct Config {
    int n = 3;
    unsigned seed = 1;
    unsigned jobs = 1;
    std::string out;
    std::string format = "text";
    bool recalibrate = false;
};

std::string profile_path() {
    if (const char* p = std::getenv("GTORDERS_PROFILE"); p && *p) return p;
    return "gtorders_profile.json";
}

json read_json_arg(const std::string& arg) {
    if (arg.empty()) throw UsageError("missing JSON input");
    if (arg.front() == '{' || arg.front() == '[') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open " + arg);
    return json::parse(in);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

ConventionProfile load_profile(const Config& cfg, bool* calibrated = nullptr) {
    std::string path = profile_path();
    std::ifstream in(path);
    if (in && !cfg.recalibrate) return io::profile_from_json(json::parse(in));
    auto result = calibrate_conventions(-3, 3, cfg.jobs);
    write_file(path, io::to_json(result.profile).dump(2) + "\n");
    if (calibrated) *calibrated = true;
    return result.profile;
}

void check_rank(int n) {
    if (n < 2 || n > kMaxRank) throw UsageError("--n must be in [2, 4]");
}

std::vector<long> parse_top(const std::string& text) {
    std::vector<long> top;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            top.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw UsageError("--top must be a comma-separated integer list");
        }
    }
    if (top.empty()) throw UsageError("--top is empty");
    return top;
}

std::pair<int, int> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("expected m,k");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

Tableau random_generic_tableau(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-40, 40), den(0, 3);
    static const int dens[] = {7, 11, 13, 17};
    for (;;) {
        Tableau t(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= i; ++j) t.set(i, j, Rational(num(rng), dens[den(rng)]));
        bool distinct_top = true;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) distinct_top &= t.at(n, i) != t.at(n, j);
        if (is_generic(t) && distinct_top) return t;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois orders and Gelfand-Tsetlin modules of gl_n"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "seed for randomized runs");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 64u));
    app.add_option("--out", cfg.out, "write the JSON report to this file");
    app.add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--recalibrate", cfg.recalibrate, "ignore the cached profile and search again");

    std::function<Outcome()> run;
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "rank of gl_n")->default_val(3); };

    std::string tableau_arg, target_arg, generator_arg, top_arg, mode_arg = "count", spec_arg, c_arg;
    std::vector<std::string> seeds;
    int radius = 1, m_arg = 1, k_arg = 1, samples = 0, steps = 5;
    std::string base_arg = "0", shift_arg = "1", edges_arg;

    auto* calibrate = app.add_subcommand("calibrate", "search the convention profiles");
    calibrate->callback([&] {
        run = [&] {
            auto r = calibrate_conventions(-3, 3, cfg.jobs);
            write_file(profile_path(), io::to_json(r.profile).dump(2) + "\n");
            std::ostringstream s;
            s << "calibrated: " << r.profile.to_string() << " (" << r.valid_count << " of " << r.candidates.size()
              << " valid, " << r.seconds << " s)";
            return Outcome{io::to_json(r), s.str(), r.valid_count == 1};
        };
    });

    auto* vrel = app.add_subcommand("verify-relations", "check all gl_n brackets in the skew ring");
    add_n(vrel);
    vrel->callback([&] {
        run = [&] {
            check_rank(cfg.n);
            Realization r(cfg.n, load_profile(cfg));
            auto rep = r.verify_relations({false, cfg.jobs});
            std::ostringstream s;
            s << "verify-relations n=" << cfg.n << ": " << rep.identities.size() - rep.failures() << "/"
              << rep.identities.size() << " identities pass";
            return Outcome{io::to_json(rep), s.str(), rep.all_passed()};
        };
    });

    auto* vcen = app.add_subcommand("verify-center", "check c_mk images against the eigenvalue map");
    add_n(vcen);
    vcen->callback([&] {
        run = [&] {
            check_rank(cfg.n);
            Realization r(cfg.n, load_profile(cfg));
            auto rep = r.verify_center();
            std::ostringstream s;
            s << "verify-center n=" << cfg.n << ": " << (rep.all_passed() ? "pass" : "FAIL") << " ("
              << rep.eigenvalue_checks.size() << " eigenvalue, " << rep.centrality_checks.size()
              << " centrality checks)";
            return Outcome{io::to_json(rep), s.str(), rep.all_passed()};
        };
    });

    auto* eig = app.add_subcommand("eigenvalue", "eigenvalue of c_mk on T(l)");
    add_n(eig);
    eig->add_option("--m", m_arg)->required();
    eig->add_option("--k", k_arg)->required();
    eig->add_option("--tableau", tableau_arg, "tableau JSON (file or inline)");
    eig->add_option("--samples", samples, "check the module action on this many random generic tableaux");
    eig->callback([&] {
        run = [&] {
            if (k_arg < 1 || k_arg > m_arg || m_arg > kMaxRank) throw UsageError("need 1 <= k <= m <= 4");
            auto gamma = Realization::eigenvalue_gamma(m_arg, k_arg);
            json rep{{"m", m_arg}, {"k", k_arg}, {"gamma", gamma.to_string()}};
            std::string summary = "gamma(" + std::to_string(m_arg) + "," + std::to_string(k_arg) + ") = " + gamma.to_string();
            bool ok = true;
            if (!tableau_arg.empty()) {
                Tableau t = io::tableau_from_json(read_json_arg(tableau_arg));
                if (t.n() < m_arg) throw UsageError("tableau rank is below m");
                Rational v = evaluate(gamma, t);
                rep["value"] = rational_to_string(v);
                summary += " ; value " + rational_to_string(v);
            }
            if (samples > 0) {
                check_rank(cfg.n);
                if (cfg.n < m_arg) throw UsageError("--n is below m");
                Realization r(cfg.n, load_profile(cfg));
                std::mt19937 rng(cfg.seed);
                int good = 0;
                for (int s = 0; s < samples; ++s) {
                    Tableau t = random_generic_tableau(rng, cfg.n);
                    good += act_c(r, m_arg, k_arg, ModuleVector(t)) == ModuleVector(t, evaluate(gamma, t)) ? 1 : 0;
                }
                rep["samples"] = samples;
                rep["matches"] = good;
                ok = good == samples;
                summary += " ; module action matches on " + std::to_string(good) + "/" + std::to_string(samples);
            }
            return Outcome{rep, summary, ok};
        };
    });

    auto* actc = app.add_subcommand("act", "apply a generator or c_mk to a tableau vector");
    add_n(actc);
    actc->add_option("--generator", generator_arg, "e.g. e12, e21, e3,1");
    actc->add_option("--c", c_arg, "m,k for the operator c_mk");
    actc->add_option("--tableau", tableau_arg, "tableau or module-vector JSON (file or inline)")->required();
    actc->add_option("--top", top_arg, "act in the truncated pattern module with this top row");
    actc->callback([&] {
        run = [&] {
            json in = read_json_arg(tableau_arg);
            ModuleVector v = in.is_array() ? io::module_vector_from_json(in)
                                           : ModuleVector(io::tableau_from_json(in));
            if (v.is_zero()) throw UsageError("empty input vector");
            int n = v.terms().begin()->first.n();
            check_rank(n);
            Realization r(n, load_profile(cfg));
            ModuleVector out;
            std::string what;
            if (!c_arg.empty()) {
                auto [m, k] = parse_pair(c_arg);
                what = "c" + std::to_string(m) + std::to_string(k);
                out = act_c(r, m, k, v);
            } else {
                if (generator_arg.empty()) throw UsageError("give --generator or --c");
                auto g = GeneratorId::parse(generator_arg);
                g.check(n);
                what = g.label();
                if (!top_arg.empty()) {
                    PatternModule module(r, parse_top(top_arg));
                    out = module.act(g, v);
                } else {
                    out = act(r, g, v);
                }
            }
            json rep{{"operator", what}, {"input", io::to_json(v)}, {"output", io::to_json(out)}};
            return Outcome{rep, what + " . v = " + out.to_string(), true};
        };
    });

    auto* gtp = app.add_subcommand("gt-patterns", "enumerate or count GT patterns");
    gtp->add_option("--top", top_arg, "weakly decreasing top row, e.g. 2,1,0")->required();
    gtp->add_option("--mode", mode_arg)->check(CLI::IsMember({"count", "list"}));
    gtp->callback([&] {
        run = [&] {
            auto top = parse_top(top_arg);
            std::size_t count = gt_pattern_count(top);
            mpz_class weyl = weyl_dimension(top);
            json rep{{"top", top}, {"count", count}, {"weyl_dimension", weyl.get_str()}};
            if (mode_arg == "list") {
                json list = json::array();
                for (const auto& p : gt_patterns(top)) list.push_back(io::to_json(p));
                rep["patterns"] = list;
            }
            return Outcome{rep, std::to_string(count), weyl == mpz_class(static_cast<unsigned long>(count))};
        };
    });

    auto* reach = app.add_subcommand("reachability", "breadth-first search along raising/lowering moves");
    reach->add_option("--tableau", tableau_arg)->required();
    reach->add_option("--radius", radius)->check(CLI::Range(0, 6));
    reach->add_option("--mode", mode_arg, "lattice|pattern")->default_val("lattice")->check(CLI::IsMember({"lattice", "pattern"}));
    reach->callback([&] {
        run = [&] {
            Tableau t = io::tableau_from_json(read_json_arg(tableau_arg));
            check_rank(t.n());
            Realization r(t.n(), load_profile(cfg));
            auto rep = reachability(r, t, radius, mode_arg == "pattern" ? ReachMode::Pattern : ReachMode::Lattice);
            std::ostringstream s;
            s << "reached " << rep.reached.size() << " of " << rep.window_size << " window points";
            if (rep.mode == ReachMode::Pattern) s << " (module verified: " << (rep.module_verified ? "yes" : "no") << ")";
            return Outcome{io::to_json(rep), s.str(), rep.mode == ReachMode::Lattice || rep.module_verified};
        };
    });

    auto* sset = app.add_subcommand("s-set", "S(m,n) with the stabilizer bound");
    sset->add_option("--tableau", tableau_arg, "source tableau")->required();
    sset->add_option("--target", target_arg, "target tableau (default: source)");
    sset->callback([&] {
        run = [&] {
            Tableau s = io::tableau_from_json(read_json_arg(tableau_arg));
            Tableau t = target_arg.empty() ? s : io::tableau_from_json(read_json_arg(target_arg));
            auto rep = s_set(s, t);
            std::ostringstream out;
            out << "|S| = " << rep.s_set.size() << ", |S/G| = " << rep.s_set_mod_G << ", bound "
                << rational_to_string(rep.bound) << (rep.bound_holds ? " holds" : " FAILS");
            return Outcome{io::to_json(rep), out.str(), rep.bound_holds};
        };
    });

    auto* xset = app.add_subcommand("x-set", "X_u(m) for a generator image u");
    xset->add_option("--generator", generator_arg)->required();
    xset->add_option("--tableau", tableau_arg)->required();
    xset->callback([&] {
        run = [&] {
            Tableau t = io::tableau_from_json(read_json_arg(tableau_arg));
            check_rank(t.n());
            Realization r(t.n(), load_profile(cfg));
            auto g = GeneratorId::parse(generator_arg);
            g.check(t.n());
            auto xs = x_set(r.image(g), t, r.profile().shift_direction);
            json chars = json::array();
            for (const auto& c : xs) chars.push_back(io::to_json(c));
            json rep{{"generator", g.label()}, {"source", io::to_json(t)}, {"characters", chars}};
            return Outcome{rep, "|X| = " + std::to_string(xs.size()), true};
        };
    });

    auto* bgc = app.add_subcommand("block-graph", "window approximation of the block decomposition");
    bgc->add_option("--tableau", seeds, "seed tableau JSON (repeatable)")->required();
    bgc->add_option("--radius", radius)->check(CLI::Range(0, 4));
    bgc->add_option("--edges", edges_arg, "also write a plain-text edge list");
    bgc->callback([&] {
        run = [&] {
            std::vector<Tableau> ts;
            for (const auto& s : seeds) ts.push_back(io::tableau_from_json(read_json_arg(s)));
            check_rank(ts.front().n());
            Realization r(ts.front().n(), load_profile(cfg));
            auto g = block_graph(r, ts, radius);
            if (!edges_arg.empty()) write_file(edges_arg, g.edge_list());
            std::ostringstream s;
            s << g.nodes.size() << " nodes, " << g.edges.size() << " edges, " << g.component_count
              << " components (lower bounds)";
            return Outcome{io::to_json(g), s.str(), true};
        };
    });

    auto* qb = app.add_subcommand("q-bound", "Q_n = prod_{i<n} i!");
    add_n(qb);
    qb->callback([&] {
        run = [&] {
            if (cfg.n < 1) throw UsageError("--n must be positive");
            auto q = q_bound(cfg.n);
            return Outcome{json{{"n", cfg.n}, {"q", q.get_str()}}, q.get_str(), true};
        };
    });

    auto* mk = app.add_subcommand("mackey", "simple modules of N x| H");
    mk->add_option("--spec", spec_arg, "SemidirectSpec JSON (file or inline)");
    mk->add_option("--example", mode_arg, "s3|a4")->check(CLI::IsMember({"s3", "a4"}));
    mk->callback([&] {
        run = [&] {
            SemidirectSpec spec = !spec_arg.empty()          ? io::semidirect_from_json(read_json_arg(spec_arg))
                                  : mode_arg == "a4"         ? SemidirectSpec::a4()
                                  : mode_arg == "s3"         ? SemidirectSpec::s3()
                                                             : throw UsageError("give --spec or --example");
            auto rep = mackey_simple_modules(spec);
            std::ostringstream s;
            s << rep.blocks.size() << " blocks, dims {";
            auto dims = rep.all_dims();
            for (std::size_t i = 0; i < dims.size(); ++i) s << (i ? "," : "") << dims[i];
            s << "}";
            return Outcome{io::to_json(rep), s.str(), rep.burnside_holds && rep.class_count_matches};
        };
    });

    auto* so = app.add_subcommand("skew-orbit", "free translation orbit on the affine line");
    so->add_option("--base", base_arg);
    so->add_option("--shift", shift_arg);
    so->add_option("--steps", steps);
    so->callback([&] {
        run = [&] {
            auto s = skew_orbit_block(parse_rational(base_arg), parse_rational(shift_arg), steps);
            std::ostringstream out;
            out << s.points.size() << " points, free action: " << (s.free_action ? "yes" : "no");
            return Outcome{io::to_json(s), out.str(), s.free_action && s.within_orbit_singleton};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        Outcome o = run();
        if (!cfg.out.empty()) write_file(cfg.out, o.report.dump(2) + "\n");
        if (cfg.format == "json")
            std::cout << o.report.dump(2) << "\n";
        else
            std::cout << o.summary << "\n";
        return o.ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "usage error: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
