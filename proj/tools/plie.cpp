// Command-line front end: load algebras, run the computations, execute the
// law suites, and emit reports.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error,
//             3 capacity exceeded, 4 internal consistency failure.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "plie/json_io.hpp"
#include "plie/suites.hpp"

using namespace plie;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitConsistency = 4;

u64 fnv1a(const std::string& data) {
    u64 h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Ctx {
    Budget budget;
    bool machine = false;
    bool serial = false;
    json report;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    void echo(const std::vector<std::string>& argv) {
        report["command"] = argv;
        report["notes"] = json::array();
    }
    void note(const std::string& s) { report["notes"].push_back(s); }
    int finish(int code) {
        report["exit_code"] = code;
        if (machine) {
            report["timing_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cout << report.dump(2) << "\n";
        }
        return code;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

LoadedAlgebra load_algebra(Ctx& ctx, const std::string& path) {
    std::string data = slurp(path);
    ctx.report["inputs"][path] = fnv1a(data);
    return algebra_from_json(json::parse(data));
}

// class grammar: pS | pN | pA | pU | pC | M | pN^k | pEv:<lambda-file> |
// res:<K>*<F> | ploc:<F> | join:<C1>,<C2> | meet:<C1>,<C2>
RClassPtr parse_class(Ctx& ctx, const std::string& s);

RClassPtr parse_pair(Ctx& ctx, const std::string& body, char sep,
                     const std::function<RClassPtr(RClassPtr, RClassPtr)>& combine) {
    // try every separator position until both sides parse
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] != sep) continue;
        try {
            RClassPtr a = parse_class(ctx, body.substr(0, i));
            RClassPtr b = parse_class(ctx, body.substr(i + 1));
            return combine(a, b);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::invalid_argument("cannot parse class pair '" + body + "'");
}

RClassPtr parse_class(Ctx& ctx, const std::string& s) {
    if (s == "pS") return class_pS();
    if (s == "pN") return class_pN();
    if (s == "pA") return class_pA();
    if (s == "pU") return class_pU();
    if (s == "pC") return class_pC();
    if (s == "M") return class_metabelian_nilpotent_abelian();
    if (s.rfind("pN^", 0) == 0) return class_pNk(static_cast<u32>(std::stoul(s.substr(3))));
    if (s.rfind("pEv:", 0) == 0) {
        std::string path = s.substr(4);
        std::string data = slurp(path);
        ctx.report["inputs"][path] = fnv1a(data);
        return class_pEv(lambda_from_json(json::parse(data)));
    }
    if (s.rfind("res:", 0) == 0)
        return parse_pair(ctx, s.substr(4), '*', [](RClassPtr k, RClassPtr f) {
            return residual_product(k, f);
        });
    if (s.rfind("ploc:", 0) == 0) return class_ploc(parse_class(ctx, s.substr(5)));
    if (s.rfind("join:", 0) == 0)
        return parse_pair(ctx, s.substr(5), ',', [](RClassPtr a, RClassPtr b) {
            return class_join(a, b);
        });
    if (s.rfind("meet:", 0) == 0)
        return parse_pair(ctx, s.substr(5), ',', [](RClassPtr a, RClassPtr b) {
            return class_meet(a, b);
        });
    throw std::invalid_argument("unknown class '" + s + "'");
}

RestrictedAlgebra require_restricted(const LoadedAlgebra& la) {
    if (!la.R)
        throw std::invalid_argument(
            "input is not restrictable and carries no p-operation");
    return *la.R;
}

int cmd_inspect(Ctx& ctx, const std::string& file) {
    LoadedAlgebra la = load_algebra(ctx, file);
    const LieAlgebra& L = *la.L;
    json& r = ctx.report["results"];
    r["dim"] = L.dim;
    r["abelian"] = L.is_abelian();
    r["soluble"] = is_soluble(L);
    r["nilpotent"] = is_nilpotent(L);
    r["restrictable"] = is_restrictable(L);
    r["center_dim"] = center(L).dim();
    r["derived_dim"] = derived_subalgebra(L).dim();
    SeriesReport ds = series(L, SeriesReport::Derived);
    json terms = json::array();
    for (const auto& t : ds.terms) terms.push_back(t.dim());
    r["derived_series_dims"] = terms;
    if (la.R) {
        r["p_images"] = json::array();
        for (const Vec& v : la.R->pop.images) r["p_images"].push_back(vec_to_json(*L.F, v));
    }
    if (!ctx.machine) {
        std::cout << "dim " << L.dim << (L.is_abelian() ? ", abelian" : "")
                  << (is_soluble(L) ? ", soluble" : ", not soluble")
                  << (is_nilpotent(L) ? ", nilpotent" : "")
                  << (is_restrictable(L) ? ", restrictable" : ", not restrictable") << "\n"
                  << "center dim " << center(L).dim() << ", derived dim "
                  << derived_subalgebra(L).dim() << "\n";
    }
    return kExitTrue;
}

int cmd_chief_series(Ctx& ctx, const std::string& file) {
    LoadedAlgebra la = load_algebra(ctx, file);
    RestrictedAlgebra R = require_restricted(la);
    ChiefSeries cs = p_chief_series(R, ctx.budget.elements);
    json terms = json::array();
    for (const auto& t : cs.terms) terms.push_back(subspace_to_json(R.field(), t));
    json factors = json::array();
    for (const auto& f : cs.factors)
        factors.push_back(json{{"dim", f.dim},
                               {"null", f.null_factor},
                               {"central", f.central},
                               {"atom", f.atom_factor}});
    ctx.report["results"] = {{"terms", terms}, {"factors", factors}};
    if (!ctx.machine) {
        std::cout << "[p]-chief series, term dimensions:";
        for (const auto& t : cs.terms) std::cout << " " << t.dim();
        std::cout << "\n";
        for (const auto& f : cs.factors)
            std::cout << "  factor dim " << f.dim << (f.null_factor ? " null" : " non-null")
                      << (f.central ? " central" : "") << (f.atom_factor ? " atom" : "") << "\n";
    }
    return kExitTrue;
}

int cmd_frattini(Ctx& ctx, const std::string& file) {
    LoadedAlgebra la = load_algebra(ctx, file);
    Subspace phi = frattini(*la.L, ctx.budget.subspaces);
    ctx.report["results"]["frattini"] = subspace_to_json(*la.L->F, phi);
    if (la.R) {
        Subspace psi = p_frattini(*la.R, ctx.budget.subspaces);
        ctx.report["results"]["p_frattini"] = subspace_to_json(*la.L->F, psi);
        if (!ctx.machine)
            std::cout << "frattini dim " << phi.dim() << ", p-frattini dim " << psi.dim() << "\n";
    } else if (!ctx.machine) {
        std::cout << "frattini dim " << phi.dim() << " (no p-operation)\n";
    }
    return kExitTrue;
}

int cmd_projector(Ctx& ctx, const std::string& cls, const std::string& file) {
    LoadedAlgebra la = load_algebra(ctx, file);
    RestrictedAlgebra R = require_restricted(la);
    RClassPtr C = parse_class(ctx, cls);
    Subspace P = projector_checked(R, *C, ctx.budget);
    bool covers = is_covering(R, P, *C, ctx.budget);
    ctx.report["results"]["projector"] = subspace_to_json(R.field(), P);
    ctx.report["certificates"]["covering"] = covers;
    if (!covers) throw consistency_error("projector fails the covering check");
    if (!ctx.machine) {
        std::cout << "projector for " << C->name << ": dim " << P.dim()
                  << " (covering certificate ok)\n";
        for (const Vec& row : P.rows) {
            for (Fel x : row) std::cout << x << " ";
            std::cout << "\n";
        }
    }
    return kExitTrue;
}

int cmd_residual(Ctx& ctx, const std::string& cls, const std::string& file) {
    LoadedAlgebra la = load_algebra(ctx, file);
    RestrictedAlgebra R = require_restricted(la);
    RClassPtr C = parse_class(ctx, cls);
    Subspace res = residual(R, *C, ctx.budget);
    ctx.report["results"]["residual"] = subspace_to_json(R.field(), res);
    if (!ctx.machine) std::cout << C->name << "-residual dim " << res.dim() << "\n";
    return kExitTrue;
}

int cmd_cohomology(Ctx& ctx, int n, const std::string& module, const std::string& file) {
    LoadedAlgebra la = load_algebra(ctx, file);
    Representation rho = module == "trivial" ? rep_trivial(la.L, 1) : rep_adjoint(la.L);
    int nmax = std::min<int>(std::max(n, ctx.budget.cohomology_nmax),
                             static_cast<int>(la.L->dim));
    if (n > nmax) nmax = n;
    CochainComplex C = cochain_complex(rho, nmax, ctx.budget.subspaces);
    u32 h = cohomology_dim(C, n);
    ctx.report["results"]["module"] = module;
    ctx.report["results"]["n"] = n;
    ctx.report["results"]["dim"] = h;
    ctx.note("degrees computed up to n_max=" + std::to_string(nmax) +
             "; higher degrees are not claimed");
    if (!ctx.machine)
        std::cout << "H^" << n << "(L, " << module << ") has dimension " << h << "\n";
    return kExitTrue;
}

int cmd_envelope(Ctx& ctx, const std::string& file, const std::string& out) {
    LoadedAlgebra la = load_algebra(ctx, file);
    Envelope env = minimal_p_envelope(la.L, ctx.budget);
    json j = algebra_to_json(env.target);
    json emb = json::array();
    for (u32 i = 0; i < env.embedding.rows; ++i) {
        Vec row(env.embedding.cols);
        for (u32 c = 0; c < env.embedding.cols; ++c) row[c] = env.embedding(i, c);
        emb.push_back(vec_to_json(env.target.field(), row));
    }
    ctx.report["results"]["target"] = j;
    ctx.report["results"]["embedding"] = emb;
    ctx.report["certificates"] = {{"injective", true},
                                  {"closure", true},
                                  {"dimension_formula", true},
                                  {"center_contained", true},
                                  {"minimal", env.minimal}};
    if (!out.empty()) {
        std::ofstream os(out);
        os << j.dump(2) << "\n";
    }
    if (!ctx.machine)
        std::cout << "minimal p-envelope: dim " << env.target.dim() << " (source dim "
                  << la.L->dim << "), certificates ok"
                  << (out.empty() ? "" : (", written to " + out)) << "\n";
    return kExitTrue;
}

int cmd_membership(Ctx& ctx, const std::string& cls, const std::string& file) {
    LoadedAlgebra la = load_algebra(ctx, file);
    RestrictedAlgebra R = require_restricted(la);
    RClassPtr C = parse_class(ctx, cls);
    MembershipResult m = membership(R, *C, ctx.budget);
    ctx.report["results"]["member"] = m.member;
    ctx.report["results"]["primitive_quotients_checked"] = m.primitive_quotients_checked;
    if (m.failing_kernel)
        ctx.report["certificates"]["failing_kernel"] =
            subspace_to_json(R.field(), *m.failing_kernel);
    if (!ctx.machine)
        std::cout << (m.member ? "member of " : "not a member of ") << C->name << " ("
                  << m.primitive_quotients_checked << " primitive quotients checked)\n";
    return m.member ? kExitTrue : kExitFalse;
}

int cmd_catalog_list(Ctx& ctx) {
    json items = json::array();
    for (const auto& e : catalog::entries()) {
        items.push_back(json{{"key", e.key},
                             {"description", e.description},
                             {"default_p", e.default_p},
                             {"facts", e.facts}});
        if (!ctx.machine)
            std::cout << e.key << " (p=" << e.default_p << "): " << e.description << "\n";
    }
    ctx.report["results"]["entries"] = items;
    return kExitTrue;
}

int cmd_catalog_build(Ctx& ctx, const std::string& key, u64 p, const std::string& out) {
    catalog::Value v = catalog::build(key, p);
    json j;
    if (v.restricted) j = algebra_to_json(*v.restricted);
    else if (v.ordinary) j = algebra_to_json(**v.ordinary);
    else j = lambda_to_json(*v.lambda);
    ctx.report["results"]["object"] = j;
    if (!out.empty()) {
        std::ofstream os(out);
        os << j.dump(2) << "\n";
        if (!ctx.machine) std::cout << "wrote " << out << "\n";
    } else if (!ctx.machine) {
        std::cout << j.dump(2) << "\n";
    }
    return kExitTrue;
}

int run_suites(Ctx& ctx, const std::vector<std::string>& names, suites::Options& opt) {
    bool all_pass = true;
    json rep = json::array();
    for (const std::string& name : names) {
        suites::SuiteResult r = suites::run_suite(name, opt);
        json fails = json::array();
        for (const auto& f : r.failures)
            fails.push_back(json{{"instance", f.instance}, {"law", f.law}, {"detail", f.detail}});
        rep.push_back(json{{"suite", r.name},
                           {"instances", r.instances},
                           {"checks", r.checks},
                           {"failures", fails}});
        if (!ctx.machine) {
            std::cout << (r.pass() ? "PASS" : "FAIL") << " " << r.name << ": " << r.instances
                      << " instances, " << r.checks << " checks, " << r.failures.size()
                      << " failures (" << r.seconds << " s)\n";
            for (size_t i = 0; i < r.failures.size() && i < 10; ++i)
                std::cout << "   [" << r.failures[i].instance << "] " << r.failures[i].law << " "
                          << r.failures[i].detail << "\n";
        }
        all_pass = all_pass && r.pass();
    }
    ctx.report["results"]["suites"] = rep;
    return all_pass ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    CLI::App app{"soluble restricted Lie algebra toolkit"};
    app.require_subcommand(1);
    double budget_scale = 1.0;
    app.add_flag("--machine", ctx.machine, "emit a machine-readable JSON report");
    app.add_flag("--serial", ctx.serial, "disable the parallel enumeration kernels");
    app.add_option("--budget", budget_scale, "scale the enumeration budgets");

    std::string file, cls = "pN", out, module = "adjoint", key, suite;
    int ndeg = 1;
    u64 prime = 0;
    u32 max_dim = 3;

    auto* inspect = app.add_subcommand("inspect", "basic structure of an algebra file");
    inspect->add_option("file", file)->required();
    auto* chief = app.add_subcommand("chief-series", "[p]-chief series with classification");
    chief->add_option("file", file)->required();
    auto* frat = app.add_subcommand("frattini", "frattini and [p]-frattini subalgebras");
    frat->add_option("file", file)->required();
    auto* proj = app.add_subcommand("projector", "class projector with covering certificate");
    proj->add_option("--class", cls)->required();
    proj->add_option("file", file)->required();
    auto* resid = app.add_subcommand("residual", "formation residual");
    resid->add_option("--class", cls)->required();
    resid->add_option("file", file)->required();
    auto* coh = app.add_subcommand("cohomology", "cohomology dimension of a module");
    coh->add_option("--n", ndeg)->required();
    coh->add_option("--module", module)->check(CLI::IsMember({"adjoint", "trivial"}));
    coh->add_option("file", file)->required();
    auto* env = app.add_subcommand("envelope", "minimal p-envelope with certificates");
    env->add_option("file", file)->required();
    env->add_option("-o,--output", out);
    auto* memb = app.add_subcommand("membership", "class membership with certificate");
    memb->add_option("--class", cls)->required();
    memb->add_option("file", file)->required();
    auto* cat = app.add_subcommand("catalog", "named example constructions");
    auto* cat_list = cat->add_subcommand("list", "list the catalog");
    auto* cat_build = cat->add_subcommand("build", "build one entry");
    cat_build->add_option("key", key)->required();
    cat_build->add_option("--p", prime);
    cat_build->add_option("-o,--output", out);
    auto* laws = app.add_subcommand("check-laws", "run a law suite on enumerated algebras");
    laws->add_option("--suite", suite);
    laws->add_option("--p", prime);
    laws->add_option("--max-dim", max_dim);
    auto* repro = app.add_subcommand("reproduce-paper",
                                     "run every catalog fact and every law suite");

    std::vector<std::string> argvec(argv, argv + argc);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    ctx.echo(argvec);
    ctx.budget = Budget{}.scaled(budget_scale);

    try {
        if (*inspect) return ctx.finish(cmd_inspect(ctx, file));
        if (*chief) return ctx.finish(cmd_chief_series(ctx, file));
        if (*frat) return ctx.finish(cmd_frattini(ctx, file));
        if (*proj) return ctx.finish(cmd_projector(ctx, cls, file));
        if (*resid) return ctx.finish(cmd_residual(ctx, cls, file));
        if (*coh) return ctx.finish(cmd_cohomology(ctx, ndeg, module, file));
        if (*env) return ctx.finish(cmd_envelope(ctx, file, out));
        if (*memb) return ctx.finish(cmd_membership(ctx, cls, file));
        if (*cat_list) return ctx.finish(cmd_catalog_list(ctx));
        if (*cat_build) {
            u64 p = prime;
            if (p == 0)
                for (const auto& e : catalog::entries())
                    if (e.key == key) p = e.default_p;
            if (p == 0) throw std::invalid_argument("unknown catalog key");
            return ctx.finish(cmd_catalog_build(ctx, key, p, out));
        }
        if (*laws) {
            suites::Options opt;
            opt.budget = ctx.budget;
            opt.parallel = !ctx.serial;
            if (prime != 0) opt.sample_regimes = {{prime, max_dim}};
            std::vector<std::string> names =
                suite.empty() ? suites::suite_names() : std::vector<std::string>{suite};
            return ctx.finish(run_suites(ctx, names, opt));
        }
        if (*repro) {
            suites::Options opt;
            opt.budget = ctx.budget;
            opt.parallel = !ctx.serial;
            return ctx.finish(run_suites(ctx, suites::suite_names(), opt));
        }
        std::cerr << "no subcommand\n";
        return ctx.finish(kExitUsage);
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        ctx.note(std::string("capacity: ") + e.what());
        return ctx.finish(kExitCapacity);
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        ctx.note(std::string("consistency: ") + e.what());
        return ctx.finish(kExitConsistency);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        ctx.note(std::string("usage: ") + e.what());
        return ctx.finish(kExitUsage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ctx.finish(kExitConsistency);
    }
}
