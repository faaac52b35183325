#include "skw/config.hpp"
#include "skw/envmod.hpp"
#include "skw/error.hpp"
#include "skw/experiments.hpp"
#include "skw/meataxe.hpp"
#include "skw/rep.hpp"
#include "skw/verma.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>

using namespace skw;
namespace fs = std::filesystem;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kEnvironment = 3 };

struct Common {
    std::string family = "ptilde";
    unsigned n = 2;
    unsigned p = 3;
    unsigned k = 1;
    std::uint64_t seed = 42;
    std::optional<fs::path> out;
};

void add_algebra_options(CLI::App* sc, Common& c) {
    sc->add_option("--family", c.family, "ptilde, pder, q, sq or gl")->capture_default_str();
    sc->add_option("--n", c.n, "matrix size parameter")->capture_default_str();
    sc->add_option("--p", c.p, "characteristic")->capture_default_str();
    sc->add_option("--k", c.k, "extension degree")->capture_default_str();
}

// Config values fill in options the command line left unset.
void apply_config(CLI::App* sc, Common& c, const Config& cfg) {
    auto unset = [&](const char* name) { return sc->get_option_no_throw(name) && sc->get_option(name)->count() == 0; };
    if (cfg.p && unset("--p")) c.p = *cfg.p;
    if (cfg.k && unset("--k")) c.k = *cfg.k;
    if (cfg.seed && unset("--seed")) c.seed = *cfg.seed;
}

void emit(const json& doc, const std::optional<fs::path>& out) {
    if (out)
        write_json_atomic(doc, *out);
    else
        std::cout << doc.dump(2) << '\n';
}

AlgebraPtr make_algebra(const Common& c) {
    if (!Field::is_prime(c.p) || c.p < 3) throw UsageError("--p must be an odd prime");
    if (c.k < 1) throw UsageError("--k must be positive");
    if (c.n < 1 || c.n > 6) throw UsageError("--n must lie in 1..6");
    return build_algebra(parse_family(c.family), c.n, Field::make(c.p, c.k));
}

json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

// ---------------------------------------------------------------- build / axioms
json build_json(const LieSuperalgebra& g) {
    std::size_t even = g.even.size();
    json basis = json::array();
    for (const auto& b : g.basis) basis.push_back({{"label", b.label}, {"parity", b.parity}, {"kind", b.kind}});
    json roots = json::array();
    for (const auto& [key, idx] : g.roots) roots.push_back({{"root", key}, {"label", g.basis[idx].label}});
    return {{"family", family_name(g.family)},
            {"n", g.n},
            {"p", g.F->p()},
            {"k", g.F->k()},
            {"field", field_json(*g.F)},
            {"superdimension", {{"even", even}, {"odd", g.dim() - even}}},
            {"roots", roots},
            {"basis", basis},
            {"degenerate_cartan", g.degenerate}};
}

int cmd_build(const Common& c) {
    emit(build_json(*make_algebra(c)), c.out);
    return kPass;
}

int cmd_axioms(const Common& c) {
    auto g = make_algebra(c);
    AxiomReport rep = verify_algebra(*g);
    json checks = json::array();
    for (const auto& ch : rep.checks)
        checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"checked", ch.checked}, {"witness", ch.witness}});
    emit({{"family", family_name(g->family)}, {"n", g->n}, {"field", field_json(*g->F)}, {"checks", checks},
          {"pass", rep.pass()}},
         c.out);
    return rep.pass() ? kPass : kFail;
}

// ---------------------------------------------------------------- characters
Regularity regularity_of(const std::string& kind) {
    return kind == "strong-regss" ? Regularity::StronglyRegular : Regularity::Regular;
}

struct NamedChar {
    PChar chi;
    std::optional<Weight> lambda;  // generating weight, when there is one
};

// Values are drawn from `small`, a subfield of g's field.
NamedChar named_char(AlgebraPtr g, const std::string& spec, std::uint64_t seed, const Field& small) {
    const std::vector<Elem> emb = embed_field(small, *g->F);
    if (spec == "zero") return {PChar::zero(g), std::nullopt};
    if (spec == "regnilp") return {gen_regular_nilpotent(g), std::nullopt};
    if (spec == "regss" || spec == "strong-regss") {
        std::mt19937_64 rng(seed);
        auto w = find_regular_weights(g->family, small, g->n, regularity_of(spec), rng, 100000);
        if (!w) throw FieldTooSmall("no " + spec + " weights over " + small.name() + "; raise --k");
        for (auto& x : *w) x = emb[x];
        auto gen = gen_regular_semisimple(g, *w, regularity_of(spec));
        return {gen.chi, gen.lambda};
    }
    if (spec.rfind("file:", 0) == 0) {
        json j = read_json_file(spec.substr(5));
        PChar chi = PChar::zero(g);
        const json& vals = j.contains("values") ? j["values"] : j;
        for (auto& [label, v] : vals.items()) {
            std::size_t i = g->index_of(label);
            if (g->parity(i)) throw UsageError("character value on odd element " + label);
            if (!v.is_number_unsigned() || v.get<unsigned>() >= small.q())
                throw UsageError("character value for " + label + " is not a field element code");
            chi.values[g->even_slot(i)] = emb[v.get<unsigned>()];
        }
        return {chi, std::nullopt};
    }
    throw UsageError("--chi must be regss, strong-regss, regnilp, zero or file:PATH");
}

Weight pick_lambda(const NamedChar& nc, const std::string& spec) {
    if (spec == "auto") {
        if (nc.lambda) return *nc.lambda;
        auto ls = lambda_set(nc.chi);
        if (ls.empty()) throw FieldTooSmall("Lambda(chi) is empty over " + nc.chi.g->F->name());
        return ls.front();
    }
    if (spec.rfind("file:", 0) == 0) {
        json j = read_json_file(spec.substr(5));
        Weight w;
        for (const auto& v : j) w.push_back(static_cast<Elem>(v.get<unsigned>()));
        if (w.size() != nc.chi.g->cartan_even.size()) throw UsageError("lambda file has the wrong length");
        if (!in_lambda_set(nc.chi, w)) throw UsageError("lambda from file is not in Lambda(chi)");
        return w;
    }
    std::size_t idx;
    try {
        std::size_t used = 0;
        idx = std::stoul(spec, &used);
        if (used != spec.size()) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
        throw UsageError("--lambda must be auto, an index or file:PATH");
    }
    auto ls = lambda_set(nc.chi);
    if (idx >= ls.size()) throw UsageError("--lambda index out of range (|Lambda| = " + std::to_string(ls.size()) + ")");
    return ls[idx];
}

// ---------------------------------------------------------------- bvals
json isotropy_json(const IsotropyReport& r) {
    return {{"b0", r.b0},
            {"b1", r.b1},
            {"centralizer_even", r.centralizer_even},
            {"centralizer_odd", r.centralizer_odd},
            {"skw_term", u128_json(r.skw_term)}};
}

int cmd_bvals(const Common& c, const std::string& mode, std::size_t count, const std::string& chi_spec) {
    auto g = make_algebra(c);
    json doc = {{"family", family_name(g->family)}, {"n", g->n}, {"field", field_json(*g->F)}, {"mode", mode},
                {"seed", c.seed}};
    if (mode == "named") {
        NamedChar nc = named_char(g, chi_spec, c.seed, *g->F);
        doc["chi"] = chi_json(nc.chi, chi_spec);
        doc["bvals"] = isotropy_json(b_values(nc.chi));
    } else {
        std::vector<PChar> thetas;
        if (mode == "exhaustive") {
            thetas = enumerate_rational(g);
        } else if (mode == "sample") {
            std::mt19937_64 rng(c.seed);
            for (std::size_t i = 0; i < count; ++i) thetas.push_back(random_pchar(g, rng));
        } else {
            throw UsageError("--mode must be exhaustive, sample or named");
        }
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> hist;
        u128 best = 0;
        std::size_t min_cz = SIZE_MAX;
        for (const auto& t : thetas) {
            auto r = b_values(t);
            ++hist[{r.b0, r.b1}];
            best = std::max(best, r.skw_term);
            min_cz = std::min(min_cz, r.centralizer_odd);
        }
        json h = json::array();
        for (auto& [key, cnt] : hist) h.push_back({{"b0", key.first}, {"b1", key.second}, {"count", cnt}});
        doc["count"] = thetas.size();
        doc["max_skw"] = u128_json(best);
        doc["min_centralizer_odd"] = min_cz;
        doc["histogram"] = h;
    }
    emit(doc, c.out);
    return kPass;
}

// ---------------------------------------------------------------- verma
std::string cache_name(const Common& c, const std::string& chi, const Weight& lam) {
    std::string s = c.family + "-n" + std::to_string(c.n) + "-p" + std::to_string(c.p) + "-k" + std::to_string(c.k) +
                    "-" + chi + "-s" + std::to_string(c.seed) + "-l";
    for (std::size_t i = 0; i < lam.size(); ++i) s += (i ? "." : "") + std::to_string(lam[i]);
    for (char& ch : s)
        if (ch == '/' || ch == ':') ch = '_';
    return s + ".skw";
}

int cmd_verma(const Common& c, const std::string& chi_spec, const std::string& lambda_spec,
              const std::optional<fs::path>& emit_path, const std::vector<std::string>& checks, bool graded,
              bool store, const std::optional<fs::path>& cache_flag) {
    auto g = make_algebra(c);
    FieldPtr small = g->F;
    if (is_queer(g->family)) {
        // the isotropic subspace of f_lambda needs the quadratic extension
        g = build_algebra(g->family, g->n, Field::make(c.p, 2 * c.k));
    }
    NamedChar nc = named_char(g, chi_spec, c.seed, *small);
    Weight lam = pick_lambda(nc, lambda_spec);
    std::optional<InducedModule> Zopt;
    CartanModule cm;
    if (is_periplectic(g->family))
        Zopt = ptilde_baby_verma(g, nc.chi, lam);
    else if (is_queer(g->family))
        Zopt = queer_baby_verma(g, nc.chi, lam, &cm);
    else
        Zopt = gl_baby_verma(g, nc.chi, lam);
    const InducedModule& Z = *Zopt;
    GradedRep rep = Z.to_rep();
    rep.provenance = cache_name(c, chi_spec, lam);

    json doc = {{"family", family_name(g->family)}, {"n", g->n}, {"field", field_json(*g->F)},
                {"chi_field", field_json(*small)}, {"chi", chi_json(nc.chi, chi_spec)}, {"lambda", vec_json(lam)},
                {"dim", Z.dim()},
                {"seed", c.seed}, {"checks", json::object()}};
    if (is_queer(g->family)) doc["h1_lambda_dim"] = cm.isotropic.rows;
    bool pass = true;
    for (const auto& name : checks) {
        json r;
        if (name == "rep-axioms") {
            RepReport rr = verify_representation(Z);
            json items = json::array();
            for (const auto& ch : rr.checks)
                items.push_back({{"name", ch.name}, {"pass", ch.pass}, {"checked", ch.checked}, {"witness", ch.witness}});
            r = {{"pass", rr.pass()}, {"items", items}};
        } else if (name == "simplicity") {
            auto cert = graded ? is_graded_simple(rep, c.seed) : is_irreducible(rep, c.seed);
            r = {{"pass", cert.verdict != Verdict::Reducible}, {"certificate", certificate_json(cert)}};
        } else if (name == "omega") {
            if (!is_periplectic(g->family)) throw UsageError("--check omega applies to ptilde and pder");
            Elem xy = xy_scalar(Z), om = omega(eps_coordinates(*g, lam), *g->F);
            int sign = om == 0 ? 0 : xy == om ? 1 : xy == g->F->neg(om) ? -1 : 0;
            bool ok = om == 0 ? xy == 0 : sign != 0;
            r = {{"pass", ok}, {"xy_scalar", xy}, {"omega", om}, {"sign", sign}};
        } else if (name == "phi") {
            if (!is_queer(g->family)) throw UsageError("--check phi applies to q and sq");
            Elem ph = phi(eps_coordinates(*g, lam), *g->F);
            auto cert = is_graded_simple(rep, c.seed);
            bool simple = cert.verdict != Verdict::Reducible;
            r = {{"pass", simple == (ph != 0)}, {"phi", ph}, {"graded_simple", simple},
                 {"certificate", certificate_json(cert)}};
        } else {
            throw UsageError("unknown check " + name + " (rep-axioms, simplicity, omega, phi)");
        }
        pass = pass && r["pass"].get<bool>();
        doc["checks"][name] = r;
    }
    if (emit_path) {
        write_cache(rep, *emit_path);
        doc["matrices"] = emit_path->string();
    }
    if (store) {
        fs::path dir = resolve_cache_dir(cache_flag);
        fs::create_directories(dir);
        fs::path file = dir / cache_name(c, chi_spec, lam);
        write_cache(rep, file);
        doc["cached"] = file.string();
    }
    doc["pass"] = pass;
    emit(doc, c.out);
    return pass ? kPass : kFail;
}

// ---------------------------------------------------------------- irreducible
int cmd_irreducible(const Common& c, const fs::path& file, bool graded) {
    GradedRep rep = read_cache(file);
    auto cert = graded ? is_graded_simple(rep, c.seed) : is_irreducible(rep, c.seed);
    std::string why;
    bool replayed = replay(rep, cert, &why);
    json doc = {{"cache", file.string()}, {"dim", rep.dim}, {"field", field_json(*rep.F)}, {"graded", graded},
                {"seed", c.seed}, {"certificate", certificate_json(cert)}, {"replay", replayed}};
    if (!replayed) doc["replay_error"] = why;
    emit(doc, c.out);
    if (!replayed) return kFail;
    return cert.verdict == Verdict::Reducible ? kFail : kPass;
}

// ---------------------------------------------------------------- verify
int cmd_verify(const Common& c, const std::string& suite, const std::optional<fs::path>& expect,
               const std::optional<std::string>& family, const CLI::App* sc) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = suite_ids();
    else
        suites = {suite};
    bool pass = true;
    json all = json::array();
    for (const auto& s : suites) {
        ExperimentSpec spec;
        spec.suite = s;
        spec.seed = c.seed;
        spec.expect = expect;
        if (family) spec.family = parse_family(*family);
        if (sc->get_option("--n")->count()) spec.n = c.n;
        if (sc->get_option("--p")->count()) spec.p = c.p;
        if (sc->get_option("--k")->count()) spec.k = c.k;
        json rep = run_experiment(spec);
        pass = pass && rep["pass"].get<bool>();
        std::cerr << s << ": " << (rep["pass"].get<bool>() ? "pass" : "FAIL") << " ("
                  << rep["summary"]["matched"] << "/" << rep["summary"]["cases"] << " cases)\n";
        all.push_back(std::move(rep));
    }
    emit(suites.size() == 1 ? all[0] : json{{"reports", all}, {"pass", pass}}, c.out);
    return pass ? kPass : kFail;
}

// ---------------------------------------------------------------- cache
int cmd_cache(const std::string& action, const std::optional<fs::path>& flag, const std::vector<std::string>& names,
              bool all) {
    fs::path dir = resolve_cache_dir(flag);
    std::vector<fs::path> files;
    if (fs::exists(dir)) {
        if (!fs::is_directory(dir)) throw EnvironmentError(dir.string() + " is not a directory");
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".skw") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (action == "ls") {
        json list = json::array();
        for (const auto& f : files) list.push_back({{"name", f.filename().string()}, {"bytes", fs::file_size(f)}});
        std::cout << json{{"cache_dir", dir.string()}, {"entries", list}}.dump(2) << '\n';
        return kPass;
    }
    if (action == "rm") {
        if (!all && names.empty()) throw UsageError("cache rm needs entry names or --all");
        std::size_t removed = 0;
        if (all) {
            for (const auto& f : files) removed += fs::remove(f);
        } else {
            for (const auto& n : names) {
                if (n.find('/') != std::string::npos) throw UsageError("cache entry names may not contain '/'");
                if (!fs::remove(dir / n)) throw UsageError("no cache entry " + n);
                ++removed;
            }
        }
        std::cout << json{{"cache_dir", dir.string()}, {"removed", removed}}.dump(2) << '\n';
        return kPass;
    }
    // verify
    bool ok = true;
    json list = json::array();
    for (const auto& f : files) {
        json e = {{"name", f.filename().string()}};
        try {
            GradedRep rep = read_cache(f);
            e["ok"] = true;
            e["dim"] = rep.dim;
            e["generators"] = rep.gens.size();
        } catch (const CacheError& err) {
            e["ok"] = false;
            e["error"] = err.what();
            ok = false;
        }
        list.push_back(e);
    }
    std::cout << json{{"cache_dir", dir.string()}, {"entries", list}, {"pass", ok}}.dump(2) << '\n';
    return ok ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted Lie superalgebra modules over finite fields"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    std::optional<fs::path> config_path, cache_flag;
    app.add_option("--config", config_path, "file of key = value defaults (p, k, seed)");
    app.add_option("--cache-dir", cache_flag, "cache directory (default: $SKWLAB_CACHE_DIR, then ~/.cache/skwlab)");

    Common c;
    auto out_opt = [&](CLI::App* sc) { sc->add_option("--out", c.out, "write JSON here instead of stdout"); };
    auto seed_opt = [&](CLI::App* sc) { sc->add_option("--seed", c.seed, "random seed")->capture_default_str(); };

    auto* build = app.add_subcommand("build", "describe an algebra");
    add_algebra_options(build, c);
    out_opt(build);

    auto* axioms = app.add_subcommand("axioms", "verify the superalgebra axioms");
    add_algebra_options(axioms, c);
    out_opt(axioms);

    std::string mode = "exhaustive", named = "regss";
    std::size_t count = 1000;
    auto* bvals = app.add_subcommand("bvals", "isotropy data b0, b1 of p-characters");
    add_algebra_options(bvals, c);
    seed_opt(bvals);
    out_opt(bvals);
    bvals->add_option("--mode", mode, "exhaustive, sample or named")->capture_default_str();
    bvals->add_option("--count", count, "samples in sample mode")->capture_default_str();
    bvals->add_option("--chi", named, "named character: regss, strong-regss, regnilp, zero, file:PATH");

    std::string chi_spec = "regss", lambda_spec = "auto";
    std::optional<fs::path> emit_path;
    std::vector<std::string> checks;
    bool graded = false, store = false;
    auto* verma = app.add_subcommand("verma", "build a baby Verma module and run checks");
    add_algebra_options(verma, c);
    seed_opt(verma);
    out_opt(verma);
    verma->add_option("--chi", chi_spec, "regss, strong-regss, regnilp, zero or file:PATH")->capture_default_str();
    verma->add_option("--lambda", lambda_spec, "auto, an index into Lambda(chi), or file:PATH")->capture_default_str();
    verma->add_option("--emit-matrices", emit_path, "write the generator matrices to this cache file");
    verma->add_option("--check", checks, "rep-axioms, simplicity, omega, phi")->delimiter(',');
    verma->add_flag("--graded", graded, "use graded simplicity for --check simplicity");
    verma->add_flag("--store", store, "also store the matrices in the cache directory");

    fs::path cache_file;
    auto* irr = app.add_subcommand("irreducible", "MeatAxe on cached matrices");
    irr->add_option("--cache", cache_file, "matrix file")->required();
    irr->add_flag("--graded", graded, "graded simplicity");
    seed_opt(irr);
    out_opt(irr);

    std::string suite;
    std::optional<fs::path> expect;
    std::optional<std::string> family_filter;
    auto* verify = app.add_subcommand("verify", "run an acceptance suite and write its report");
    verify->add_option("--suite", suite, "AC1 ... AC11 or all")->required();
    verify->add_option("--expect", expect, "expectation override table (JSON)");
    verify->add_option("--family", family_filter, "restrict the grid to one family");
    verify->add_option("--n", c.n, "restrict the grid to this n");
    verify->add_option("--p", c.p, "restrict the grid to this p");
    verify->add_option("--k", c.k, "restrict the grid to this k");
    seed_opt(verify);
    out_opt(verify);

    std::vector<std::string> names;
    bool rm_all = false;
    auto* cache = app.add_subcommand("cache", "inspect the matrix cache");
    cache->require_subcommand(1);
    cache->add_subcommand("ls", "list entries");
    auto* rm = cache->add_subcommand("rm", "remove entries");
    rm->add_option("names", names, "entry names");
    rm->add_flag("--all", rm_all, "remove every entry");
    cache->add_subcommand("verify", "check every entry's header and size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        Config cfg;
        if (config_path) cfg = load_config(*config_path);
        for (auto* sc : app.get_subcommands()) {
            if (sc == verify) {
                // the config only seeds; grid filters stay explicit
                if (cfg.seed && sc->get_option("--seed")->count() == 0) c.seed = *cfg.seed;
            } else if (sc != cache) {
                apply_config(sc, c, cfg);
            }
        }
        if (build->parsed()) return cmd_build(c);
        if (axioms->parsed()) return cmd_axioms(c);
        if (bvals->parsed()) return cmd_bvals(c, mode, count, named);
        if (verma->parsed()) return cmd_verma(c, chi_spec, lambda_spec, emit_path, checks, graded, store, cache_flag);
        if (irr->parsed()) return cmd_irreducible(c, cache_file, graded);
        if (verify->parsed()) return cmd_verify(c, suite, expect, family_filter, verify);
        if (cache->parsed()) {
            std::string action = cache->get_subcommands().front()->get_name();
            return cmd_cache(action, cache_flag, names, rm_all);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const FieldTooSmall& e) {
        std::cerr << "field too small: " << e.what() << '\n';
        return kUsage;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return kEnvironment;
    } catch (const EnvironmentError& e) {
        std::cerr << "environment error: " << e.what() << '\n';
        return kEnvironment;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "environment error: " << e.what() << '\n';
        return kEnvironment;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
