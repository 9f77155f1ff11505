#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lerchlab/char_class.hpp"
#include "lerchlab/dirichlet.hpp"
#include "lerchlab/errors.hpp"
#include "lerchlab/hodge_eps.hpp"
#include "lerchlab/identities.hpp"
#include "lerchlab/lerch.hpp"
#include "lerchlab/numeric.hpp"
#include "lerchlab/report.hpp"

using json = nlohmann::json;
using namespace lerchlab;

namespace {

struct Options {
    long digits = 50;
    unsigned n_max = 12;
    std::string tolerance;  // optional override, decimal string
    std::string json_path;
    unsigned seed = 12345;
    int parallel = 1;  // accepted for interface stability; execution order is
                       // deterministic regardless
};

long wp_of(const Options& opt) { return bits_for_digits(opt.digits) + 32; }

BigComplex parse_s(const std::string& text, long wp) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        return BigComplex(BigReal::from_string(text, wp));
    return BigComplex(BigReal::from_string(text.substr(0, comma), wp),
                      BigReal::from_string(text.substr(comma + 1), wp));
}

// "1:1,3:0" -> {u -> rational}
std::map<unsigned long, Rational> parse_p_values(const std::string& text) {
    std::map<unsigned long, Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw usage_error("expected u:value pairs in --p");
        out[std::stoul(item.substr(0, colon))] = Rational(item.substr(colon + 1));
    }
    return out;
}

// Re-evaluate the pass flag under a tolerance override, then serialize.
json emit(const IdentityReport& rep_in, const Options& opt) {
    IdentityReport rep = rep_in;
    if (!opt.tolerance.empty()) {
        rep.tolerance = BigReal::from_string(opt.tolerance, wp_of(opt));
        rep.pass = rep.abs_err <= rep.tolerance || rep.rel_err <= rep.tolerance;
    }
    return report_json(rep, opt.digits);
}

json boolean_entry(const std::string& name, const std::string& params, bool pass) {
    return json{{"name", name}, {"params", params}, {"pass", pass}, {"elapsed_ms", 0}};
}

std::vector<DirichletCharacter> odd_characters(unsigned n) {
    std::vector<DirichletCharacter> out;
    for (const auto& chi : characters(n))
        if (chi.is_odd()) out.push_back(chi);
    return out;
}

std::vector<unsigned> filtered(std::initializer_list<unsigned> ns, unsigned n_max,
                               unsigned n_only) {
    std::vector<unsigned> out;
    for (unsigned n : ns)
        if ((n_only ? n == n_only : n <= n_max)) out.push_back(n);
    return out;
}

EquivariantBundleSpec random_kappa_spec(std::mt19937& rng) {
    static const unsigned ns[] = {2, 3, 4, 6};
    unsigned n = ns[rng() % 4];
    unsigned rank = 1 + rng() % 3;
    EquivariantBundleSpec spec;
    spec.n = n;
    for (unsigned i = 0; i < rank; ++i)
        spec.lines.emplace_back(static_cast<long>(rng() % n), 1u);
    return spec;
}

EquivariantBundleSpec random_grrr_spec(std::mt19937& rng, unsigned n_max) {
    unsigned n = 2 + rng() % (std::max(2u, std::min(n_max, 12u)) - 1);
    unsigned blocks = 1 + rng() % 3;
    EquivariantBundleSpec spec;
    spec.n = n;
    for (unsigned i = 0; i < blocks; ++i)
        spec.lines.emplace_back(1 + static_cast<long>(rng() % (n - 1)), 1 + rng() % 3);
    return spec;
}

std::string spec_string(const EquivariantBundleSpec& spec) {
    std::ostringstream os;
    os << "n=" << spec.n << " lines=";
    for (size_t i = 0; i < spec.lines.size(); ++i)
        os << (i ? "," : "") << spec.lines[i].first << "^" << spec.lines[i].second;
    return os.str();
}

const std::vector<Rational>& s_grid() {
    static const std::vector<Rational> grid{Rational(-5, 2), Rational(-5, 4), Rational(-1, 2),
                                            Rational(1, 4), Rational(3, 4)};
    return grid;
}

// ---- suites -------------------------------------------------------------

json suite_lemma_functional(const Options& opt, unsigned n_only) {
    json results = json::array();
    const long wp = wp_of(opt);
    for (unsigned n : filtered({3, 4, 5, 7, 8, 9, 11, 12}, opt.n_max, n_only))
        for (const auto& chi : odd_characters(n))
            for (const auto& q : s_grid())
                results.push_back(
                    emit(verify_lemma_functional(chi, BigComplex(BigReal(q, wp)), opt.digits),
                         opt));
    return results;
}

json suite_theorem2_ratio(const Options& opt, unsigned n_only) {
    json results = json::array();
    for (unsigned n : filtered({3, 4, 5, 7, 9, 12}, opt.n_max, n_only))
        for (const auto& chi : odd_characters(n))
            results.push_back(emit(verify_theorem2_ratio(chi, opt.digits), opt));
    return results;
}

json suite_eta_zero(const Options& opt, unsigned n_only) {
    json results = json::array();
    unsigned lo = n_only ? n_only : 2, hi = n_only ? n_only : opt.n_max;
    for (unsigned n = lo; n <= hi; ++n)
        results.push_back(emit(verify_eta_zero(n, bits_for_digits(opt.digits)), opt));
    return results;
}

json suite_hurwitz_link(const Options& opt, unsigned n_only) {
    json results = json::array();
    for (unsigned p : filtered({3, 5, 7, 11}, opt.n_max, n_only))
        for (const auto& chi : odd_characters(p))
            results.push_back(boolean_entry(
                "hurwitz-link", "p=" + std::to_string(p) + " chi=" + chi.label(),
                verify_hurwitz_link(p, chi, opt.digits)));
    return results;
}

json suite_wasq(const Options& opt, unsigned n_only) {
    json results = json::array();
    for (unsigned n : filtered({4, 5, 7, 8, 9, 11, 12}, opt.n_max, n_only))
        for (const auto& chi : characters(n)) {
            if (!chi.is_primitive()) continue;
            bool ok = true;
            for (long l = 0; l < static_cast<long>(n); ++l) ok = ok && verify_wasq(chi, l);
            results.push_back(
                boolean_entry("wasq", "n=" + std::to_string(n) + " chi=" + chi.label(), ok));
        }
    return results;
}

json suite_euler_factor(const Options& opt, unsigned n_only) {
    json results = json::array();
    const long prec = bits_for_digits(opt.digits);
    unsigned lo = n_only ? n_only : 3, hi = n_only ? n_only : opt.n_max;
    for (unsigned n = lo; n <= hi; ++n)
        for (const auto& chi : characters(n))
            results.push_back(boolean_entry(
                "euler-factor", "n=" + std::to_string(n) + " chi=" + chi.label() + " s=2",
                verify_euler_factor(chi, BigComplex(2, prec + 32), prec)));
    return results;
}

json suite_kappa(const Options& opt, unsigned count) {
    json results = json::array();
    std::mt19937 rng(opt.seed);
    for (unsigned i = 0; i < count; ++i) {
        EquivariantBundleSpec spec = random_kappa_spec(rng);
        unsigned l = rng() % 4;
        results.push_back(boolean_entry(
            "kappa", spec_string(spec) + " l=" + std::to_string(l), verify_kappa(spec, l)));
    }
    return results;
}

json suite_grrr(const Options& opt, unsigned count) {
    json results = json::array();
    std::mt19937 rng(opt.seed);
    for (unsigned i = 0; i < count; ++i) {
        EquivariantBundleSpec spec = random_grrr_spec(rng, opt.n_max);
        results.push_back(boolean_entry("grrr", spec_string(spec), verify_grrr(spec)));
    }
    return results;
}

json suite_projector(const Options& opt, unsigned n_only) {
    json results = json::array();
    unsigned lo = n_only ? n_only : 1, hi = n_only ? n_only : opt.n_max;
    for (unsigned n = lo; n <= hi; ++n) {
        bool ok = projector_idempotent_check(n);
        std::vector<Rational> coeffs = projector_poly(n);
        json cs = json::array();
        for (const auto& c : coeffs) cs.push_back(c.str());
        json entry = boolean_entry("projector", "n=" + std::to_string(n), ok);
        entry["coefficients"] = std::move(cs);
        results.push_back(std::move(entry));
    }
    return results;
}

json period_entry(unsigned f, const Options& opt) {
    PeriodCheck chk = verify_period_conjecture_cm(f, opt.digits);
    json entry = boolean_entry("cs-check", "f=" + std::to_string(f), chk.pass);
    entry["gamma_product"] = chk.gamma_value.str(opt.digits);
    entry["period"] = chk.period.str(opt.digits);
    entry["ratio"] = chk.ratio.str(opt.digits);
    json eps = json::object();
    for (size_t a = 0; a < chk.epsilon.size(); ++a)
        eps[std::to_string(a)] = chk.epsilon[a].str();
    entry["epsilon"] = std::move(eps);
    return entry;
}

json suite_cs(const Options& opt) {
    json results = json::array();
    results.push_back(period_entry(3, opt));
    results.push_back(period_entry(4, opt));
    return results;
}

// ---- emission -----------------------------------------------------------

int finish(const std::string& suite, const Options& opt, json results) {
    std::stable_sort(results.begin(), results.end(), [](const json& a, const json& b) {
        auto key = [](const json& r) {
            return r.value("name", "") + "|" + r.value("params", "");
        };
        return key(a) < key(b);
    });
    json envelope = make_envelope(suite, opt.digits, std::move(results));
    bool all_pass = envelope["summary"]["failed"].get<long>() == 0;
    std::string text = envelope.dump(2);
    std::cout << text << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        out << text << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lerchlab: verification harness for Lerch/Dirichlet/Chern identities"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--digits", opt.digits, "decimal digits of working precision")
        ->check(CLI::Range(15L, 100000L))
        ->capture_default_str();
    app.add_option("--n-max", opt.n_max, "largest modulus in suites")->capture_default_str();
    app.add_option("--tolerance", opt.tolerance, "tolerance override (decimal string)");
    app.add_option("--json", opt.json_path, "also write the report to this path");
    app.add_option("--seed", opt.seed, "seed for randomized kappa/grrr specs")
        ->capture_default_str();
    app.add_option("--parallel", opt.parallel, "worker count (output is order-independent)");

    // individual evaluations
    unsigned lerch_n = 4, lerch_a = 1, rdeg = 8, chars_n = 4, proj_n = 3, eps_f = 4;
    std::string s_text = "0";
    long chi_index = 0;

    auto* c_lerch = app.add_subcommand("lerch", "evaluate zeta_L(e^{2 pi i a/n}, s)");
    c_lerch->add_option("--n", lerch_n)->required();
    c_lerch->add_option("--a", lerch_a)->required();
    c_lerch->add_option("--s", s_text, "s as re or re,im");

    auto* c_lfun = app.add_subcommand("lfun", "evaluate L(chi, s) and its s-derivative");
    c_lfun->add_option("--n", chars_n)->required();
    c_lfun->add_option("--chi", chi_index, "character index in enumeration order");
    c_lfun->add_option("--s", s_text, "s as re or re,im");

    auto* c_chars = app.add_subcommand("chars", "list Dirichlet characters mod n");
    c_chars->add_option("--n", chars_n)->required();

    auto* c_gauss = app.add_subcommand("gauss", "Gauss sums of all characters mod n");
    c_gauss->add_option("--n", chars_n)->required();

    auto* c_rseries = app.add_subcommand("rseries", "R(theta, t) series coefficients");
    c_rseries->add_option("--n", lerch_n)->required();
    c_rseries->add_option("--a", lerch_a)->required();
    c_rseries->add_option("--deg", rdeg);

    auto* c_proj = app.add_subcommand("projector", "primitive-root projector polynomial");
    c_proj->add_option("--n", proj_n)->required();

    auto* c_eps = app.add_subcommand("eps", "epsilon-function linear system");
    c_eps->require_subcommand(1);
    auto* c_eps_solve = c_eps->add_subcommand("solve", "solve p(u) = sum eps(a) frac(ua/f)");
    std::string p_text;
    c_eps_solve->add_option("--f", eps_f)->required();
    c_eps_solve->add_option("--p", p_text, "comma-separated u:value pairs")->required();

    unsigned kappa_count = 200, grrr_count = 100;
    auto* c_kappa = app.add_subcommand("kappa", "randomized exact kappa-identity checks");
    c_kappa->add_option("--count", kappa_count)->capture_default_str();
    auto* c_grrr = app.add_subcommand("grrr", "randomized exact Riemann-Roch checks");
    c_grrr->add_option("--count", grrr_count)->capture_default_str();

    auto* c_verify = app.add_subcommand("verify", "run an identity suite");
    std::string which = "all";
    unsigned n_only = 0;
    c_verify->add_option("identity", which,
                         "lemma-functional | theorem2-ratio | eta-zero | hurwitz-link | wasq "
                         "| euler-factor | kappa | grrr | projector | cs | all");
    c_verify->add_option("--n", n_only, "restrict to a single modulus");

    auto* c_cs = app.add_subcommand("cs-check", "CM elliptic Chowla-Selberg instances");

    auto* c_schema = app.add_subcommand("schema", "print the report JSON schema");

    // global flags may appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();
    c_eps_solve->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const long wp = wp_of(opt);
        if (c_schema->parsed()) {
            std::cout << report_schema() << "\n";
            return 0;
        }
        if (c_lerch->parsed()) {
            RootOfUnityAngle z(static_cast<long>(lerch_a), lerch_n);
            BigComplex s = parse_s(s_text, wp);
            json entry = boolean_entry(
                "lerch", "n=" + std::to_string(lerch_n) + " a=" + std::to_string(lerch_a) +
                             " s=" + s_text, true);
            entry["value"] = complex_json(lerch_zeta(z, s, wp), opt.digits);
            return finish("lerch", opt, json::array({std::move(entry)}));
        }
        if (c_lfun->parsed()) {
            auto chis = characters(chars_n);
            if (chi_index < 0 || chi_index >= static_cast<long>(chis.size()))
                throw usage_error("--chi out of range");
            const auto& chi = chis[static_cast<size_t>(chi_index)];
            BigComplex s = parse_s(s_text, wp);
            LValue lv = l_function_ds(chi, s, bits_for_digits(opt.digits));
            json entry = boolean_entry(
                "lfun", "n=" + std::to_string(chars_n) + " chi=" + chi.label() + " s=" + s_text,
                true);
            entry["value"] = complex_json(lv.value, opt.digits);
            entry["ds"] = complex_json(lv.ds, opt.digits);
            return finish("lfun", opt, json::array({std::move(entry)}));
        }
        if (c_chars->parsed()) {
            json results = json::array();
            for (const auto& chi : characters(chars_n)) {
                json entry = boolean_entry("character", chi.label(), true);
                entry["order"] = chi.order();
                entry["conductor"] = chi.conductor();
                entry["odd"] = chi.is_odd();
                entry["primitive"] = chi.is_primitive();
                results.push_back(std::move(entry));
            }
            return finish("chars", opt, std::move(results));
        }
        if (c_gauss->parsed()) {
            json results = json::array();
            for (const auto& chi : characters(chars_n)) {
                Cyclotomic tau = gauss_sum(chi);
                Cyclotomic norm = tau * tau.conj();
                bool ok = !chi.is_primitive() ||
                          (norm.is_rational() &&
                           norm.rational_value() == Rational(static_cast<long>(chars_n)));
                json entry = boolean_entry("gauss", chi.label(), ok);
                entry["tau"] = complex_json(tau.embed(wp), opt.digits);
                entry["norm_squared_rational"] =
                    norm.is_rational() ? norm.rational_value().str() : std::string("(irrational)");
                results.push_back(std::move(entry));
            }
            return finish("gauss", opt, std::move(results));
        }
        if (c_rseries->parsed()) {
            RSeries rs = r_series(RootOfUnityAngle(static_cast<long>(lerch_a), lerch_n), rdeg,
                                  bits_for_digits(opt.digits));
            json coeffs = json::array();
            for (const auto& c : rs.coeffs) coeffs.push_back(complex_json(c, opt.digits));
            json entry = boolean_entry(
                "rseries", "n=" + std::to_string(lerch_n) + " a=" + std::to_string(lerch_a),
                true);
            entry["coefficients"] = std::move(coeffs);
            return finish("rseries", opt, json::array({std::move(entry)}));
        }
        if (c_proj->parsed()) {
            Options one = opt;
            return finish("projector", opt, suite_projector(one, proj_n));
        }
        if (c_eps->parsed()) {
            EpsilonSystem sys = solve_epsilon(eps_f, parse_p_values(p_text));
            json entry = boolean_entry("eps-solve", "f=" + std::to_string(eps_f), sys.feasible);
            entry["feasible"] = sys.feasible;
            if (sys.feasible) {
                json eps = json::object();
                for (size_t a = 0; a < sys.epsilon.size(); ++a)
                    eps[std::to_string(a)] = sys.epsilon[a].str();
                entry["epsilon"] = std::move(eps);
            } else {
                json cert = json::array();
                for (const auto& c : sys.certificate) cert.push_back(c.str());
                entry["certificate"] = std::move(cert);
            }
            json kernel = json::array();
            for (const auto& g : sys.kernel) {
                json row = json::array();
                for (const auto& c : g) row.push_back(c.str());
                kernel.push_back(std::move(row));
            }
            entry["kernel"] = std::move(kernel);
            return finish("eps", opt, json::array({std::move(entry)}));
        }
        if (c_kappa->parsed()) return finish("kappa", opt, suite_kappa(opt, kappa_count));
        if (c_grrr->parsed()) return finish("grrr", opt, suite_grrr(opt, grrr_count));
        if (c_cs->parsed()) return finish("cs-check", opt, suite_cs(opt));
        if (c_verify->parsed()) {
            json results = json::array();
            auto add = [&results](json part) {
                for (auto& r : part) results.push_back(std::move(r));
            };
            bool all = which == "all";
            bool known = all;
            if (all || which == "lemma-functional") {
                add(suite_lemma_functional(opt, n_only));
                known = true;
            }
            if (all || which == "theorem2-ratio") {
                add(suite_theorem2_ratio(opt, n_only));
                known = true;
            }
            if (all || which == "eta-zero") {
                add(suite_eta_zero(opt, n_only));
                known = true;
            }
            if (all || which == "hurwitz-link") {
                add(suite_hurwitz_link(opt, n_only));
                known = true;
            }
            if (all || which == "wasq") {
                add(suite_wasq(opt, n_only));
                known = true;
            }
            if (all || which == "euler-factor") {
                add(suite_euler_factor(opt, n_only));
                known = true;
            }
            if (all || which == "kappa") {
                add(suite_kappa(opt, 200));
                known = true;
            }
            if (all || which == "grrr") {
                add(suite_grrr(opt, 100));
                known = true;
            }
            if (all || which == "projector") {
                add(suite_projector(opt, n_only));
                known = true;
            }
            if (all || which == "cs") {
                add(suite_cs(opt));
                known = true;
            }
            if (!known) throw usage_error("unknown identity: " + which);
            return finish(all ? "all" : which, opt, std::move(results));
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
