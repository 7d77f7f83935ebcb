// Command-line front end: constructors, verifiers and the full verification
// suite, reproducible from (argv, seed).  Exit codes: 0 = all checks passed,
// 1 = a mathematical check failed, 2 = invalid input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fourpoints/json_io.hpp"
#include "fourpoints/verify.hpp"

using namespace fourpoints;

namespace {

ProjPair parse_pair(const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        if (s == "inf") return ProjPair::infinity();
        return ProjPair(std::stoll(s), 1);
    }
    return ProjPair(std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1)));
}

struct ModuleSpec {
    std::string kind = "N";  // N | D | L | kst | json path
    std::string t = "2:1";
    int sign = +1;
    int index = 1;
    int length = 1;

    PresentedModule build() const
    {
        if (kind == "N") {
            ProjPair tt = parse_pair(t);
            if (length > 1) return fundamental_tube(tt, length);
            return fundamental_module(tt, sign);
        }
        if (kind == "D") return degenerate_tube(parse_pair(t), length, sign);
        if (kind == "L") return point_module(index);
        if (kind == "kst") return stabilize_k();
        std::ifstream in(kind);
        if (!in) throw std::invalid_argument("module spec: cannot open " + kind);
        json j;
        in >> j;
        return module_from_json(j);
    }

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--module", kind, "N | D | L | kst | path to a module JSON file");
        cmd->add_option("--t", t, "pencil parameter t0:t1 (or 0, 1, inf)");
        cmd->add_option("--sign", sign, "+ or - for the N/D families")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, int>{{"+", 1}, {"-", -1}, {"1", 1}, {"-1", -1}}));
        cmd->add_option("--i", index, "point module index 1..4");
        cmd->add_option("--r", length, "tube length r >= 1");
    }
};

Rep load_rep(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return rep_from_json(j);
}

int emit_results(const std::vector<CriterionResult>& results, const std::string& emit)
{
    int failures = 0;
    if (emit == "json") {
        json out = json::array();
        for (const CriterionResult& r : results) {
            out.push_back({{"criterion", r.id},
                           {"statement", r.statement},
                           {"status", r.pass ? "PASS" : "FAIL"},
                           {"detail", r.detail}});
            if (!r.pass) ++failures;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CriterionResult& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.statement << " ("
                      << r.detail << ")\n";
            if (!r.pass) ++failures;
        }
    }
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact classification engine for graded modules over the coordinate ring of four "
                 "generic plane points, matrix factorizations of the conic pencil, and D~4 quiver "
                 "representations"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::uint64_t prime = 2147483647ull;
    int samples = 20;
    int degree_bound = -1;
    std::string emit = "text";
    app.add_option("--seed", seed, "seed for all randomized routines")->capture_default_str();
    app.add_option("--prime", prime, "field characteristic (odd prime < 2^31)")->capture_default_str();
    app.add_option("--samples", samples, "sample count for randomized checks")->capture_default_str();
    app.add_option("--degree-bound", degree_bound, "override for kernel-search degree windows");
    app.add_option("--emit", emit, "text | json")->check(CLI::IsMember({"text", "json"}));

    // ring ------------------------------------------------------------------
    CLI::App* ring = app.add_subcommand("ring", "ambient and quotient ring data");
    CLI::App* ring_basis_cmd = ring->add_subcommand("basis", "monomial basis of a graded piece");
    std::string ring_name = "R";
    std::string ring_s = "1:0";
    int basis_degree = 2;
    ring_basis_cmd->add_option("--ring", ring_name, "S | R | Ss")->check(CLI::IsMember({"S", "R", "Ss"}));
    ring_basis_cmd->add_option("--s", ring_s, "hypersurface parameter for Ss");
    ring_basis_cmd->add_option("--d", basis_degree, "degree");
    CLI::App* ring_pencil = ring->add_subcommand("pencil", "member Q_t of the conic pencil");
    std::string pencil_t = "1:1";
    ring_pencil->add_option("--t", pencil_t, "parameter t0:t1");
    CLI::App* ring_points = ring->add_subcommand("points", "the four points and their lines");
    CLI::App* ring_singular = ring->add_subcommand("singular", "singular members of the pencil");

    // mf --------------------------------------------------------------------
    CLI::App* mf = app.add_subcommand("mf", "matrix factorizations of the pencil");
    CLI::App* mf_verify_cmd = mf->add_subcommand("verify", "check phi psi = Q_t I = psi phi");
    std::string mf_t = "0:1";
    std::string mf_variant = "phi";
    std::string mf_sign = "+";
    mf_verify_cmd->add_option("--t", mf_t, "parameter t0:t1");
    mf_verify_cmd->add_option("--variant", mf_variant, "phi | psi | linear")
        ->check(CLI::IsMember({"phi", "psi", "linear"}));
    mf_verify_cmd->add_option("--sign", mf_sign, "+ | -")->check(CLI::IsMember({"+", "-"}));

    // module ----------------------------------------------------------------
    CLI::App* module_cmd = app.add_subcommand("module", "presented modules over R");
    CLI::App* module_betti = module_cmd->add_subcommand("betti", "Betti table of a module");
    ModuleSpec betti_spec;
    int betti_length = 6, betti_cosyz = 0;
    betti_spec.attach(module_betti);
    module_betti->add_option("--length", betti_length, "resolution length")->capture_default_str();
    module_betti->add_option("--cosyz", betti_cosyz, "cosyzygy steps to the right")->capture_default_str();
    CLI::App* module_inv = module_cmd->add_subcommand("invariants", "Hilbert numerator, nu, e, Ulrich");
    ModuleSpec inv_spec;
    inv_spec.attach(module_inv);
    CLI::App* module_show = module_cmd->add_subcommand("show", "minimal presentation of a module");
    ModuleSpec show_spec;
    show_spec.attach(module_show);

    // cres ------------------------------------------------------------------
    CLI::App* cres = app.add_subcommand("cres", "complete-resolution windows");
    CLI::App* cres_window = cres->add_subcommand("window", "emit a window of the bicomplex");
    std::string cres_target = "k";
    int cres_from = -3, cres_to = 6;
    cres_window->add_option("--target", cres_target, "k | L1 | L2 | L3 | L4")
        ->check(CLI::IsMember({"k", "L1", "L2", "L3", "L4"}));
    cres_window->add_option("--from", cres_from)->capture_default_str();
    cres_window->add_option("--to", cres_to)->capture_default_str();
    CLI::App* cres_validate = cres->add_subcommand("validate", "cross-validate a window");
    std::string cres_vtarget = "k";
    cres_validate->add_option("--target", cres_vtarget, "k | L1 | L2 | L3 | L4")
        ->check(CLI::IsMember({"k", "L1", "L2", "L3", "L4"}));

    // rep -------------------------------------------------------------------
    CLI::App* rep = app.add_subcommand("rep", "D~4 quiver representations");
    CLI::App* rep_decompose = rep->add_subcommand("decompose", "split into indecomposables");
    std::string rep_in;
    rep_decompose->add_option("--in", rep_in, "representation JSON file")->required();
    CLI::App* rep_identify = rep->add_subcommand("identify", "name an indecomposable");
    std::string rep_id_in;
    rep_identify->add_option("--in", rep_id_in, "representation JSON file")->required();
    CLI::App* rep_tau = rep->add_subcommand("tau", "AR translate");
    std::string rep_tau_in;
    bool tau_inverse = false;
    rep_tau->add_option("--in", rep_tau_in, "representation JSON file")->required();
    rep_tau->add_flag("--inverse", tau_inverse, "apply the inverse translate instead");
    CLI::App* rep_norm = rep->add_subcommand("normalize-lines", "four-subspace normal form");
    std::string lines_arg;
    rep_norm->add_option("--lines", lines_arg, "four lines a:b,c:d,e:f,g:h")->required();

    // bridge ----------------------------------------------------------------
    CLI::App* bridge = app.add_subcommand("bridge", "the tilting functor");
    CLI::App* bridge_apply = bridge->add_subcommand("apply-E", "image of a module");
    ModuleSpec bridge_spec;
    bridge_spec.attach(bridge_apply);
    CLI::App* bridge_verify = bridge->add_subcommand("verify", "functor-level verification suites");
    std::string bridge_suite = "images";
    bridge_verify->add_option("--suite", bridge_suite, "images | tau | preproj | tilting")
        ->check(CLI::IsMember({"images", "tau", "preproj", "tilting"}));

    // verify ----------------------------------------------------------------
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification criteria");
    std::string verify_which = "all";
    verify_cmd->add_option("which", verify_which, "all or one criterion id");

    CLI11_PARSE(app, argc, argv);

    try {
        set_field_prime(prime);
        VerifyOptions opt;
        opt.seed = seed;
        opt.samples = samples;

        if (*ring_basis_cmd) {
            RingId r = ring_name == "S"   ? RingId::S()
                       : ring_name == "R" ? RingId::R()
                                          : RingId::Ss(parse_pair(ring_s));
            if (emit == "json") {
                json out = json::array();
                for (const Monomial& m : ring_basis(r, basis_degree)) out.push_back(m.str());
                std::cout << out.dump() << "\n";
            } else {
                for (const Monomial& m : ring_basis(r, basis_degree)) std::cout << m.str() << "\n";
            }
            return 0;
        }
        if (*ring_pencil) {
            std::cout << pencil(parse_pair(pencil_t)).str() << "\n";
            return 0;
        }
        if (*ring_points) {
            auto ls = lines();
            auto ps = points();
            for (int i = 0; i < 4; ++i)
                std::cout << "l" << i + 1 << " = " << ls[static_cast<std::size_t>(i)].str() << "   p"
                          << i + 1 << " = [" << ps[static_cast<std::size_t>(i)][0].lifted() << ":"
                          << ps[static_cast<std::size_t>(i)][1].lifted() << ":"
                          << ps[static_cast<std::size_t>(i)][2].lifted() << "]\n";
            return 0;
        }
        if (*ring_singular) {
            for (const ProjPair& t : singular_members()) std::cout << t.str() << "\n";
            return 0;
        }

        if (*mf_verify_cmd) {
            ProjPair t = parse_pair(mf_t);
            int sign = mf_sign == "+" ? +1 : -1;
            MFPair pair = mf_variant == "phi"   ? phi_pair(t, sign)
                          : mf_variant == "psi" ? psi_pair(t, sign)
                                                : linear_pair(t, sign);
            bool ok = mf_verify(pair);
            std::cout << (ok ? "PASS" : "FAIL") << " " << mf_variant << "_" << t.str() << "^" << mf_sign
                      << ": phi psi = Q_t I = psi phi over " << pair.ring.str() << "\n";
            return ok ? 0 : 1;
        }

        if (*module_betti) {
            PresentedModule m = betti_spec.build();
            BettiTable t = betti_cosyz > 0
                               ? complete_betti(m, betti_cosyz, betti_length)
                               : minimal_resolution(m, betti_length,
                                                    degree_bound >= 0 ? std::optional<int>(degree_bound)
                                                                      : std::nullopt)
                                     .betti;
            if (emit == "json") {
                json cells = json::array();
                for (const auto& [key, v] : t.beta)
                    cells.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
                std::cout << cells.dump() << "\n";
            } else {
                std::cout << t.formatted();
            }
            return 0;
        }
        if (*module_inv) {
            HilbertData h = hilbert_data(inv_spec.build());
            if (emit == "json") {
                json q = json::array();
                for (const auto& [d, c] : h.numerator) q.push_back({{"deg", d}, {"coeff", c}});
                std::cout << json{{"numerator", q}, {"nu", h.nu}, {"e", h.e}, {"ulrich", h.ulrich}}.dump()
                          << "\n";
            } else {
                std::cout << "Q_M = " << h.numerator_str() << "\nnu = " << h.nu << "\ne = " << h.e
                          << "\nulrich = " << (h.ulrich ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (*module_show) {
            PresentedModule m = minimal_presentation(show_spec.build());
            if (emit == "json")
                std::cout << to_json(m).dump() << "\n";
            else
                std::cout << m.presentation.str() << "\n";
            return 0;
        }

        if (*cres_window || *cres_validate) {
            const std::string& tgt = *cres_window ? cres_target : cres_vtarget;
            int target = tgt == "k" ? 0 : tgt[1] - '0';
            if (*cres_window) {
                Window w = bpr_window(target, cres_from, cres_to);
                if (emit == "json") {
                    json maps = json::array();
                    for (const GradedMap& m : w.maps) maps.push_back(to_json(m));
                    std::cout << json{{"from", w.n_min}, {"to", w.n_max}, {"maps", maps}}.dump() << "\n";
                } else {
                    std::cout << w.betti().formatted();
                }
                return 0;
            }
            CresReport rep_out = cross_validate(target);
            std::cout << (rep_out.pass() ? "PASS" : "FAIL") << " window checks for " << tgt
                      << ": d^2=0 " << rep_out.d_squared << ", minimal " << rep_out.minimal
                      << ", cokernel " << rep_out.coker_matches << ", betti " << rep_out.betti_matches;
            if (!rep_out.detail.empty()) std::cout << " (" << rep_out.detail << ")";
            std::cout << "\n";
            return rep_out.pass() ? 0 : 1;
        }

        if (*rep_decompose) {
            Rep m = load_rep(rep_in);
            auto pieces = decompose_with_multiplicities(m, seed);
            json out = json::array();
            for (const auto& [piece, mult] : pieces) {
                std::string name;
                try {
                    name = identify(piece, seed).str();
                } catch (const std::exception&) {
                    name = "(unidentified)";
                }
                out.push_back({{"name", name}, {"multiplicity", mult}, {"rep", to_json(piece)}});
            }
            if (emit == "json")
                std::cout << out.dump(2) << "\n";
            else
                for (const auto& p : out)
                    std::cout << p["name"].get<std::string>() << " x " << p["multiplicity"] << "\n";
            return 0;
        }
        if (*rep_identify) {
            std::cout << identify(load_rep(rep_id_in), seed).str() << "\n";
            return 0;
        }
        if (*rep_tau) {
            Rep m = load_rep(rep_tau_in);
            Rep out = tau_inverse ? tau_inv_rep(m) : tau_rep(m);
            std::cout << to_json(out).dump() << "\n";
            return 0;
        }
        if (*rep_norm) {
            std::array<std::array<Fp, 2>, 4> ls;
            std::stringstream ss(lines_arg);
            std::string part;
            for (int i = 0; i < 4; ++i) {
                if (!std::getline(ss, part, ',')) throw std::invalid_argument("need four lines");
                ProjPair p = parse_pair(part);
                ls[static_cast<std::size_t>(i)] = {p.c0, p.c1};
            }
            FourLinesNormal n = four_lines_normalize(ls);
            std::cout << "t = " << n.t.str() << "\n";
            return 0;
        }

        if (*bridge_apply) {
            Rep image = apply_E(bridge_spec.build());
            if (emit == "json")
                std::cout << to_json(image).dump() << "\n";
            else {
                std::string name;
                try {
                    name = identify(image, seed).str();
                } catch (const std::exception&) {
                    name = "(not indecomposable)";
                }
                std::cout << "dims (" << image.dims[0] << "; " << image.dims[1] << "," << image.dims[2]
                          << "," << image.dims[3] << "," << image.dims[4] << ")  " << name << "\n";
            }
            return 0;
        }
        if (*bridge_verify) return emit_results(run_verification(opt, bridge_suite), emit);

        if (*verify_cmd) return emit_results(run_verification(opt, verify_which), emit);

        std::cerr << "no action selected\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
