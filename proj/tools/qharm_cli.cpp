#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qharm/harmonics.hpp"
#include "qharm/hilbert.hpp"

using namespace qharm;

namespace {

RatFuncQ parse_q(const std::string& s) {
    if (s == "formal") return RatFuncQ::q();
    return RatFuncQ(rat_from_string(s));
}

int emit_report(const CheckReport& rep) {
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-harmonic spaces of the groups G(m,p,n)"};
    app.require_subcommand(1);

    int m = 1, p = 1, n = 1, sets = 1, max_deg = -1, r = 1, a_max = 2, b_max = 6;
    std::string qstr = "formal", format = "json", what;

    auto add_group_flags = [&](CLI::App* cmd, bool with_p, bool with_sets) {
        cmd->add_option("--m", m, "cyclic order m")->required();
        if (with_p) cmd->add_option("--p", p, "index p, a divisor of m");
        cmd->add_option("--n", n, "number of columns")->required();
        if (with_sets) cmd->add_option("--sets", sets, "number of variable rows");
        cmd->add_option("--max-deg", max_deg, "total degree bound");
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "graded dimensions of the q-harmonic space");
    add_group_flags(hilbert, true, true);
    hilbert->add_option("--q", qstr, "formal or a rational A/B");
    hilbert->add_option("--format", format, "text | json | hbasis")
        ->check(CLI::IsMember({"text", "json", "hbasis"}));

    CLI::App* basis = app.add_subcommand("basis", "kernel bases as JSON");
    add_group_flags(basis, true, true);
    basis->add_option("--q", qstr, "formal or a rational A/B");

    CLI::App* check = app.add_subcommand("check", "verify an identity or conjecture");
    check->add_option("--what", what, "main | e | bracket | inflate | n2closed")
        ->required()
        ->check(CLI::IsMember({"main", "e", "bracket", "inflate", "n2closed"}));
    add_group_flags(check, true, true);
    check->add_option("--r", r, "inflation factor, a divisor of m");

    CLI::App* singular = app.add_subcommand("singular", "scan candidate singular values -a/b");
    singular->add_option("--m", m)->required();
    singular->add_option("--n", n)->required();
    singular->add_option("--sets", sets);
    singular->add_option("--a-max", a_max);
    singular->add_option("--b-max", b_max);
    singular->add_option("--max-deg", max_deg)->required();

    CLI::App* layers = app.add_subcommand("layers", "eps-filtration layers of H_q(G(m,n))");
    layers->add_option("--m", m)->required();
    layers->add_option("--n", n)->required();
    layers->add_option("--max-deg", max_deg);

    CLI::App* character = app.add_subcommand("character", "graded character tables");
    add_group_flags(character, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hilbert->parsed() || basis->parsed()) {
            HarmonicQuery query{GroupSpec(m, p, n), sets, parse_q(qstr), max_deg};
            HarmonicSpace space = harmonic_space(query);
            if (space.bound_touched) {
                std::cerr << "error: degree bound " << query.degree_bound
                          << " may truncate the space (BoundTooSmall)\n";
                return 2;
            }
            if (basis->parsed()) {
                std::cout << harmonic_space_to_json(space, true).dump(2) << "\n";
            } else if (format == "text") {
                std::cout << series_to_string(space.series()) << "\n";
            } else if (format == "hbasis") {
                std::cout << hbasis_expression(space.hilbert, sets) << "\n";
            } else {
                json j = harmonic_space_to_json(space, false);
                j["series"] = series_to_string(space.series());
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
        if (check->parsed()) {
            if (what == "main")
                return emit_report(
                    check_main_conjecture(HarmonicQuery{GroupSpec(m, p, n), sets,
                                                        RatFuncQ::q(), max_deg}));
            if (what == "e") return emit_report(check_conjecture_e(m, n, max_deg));
            if (what == "inflate") return emit_report(check_inflation(m, r, n));
            if (what == "n2closed") return emit_report(check_n2_closed(m, p));
            // bracket: all pairs |d|, |d2| <= 4 on monomials of degree <= max_deg
            CheckReport rep{"bracket"};
            Shape shape{sets, n};
            int maxdeg = max_deg < 0 ? 6 : max_deg;
            for (const auto& d : multidegrees_up_to(sets, 4)) {
                if (total_degree(d) == 0) continue;
                for (const auto& d2 : multidegrees_up_to(sets, 4)) {
                    if (total_degree(d2) == 0) continue;
                    BracketReport br = bracket_check(d, d2, shape, maxdeg);
                    if (!br.ok)
                        rep.record("d=" + json(d).dump() + " d'=" + json(d2).dump(), false,
                                   {{"counterexamples", br.counterexamples.size()}});
                }
            }
            rep.record("all pairs, monomial degree <= " + std::to_string(maxdeg), rep.pass);
            return emit_report(rep);
        }
        if (singular->parsed()) {
            json details;
            std::vector<Rat> flagged =
                singular_scan(n, sets, GroupSpec(m, 1, n), a_max, b_max, max_deg, &details);
            json out;
            out["flagged"] = json::array();
            for (const Rat& q0 : flagged) out["flagged"].push_back(rat_to_string(q0));
            out["details"] = std::move(details);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (layers->parsed()) {
            LayerReport rep = layer_decomposition(m, n, max_deg);
            json j;
            j["m"] = rep.m;
            j["n"] = rep.n;
            j["layer_sizes"] = rep.layer_sizes;
            j["eps_maps_full_rank"] = rep.eps_maps_full_rank;
            j["details"] = rep.details;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (character->parsed()) {
            HarmonicQuery query{GroupSpec(m, p, n), 1, RatFuncQ::q(), max_deg};
            std::cout << character_report(query).dump(2) << "\n";
            return 0;
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
