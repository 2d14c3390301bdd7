#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goodfan/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "goodfan: codimension and certified good compactifications for systems of\n"
        "Laurent polynomial equations on the algebraic torus"};
    app.require_subcommand(1);

    std::string dim_file;
    CLI::App* dim = app.add_subcommand("dim", "dimension and codimension of the zero set");
    dim->add_option("file", dim_file, "system file, one polynomial per line")->required();

    std::string comp_file, out_dir = "goodfan-out";
    std::optional<int> codim;
    std::optional<std::uint64_t> seed;
    CLI::App* comp =
        app.add_subcommand("compactify", "construct and certify a good compactification");
    comp->add_option("file", comp_file, "system file")->required();
    comp->add_option("--codim", codim, "known codimension: use the randomized driver");
    comp->add_option("--seed", seed, "seed for the randomized driver (needs --codim)");
    comp->add_option("--out", out_dir, "output directory (default goodfan-out)");

    std::string proj_file, phi_text;
    CLI::App* proj =
        app.add_subcommand("project", "eliminate the first equation along a covector");
    proj->add_option("file", proj_file, "system file")->required();
    proj->add_option("--phi", phi_text, "covector, e.g. \"0 1\"")->required();

    std::vector<std::string> mv_files, mv_polytopes;
    CLI::App* mv = app.add_subcommand(
        "mixedvol", "generic solution count from Newton polytopes (n polytopes, rank n)");
    mv->add_option("files", mv_files, "system files contributing Newton polytopes");
    mv->add_option("--polytope", mv_polytopes,
                   "inline vertex list, e.g. \"0 0; 1 0; 0 1\" (repeatable)");

    std::string check_tuple, check_fan;
    CLI::App* chk = app.add_subcommand("check", "re-run all four certificates on a tuple + fan");
    chk->add_option("tuple", check_tuple, "tuple file (system format)")->required();
    chk->add_option("fan", check_fan, "fan file (RAYS/LINEALITY/CONES)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (dim->parsed()) return goodfan::cmd_dim(dim_file, std::cout, std::cerr);
    if (comp->parsed())
        return goodfan::cmd_compactify(comp_file, codim, seed, out_dir, std::cout, std::cerr);
    if (proj->parsed()) return goodfan::cmd_project(proj_file, phi_text, std::cout, std::cerr);
    if (mv->parsed()) return goodfan::cmd_mixedvol(mv_files, mv_polytopes, std::cout, std::cerr);
    if (chk->parsed()) return goodfan::cmd_check(check_tuple, check_fan, std::cout, std::cerr);
    return 2;
}
