#include <iostream>

#include <CLI11.hpp>

#include "codekit/cli.hpp"

using namespace codekit;

int main(int argc, char** argv)
{
    CLI::App app{"codekit: decide code properties of finite and regular languages"};
    app.require_subcommand(1);

    cli::CheckOptions check;
    auto* c = app.add_subcommand("check", "report code, affix, thin, complete, theta and measure properties");
    c->add_option("set_file", check.set_file, "code-set file")->required();
    c->add_option("theta_file", check.theta_file, "theta file (identity when omitted)");
    c->add_option("dist_file", check.dist_file, "distribution file (uniform when omitted)");
    c->add_flag("--regular-witness", check.regular_witness, "search for an ambiguity witness on regular input");

    cli::CompleteOptions complete;
    std::string witness;
    auto* co = app.add_subcommand("complete", "embed a theta-invariant code into a complete one");
    co->add_option("set_file", complete.set_file, "code-set file")->required();
    co->add_option("theta_file", complete.theta_file, "theta file")->required();
    auto* witness_opt = co->add_option("--witness", witness, "word outside F(X*), plain or as a^2b^3...");
    co->add_flag("--overlap-free-witness", complete.overlap_free_witness, "extend the witness until it is overlapping-free");

    cli::HullOptions hull;
    auto* h = app.add_subcommand("hull", "theta-invariant free hull of a finite set");
    h->add_option("set_file", hull.set_file, "code-set file")->required();
    h->add_option("theta_file", hull.theta_file, "theta file (identity when omitted)");

    cli::MeasureOptions measure;
    auto* m = app.add_subcommand("measure", "Bernoulli measure of a finite or regular set");
    m->add_option("set_file", measure.set_file, "code-set file")->required();
    m->add_option("dist_file", measure.dist_file, "distribution file (uniform when omitted)");

    cli::GenOptions gen;
    auto* g = app.add_subcommand("gen", "write a member of a named code family");
    g->add_option("family", gen.family, "uniform, e00, e2, e21, e22a, e22b, c72, e3, e33x or e33z")->required();
    g->add_option("--n", gen.n, "word length (uniform, e00)");
    g->add_option("-k", gen.k, "block length (e2, e21, e22a, e22b)");
    g->add_option("-o,--output", gen.output, "output file (stdout when omitted)");
    g->add_option("--theta-output", gen.theta_output, "also write the family's theta file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::io_or_parse;
    }

    try {
        cli::apply_environment();
        if (*witness_opt)
            complete.witness = expand(witness);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::io_or_parse;
    }

    if (*c)
        return cli::cmd_check(check, std::cout, std::cerr);
    if (*co)
        return cli::cmd_complete(complete, std::cout, std::cerr);
    if (*h)
        return cli::cmd_hull(hull, std::cout, std::cerr);
    if (*m)
        return cli::cmd_measure(measure, std::cout, std::cerr);
    return cli::cmd_gen(gen, std::cout, std::cerr);
}
