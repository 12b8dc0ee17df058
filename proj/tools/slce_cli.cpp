// slce: SLCE sequences, gcd with x^(q-1)+1, closed-form predictions and
// cross-validation reports.
//
// Exit status: 0 when everything checked agrees, 1 on a mismatch, 2 on a
// usage or parameter error.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "slce/cyclo.hpp"
#include "slce/field.hpp"
#include "slce/gf2poly.hpp"
#include "slce/predict.hpp"
#include "slce/report.hpp"
#include "slce/sequence.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Args
{
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t k = 0;
    std::uint64_t q_max = 0;
    std::uint64_t direct_max = slce::default_direct_max;
    bool json = false;
    bool csv = false;
    bool autocorr = false;
    bool predict_only = false;
    bool timings = false;
    bool seed_free = false;
};

slce::FieldCtx make_field(Args const & a)
{
    if (a.p < 3 || a.p % 2 == 0)
        throw std::invalid_argument("p must be odd");
    if (a.m == 0)
        throw std::invalid_argument("m must be positive");
    return slce::build_field(static_cast<std::uint32_t>(a.p), static_cast<unsigned>(a.m));
}

int cmd_seq(Args const & a)
{
    slce::FieldCtx const ctx = make_field(a);
    slce::BitSeq const seq = slce::generate(ctx);
    if (a.json) {
        nlohmann::ordered_json j;
        j["field"] = slce::field_json(ctx);
        j["period"] = seq.period();
        j["weight"] = seq.weight();
        j["sequence"] = slce::to_text(seq).substr(0, seq.period());
        if (a.autocorr)
            j["autocorrelation"] = slce::autocorrelation_profile(seq);
        std::cout << j.dump(2) << '\n';
    } else if (a.autocorr) {
        std::cout << slce::autocorrelation_csv(seq);
    } else {
        std::cout << slce::to_text(seq) << "weight: " << seq.weight() << '\n';
    }
    return exit_ok;
}

int cmd_gcd(Args const & a)
{
    slce::FieldCtx const ctx = make_field(a);
    slce::BitSeq const seq = slce::generate(ctx);
    slce::Gf2Poly const g =
        slce::gcd(slce::Gf2Poly::x_pow_plus_one(seq.period()), slce::poly_from_seq(seq));
    std::string const factored = slce::format_factors(slce::factor(g));
    std::size_t const lc = seq.period() - static_cast<std::size_t>(g.degree());
    if (a.json) {
        nlohmann::ordered_json j;
        j["field"] = slce::field_json(ctx);
        j["gcd"] = factored;
        j["gcd_degree"] = g.degree();
        j["linear_complexity"] = lc;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "gcd: " << factored << '\n' << "linear_complexity: " << lc << '\n';
    }
    return exit_ok;
}

int cmd_predict(Args const & a)
{
    auto const pred = slce::predict(a.p, a.m, a.k);
    if (!pred)
        throw std::invalid_argument("no closed form in scope");
    if (a.json)
        std::cout << slce::to_json(*pred).dump(2) << '\n';
    else
        std::cout << slce::to_text(*pred);
    return exit_ok;
}

int cmd_jacobi(Args const & a)
{
    slce::FieldCtx const ctx = make_field(a);
    slce::CycInt const kval = slce::jacobi_K(ctx, static_cast<std::uint32_t>(a.k));
    if (a.json) {
        std::cout << slce::jacobi_json(ctx, kval).dump(2) << '\n';
    } else {
        std::cout << "K:";
        for (auto c : kval.coeffs())
            std::cout << ' ' << c;
        std::cout << '\n';
    }
    return exit_ok;
}

slce::VerifyOptions options(Args const & a)
{
    slce::VerifyOptions o;
    o.direct_max = a.direct_max;
    o.predict_only = a.predict_only;
    o.timings = a.timings;
    return o;
}

int cmd_verify(Args const & a, bool k_given)
{
    slce::VerifyOptions o = options(a);
    if (k_given)
        o.only_k = a.k;
    slce::VerificationReport const rep = slce::verify(a.p, a.m, o);
    if (a.json)
        std::cout << slce::to_json(rep).dump(2) << '\n';
    else
        std::cout << slce::to_text(rep);
    return rep.all_match() ? exit_ok : exit_mismatch;
}

int cmd_grid(Args const & a)
{
    slce::VerifyOptions o = options(a);
    o.with_gcd = false;
    auto const reps = slce::grid(a.q_max, o);
    bool ok = true;
    for (auto const & r : reps)
        ok = ok && r.all_match();
    if (a.csv) {
        std::cout << slce::grid_csv(reps);
    } else if (a.json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (auto const & r : reps)
            j.push_back(slce::to_json(r));
        std::cout << j.dump(2) << '\n';
    } else {
        for (auto const & r : reps)
            std::cout << slce::to_text(r);
        std::cout << "grid all_match: " << (ok ? "true" : "false") << '\n';
    }
    return ok ? exit_ok : exit_mismatch;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"SLCE sequences: generation, gcd, divisibility prediction and verification"};
    app.require_subcommand(1);
    Args a;
    app.add_flag("--seed-free", a.seed_free, "No-op; nothing here is randomized");

    auto field_opts = [&a](CLI::App * sub) {
        sub->add_option("-p", a.p, "Odd prime p")->required();
        sub->add_option("-m", a.m, "Extension degree m")->required();
        sub->add_flag("--json", a.json, "JSON output");
    };

    auto * seq = app.add_subcommand("seq", "Print one period of the sequence and its weight");
    field_opts(seq);
    seq->add_flag("--autocorr", a.autocorr, "Autocorrelation profile (CSV unless --json)");

    auto * gcd = app.add_subcommand("gcd", "Factor gcd(S_2(x), x^(q-1)+1) and report linear complexity");
    field_opts(gcd);

    auto * pred = app.add_subcommand("predict", "Closed-form divisibility prediction");
    field_opts(pred);
    pred->add_option("-k", a.k, "Odd k dividing p^m - 1")->required();

    auto * jac = app.add_subcommand("jacobi", "Exact K(chi) in the power basis of Z[zeta_k]");
    field_opts(jac);
    jac->add_option("-k", a.k, "Odd k dividing q - 1")->required();

    auto * ver = app.add_subcommand("verify", "Criterion, direct divisibility and prediction for one field");
    field_opts(ver);
    auto * k_opt = ver->add_option("-k", a.k, "Restrict to one k");
    ver->add_flag("--predict-only", a.predict_only, "Skip direct checks above the bound");
    ver->add_option("--direct-max", a.direct_max, "Largest q checked directly")->capture_default_str();
    ver->add_flag("--timings", a.timings, "Include timings (output is then not byte-stable)");

    auto * grd = app.add_subcommand("grid", "verify over all odd prime powers q <= q-max");
    grd->add_option("--q-max", a.q_max, "Largest q")->required();
    grd->add_flag("--json", a.json, "JSON output");
    grd->add_flag("--csv", a.csv, "CSV output, one line per prime ideal");
    grd->add_flag("--predict-only", a.predict_only, "Skip direct checks above the bound");
    grd->add_option("--direct-max", a.direct_max, "Largest q checked directly")->capture_default_str();
    grd->add_flag("--timings", a.timings, "Include timings");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*seq)
            return cmd_seq(a);
        if (*gcd)
            return cmd_gcd(a);
        if (*pred)
            return cmd_predict(a);
        if (*jac)
            return cmd_jacobi(a);
        if (*ver)
            return cmd_verify(a, k_opt->count() > 0);
        if (*grd)
            return cmd_grid(a);
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
