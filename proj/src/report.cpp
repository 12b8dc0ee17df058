#include "slce/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "slce/arith.hpp"
#include "slce/gf2poly.hpp"
#include "slce/sequence.hpp"

namespace slce {

namespace {

using arith::u64;
using json = nlohmann::ordered_json;

class Stopwatch
{
public:
    double lap()
    {
        auto const now = std::chrono::steady_clock::now();
        double const s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<u64> odd_divisors_at_least_3(u64 n, std::optional<u64> only)
{
    std::vector<u64> out;
    for (u64 d : arith::divisors(n))
        if (d >= 3 && d % 2 == 1 && (!only || *only == d))
            out.push_back(d);
    return out;
}

void attach_prediction(KRow & row, u64 p, u64 m)
{
    try {
        row.prediction = predict(p, m, row.k);
        if (row.prediction)
            row.regime = row.prediction->regime;
        else
            row.prediction_note = "no closed form in scope";
    } catch (std::exception const & e) {
        row.prediction_note = e.what();
    }
}

void settle_match(KRow & row)
{
    if (!row.prediction || row.prediction->verdict == Verdict::indeterminate)
        return;
    bool const predicted = row.prediction->verdict == Verdict::divides;
    if (row.prediction->full_factor) {
        if (row.direct_full)
            row.match = *row.direct_full == predicted;
        return;
    }
    if (row.ideals.empty())
        return;
    bool all = true;
    for (auto const & ideal : row.ideals) {
        if (!ideal.direct)
            return;
        all = all && *ideal.direct == predicted;
    }
    row.match = all;
}

Gf2Poly all_ones(u64 k)
{
    Gf2Poly g;
    for (u64 i = 0; i < k; ++i)
        g.set_coeff(i, true);
    return g;
}

json optional_bool(std::optional<bool> v)
{
    return v ? json(*v) : json(nullptr);
}

} // namespace

bool KRow::criterion_agrees() const
{
    for (auto const & ideal : ideals)
        if (ideal.direct && *ideal.direct != ideal.criterion)
            return false;
    return true;
}

bool VerificationReport::all_match() const
{
    for (auto const & row : rows)
        if (!row.criterion_agrees() || (row.match && !*row.match))
            return false;
    return true;
}

VerificationReport verify(u64 p, u64 m, VerifyOptions const & opts)
{
    if (p < 3 || !arith::is_prime(p))
        throw std::invalid_argument("p must be an odd prime");
    if (m == 0)
        throw std::invalid_argument("m must be positive");
    u64 const q = static_cast<u64>(arith::ipow(static_cast<arith::i64>(p), static_cast<unsigned>(m)));
    if (opts.only_k && (*opts.only_k < 3 || *opts.only_k % 2 == 0 || (q - 1) % *opts.only_k != 0))
        throw std::invalid_argument("k must be odd, at least 3 and divide q-1");

    VerificationReport rep;
    rep.p = p;
    rep.m = m;
    Stopwatch clock;

    if (q > opts.direct_max) {
        if (!opts.predict_only)
            throw std::invalid_argument("q = " + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds the direct-verification bound " +
                                        std::to_string(opts.direct_max) + "; use --predict-only");
        rep.skipped = "q = " + std::to_string(p) + "^" + std::to_string(m) + " infeasible";
        for (u64 k : odd_divisors_at_least_3(q - 1, opts.only_k)) {
            KRow row;
            row.k = k;
            attach_prediction(row, p, m);
            rep.rows.push_back(std::move(row));
        }
        if (opts.timings)
            rep.timings.emplace_back("predict", clock.lap());
        return rep;
    }

    FieldCtx const ctx = build_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(m),
                                     std::max<u64>(opts.direct_max, q));
    rep.modulus = ctx.modulus_string();
    rep.alpha = ctx.elt_string(ctx.alpha());
    rep.direct = true;
    BitSeq const seq = generate(ctx);
    Gf2Poly const s2 = poly_from_seq(seq);
    if (opts.timings)
        rep.timings.emplace_back("generate", clock.lap());

    if (opts.with_gcd) {
        Gf2Poly const g = gcd(Gf2Poly::x_pow_plus_one(seq.period()), s2);
        rep.gcd_factorization = format_factors(factor(g));
        rep.linear_complexity = seq.period() - static_cast<u64>(g.degree());
        if (opts.timings)
            rep.timings.emplace_back("gcd", clock.lap());
    }

    for (u64 k : odd_divisors_at_least_3(q - 1, opts.only_k)) {
        KRow row;
        row.k = k;
        attach_prediction(row, p, m);
        auto const kk = static_cast<std::uint32_t>(k);
        CycInt const kval = jacobi_K(ctx, kk);
        for (auto const & ideal : ideal_factors(kk)) {
            IdealRow ir;
            ir.factor = ideal.g.to_string();
            ir.coset_leader = ideal.coset.empty() ? 0 : ideal.coset.front();
            ir.criterion = criterion_holds(kval, ideal);
            ir.direct = divides(ideal.g, s2);
            row.ideals.push_back(std::move(ir));
        }
        row.direct_full = divides(all_ones(k), s2);
        settle_match(row);
        rep.rows.push_back(std::move(row));
    }
    if (opts.timings)
        rep.timings.emplace_back("criteria", clock.lap());
    return rep;
}

std::vector<std::pair<u64, u64>> odd_prime_powers(u64 q_max)
{
    std::vector<std::pair<u64, u64>> out;
    for (u64 q = 3; q <= q_max; q += 2) {
        auto const [p, m] = arith::prime_power(q);
        if (p != 0)
            out.emplace_back(p, m);
    }
    return out;
}

std::vector<VerificationReport> grid(u64 q_max, VerifyOptions const & opts)
{
    std::vector<VerificationReport> out;
    for (auto const & [p, m] : odd_prime_powers(q_max))
        out.push_back(verify(p, m, opts));
    return out;
}

json to_json(Prediction const & pred)
{
    json params = json::object();
    for (auto const & [name, value] : pred.params)
        params[name] = value;
    json j;
    j["p"] = pred.p;
    j["m"] = pred.m;
    j["k"] = pred.k;
    j["regime"] = pred.regime;
    j["target"] = pred.target();
    j["params"] = params;
    if (pred.verdict == Verdict::indeterminate)
        j["divides"] = "indeterminate";
    else
        j["divides"] = pred.verdict == Verdict::divides;
    if (pred.branches)
        j["branches"] = {{"b_plus", pred.branches->first}, {"b_minus", pred.branches->second}};
    j["condition_trace"] = pred.condition_trace;
    return j;
}

json to_json(VerificationReport const & rep)
{
    json j;
    j["field"] = {{"p", rep.p}, {"m", rep.m}};
    if (rep.direct) {
        j["field"]["modulus"] = rep.modulus;
        j["field"]["alpha"] = rep.alpha;
    }
    j["direct"] = rep.direct ? json("computed") : json("skipped: " + rep.skipped);
    if (rep.gcd_factorization)
        j["gcd"] = *rep.gcd_factorization;
    if (rep.linear_complexity)
        j["linear_complexity"] = *rep.linear_complexity;
    json rows = json::array();
    for (auto const & row : rep.rows) {
        json r;
        r["k"] = row.k;
        r["regime"] = row.regime;
        r["prediction"] = row.prediction ? to_json(*row.prediction) : json(nullptr);
        if (!row.prediction_note.empty())
            r["prediction_note"] = row.prediction_note;
        r["direct_full"] = optional_bool(row.direct_full);
        json ideals = json::array();
        for (auto const & ideal : row.ideals)
            ideals.push_back({{"factor", ideal.factor},
                              {"coset_leader", ideal.coset_leader},
                              {"criterion", ideal.criterion},
                              {"direct", optional_bool(ideal.direct)}});
        r["ideals"] = ideals;
        r["match"] = optional_bool(row.match);
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["all_match"] = rep.all_match();
    if (!rep.timings.empty()) {
        json t = json::object();
        for (auto const & [name, secs] : rep.timings)
            t[name] = secs;
        j["timings"] = t;
    }
    return j;
}

json field_json(FieldCtx const & ctx)
{
    return {{"p", ctx.p()},
            {"m", ctx.m()},
            {"q", ctx.q()},
            {"modulus", ctx.modulus_string()},
            {"alpha", ctx.elt_string(ctx.alpha())}};
}

json jacobi_json(FieldCtx const & ctx, CycInt const & k_value)
{
    return {{"k", k_value.k()},
            {"basis", "power"},
            {"coeffs", k_value.coeffs()},
            {"field", field_json(ctx)}};
}

std::string to_text(Prediction const & pred)
{
    std::ostringstream os;
    os << "regime: " << pred.regime << '\n';
    os << "target: " << pred.target() << '\n';
    for (auto const & [name, value] : pred.params)
        os << name << ": " << value << '\n';
    os << "verdict: " << to_string(pred.verdict) << '\n';
    os << "trace: " << pred.condition_trace << '\n';
    return os.str();
}

std::string to_text(VerificationReport const & rep)
{
    std::ostringstream os;
    os << "field: p=" << rep.p << " m=" << rep.m;
    if (rep.direct)
        os << " modulus=" << rep.modulus << " alpha=" << rep.alpha;
    os << '\n';
    if (!rep.direct)
        os << "direct: skipped: " << rep.skipped << '\n';
    if (rep.gcd_factorization)
        os << "gcd: " << *rep.gcd_factorization << '\n';
    if (rep.linear_complexity)
        os << "linear_complexity: " << *rep.linear_complexity << '\n';
    auto yn = [](std::optional<bool> v) { return v ? (*v ? "true" : "false") : "-"; };
    for (auto const & row : rep.rows) {
        os << "k=" << row.k << " regime=" << row.regime << " predicted="
           << (row.prediction ? to_string(row.prediction->verdict) : "-")
           << " direct=" << yn(row.direct_full) << " match=" << yn(row.match) << '\n';
        if (row.prediction)
            os << "  trace: " << row.prediction->condition_trace << '\n';
        else if (!row.prediction_note.empty())
            os << "  note: " << row.prediction_note << '\n';
        for (auto const & ideal : row.ideals)
            os << "  ideal " << ideal.factor << " criterion=" << (ideal.criterion ? "true" : "false")
               << " direct=" << yn(ideal.direct) << '\n';
    }
    for (auto const & [name, secs] : rep.timings)
        os << "time " << name << ": " << secs << " s\n";
    os << "all_match: " << (rep.all_match() ? "true" : "false") << '\n';
    return os.str();
}

std::string grid_csv(std::vector<VerificationReport> const & reps)
{
    std::ostringstream os;
    os << "q,p,m,k,factor,criterion,direct,predicted,match\n";
    auto yn = [](std::optional<bool> v) { return v ? (*v ? "true" : "false") : ""; };
    for (auto const & rep : reps) {
        u64 const q = static_cast<u64>(arith::ipow(static_cast<arith::i64>(rep.p), static_cast<unsigned>(rep.m)));
        for (auto const & row : rep.rows) {
            std::string const predicted = row.prediction ? to_string(row.prediction->verdict) : "";
            for (auto const & ideal : row.ideals)
                os << q << ',' << rep.p << ',' << rep.m << ',' << row.k << ',' << ideal.factor << ','
                   << (ideal.criterion ? "true" : "false") << ',' << yn(ideal.direct) << ','
                   << predicted << ',' << yn(row.match) << '\n';
        }
    }
    return os.str();
}

} // namespace slce
