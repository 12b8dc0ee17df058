#include "slce/sequence.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace slce {

std::size_t BitSeq::weight() const
{
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

namespace {

std::vector<std::uint8_t> support_mask(FieldCtx const & ctx)
{
    std::vector<std::uint8_t> in_d(ctx.q(), 0);
    std::uint64_t const v = ctx.order();
    for (std::uint64_t i = 0; i + 2 <= ctx.q(); ++i) {
        FieldElt const odd_power = ctx.pow_alpha(static_cast<std::uint32_t>((2 * i + 1) % v));
        FieldElt const d = ctx.sub(odd_power, ctx.one());
        if (d.code != 0)
            in_d[d.code] = 1;
    }
    return in_d;
}

std::vector<std::uint64_t> pack(BitSeq const & seq)
{
    std::vector<std::uint64_t> w((seq.period() + 63) / 64, 0);
    for (std::size_t i = 0; i < seq.period(); ++i)
        if (seq.bits[i])
            w[i / 64] |= std::uint64_t{1} << (i % 64);
    return w;
}

} // namespace

SupportSet support_set(FieldCtx const & ctx)
{
    auto const in_d = support_mask(ctx);
    SupportSet out;
    for (std::uint32_t code = 1; code < ctx.q(); ++code) {
        if (!in_d[code])
            continue;
        out.elements.push_back({code});
        out.exponents.push_back(ctx.log_alpha({code}));
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

BitSeq generate(FieldCtx const & ctx)
{
    auto const in_d = support_mask(ctx);
    BitSeq seq;
    seq.bits.resize(ctx.order());
    for (std::uint32_t t = 0; t < ctx.order(); ++t)
        seq.bits[t] = in_d[ctx.pow_alpha(t).code];
    return seq;
}

std::int64_t autocorrelation(BitSeq const & seq, std::size_t tau)
{
    std::size_t const v = seq.period();
    if (v == 0)
        throw std::invalid_argument("autocorrelation of an empty sequence");
    tau %= v;
    std::int64_t c = 0;
    for (std::size_t i = 0; i < v; ++i)
        c += (seq.bits[i] ^ seq.bits[(i + tau) % v]) ? -1 : 1;
    return c;
}

std::vector<std::int64_t> autocorrelation_profile(BitSeq const & seq)
{
    std::size_t const v = seq.period();
    if (v == 0)
        throw std::invalid_argument("autocorrelation of an empty sequence");
    // Two concatenated periods so any rotation is a contiguous bit window.
    BitSeq doubled;
    doubled.bits = seq.bits;
    doubled.bits.insert(doubled.bits.end(), seq.bits.begin(), seq.bits.end());
    auto const base = pack(seq);
    auto const twice = pack(doubled);

    std::vector<std::int64_t> out(v);
    std::size_t const words = base.size();
    for (std::size_t tau = 0; tau < v; ++tau) {
        std::size_t disagreements = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::size_t const bit = tau + 64 * w;
            std::size_t const idx = bit / 64, sh = bit % 64;
            std::uint64_t window = twice[idx] >> sh;
            if (sh != 0 && idx + 1 < twice.size())
                window |= twice[idx + 1] << (64 - sh);
            std::uint64_t diff = base[w] ^ window;
            if (w + 1 == words && v % 64 != 0)
                diff &= (std::uint64_t{1} << (v % 64)) - 1;
            disagreements += static_cast<std::size_t>(std::popcount(diff));
        }
        out[tau] = static_cast<std::int64_t>(v) - 2 * static_cast<std::int64_t>(disagreements);
    }
    return out;
}

std::vector<FieldElt> set_Y(FieldCtx const & ctx)
{
    std::vector<std::uint8_t> hit(ctx.q(), 0);
    for (std::uint32_t code = 1; code < ctx.q(); ++code) {
        FieldElt const x{code};
        FieldElt const y = ctx.mul(x, ctx.sub(ctx.one(), x));
        hit[y.code] = 1;
    }
    std::vector<FieldElt> out;
    for (std::uint32_t code = 1; code < ctx.q(); ++code)
        if (hit[code])
            out.push_back({code});
    return out;
}

std::vector<FieldElt> set_Z(FieldCtx const & ctx)
{
    auto const y = set_Y(ctx);
    std::vector<FieldElt> out;
    std::size_t j = 0;
    for (std::uint32_t code = 1; code < ctx.q(); ++code) {
        if (j < y.size() && y[j].code == code) {
            ++j;
            continue;
        }
        out.push_back({code});
    }
    return out;
}

bool lce_shift_check(FieldCtx const & ctx)
{
    FieldElt const scale = ctx.inv(ctx.from_int(-4));
    std::vector<FieldElt> shifted;
    for (FieldElt d : support_set(ctx).elements)
        shifted.push_back(ctx.mul(scale, d));
    std::sort(shifted.begin(), shifted.end());
    return shifted == set_Z(ctx);
}

std::string to_text(BitSeq const & seq)
{
    std::string s;
    s.reserve(seq.period() + 1);
    for (auto b : seq.bits)
        s.push_back(b ? '1' : '0');
    s.push_back('\n');
    return s;
}

std::string autocorrelation_csv(BitSeq const & seq)
{
    std::ostringstream os;
    os << "tau,C_tau\n";
    auto const profile = autocorrelation_profile(seq);
    for (std::size_t tau = 0; tau < profile.size(); ++tau)
        os << tau << ',' << profile[tau] << '\n';
    return os.str();
}

} // namespace slce
