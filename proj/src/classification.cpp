#include "primepat/classification.hpp"

#include <string>

#include "primepat/error.hpp"
#include "primepat/parallel.hpp"

namespace primepat {

namespace {

// Floor-safe remainder in [0, m).
Int mod(Int x, Int m) {
    const Int r = x % m;
    return r < 0 ? r + m : r;
}

TwinClass classify_valid(const PrimePair& pair) {
    const Nat d = pair.half_distance();
    if (d % 2 == 1) return TwinClass::I;
    if (d % 3 == 0) return TwinClass::III;
    // D even and 3 does not divide D: the median must be an odd multiple of 3.
    return mod(pair.median(), 6) == 3 ? TwinClass::II : TwinClass::Special;
}

}  // namespace

std::string_view to_string(TwinClass c) {
    switch (c) {
        case TwinClass::I: return "I";
        case TwinClass::II: return "II";
        case TwinClass::III: return "III";
        case TwinClass::Special: return "SPECIAL";
    }
    return "?";
}

PrimePair make_pair(Int p_i, Int p_f) {
    if (magnitude(p_i) == 2 || magnitude(p_f) == 2)
        throw Error(ErrorKind::NotAPrimePair, "pairs (2,p) excluded");
    if (p_i >= p_f)
        throw Error(ErrorKind::NotAPrimePair, "pair must satisfy p_i < p_f");
    if (!is_prime_signed(p_i) || !is_prime_signed(p_f))
        throw Error(ErrorKind::NotAPrimePair, "(" + std::to_string(p_i) + ", " +
                                                  std::to_string(p_f) + ") is not a pair of odd primes");
    return {p_i, p_f};
}

TwinClass classify_pair(Int p_i, Int p_f) { return classify_valid(make_pair(p_i, p_f)); }

TwinClass classify_pair(const PrimePair& pair) { return classify_pair(pair.p_i, pair.p_f); }

ClassParameters reconstruct_parameters(const PrimePair& pair) {
    const Int m = pair.median();
    const Nat d = pair.half_distance();
    switch (classify_pair(pair)) {
        case TwinClass::I: return {m / 2, d};
        case TwinClass::II: return {(m / 3 + 1) / 2, d};
        case TwinClass::III: return {(m - 1) / 2, d};
        case TwinClass::Special: break;
    }
    throw Error(ErrorKind::SpecialPair, "special pair has no class representation");
}

PrimePair pair_from_parameters(TwinClass c, Int a, Nat D) {
    Int median = 0;
    switch (c) {
        case TwinClass::I: median = 2 * a; break;
        case TwinClass::II: median = 3 * (2 * a - 1); break;
        case TwinClass::III: median = 2 * a + 1; break;
        case TwinClass::Special:
            throw Error(ErrorKind::SpecialPair, "special pairs have no class formula");
    }
    const Int d = static_cast<Int>(D);
    return {median - d, median + d};
}

Residues residue_refine(const PrimePair& pair) {
    if (magnitude(pair.p_i) % 3 == 0 || magnitude(pair.p_f) % 3 == 0)
        throw Error(ErrorKind::MemberDivisibleBy3, "member divisible by 3 (special pair)");
    return {static_cast<int>(mod(pair.p_i, 6)), static_cast<int>(mod(pair.p_f, 6))};
}

bool in_mod6_subset(const PrimePair& pair) {
    if (classify_pair(pair) != TwinClass::III) return false;
    const auto r = residue_refine(pair);
    const auto params = reconstruct_parameters(pair);
    return r.r_i == 1 && r.r_f == 1 && mod(params.a, 3) == 0;
}

ClassCensus census(Nat bound, unsigned workers) {
    if (bound < 7) throw Error(ErrorKind::InvalidArgument, "census: bound must be >= 7");
    auto primes = primes_up_to(bound);
    primes.erase(primes.begin());  // drop 2

    const std::size_t n = primes.size();
    const unsigned w = resolve_workers(workers);
    std::vector<std::array<std::size_t, 4>> partial(w);

    // Outer indices are dealt round-robin so each worker sees a similar
    // share of the (triangular) pair count.
    parallel_chunks(w, w, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t worker = begin; worker < end; ++worker) {
            auto& counts = partial[worker];
            for (std::size_t i = worker; i < n; i += w) {
                const Nat pi = primes[i];
                for (std::size_t j = i + 1; j < n; ++j) {
                    const PrimePair pair{static_cast<Int>(pi), static_cast<Int>(primes[j])};
                    ++counts[static_cast<std::size_t>(classify_valid(pair))];
                }
            }
        }
    });

    ClassCensus out;
    out.bound = bound;
    for (const auto& counts : partial)
        for (std::size_t c = 0; c < 4; ++c) out.counts[c] += counts[c];
    for (auto c : out.counts) out.total += c;
    return out;
}

}  // namespace primepat
