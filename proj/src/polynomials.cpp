#include "primepat/polynomials.hpp"

#include "primepat/error.hpp"

namespace primepat {

namespace {

bool accepted(Int v, bool admit_powers) {
    return admits(v, admit_powers);
}

}  // namespace

Int evaluate(const QuadPoly& q, Int x) {
    const __int128 X = x;
    const __int128 v = X * X + static_cast<__int128>(q.b) * X + q.c;
    if (v > static_cast<__int128>(kNatMax) || v < -static_cast<__int128>(kNatMax))
        throw Error(ErrorKind::Overflow, "polynomial value exceeds 2^63");
    return static_cast<Int>(v);
}

PrimeRun prime_run(const QuadPoly& q, Int start, int direction, bool admit_powers) {
    if (direction != 1 && direction != -1)
        throw Error(ErrorKind::InvalidArgument, "prime_run: direction must be +1 or -1");
    Nat length = 0;
    Int x = start;
    for (;;) {
        const Int v = evaluate(q, x);
        if (!accepted(v, admit_powers)) return {length, x, v};
        ++length;
        x += direction;
    }
}

TwoSidedRun two_sided_run(const QuadPoly& q, Int start, bool admit_powers) {
    TwoSidedRun r{prime_run(q, start, +1, admit_powers), prime_run(q, start, -1, admit_powers), 0};
    r.combined = r.forward.length == 0 ? 0 : r.forward.length + r.backward.length - 1;
    return r;
}

bool euler_shift_check(const QuadPoly& q, Nat e_c, Int shift) {
    // (x+s)^2 + (x+s) + e = x^2 + (2s+1) x + (s^2 + s + e)
    const __int128 s = shift;
    return q.b == 2 * s + 1 && static_cast<__int128>(q.c) == s * s + s + static_cast<__int128>(e_c);
}

std::vector<RunRow> run_table(const QuadPoly& q, Int lo, Int hi) {
    std::vector<RunRow> rows;
    for (Int x = lo; x <= hi; ++x) {
        const Int v = evaluate(q, x);
        const auto pp = prime_power_decompose(magnitude(v));
        rows.push_back({x, v, pp.has_value(), pp});
    }
    return rows;
}

ArgumentCount total_prime_arguments(const QuadPoly& q, Int lo, Int hi, bool admit_powers) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "total_prime_arguments: lo > hi");
    ArgumentCount out{0, {}};
    for (Int x = lo; x <= hi; ++x) {
        if (accepted(evaluate(q, x), admit_powers)) out.arguments.push_back(x);
    }
    out.count = out.arguments.size();
    return out;
}

}  // namespace primepat
